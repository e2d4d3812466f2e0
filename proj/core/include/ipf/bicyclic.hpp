#pragma once

namespace ipf {

/// One bicyclic monoid element in the pair representation over N = {1, 2, ...}.
///
/// The product is (i,j)*(k,l) = (i + max{j,k} - j, l + max{j,k} - k); the
/// identity is (1,1) and (i,j)^-1 = (j,i).
class BicyclicElement {
 public:
  BicyclicElement(int i, int j);

  int i() const { return i_; }
  int j() const { return j_; }

  BicyclicElement inverse() const { return {j_, i_}; }
  bool is_idempotent() const { return i_ == j_; }

  bool operator==(const BicyclicElement&) const = default;

 private:
  int i_;
  int j_;
};

BicyclicElement operator*(const BicyclicElement& a, const BicyclicElement& b);

/// The same monoid as words p^a q^b with non-negative exponents and the
/// piecewise product obtained from the relation pq = 1.
class BicyclicWord {
 public:
  BicyclicWord(int p_exp, int q_exp);

  int p() const { return p_; }
  int q() const { return q_; }

  bool operator==(const BicyclicWord&) const = default;

 private:
  int p_;
  int q_;
};

BicyclicWord operator*(const BicyclicWord& u, const BicyclicWord& v);

/// The isomorphism p^a q^b -> (a+1, b+1) between the two representations.
BicyclicElement to_pair(const BicyclicWord& w);
BicyclicWord to_word(const BicyclicElement& e);

}  // namespace ipf

#pragma once

#include <vector>

#include "ipf/element.hpp"

namespace ipf {

/// The fiber of all elements (sigma, [base, x]) with fixed permutation and
/// domain base, together with its bijection onto N^n.
class FiberSet {
 public:
  FiberSet(Permutation sigma, Point base);

  int dim() const { return base_.dim(); }
  const Permutation& sigma() const { return sigma_; }
  const Point& base() const { return base_; }

  bool contains(const IpfElement& e) const;

  /// The bijection fiber -> N^n, (sigma, [base, x]) -> x.
  /// DomainError if e is not a member.
  Point project(const IpfElement& e) const;

  /// Its inverse, x -> (sigma, [base, x]).
  IpfElement embed(const Point& x) const;

  /// Members with x in the window of given size above (1,...,1).
  std::vector<IpfElement> window(int size) const;

 private:
  Permutation sigma_;
  Point base_;
};

IpfElement right_translate(const IpfElement& s, const IpfElement& g);
IpfElement left_translate(const IpfElement& g, const IpfElement& s);

/// The element g = (id, [sigma^-1(q), sigma^-1(p)]) whose left translation
/// maps (sigma, [b, x]) to (sigma, [a, x]) for every x.
///
/// Offsets are chosen so that q - p == a - b and cmax(p, b) == b, both of
/// which the translation identity needs:
///   q_i = 1, p_i = b_i - a_i + 1   when b_i >= a_i,
///   p_i = 1, q_i = a_i - b_i + 1   otherwise.
IpfElement left_translator(const Point& a, const Point& b, const Permutation& sigma);

}  // namespace ipf

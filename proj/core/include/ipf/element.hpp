#pragma once

#include <vector>

#include "ipf/permutation.hpp"
#include "ipf/point.hpp"

namespace ipf {

/// An element (sigma, [x, y]) of the monoid of order isomorphisms between
/// principal filters of N^n: a permutation together with n bicyclic
/// coordinates packed as the base pair [x, y].
///
/// The product composes the underlying partial maps left-to-right:
///   (a, [x,y]) * (b, [u,v])
///     = (a.then(b), [b(x) + m - b(y), v + m - u])   with m = cmax(b(y), u),
/// where b(.) is the coordinate shuffle of the right factor's permutation.
class IpfElement {
 public:
  IpfElement(Permutation sigma, Point x, Point y);

  static IpfElement identity(int n);

  int dim() const { return x_.dim(); }
  const Permutation& sigma() const { return sigma_; }
  const Point& x() const { return x_; }
  const Point& y() const { return y_; }

  /// (sigma^-1, [sigma^-1(y), sigma^-1(x)]); the unique semigroup inverse.
  IpfElement inverse() const;

  bool is_idempotent() const;

  bool operator==(const IpfElement&) const = default;

 private:
  Permutation sigma_;
  Point x_;
  Point y_;
};

IpfElement operator*(const IpfElement& a, const IpfElement& b);

/// Green's relations, via the closed forms
///   a R b  iff  a.a^-1 == b.b^-1  iff  sigma_a^-1(x_a) == sigma_b^-1(x_b)
///   a L b  iff  a^-1.a == b^-1.b  iff  y_a == y_b.
bool green_r(const IpfElement& a, const IpfElement& b);
bool green_l(const IpfElement& a, const IpfElement& b);

/// Natural partial order of the inverse monoid: a <= b iff a == (a a^-1) b.
bool natural_leq(const IpfElement& a, const IpfElement& b);

/// Invariant of the least group congruence: the class of (sigma, [x, y]) is
/// (sigma, y - x). Classes multiply as the semidirect product of the
/// symmetric group acting on integer offset vectors.
struct GroupClass {
  Permutation sigma;
  std::vector<int> offset;

  bool operator==(const GroupClass&) const = default;
};

GroupClass operator*(const GroupClass& a, const GroupClass& b);
GroupClass congruence_class(const IpfElement& a);

/// Total order used for canonical listings; unrelated to natural_leq.
struct CanonicalLess {
  bool operator()(const IpfElement& a, const IpfElement& b) const;
};

}  // namespace ipf

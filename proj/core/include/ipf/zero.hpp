#pragma once

#include <optional>
#include <vector>

#include "ipf/element.hpp"

namespace ipf {

/// An element of the monoid with an adjoined zero; the zero is absorbing.
class IpfZero {
 public:
  IpfZero() = default;
  IpfZero(IpfElement e) : v_(std::move(e)) {}  // NOLINT: implicit by design

  static IpfZero zero() { return IpfZero{}; }

  bool is_zero() const { return !v_.has_value(); }

  /// DomainError when called on the zero.
  const IpfElement& element() const;

  bool operator==(const IpfZero&) const = default;

 private:
  std::optional<IpfElement> v_;
};

IpfZero operator*(const IpfZero& a, const IpfZero& b);

enum class Side { left, right };

/// Bound for the coordinate search; strictly larger than any coordinate a
/// solution of g.x = c or x.g = c can have.
int default_solve_bound(const IpfElement& g, const IpfElement& c);

/// All x with g*x = c (solve_left) or x*g = c (solve_right), canonically
/// ordered. The permutation component of a solution is forced; coordinates
/// are searched up to `bound` (0 selects default_solve_bound). Both result
/// sets are finite.
std::vector<IpfElement> solve_left(const IpfElement& g, const IpfElement& c, int bound = 0);
std::vector<IpfElement> solve_right(const IpfElement& g, const IpfElement& c, int bound = 0);

/// A neighborhood of zero in the one-point-compactification topology,
/// stored as its finite complement of non-zero elements.
class CofiniteNeighborhood {
 public:
  /// The full space (empty complement).
  explicit CofiniteNeighborhood(int n);
  CofiniteNeighborhood(int n, std::vector<IpfElement> excluded);

  int dim() const { return n_; }

  /// Canonically ordered, duplicate-free.
  const std::vector<IpfElement>& excluded() const { return excluded_; }

  bool contains(const IpfZero& z) const;

  /// Complement of the result is the union of the two complements.
  CofiniteNeighborhood intersect(const CofiniteNeighborhood& other) const;

 private:
  int n_ = 0;
  std::vector<IpfElement> excluded_;
};

/// This \ other as a finite set of elements: excluded(other) \ excluded(this).
std::vector<IpfElement> neighborhood_difference(const CofiniteNeighborhood& u,
                                                const CofiniteNeighborhood& v);

/// {x : g*x in u} (left) or {x : x*g in u} (right). The complement is the
/// union of the solution sets of the finitely many equations g*x = c over
/// excluded c, hence finite; translation preimages of neighborhoods of zero
/// are again neighborhoods of zero.
CofiniteNeighborhood translate_preimage(const IpfElement& g, const CofiniteNeighborhood& u,
                                        Side side);

/// V with V*g inside u and g*V inside u: the intersection of the two
/// translation preimages.
CofiniteNeighborhood continuity_witness(const IpfElement& g, const CofiniteNeighborhood& u);

}  // namespace ipf

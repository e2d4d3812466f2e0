#pragma once

#include "ipf/element.hpp"
#include "ipf/permutation.hpp"
#include "ipf/point.hpp"

namespace ipf {

/// An order isomorphism between principal filters of N^n, given explicitly as
/// a partial map: defined exactly on the filter above dom_base, with image
/// exactly the filter above ran_base,
///
///   eval(t) = ran_base + sigma(t - dom_base).
///
/// This is the map view of the algebraic elements: (sigma, [x, y]) acts on
/// the filter above sigma^-1(x) and sends t to sigma(t) - x + y. The offset
/// is permuted before the translation; the convention is pinned by the
/// pointwise composition oracle in the test suite.
class FilterIso {
 public:
  FilterIso(Permutation sigma, Point dom_base, Point ran_base);

  static FilterIso from_element(const IpfElement& e);
  IpfElement to_element() const;

  int dim() const { return dom_.dim(); }
  const Permutation& sigma() const { return sigma_; }
  const Point& dom_base() const { return dom_; }
  const Point& ran_base() const { return ran_; }

  bool contains(const Point& t) const;

  /// Image of t; DomainError if t is not above dom_base.
  Point eval(const Point& t) const;

  /// Preimage of s; DomainError if s is not above ran_base.
  Point eval_inverse(const Point& s) const;

  /// Partial-map composition, applying *this first and next second. The
  /// domain is the preimage under *this of the intersection of the two
  /// middle filters, itself a principal filter.
  FilterIso compose(const FilterIso& next) const;

  bool operator==(const FilterIso&) const = default;

 private:
  Permutation sigma_;
  Point dom_;
  Point ran_;
};

}  // namespace ipf

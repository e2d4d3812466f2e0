#include "ipf/filter_iso.hpp"

#include "ipf/error.hpp"

namespace ipf {

FilterIso::FilterIso(Permutation sigma, Point dom_base, Point ran_base)
    : sigma_(std::move(sigma)), dom_(std::move(dom_base)), ran_(std::move(ran_base)) {
  if (sigma_.degree() != dom_.dim() || dom_.dim() != ran_.dim())
    throw DimensionError("filter iso parts disagree on dimension");
}

FilterIso FilterIso::from_element(const IpfElement& e) {
  return {e.sigma(), e.sigma().inverse().act(e.x()), e.y()};
}

IpfElement FilterIso::to_element() const { return {sigma_, sigma_.act(dom_), ran_}; }

bool FilterIso::contains(const Point& t) const { return leq(dom_, t); }

Point FilterIso::eval(const Point& t) const {
  if (t.dim() != dim()) throw DimensionError("point dimension mismatch");
  if (!leq(dom_, t)) throw DomainError("point is not in the domain filter");
  return plus(ran_, sigma_.act(minus(t, dom_)));
}

Point FilterIso::eval_inverse(const Point& s) const {
  if (s.dim() != dim()) throw DimensionError("point dimension mismatch");
  if (!leq(ran_, s)) throw DomainError("point is not in the range filter");
  return plus(dom_, sigma_.inverse().act(minus(s, ran_)));
}

FilterIso FilterIso::compose(const FilterIso& next) const {
  if (dim() != next.dim()) throw DimensionError("filter isos have different dimensions");
  const Point mid = cmax(ran_, next.dom_base());
  Point d = plus(dom_, sigma_.inverse().act(minus(mid, ran_)));
  Point r = next.eval(mid);
  return {sigma_.then(next.sigma()), std::move(d), std::move(r)};
}

}  // namespace ipf

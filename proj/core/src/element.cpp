#include "ipf/element.hpp"

#include <algorithm>

#include "ipf/error.hpp"

namespace ipf {

IpfElement::IpfElement(Permutation sigma, Point x, Point y)
    : sigma_(std::move(sigma)), x_(std::move(x)), y_(std::move(y)) {
  if (sigma_.degree() != x_.dim() || x_.dim() != y_.dim())
    throw DimensionError("element parts disagree on dimension");
}

IpfElement IpfElement::identity(int n) {
  return {Permutation::identity(n), Point::ones(n), Point::ones(n)};
}

IpfElement operator*(const IpfElement& a, const IpfElement& b) {
  if (a.dim() != b.dim()) throw DimensionError("elements have different dimensions");
  const Permutation& beta = b.sigma();
  const Point xb = beta.act(a.x());
  const Point yb = beta.act(a.y());
  const Point m = cmax(yb, b.x());
  return {a.sigma().then(beta), plus(xb, minus(m, yb)), plus(b.y(), minus(m, b.x()))};
}

IpfElement IpfElement::inverse() const {
  Permutation inv = sigma_.inverse();
  Point nx = inv.act(y_);
  Point ny = inv.act(x_);
  return {std::move(inv), std::move(nx), std::move(ny)};
}

bool IpfElement::is_idempotent() const { return *this * *this == *this; }

bool green_r(const IpfElement& a, const IpfElement& b) {
  if (a.dim() != b.dim()) throw DimensionError("elements have different dimensions");
  return a.sigma().inverse().act(a.x()) == b.sigma().inverse().act(b.x());
}

bool green_l(const IpfElement& a, const IpfElement& b) {
  if (a.dim() != b.dim()) throw DimensionError("elements have different dimensions");
  return a.y() == b.y();
}

bool natural_leq(const IpfElement& a, const IpfElement& b) {
  if (a.dim() != b.dim()) throw DimensionError("elements have different dimensions");
  return a == (a * a.inverse()) * b;
}

GroupClass operator*(const GroupClass& a, const GroupClass& b) {
  std::vector<int> off = b.sigma.act(a.offset);
  for (std::size_t i = 0; i < off.size(); ++i) off[i] += b.offset[i];
  return {a.sigma.then(b.sigma), std::move(off)};
}

GroupClass congruence_class(const IpfElement& a) { return {a.sigma(), minus(a.y(), a.x())}; }

bool CanonicalLess::operator()(const IpfElement& a, const IpfElement& b) const {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.sigma().images() != b.sigma().images()) return a.sigma().images() < b.sigma().images();
  if (a.x().coords() != b.x().coords()) return a.x().coords() < b.x().coords();
  return a.y().coords() < b.y().coords();
}

}  // namespace ipf

#include "ipf/fiber.hpp"

#include "ipf/error.hpp"

namespace ipf {

FiberSet::FiberSet(Permutation sigma, Point base)
    : sigma_(std::move(sigma)), base_(std::move(base)) {
  if (sigma_.degree() != base_.dim()) throw DimensionError("fiber parts disagree on dimension");
}

bool FiberSet::contains(const IpfElement& e) const {
  return e.dim() == dim() && e.sigma() == sigma_ && e.x() == base_;
}

Point FiberSet::project(const IpfElement& e) const {
  if (!contains(e)) throw DomainError("element is not a member of the fiber");
  return e.y();
}

IpfElement FiberSet::embed(const Point& x) const { return {sigma_, base_, x}; }

std::vector<IpfElement> FiberSet::window(int size) const {
  std::vector<IpfElement> out;
  for (const Point& x : filter_window(Point::ones(dim()), size)) out.push_back(embed(x));
  return out;
}

IpfElement right_translate(const IpfElement& s, const IpfElement& g) { return s * g; }

IpfElement left_translate(const IpfElement& g, const IpfElement& s) { return g * s; }

IpfElement left_translator(const Point& a, const Point& b, const Permutation& sigma) {
  if (a.dim() != b.dim() || a.dim() != sigma.degree())
    throw DimensionError("translator arguments disagree on dimension");
  const int n = a.dim();
  std::vector<int> q(static_cast<std::size_t>(n)), p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (b[i] >= a[i]) {
      q[static_cast<std::size_t>(i)] = 1;
      p[static_cast<std::size_t>(i)] = b[i] - a[i] + 1;
    } else {
      p[static_cast<std::size_t>(i)] = 1;
      q[static_cast<std::size_t>(i)] = a[i] - b[i] + 1;
    }
  }
  const Permutation inv = sigma.inverse();
  return {Permutation::identity(n), inv.act(Point(std::move(q))), inv.act(Point(std::move(p)))};
}

}  // namespace ipf

#include "ipf/zero.hpp"

#include <algorithm>

#include "ipf/error.hpp"

namespace ipf {

const IpfElement& IpfZero::element() const {
  if (!v_.has_value()) throw DomainError("the zero has no element value");
  return *v_;
}

IpfZero operator*(const IpfZero& a, const IpfZero& b) {
  if (a.is_zero() || b.is_zero()) return IpfZero::zero();
  return IpfZero(a.element() * b.element());
}

namespace {

int max_coord(const IpfElement& e) {
  int m = 1;
  for (int v : e.x().coords()) m = std::max(m, v);
  for (int v : e.y().coords()) m = std::max(m, v);
  return m;
}

// Visits every coordinate vector in [1, bound]^n in lexicographic order.
template <typename F>
void scan_box(int n, int bound, F&& visit) {
  std::vector<int> u(static_cast<std::size_t>(n), 1);
  while (true) {
    visit(u);
    int k = n - 1;
    while (k >= 0 && u[static_cast<std::size_t>(k)] == bound) {
      u[static_cast<std::size_t>(k)] = 1;
      --k;
    }
    if (k < 0) break;
    ++u[static_cast<std::size_t>(k)];
  }
}

void check_same_dim(const IpfElement& g, const IpfElement& c) {
  if (g.dim() != c.dim()) throw DimensionError("equation sides have different dimensions");
}

}  // namespace

int default_solve_bound(const IpfElement& g, const IpfElement& c) {
  // Strict bound: any solution coordinate is at most max_coord(g) +
  // max_coord(c) - 1 (the searched base pairs enter the product only through
  // componentwise max and differences of the known coordinates).
  return max_coord(g) + max_coord(c) + 1;
}

std::vector<IpfElement> solve_left(const IpfElement& g, const IpfElement& c, int bound) {
  check_same_dim(g, c);
  if (bound <= 0) bound = default_solve_bound(g, c);
  const int n = g.dim();
  const Permutation sx = g.sigma().inverse().then(c.sigma());
  const Point gx = sx.act(g.x());
  const Point gy = sx.act(g.y());

  std::vector<IpfElement> out;
  scan_box(n, bound, [&](const std::vector<int>& u) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const int ui = u[static_cast<std::size_t>(i)];
      const int m = std::max(gy[i], ui);
      if (gx[i] + m - gy[i] != c.x()[i]) return;
      const int vi = c.y()[i] + ui - m;
      if (vi < 1 || vi > bound) return;
      v[static_cast<std::size_t>(i)] = vi;
    }
    IpfElement cand(sx, Point(u), Point(std::move(v)));
    if (g * cand == c) out.push_back(std::move(cand));
  });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<IpfElement> solve_right(const IpfElement& g, const IpfElement& c, int bound) {
  check_same_dim(g, c);
  if (bound <= 0) bound = default_solve_bound(g, c);
  const int n = g.dim();
  const Permutation sx = c.sigma().then(g.sigma().inverse());
  const Permutation gperm_inv = g.sigma().inverse();

  std::vector<IpfElement> out;
  scan_box(n, bound, [&](const std::vector<int>& v) {
    const std::vector<int> w = g.sigma().act(v);  // candidate's y, shuffled by g
    std::vector<int> ushuf(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const int m = std::max(w[static_cast<std::size_t>(i)], g.x()[i]);
      if (g.y()[i] + m - g.x()[i] != c.y()[i]) return;
      const int ui = c.x()[i] - m + w[static_cast<std::size_t>(i)];
      if (ui < 1) return;
      ushuf[static_cast<std::size_t>(i)] = ui;
    }
    const std::vector<int> u = gperm_inv.act(ushuf);
    for (int ui : u)
      if (ui > bound) return;
    IpfElement cand(sx, Point(u), Point(v));
    if (cand * g == c) out.push_back(std::move(cand));
  });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

CofiniteNeighborhood::CofiniteNeighborhood(int n) : n_(n) {
  if (n < 1) throw DimensionError("neighborhood needs dimension >= 1");
}

CofiniteNeighborhood::CofiniteNeighborhood(int n, std::vector<IpfElement> excluded)
    : n_(n), excluded_(std::move(excluded)) {
  if (n < 1) throw DimensionError("neighborhood needs dimension >= 1");
  for (const IpfElement& e : excluded_)
    if (e.dim() != n_) throw DimensionError("excluded element has wrong dimension");
  std::sort(excluded_.begin(), excluded_.end(), CanonicalLess{});
  excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
}

bool CofiniteNeighborhood::contains(const IpfZero& z) const {
  if (z.is_zero()) return true;
  if (z.element().dim() != n_) throw DimensionError("element has wrong dimension");
  return !std::binary_search(excluded_.begin(), excluded_.end(), z.element(), CanonicalLess{});
}

CofiniteNeighborhood CofiniteNeighborhood::intersect(const CofiniteNeighborhood& other) const {
  if (n_ != other.n_) throw DimensionError("neighborhoods have different dimensions");
  std::vector<IpfElement> ex = excluded_;
  ex.insert(ex.end(), other.excluded_.begin(), other.excluded_.end());
  return {n_, std::move(ex)};
}

std::vector<IpfElement> neighborhood_difference(const CofiniteNeighborhood& u,
                                                const CofiniteNeighborhood& v) {
  if (u.dim() != v.dim()) throw DimensionError("neighborhoods have different dimensions");
  std::vector<IpfElement> out;
  std::set_difference(v.excluded().begin(), v.excluded().end(), u.excluded().begin(),
                      u.excluded().end(), std::back_inserter(out), CanonicalLess{});
  return out;
}

CofiniteNeighborhood translate_preimage(const IpfElement& g, const CofiniteNeighborhood& u,
                                        Side side) {
  if (g.dim() != u.dim()) throw DimensionError("element and neighborhood dimensions differ");
  std::vector<IpfElement> ex;
  for (const IpfElement& c : u.excluded()) {
    std::vector<IpfElement> sols = side == Side::left ? solve_left(g, c) : solve_right(g, c);
    ex.insert(ex.end(), sols.begin(), sols.end());
  }
  return {u.dim(), std::move(ex)};
}

CofiniteNeighborhood continuity_witness(const IpfElement& g, const CofiniteNeighborhood& u) {
  return translate_preimage(g, u, Side::left).intersect(translate_preimage(g, u, Side::right));
}

}  // namespace ipf

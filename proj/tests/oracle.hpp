#pragma once

// Pointwise partial-map machinery used as the independent oracle for the
// algebraic product: composes two filter isomorphisms point by point on a
// finite window, reads off the composite's (sigma, dom, ran) from the
// pointwise data alone, and never touches the semidirect-product formula.

#include <optional>
#include <vector>

#include "ipf/element.hpp"
#include "ipf/filter_iso.hpp"
#include "ipf/point.hpp"

namespace ipftest {

struct PointwiseComposite {
  ipf::Point dom_base;
  ipf::Point ran_base;
  ipf::Permutation sigma;
  // every window point together with its image under g after f
  std::vector<std::pair<ipf::Point, ipf::Point>> graph;
};

// Composes f then g pointwise. scan_width must be generous enough to contain
// the composite's domain base; check_width is the window on which the graph
// is recorded. Returns nullopt if the scan found no composite domain point
// (cannot happen for genuine filter isomorphisms with adequate scan_width).
inline std::optional<PointwiseComposite> compose_pointwise(const ipf::FilterIso& f,
                                                           const ipf::FilterIso& g,
                                                           int scan_width, int check_width) {
  using ipf::Point;
  const int n = f.dim();

  // the composite's domain: points of dom(f) whose image lies in dom(g)
  std::vector<Point> admissible;
  for (const Point& t : ipf::filter_window(f.dom_base(), scan_width))
    if (ipf::leq(g.dom_base(), f.eval(t))) admissible.push_back(t);
  if (admissible.empty()) return std::nullopt;

  std::vector<int> mins(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int m = admissible.front()[i];
    for (const Point& t : admissible) m = std::min(m, t[i]);
    mins[static_cast<std::size_t>(i)] = m;
  }
  const Point base{std::vector<int>(mins)};

  // the admissible set must itself look like a principal filter on the scan
  // window, with the componentwise minimum as its base
  if (!ipf::leq(g.dom_base(), f.eval(base))) return std::nullopt;
  for (const Point& t : ipf::filter_window(f.dom_base(), scan_width)) {
    const bool in_filter = ipf::leq(base, t);
    const bool in_admissible = ipf::leq(g.dom_base(), f.eval(t));
    if (in_filter != in_admissible) return std::nullopt;
  }

  const Point ran = g.eval(f.eval(base));

  // read the coordinate permutation off unit steps from the base
  std::vector<int> images(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    const Point bumped = g.eval(f.eval(ipf::shifted(base, j, +1)));
    const std::vector<int> d = ipf::minus(bumped, ran);
    int hit = -1;
    for (int i = 0; i < n; ++i) {
      if (d[static_cast<std::size_t>(i)] == 0) continue;
      if (d[static_cast<std::size_t>(i)] != 1 || hit != -1) return std::nullopt;
      hit = i;
    }
    if (hit == -1) return std::nullopt;
    images[static_cast<std::size_t>(j)] = hit;
  }

  PointwiseComposite out{base, ran, ipf::Permutation(images), {}};
  for (const Point& t : ipf::filter_window(base, check_width))
    out.graph.emplace_back(t, g.eval(f.eval(t)));
  return out;
}

// The keystone check: pointwise composition of the two elements' map views
// reproduces the algebraic product exactly, both as a triple and pointwise
// on the window.
inline bool composition_oracle_agrees(const ipf::IpfElement& a, const ipf::IpfElement& b,
                                      int scan_width, int check_width) {
  const ipf::FilterIso fa = ipf::FilterIso::from_element(a);
  const ipf::FilterIso fb = ipf::FilterIso::from_element(b);
  const auto composite = compose_pointwise(fa, fb, scan_width, check_width);
  if (!composite) return false;

  const ipf::FilterIso read_off(composite->sigma, composite->dom_base, composite->ran_base);
  if (!(read_off.to_element() == a * b)) return false;
  for (const auto& [t, image] : composite->graph)
    if (!(read_off.eval(t) == image)) return false;
  return true;
}

}  // namespace ipftest

#include "selftest.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <vector>

#include "json.hpp"

#include "ipf/bicyclic.hpp"
#include "ipf/element.hpp"
#include "ipf/fiber.hpp"
#include "ipf/filter_iso.hpp"
#include "ipf/partition.hpp"
#include "ipf/zero.hpp"

namespace ipftool {
namespace {

using ipf::IpfElement;
using ipf::Permutation;
using ipf::Point;
using Rng = std::mt19937_64;

int rint(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Permutation random_perm(Rng& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

Point random_point(Rng& rng, int n, int maxc) {
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int& v : c) v = rint(rng, 1, maxc);
  return Point(std::move(c));
}

IpfElement random_element(Rng& rng, int n, int maxc) {
  return {random_perm(rng, n), random_point(rng, n, maxc), random_point(rng, n, maxc)};
}

bool bicyclic_window(Rng&, int) {
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= 12; ++b)
      for (int c = 0; c <= 12; ++c)
        for (int d = 0; d <= 12; ++d) {
          const ipf::BicyclicWord u(a, b), v(c, d);
          if (!(ipf::to_pair(u * v) == ipf::to_pair(u) * ipf::to_pair(v))) return false;
        }
  return true;
}

bool associativity(Rng& rng, int) {
  for (int t = 0; t < 2000; ++t) {
    const int n = rint(rng, 1, 4);
    const IpfElement a = random_element(rng, n, 50);
    const IpfElement b = random_element(rng, n, 50);
    const IpfElement c = random_element(rng, n, 50);
    if (!((a * b) * c == a * (b * c))) return false;
  }
  return true;
}

bool inverse_axioms(Rng& rng, int) {
  for (int t = 0; t < 1000; ++t) {
    const IpfElement a = random_element(rng, rint(rng, 1, 4), 40);
    const IpfElement inv = a.inverse();
    if (!(a * inv * a == a) || !(inv * a * inv == inv)) return false;
  }
  return true;
}

bool map_composition(Rng& rng, int window) {
  for (int t = 0; t < 100; ++t) {
    const int n = rint(rng, 1, 3);
    const IpfElement a = random_element(rng, n, 8);
    const IpfElement b = random_element(rng, n, 8);
    const ipf::FilterIso fa = ipf::FilterIso::from_element(a);
    const ipf::FilterIso fb = ipf::FilterIso::from_element(b);
    const ipf::FilterIso fab = fa.compose(fb);
    if (!(fab == ipf::FilterIso::from_element(a * b))) return false;
    for (const Point& p : ipf::filter_window(fab.dom_base(), std::min(window, 3)))
      if (!(fab.eval(p) == fb.eval(fa.eval(p)))) return false;
  }
  return true;
}

bool fiber_shift(Rng&, int) {
  for (int n = 1; n <= 2; ++n)
    for (const auto& sigma : Permutation::all(n))
      for (const Point& a : ipf::filter_window(Point::ones(n), 2))
        for (int k = 0; k < n; ++k) {
          const ipf::FiberSet fiber(sigma, a);
          const IpfElement up(Permutation::identity(n), Point::ones(n), Point::unit_bump(n, k));
          for (const IpfElement& e : fiber.window(3)) {
            if (!(e * up == fiber.embed(ipf::shifted(fiber.project(e), k, +1)))) return false;
          }
        }
  return true;
}

bool left_translator(Rng& rng, int) {
  for (int t = 0; t < 200; ++t) {
    const int n = rint(rng, 1, 3);
    const Permutation sigma = random_perm(rng, n);
    const Point a = random_point(rng, n, 10);
    const Point b = random_point(rng, n, 10);
    const IpfElement g = ipf::left_translator(a, b, sigma);
    for (const Point& x : ipf::filter_window(Point::ones(n), 3))
      if (!(g * IpfElement(sigma, b, x) == IpfElement(sigma, a, x))) return false;
  }
  return true;
}

bool solver_checks(Rng& rng, int) {
  for (int t = 0; t < 50; ++t) {
    const int n = rint(rng, 1, 2);
    const IpfElement g = random_element(rng, n, 8);
    const IpfElement x = random_element(rng, n, 8);
    const IpfElement c = g * x;
    const auto sols = ipf::solve_left(g, c);
    if (std::count(sols.begin(), sols.end(), x) != 1) return false;
    const int b = ipf::default_solve_bound(g, c);
    if (!(sols == ipf::solve_left(g, c, 2 * b))) return false;
    const auto rs = ipf::solve_right(g, x * g);
    if (std::count(rs.begin(), rs.end(), x) != 1) return false;
  }
  return true;
}

bool preimage_membership(Rng& rng, int window) {
  for (int t = 0; t < 20; ++t) {
    const int n = rint(rng, 1, 2);
    const IpfElement g = random_element(rng, n, 4);
    std::vector<IpfElement> excl;
    for (int i = 0; i < 3; ++i) excl.push_back(g * random_element(rng, n, 4));
    const ipf::CofiniteNeighborhood u(n, excl);
    const ipf::CofiniteNeighborhood pre = ipf::translate_preimage(g, u, ipf::Side::left);
    const int w = std::min(window, 4);
    for (const auto& sigma : Permutation::all(n))
      for (const Point& px : ipf::filter_window(Point::ones(n), w))
        for (const Point& py : ipf::filter_window(Point::ones(n), w)) {
          const IpfElement x(sigma, px, py);
          if (pre.contains(x) != u.contains(g * x)) return false;
        }
  }
  return true;
}

bool partition_witness(Rng&, int) {
  const ipf::BoxPartition odds = ipf::BoxPartition::from_predicate(
      ipf::Box({10}), [](const Point& p) { return p[0] % 2 == 1 ? ipf::Color::A : ipf::Color::B; });
  const auto r1 = ipf::find_shift_witness(odds);
  if (r1.witness.c.size() != 5 || r1.witness.k != 0 || r1.witness.s != 1) return false;
  if (!ipf::verify_witness(r1.witness, odds)) return false;

  const ipf::BoxPartition board = ipf::BoxPartition::from_predicate(
      ipf::Box({6, 6}),
      [](const Point& p) { return (p[0] + p[1]) % 2 == 0 ? ipf::Color::A : ipf::Color::B; });
  const auto r2 = ipf::find_shift_witness(board);
  return r2.witness.c.size() >= 2 && ipf::verify_witness(r2.witness, board);
}

}  // namespace

int run_selftest(const SelftestOptions& opts) {
  struct Check {
    const char* name;
    std::function<bool(Rng&, int)> run;
  };
  const std::vector<Check> checks{
      {"bicyclic-representation-window", bicyclic_window},
      {"monoid-associativity-sample", associativity},
      {"inverse-axioms-sample", inverse_axioms},
      {"map-composition-consistency", map_composition},
      {"fiber-shift-translation-window", fiber_shift},
      {"left-translator-window", left_translator},
      {"solver-witness-and-stability", solver_checks},
      {"preimage-membership-sample", preimage_membership},
      {"partition-witness-structured", partition_witness},
  };

  int failed = 0;
  nlohmann::json results = nlohmann::json::array();
  for (const Check& check : checks) {
    Rng rng(opts.seed);
    const bool ok = check.run(rng, opts.window);
    if (!ok) ++failed;
    if (opts.json)
      results.push_back({{"name", check.name}, {"ok", ok}});
    else
      std::cout << (ok ? "ok " : "FAIL ") << check.name << "\n";
  }
  if (opts.json) {
    nlohmann::json out{{"passed", static_cast<int>(checks.size()) - failed},
                       {"total", static_cast<int>(checks.size())},
                       {"results", results}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "selftest: " << checks.size() - failed << "/" << checks.size() << " passed\n";
  }
  return failed;
}

}  // namespace ipftool

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ipf/error.hpp"
#include "ipf/zero.hpp"
#include "solve_oracle.hpp"
#include "support.hpp"

using ipf::CofiniteNeighborhood;
using ipf::IpfElement;
using ipf::IpfZero;
using ipf::Permutation;
using ipf::Point;
using ipf::Side;

TEST_CASE("zero is absorbing") {
  ipftest::Rng rng(ipf::kDefaultSeed);
  const IpfZero zero = IpfZero::zero();
  CHECK((zero * zero).is_zero());
  for (int t = 0; t < 200; ++t) {
    const IpfZero a(ipftest::random_element(rng, ipftest::rint(rng, 1, 3), 20));
    CHECK((zero * a).is_zero());
    CHECK((a * zero).is_zero());
    const IpfZero b(ipftest::random_element(rng, a.element().dim(), 20));
    CHECK((a * b) == IpfZero(a.element() * b.element()));
  }
  CHECK_THROWS_AS(zero.element(), ipf::DomainError);
}

TEST_CASE("solving against the identity") {
  ipftest::Rng rng(ipf::kDefaultSeed);
  for (int t = 0; t < 100; ++t) {
    const int n = ipftest::rint(rng, 1, 3);
    const IpfElement c = ipftest::random_element(rng, n, 10);
    const auto left = ipf::solve_left(IpfElement::identity(n), c);
    REQUIRE(left.size() == 1);
    REQUIRE(left.front() == c);
    const auto right = ipf::solve_right(IpfElement::identity(n), c);
    REQUIRE(right.size() == 1);
    REQUIRE(right.front() == c);
  }
}

TEST_CASE("one-dimensional instance solved by hand") {
  const IpfElement g(Permutation::identity(1), Point({1}), Point({2}));
  const IpfElement c(Permutation::identity(1), Point({1}), Point({3}));
  const auto sols = ipf::solve_left(g, c);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0] == IpfElement(Permutation::identity(1), Point({1}), Point({2})));
  CHECK(sols[1] == IpfElement(Permutation::identity(1), Point({2}), Point({3})));
}

TEST_CASE("constructing witnesses are always found") {
  ipftest::Rng rng(ipf::kDefaultSeed);
  for (int t = 0; t < 300; ++t) {
    const int n = ipftest::rint(rng, 1, 3);
    const IpfElement g = ipftest::random_element(rng, n, 10);
    const IpfElement x = ipftest::random_element(rng, n, 10);
    const auto right = ipf::solve_right(g, x * g);
    REQUIRE(std::count(right.begin(), right.end(), x) == 1);
    const auto left = ipf::solve_left(g, g * x);
    REQUIRE(std::count(left.begin(), left.end(), x) == 1);
  }
}

TEST_CASE("solver equals exhaustive enumeration") {
  ipftest::Rng rng(ipf::kDefaultSeed);
  for (int t = 0; t < 60; ++t) {
    const int n = ipftest::rint(rng, 1, 2);
    const int maxc = 5;
    const IpfElement g = ipftest::random_element(rng, n, maxc);
    // mix unconstrained targets with reachable ones so both empty and
    // non-empty solution sets occur
    const IpfElement c = (t % 2 == 0) ? ipftest::random_element(rng, n, maxc)
                                      : g * ipftest::random_element(rng, n, maxc);
    const int window = ipf::default_solve_bound(g, c);
    REQUIRE(ipf::solve_left(g, c) == ipftest::solve_exhaustive(g, c, Side::left, window));
    REQUIRE(ipf::solve_right(g, c) == ipftest::solve_exhaustive(g, c, Side::right, window));
  }
}

TEST_CASE("solution coordinates can exceed every input coordinate") {
  // g = (id,[1,12]), c = (id,[12,5]) is solved by (id,[23,5]); the default
  // bound must reach past max(coords(g), coords(c)) + 1 to find it.
  const IpfElement g(Permutation::identity(1), Point({1}), Point({12}));
  const IpfElement c(Permutation::identity(1), Point({12}), Point({5}));
  const auto sols = ipf::solve_left(g, c);
  const IpfElement big(Permutation::identity(1), Point({23}), Point({5}));
  CHECK(std::count(sols.begin(), sols.end(), big) == 1);
  CHECK(sols == ipftest::solve_exhaustive(g, c, Side::left, 30));
}

TEST_CASE("bound doubling is stable") {
  ipftest::Rng rng(ipf::kDefaultSeed);
  for (int t = 0; t < 100; ++t) {
    const int n = ipftest::rint(rng, 1, 3);
    const int maxc = n == 3 ? 5 : 10;
    const IpfElement g = ipftest::random_element(rng, n, maxc);
    const IpfElement c = (t % 2 == 0) ? ipftest::random_element(rng, n, maxc)
                                      : g * ipftest::random_element(rng, n, maxc);
    const int b = ipf::default_solve_bound(g, c);
    REQUIRE(ipf::solve_left(g, c, b) == ipf::solve_left(g, c, 2 * b));
    REQUIRE(ipf::solve_right(g, c, b) == ipf::solve_right(g, c, 2 * b));
  }
}

TEST_CASE("cofinite membership and intersection") {
  ipftest::Rng rng(ipf::kDefaultSeed);
  const IpfElement a = ipftest::random_element(rng, 2, 5);
  const IpfElement b = ipftest::random_element(rng, 2, 5);
  const CofiniteNeighborhood full(2);
  const CofiniteNeighborhood u(2, {a});
  const CofiniteNeighborhood v(2, {b});

  CHECK(full.contains(IpfZero::zero()));
  CHECK(u.contains(IpfZero::zero()));
  CHECK_FALSE(u.contains(IpfZero(a)));
  CHECK(full.contains(IpfZero(a)));

  CHECK(u.intersect(full).excluded() == u.excluded());
  const auto both = u.intersect(v).excluded();
  CHECK(both.size() == (a == b ? 1u : 2u));
  CHECK(u.intersect(v).excluded().size() <= u.excluded().size() + v.excluded().size());
}

TEST_CASE("cofinite algebra matches an explicit small-universe model") {
  // universe: all elements with n = 1 and coordinates <= 3
  std::vector<IpfElement> universe;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      universe.emplace_back(Permutation::identity(1), Point({i}), Point({j}));

  ipftest::Rng rng(ipf::kDefaultSeed);
  auto random_subset = [&](int bits) {
    std::vector<IpfElement> out;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if ((bits >> i) & 1) out.push_back(universe[i]);
    return out;
  };
  for (int t = 0; t < 50; ++t) {
    const int bits_u = ipftest::rint(rng, 0, (1 << 9) - 1);
    const int bits_v = ipftest::rint(rng, 0, (1 << 9) - 1);
    const CofiniteNeighborhood u(1, random_subset(bits_u));
    const CofiniteNeighborhood v(1, random_subset(bits_v));
    const CofiniteNeighborhood both = u.intersect(v);
    const auto diff = ipf::neighborhood_difference(u, v);
    for (std::size_t i = 0; i < universe.size(); ++i) {
      const bool in_u = ((bits_u >> i) & 1) == 0;
      const bool in_v = ((bits_v >> i) & 1) == 0;
      REQUIRE(u.contains(universe[i]) == in_u);
      REQUIRE(both.contains(universe[i]) == (in_u && in_v));
      const bool in_diff = std::count(diff.begin(), diff.end(), universe[i]) == 1;
      REQUIRE(in_diff == (in_u && !in_v));
    }
  }
}

TEST_CASE("translation preimages") {
  ipftest::Rng rng(ipf::kDefaultSeed);

  // trivial cases
  const IpfElement g0 = ipftest::random_element(rng, 2, 6);
  const CofiniteNeighborhood full(2);
  CHECK(ipf::translate_preimage(g0, full, Side::left).excluded().empty());
  CHECK(ipf::translate_preimage(g0, full, Side::right).excluded().empty());
  const CofiniteNeighborhood u0(2, {ipftest::random_element(rng, 2, 6)});
  CHECK(ipf::translate_preimage(IpfElement::identity(2), u0, Side::left).excluded() ==
        u0.excluded());

  for (int t = 0; t < 30; ++t) {
    const int n = ipftest::rint(rng, 1, 2);
    const IpfElement g = ipftest::random_element(rng, n, 5);
    std::vector<IpfElement> excl;
    for (int i = 0; i < 4; ++i) excl.push_back(g * ipftest::random_element(rng, n, 5));
    const CofiniteNeighborhood u(n, excl);
    const CofiniteNeighborhood pre = ipf::translate_preimage(g, u, Side::left);
    // pointwise window verification of the membership equivalence
    for (const auto& sigma : Permutation::all(n))
      for (const Point& px : ipf::filter_window(Point::ones(n), 5))
        for (const Point& py : ipf::filter_window(Point::ones(n), 5)) {
          const IpfElement x(sigma, px, py);
          REQUIRE(pre.contains(x) == u.contains(g * x));
        }
  }
}

TEST_CASE("continuity witness satisfies both inclusions") {
  ipftest::Rng rng(ipf::kDefaultSeed);
  for (int t = 0; t < 20; ++t) {
    const int n = ipftest::rint(rng, 1, 2);
    const IpfElement g = ipftest::random_element(rng, n, 4);
    std::vector<IpfElement> excl;
    for (int i = 0; i < 3; ++i) excl.push_back(ipftest::random_element(rng, n, 6));
    const CofiniteNeighborhood u(n, excl);
    const CofiniteNeighborhood v = ipf::continuity_witness(g, u);
    for (const auto& sigma : Permutation::all(n))
      for (const Point& px : ipf::filter_window(Point::ones(n), 5))
        for (const Point& py : ipf::filter_window(Point::ones(n), 5)) {
          const IpfElement x(sigma, px, py);
          if (v.contains(x)) {
            REQUIRE(u.contains(g * x));
            REQUIRE(u.contains(x * g));
          } else {
            REQUIRE((!u.contains(g * x) || !u.contains(x * g)));
          }
        }
  }
}

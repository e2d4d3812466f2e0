#pragma once

#include <vector>

namespace ipf {

/// A lattice point of N^n; every coordinate is >= 1.
class Point {
 public:
  explicit Point(std::vector<int> coords);

  static Point ones(int n);

  /// All-ones except coordinate k (0-based), which is 2.
  static Point unit_bump(int n, int k);

  int dim() const { return static_cast<int>(c_.size()); }
  int operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& coords() const { return c_; }

  bool operator==(const Point&) const = default;

 private:
  std::vector<int> c_;
};

/// Product order: a <= b iff every coordinate of a is <= the matching one of b.
bool leq(const Point& a, const Point& b);

Point cmax(const Point& a, const Point& b);

/// a - b, componentwise, as an integer offset vector.
std::vector<int> minus(const Point& a, const Point& b);

/// a + d; throws DomainError if any coordinate falls below 1.
Point plus(const Point& a, const std::vector<int>& d);

/// Adds s (+1 or -1) to coordinate k (0-based).
/// Decrementing a coordinate equal to 1 raises RangeError.
Point shifted(const Point& x, int k, int s);

/// {t : base <= t and t[i] <= base[i] + size}, in lexicographic order.
/// Contains exactly (size+1)^n points.
std::vector<Point> filter_window(const Point& base, int size);

bool lex_less(const Point& a, const Point& b);

struct LexLess {
  bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

}  // namespace ipf

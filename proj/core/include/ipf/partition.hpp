#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ipf/point.hpp"

namespace ipf {

enum class Color : std::uint8_t { A, B };

/// The finite box {1..dims[0]} x ... x {1..dims[n-1]}.
class Box {
 public:
  explicit Box(std::vector<int> dims);

  int dim() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  bool contains(const Point& p) const;
  long long size() const;

  /// All box points in lexicographic order.
  std::vector<Point> all_points() const;

 private:
  std::vector<int> dims_;
};

/// A two-coloring of a box: every point is colored A or B.
class BoxPartition {
 public:
  BoxPartition(Box box, std::vector<Color> colors);  // colors in lex point order

  static BoxPartition from_predicate(Box box, const std::function<Color(const Point&)>& f);

  /// Loads either the grid format (n = 2, one row of A/B characters per
  /// line) or the general list format (a dims=(...) header followed by
  /// point:color lines). Blank lines and lines starting with '#' are
  /// skipped. ParseError diagnostics carry line numbers.
  static BoxPartition parse(const std::string& text);

  const Box& box() const { return box_; }
  Color color(const Point& p) const;  // DomainError outside the box
  long long count(Color c) const;

 private:
  Box box_;
  std::vector<Color> color_;
};

/// A sequence of box points in which consecutive points differ by +-1 in
/// exactly one coordinate.
class LatticePath {
 public:
  explicit LatticePath(std::vector<Point> points);

  const std::vector<Point>& points() const { return pts_; }

 private:
  std::vector<Point> pts_;
};

/// C is a set of A-colored points all of which move into B under the same
/// single-coordinate shift (k, s); k is 0-based, s is +1 or -1.
struct ShiftWitness {
  std::vector<Point> c;
  int k = 0;
  int s = 1;
};

struct WitnessSearch {
  ShiftWitness witness;
  int iterations = 0;
};

/// Down-closure within the box: all box points below some member of xs.
std::vector<Point> down_set(const std::vector<Point>& xs, const Box& box);

/// First adjacent pair (p, q) along the path with p colored A and q colored
/// B. The path must start in A and end in B; otherwise DomainError.
std::pair<Point, Point> find_boundary_pair(const LatticePath& path, const BoxPartition& part);

/// Shortest lattice path inside the box avoiding `forbidden`, breadth-first
/// with lexicographic tie-breaking; nullopt when unreachable.
std::optional<LatticePath> build_avoiding_path(const Point& from, const Point& to,
                                               const std::set<Point, LexLess>& forbidden,
                                               const Box& box);

/// For n = 1 returns the exact boundary set {a in A : a+1 in B} with shift
/// (k=0, s=+1). For n >= 2 runs the iterative marking construction: pick the
/// lexicographically smallest admissible points of each color outside the
/// down-closure of everything marked so far, join them by an avoiding path,
/// mark the first A->B crossing, repeat until no pick or path exists, then
/// return the largest (k, s) class of marked A-points. By pigeonhole the
/// class holds at least ceil(iterations / 2n) points.
/// DomainError if either color class is empty.
WitnessSearch find_shift_witness(const BoxPartition& part);

/// Checks the witness invariants pointwise: every member is in the box and
/// colored A, and its shift stays in the box and is colored B.
bool verify_witness(const ShiftWitness& w, const BoxPartition& part);

}  // namespace ipf

#include "ipf/point.hpp"

#include <algorithm>

#include "ipf/error.hpp"

namespace ipf {

Point::Point(std::vector<int> coords) : c_(std::move(coords)) {
  if (c_.empty()) throw DimensionError("point needs at least one coordinate");
  for (int v : c_)
    if (v < 1) throw DomainError("point coordinates must be >= 1");
}

Point Point::ones(int n) { return Point(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Point Point::unit_bump(int n, int k) {
  if (k < 0 || k >= n) throw DomainError("coordinate index out of range");
  std::vector<int> c(static_cast<std::size_t>(n), 1);
  c[static_cast<std::size_t>(k)] = 2;
  return Point(std::move(c));
}

namespace {
void check_dims(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw DimensionError("points have different dimensions");
}
}  // namespace

bool leq(const Point& a, const Point& b) {
  check_dims(a, b);
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Point cmax(const Point& a, const Point& b) {
  check_dims(a, b);
  std::vector<int> c(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) c[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
  return Point(std::move(c));
}

std::vector<int> minus(const Point& a, const Point& b) {
  check_dims(a, b);
  std::vector<int> d(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) d[static_cast<std::size_t>(i)] = a[i] - b[i];
  return d;
}

Point plus(const Point& a, const std::vector<int>& d) {
  if (static_cast<std::size_t>(a.dim()) != d.size())
    throw DimensionError("offset dimension mismatch");
  std::vector<int> c(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    int v = a[i] + d[static_cast<std::size_t>(i)];
    if (v < 1) throw DomainError("coordinate fell below 1");
    c[static_cast<std::size_t>(i)] = v;
  }
  return Point(std::move(c));
}

Point shifted(const Point& x, int k, int s) {
  if (k < 0 || k >= x.dim()) throw DomainError("coordinate index out of range");
  if (s != 1 && s != -1) throw DomainError("shift sign must be +1 or -1");
  if (s == -1 && x[k] < 2) throw RangeError("cannot decrement coordinate below 1");
  std::vector<int> c = x.coords();
  c[static_cast<std::size_t>(k)] += s;
  return Point(std::move(c));
}

std::vector<Point> filter_window(const Point& base, int size) {
  if (size < 1) throw DomainError("window size must be >= 1");
  const int n = base.dim();
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(1) << std::min(20, n));  // rough
  std::vector<int> off(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = base[i] + off[static_cast<std::size_t>(i)];
    out.emplace_back(std::move(c));
    int k = n - 1;
    while (k >= 0 && off[static_cast<std::size_t>(k)] == size) {
      off[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++off[static_cast<std::size_t>(k)];
  }
  return out;
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(),
                                      b.coords().end());
}

}  // namespace ipf

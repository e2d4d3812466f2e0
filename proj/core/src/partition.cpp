#include "ipf/partition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <tuple>

#include "ipf/error.hpp"
#include "ipf/text.hpp"

namespace ipf {

Box::Box(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DimensionError("box needs at least one dimension");
  for (int d : dims_)
    if (d < 1) throw DomainError("box extents must be >= 1");
}

bool Box::contains(const Point& p) const {
  if (p.dim() != dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (p[i] > dims_[static_cast<std::size_t>(i)]) return false;
  return true;
}

long long Box::size() const {
  long long s = 1;
  for (int d : dims_) s *= d;
  return s;
}

std::vector<Point> Box::all_points() const {
  const int n = dim();
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::vector<int> c(static_cast<std::size_t>(n), 1);
  while (true) {
    out.emplace_back(c);
    int k = n - 1;
    while (k >= 0 && c[static_cast<std::size_t>(k)] == dims_[static_cast<std::size_t>(k)]) {
      c[static_cast<std::size_t>(k)] = 1;
      --k;
    }
    if (k < 0) break;
    ++c[static_cast<std::size_t>(k)];
  }
  return out;
}

namespace {

// Lexicographic linear index of p within the box.
std::size_t lex_index(const Box& box, const Point& p) {
  std::size_t idx = 0;
  for (int i = 0; i < box.dim(); ++i)
    idx = idx * static_cast<std::size_t>(box.dims()[static_cast<std::size_t>(i)]) +
          static_cast<std::size_t>(p[i] - 1);
  return idx;
}

}  // namespace

BoxPartition::BoxPartition(Box box, std::vector<Color> colors)
    : box_(std::move(box)), color_(std::move(colors)) {
  if (static_cast<long long>(color_.size()) != box_.size())
    throw DimensionError("color table size does not match the box");
}

BoxPartition BoxPartition::from_predicate(Box box,
                                          const std::function<Color(const Point&)>& f) {
  std::vector<Color> colors;
  colors.reserve(static_cast<std::size_t>(box.size()));
  for (const Point& p : box.all_points()) colors.push_back(f(p));
  return {std::move(box), std::move(colors)};
}

Color BoxPartition::color(const Point& p) const {
  if (!box_.contains(p)) throw DomainError("point is outside the box");
  return color_[lex_index(box_, p)];
}

long long BoxPartition::count(Color c) const {
  return std::count(color_.begin(), color_.end(), c);
}

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    out.push_back({number, trimmed});
  }
  return out;
}

[[noreturn]] void fail_line(int number, const std::string& what, const std::string& token) {
  throw ParseError("line " + std::to_string(number) + ": " + what, token);
}

BoxPartition parse_grid(const std::vector<Line>& lines) {
  const int rows = static_cast<int>(lines.size());
  const int cols = static_cast<int>(lines[0].text.size());
  std::vector<Color> colors;
  colors.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (const Line& ln : lines) {
    if (static_cast<int>(ln.text.size()) != cols)
      fail_line(ln.number, "grid rows must all have the same length", ln.text);
    for (char ch : ln.text) {
      if (ch == 'A')
        colors.push_back(Color::A);
      else if (ch == 'B')
        colors.push_back(Color::B);
      else
        fail_line(ln.number, "grid cells must be 'A' or 'B'", std::string(1, ch));
    }
  }
  return {Box({rows, cols}), std::move(colors)};
}

BoxPartition parse_list(const std::vector<Line>& lines) {
  const Line& head = lines[0];
  const std::string prefix = "dims=";
  if (head.text.rfind(prefix, 0) != 0)
    fail_line(head.number, "expected a dims=(...) header", head.text);
  Box box = [&] {
    try {
      return Box(parse_point(head.text.substr(prefix.size())).coords());
    } catch (const ParseError& e) {
      fail_line(head.number, e.what(), e.token());
    }
  }();

  std::vector<Color> colors(static_cast<std::size_t>(box.size()), Color::A);
  std::vector<bool> seen(static_cast<std::size_t>(box.size()), false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    const std::size_t colon = ln.text.rfind(':');
    if (colon == std::string::npos) fail_line(ln.number, "expected point:color", ln.text);
    Point p = [&] {
      try {
        return parse_point(ln.text.substr(0, colon));
      } catch (const ParseError& e) {
        fail_line(ln.number, e.what(), e.token());
      }
    }();
    std::string tail = ln.text.substr(colon + 1);
    tail.erase(0, tail.find_first_not_of(" \t"));
    if (tail != "A" && tail != "B") fail_line(ln.number, "color must be 'A' or 'B'", tail);
    if (p.dim() != box.dim()) fail_line(ln.number, "point dimension differs from dims header", ln.text);
    if (!box.contains(p)) fail_line(ln.number, "point is outside the box", ln.text);
    const std::size_t idx = lex_index(box, p);
    if (seen[idx]) fail_line(ln.number, "duplicate point", ln.text);
    seen[idx] = true;
    colors[idx] = tail == "A" ? Color::A : Color::B;
  }
  for (std::size_t idx = 0; idx < seen.size(); ++idx)
    if (!seen[idx])
      throw ParseError("partition file does not cover the whole box", to_string(box.all_points()[idx]));
  return {std::move(box), std::move(colors)};
}

}  // namespace

BoxPartition BoxPartition::parse(const std::string& text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError("partition file is empty", "<end of input>");
  const char first = lines[0].text[0];
  if (first == 'A' || first == 'B') return parse_grid(lines);
  return parse_list(lines);
}

LatticePath::LatticePath(std::vector<Point> points) : pts_(std::move(points)) {
  if (pts_.empty()) throw DomainError("a path needs at least one point");
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    const Point& a = pts_[i - 1];
    const Point& b = pts_[i];
    if (a.dim() != b.dim()) throw DimensionError("path points have different dimensions");
    int moved = 0;
    for (int k = 0; k < a.dim(); ++k) {
      const int d = b[k] - a[k];
      if (d == 0) continue;
      if (d != 1 && d != -1) throw DomainError("path steps must move by one unit");
      ++moved;
    }
    if (moved != 1) throw DomainError("path steps must move in exactly one coordinate");
  }
}

std::vector<Point> down_set(const std::vector<Point>& xs, const Box& box) {
  std::vector<Point> out;
  for (const Point& p : box.all_points()) {
    for (const Point& x : xs) {
      if (leq(p, x)) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

std::pair<Point, Point> find_boundary_pair(const LatticePath& path, const BoxPartition& part) {
  const auto& pts = path.points();
  if (part.color(pts.front()) != Color::A || part.color(pts.back()) != Color::B)
    throw DomainError("path must start in color A and end in color B");
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (part.color(pts[i]) == Color::A && part.color(pts[i + 1]) == Color::B)
      return {pts[i], pts[i + 1]};
  throw DomainError("path has no A->B crossing");
}

std::optional<LatticePath> build_avoiding_path(const Point& from, const Point& to,
                                               const std::set<Point, LexLess>& forbidden,
                                               const Box& box) {
  if (!box.contains(from) || !box.contains(to)) throw DomainError("endpoints must lie in the box");
  if (forbidden.count(from) || forbidden.count(to))
    throw DomainError("endpoints must not be forbidden");
  if (from == to) return LatticePath({from});

  const int n = box.dim();
  std::map<Point, Point, LexLess> parent;
  std::queue<Point> queue;
  parent.emplace(from, from);
  queue.push(from);
  while (!queue.empty()) {
    const Point cur = queue.front();
    queue.pop();
    std::vector<Point> next;
    for (int k = 0; k < n; ++k) {
      for (int s : {+1, -1}) {
        if (s == -1 && cur[k] < 2) continue;
        Point cand = shifted(cur, k, s);
        if (!box.contains(cand) || forbidden.count(cand) || parent.count(cand)) continue;
        next.push_back(std::move(cand));
      }
    }
    std::sort(next.begin(), next.end(), LexLess{});
    for (Point& cand : next) {
      if (parent.count(cand)) continue;
      parent.emplace(cand, cur);
      if (cand == to) {
        std::vector<Point> rev{cand};
        Point walk = cur;
        while (!(walk == from)) {
          rev.push_back(walk);
          walk = parent.at(walk);
        }
        rev.push_back(from);
        std::reverse(rev.begin(), rev.end());
        return LatticePath(std::move(rev));
      }
      queue.push(cand);
    }
  }
  return std::nullopt;
}

namespace {

WitnessSearch witness_line(const BoxPartition& part) {
  const int d = part.box().dims()[0];
  std::vector<Point> c;
  for (int a = 1; a < d; ++a) {
    const Point p({a});
    if (part.color(p) == Color::A && part.color(Point({a + 1})) == Color::B) c.push_back(p);
  }
  return {{c, 0, +1}, static_cast<int>(c.size())};
}

}  // namespace

WitnessSearch find_shift_witness(const BoxPartition& part) {
  if (part.count(Color::A) == 0) throw DomainError("color class A is empty");
  if (part.count(Color::B) == 0) throw DomainError("color class B is empty");
  const Box& box = part.box();
  const int n = box.dim();
  if (n == 1) return witness_line(part);

  const std::vector<Point> pts = box.all_points();
  std::set<Point, LexLess> marked_a, marked_b;
  std::vector<std::tuple<Point, int, int>> marks;

  while (true) {
    std::vector<Point> marked(marked_a.begin(), marked_a.end());
    marked.insert(marked.end(), marked_b.begin(), marked_b.end());
    const std::vector<Point> down = down_set(marked, box);
    auto in_down = [&](const Point& p) {
      return std::binary_search(down.begin(), down.end(), p, LexLess{});
    };

    const Point* pick_a = nullptr;
    const Point* pick_b = nullptr;
    for (const Point& p : pts) {
      if ((pick_a && pick_b)) break;
      if (in_down(p)) continue;
      if (!pick_a && part.color(p) == Color::A) pick_a = &p;
      if (!pick_b && part.color(p) == Color::B) pick_b = &p;
    }
    if (!pick_a || !pick_b) break;

    std::set<Point, LexLess> forbidden = marked_a;
    forbidden.insert(marked_b.begin(), marked_b.end());
    const auto path = build_avoiding_path(*pick_a, *pick_b, forbidden, box);
    if (!path) break;

    const auto [pa, pb] = find_boundary_pair(*path, part);
    int k = -1;
    int s = 0;
    for (int i = 0; i < n; ++i) {
      if (pb[i] != pa[i]) {
        k = i;
        s = pb[i] - pa[i];
      }
    }
    marked_a.insert(pa);
    marked_b.insert(pb);
    marks.emplace_back(pa, k, s);
  }

  if (marks.empty()) throw DomainError("no admissible starting pick");

  std::map<std::pair<int, int>, std::vector<Point>> classes;
  for (const auto& [p, k, s] : marks) classes[{k, s}].push_back(p);
  auto best = classes.begin();
  for (auto it = classes.begin(); it != classes.end(); ++it)
    if (it->second.size() > best->second.size()) best = it;

  std::vector<Point> c = best->second;
  std::sort(c.begin(), c.end(), LexLess{});
  return {{std::move(c), best->first.first, best->first.second},
          static_cast<int>(marks.size())};
}

bool verify_witness(const ShiftWitness& w, const BoxPartition& part) {
  for (const Point& p : w.c) {
    if (!part.box().contains(p) || part.color(p) != Color::A) return false;
    if (w.s == -1 && p[w.k] < 2) return false;
    const Point q = shifted(p, w.k, w.s);
    if (!part.box().contains(q) || part.color(q) != Color::B) return false;
  }
  return true;
}

}  // namespace ipf

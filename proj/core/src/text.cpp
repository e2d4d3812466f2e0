#include "ipf/text.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "ipf/error.hpp"

namespace ipf {

namespace {

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  std::string near() const {
    if (pos >= s.size()) return "<end of input>";
    return std::string(s.substr(pos, std::min<std::size_t>(12, s.size() - pos)));
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " near '" + near() + "'", near());
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      const std::size_t end = pos + w.size();
      if (end >= s.size() || !std::isalnum(static_cast<unsigned char>(s[end]))) {
        pos = end;
        return;
      }
    }
    fail("expected '" + std::string(w) + "'");
  }

  int expect_int() {
    skip_ws();
    const std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
      pos = start;
      fail("expected an integer");
    }
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000000L) fail("integer out of range");
      ++pos;
    }
    return neg ? -static_cast<int>(v) : static_cast<int>(v);
  }

  void expect_end() {
    skip_ws();
    if (pos != s.size()) fail("unexpected trailing input");
  }
};

std::vector<int> int_list(Scanner& sc, char open, char close) {
  sc.expect(open);
  std::vector<int> v;
  v.push_back(sc.expect_int());
  while (sc.eat(',')) v.push_back(sc.expect_int());
  sc.expect(close);
  return v;
}

Point point_body(Scanner& sc) {
  std::vector<int> v = int_list(sc, '(', ')');
  for (int c : v)
    if (c < 1) sc.fail("point coordinates must be >= 1");
  return Point(std::move(v));
}

Permutation perm_body(Scanner& sc) {
  std::vector<int> v = int_list(sc, '[', ']');
  const int n = static_cast<int>(v.size());
  std::vector<bool> seen(v.size(), false);
  for (int& img : v) {
    if (img < 1 || img > n || seen[static_cast<std::size_t>(img - 1)])
      sc.fail("permutation images must list 1..n once each");
    seen[static_cast<std::size_t>(img - 1)] = true;
    --img;  // to 0-based
  }
  return Permutation(std::move(v));
}

IpfElement element_body(Scanner& sc) {
  sc.expect('(');
  sc.expect_word("sigma");
  sc.expect('=');
  Permutation sigma = perm_body(sc);
  sc.expect(';');
  sc.expect_word("x");
  sc.expect('=');
  Point x = point_body(sc);
  sc.expect(';');
  sc.expect_word("y");
  sc.expect('=');
  Point y = point_body(sc);
  sc.expect(')');
  if (sigma.degree() != x.dim() || x.dim() != y.dim())
    sc.fail("element parts disagree on dimension");
  return {std::move(sigma), std::move(x), std::move(y)};
}

}  // namespace

std::string tuple_string(const std::vector<int>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ')';
  return out.str();
}

std::string to_string(const Point& p) { return tuple_string(p.coords()); }

std::string to_string(const Permutation& s) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < s.degree(); ++i) {
    if (i) out << ',';
    out << s(i) + 1;
  }
  out << ']';
  return out.str();
}

std::string to_string(const IpfElement& e) {
  return "(sigma=" + to_string(e.sigma()) + "; x=" + to_string(e.x()) +
         "; y=" + to_string(e.y()) + ")";
}

std::string to_string(const FilterIso& f) {
  return "iso{sigma=" + to_string(f.sigma()) + "; dom=" + to_string(f.dom_base()) +
         "; ran=" + to_string(f.ran_base()) + "}";
}

std::string to_string(const BicyclicElement& e) {
  return "(" + std::to_string(e.i()) + "," + std::to_string(e.j()) + ")";
}

std::string to_string(const BicyclicWord& w) {
  return "p^" + std::to_string(w.p()) + " q^" + std::to_string(w.q());
}

std::string to_string(const GroupClass& g) {
  return "(sigma=" + to_string(g.sigma) + "; offset=" + tuple_string(g.offset) + ")";
}

Point parse_point(std::string_view s) {
  Scanner sc{s};
  Point p = point_body(sc);
  sc.expect_end();
  return p;
}

Permutation parse_permutation(std::string_view s) {
  Scanner sc{s};
  Permutation p = perm_body(sc);
  sc.expect_end();
  return p;
}

IpfElement parse_element(std::string_view s) {
  Scanner sc{s};
  IpfElement e = element_body(sc);
  sc.expect_end();
  return e;
}

FilterIso parse_filter_iso(std::string_view s) {
  Scanner sc{s};
  sc.expect_word("iso");
  sc.expect('{');
  sc.expect_word("sigma");
  sc.expect('=');
  Permutation sigma = perm_body(sc);
  sc.expect(';');
  sc.expect_word("dom");
  sc.expect('=');
  Point dom = point_body(sc);
  sc.expect(';');
  sc.expect_word("ran");
  sc.expect('=');
  Point ran = point_body(sc);
  sc.expect('}');
  sc.expect_end();
  if (sigma.degree() != dom.dim() || dom.dim() != ran.dim())
    sc.fail("filter iso parts disagree on dimension");
  return {std::move(sigma), std::move(dom), std::move(ran)};
}

BicyclicElement parse_bicyclic(std::string_view s) {
  Scanner sc{s};
  std::vector<int> v = int_list(sc, '(', ')');
  sc.expect_end();
  if (v.size() != 2) sc.fail("a bicyclic pair has exactly two coordinates");
  if (v[0] < 1 || v[1] < 1) sc.fail("bicyclic pair coordinates must be >= 1");
  return {v[0], v[1]};
}

BicyclicWord parse_word(std::string_view s) {
  Scanner sc{s};
  sc.expect_word("p");
  sc.expect('^');
  const int a = sc.expect_int();
  sc.expect_word("q");
  sc.expect('^');
  const int b = sc.expect_int();
  sc.expect_end();
  if (a < 0 || b < 0) sc.fail("word exponents must be >= 0");
  return {a, b};
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const Permutation& s) { return os << to_string(s); }
std::ostream& operator<<(std::ostream& os, const IpfElement& e) { return os << to_string(e); }
std::ostream& operator<<(std::ostream& os, const FilterIso& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const BicyclicElement& e) { return os << to_string(e); }
std::ostream& operator<<(std::ostream& os, const BicyclicWord& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, const GroupClass& g) { return os << to_string(g); }

}  // namespace ipf

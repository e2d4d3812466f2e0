#include "ipf/bicyclic.hpp"

#include <algorithm>

#include "ipf/error.hpp"

namespace ipf {

BicyclicElement::BicyclicElement(int i, int j) : i_(i), j_(j) {
  if (i < 1 || j < 1) throw DomainError("bicyclic pair coordinates must be >= 1");
}

BicyclicElement operator*(const BicyclicElement& a, const BicyclicElement& b) {
  const int m = std::max(a.j(), b.i());
  return {a.i() + m - a.j(), b.j() + m - b.i()};
}

BicyclicWord::BicyclicWord(int p_exp, int q_exp) : p_(p_exp), q_(q_exp) {
  if (p_exp < 0 || q_exp < 0) throw DomainError("word exponents must be >= 0");
}

BicyclicWord operator*(const BicyclicWord& u, const BicyclicWord& v) {
  if (u.q() > v.p()) return {u.p(), u.q() - v.p() + v.q()};
  if (u.q() == v.p()) return {u.p(), v.q()};
  return {u.p() - u.q() + v.p(), v.q()};
}

BicyclicElement to_pair(const BicyclicWord& w) { return {w.p() + 1, w.q() + 1}; }

BicyclicWord to_word(const BicyclicElement& e) { return {e.i() - 1, e.j() - 1}; }

}  // namespace ipf

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ipf/bicyclic.hpp"
#include "ipf/element.hpp"
#include "ipf/filter_iso.hpp"
#include "ipf/permutation.hpp"
#include "ipf/point.hpp"

namespace ipf {

// Canonical text forms. Parsing is whitespace-insensitive; printing is
// canonical, so print(parse(s)) == s for canonical s and parse(print(v)) == v
// always.
//
//   point        (2,3,1)
//   permutation  [2,1]                           image list of 1..n, 1-based
//   element      (sigma=[2,1]; x=(1,2); y=(3,1))
//   filter iso   iso{sigma=[2,1]; dom=(1,2); ran=(1,1)}
//   pair         (2,5)
//   word         p^2 q^3

std::string to_string(const Point& p);
std::string to_string(const Permutation& s);
std::string to_string(const IpfElement& e);
std::string to_string(const FilterIso& f);
std::string to_string(const BicyclicElement& e);
std::string to_string(const BicyclicWord& w);
std::string to_string(const GroupClass& g);

/// Integer tuple in point syntax; entries may be negative (offset vectors).
std::string tuple_string(const std::vector<int>& v);

Point parse_point(std::string_view s);
Permutation parse_permutation(std::string_view s);
IpfElement parse_element(std::string_view s);
FilterIso parse_filter_iso(std::string_view s);
BicyclicElement parse_bicyclic(std::string_view s);
BicyclicWord parse_word(std::string_view s);

std::ostream& operator<<(std::ostream& os, const Point& p);
std::ostream& operator<<(std::ostream& os, const Permutation& s);
std::ostream& operator<<(std::ostream& os, const IpfElement& e);
std::ostream& operator<<(std::ostream& os, const FilterIso& f);
std::ostream& operator<<(std::ostream& os, const BicyclicElement& e);
std::ostream& operator<<(std::ostream& os, const BicyclicWord& w);
std::ostream& operator<<(std::ostream& os, const GroupClass& g);

}  // namespace ipf

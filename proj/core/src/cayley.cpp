#include "ipf/cayley.hpp"

#include <map>
#include <sstream>

#include "ipf/error.hpp"
#include "ipf/text.hpp"

namespace ipf {

CayleyFragment cayley_fragment(const std::vector<IpfElement>& generators, int depth) {
  if (generators.empty()) throw DomainError("at least one generator is required");
  if (depth < 1) throw DomainError("depth must be >= 1");
  const int n = generators.front().dim();
  for (const IpfElement& g : generators)
    if (g.dim() != n) throw DimensionError("generators have different dimensions");

  CayleyFragment fr;
  std::map<IpfElement, int, CanonicalLess> index;
  std::vector<int> level;

  fr.nodes.push_back(IpfElement::identity(n));
  index.emplace(fr.nodes.front(), 0);
  level.push_back(0);

  for (std::size_t head = 0; head < fr.nodes.size(); ++head) {
    const int d = level[head];
    if (d == depth) continue;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      IpfElement next = fr.nodes[head] * generators[g];
      int to;
      auto it = index.find(next);
      if (it == index.end()) {
        to = static_cast<int>(fr.nodes.size());
        index.emplace(next, to);
        fr.nodes.push_back(std::move(next));
        level.push_back(d + 1);
      } else {
        to = it->second;
      }
      fr.edges.push_back({static_cast<int>(head), static_cast<int>(g), to});
    }
  }
  return fr;
}

std::string to_dot(const CayleyFragment& fragment) {
  std::ostringstream out;
  out << "digraph cayley {\n";
  out << "  rankdir=LR;\n";
  for (std::size_t i = 0; i < fragment.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << to_string(fragment.nodes[i]) << "\"];\n";
  for (const CayleyFragment::Edge& e : fragment.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.gen + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ipf

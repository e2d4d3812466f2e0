#pragma once

#include <string>
#include <vector>

#include "ipf/element.hpp"

namespace ipf {

/// The fragment of the right Cayley graph reachable from the identity by at
/// most `depth` multiplications with the given generators. Nodes are listed
/// in breadth-first discovery order (generators tried in index order), which
/// makes the fragment deterministic. Edges leave only nodes of depth < depth,
/// so every edge target is part of the fragment.
struct CayleyFragment {
  struct Edge {
    int from = 0;
    int gen = 0;  // 0-based generator index
    int to = 0;

    bool operator==(const Edge&) const = default;
  };

  std::vector<IpfElement> nodes;
  std::vector<Edge> edges;
};

CayleyFragment cayley_fragment(const std::vector<IpfElement>& generators, int depth);

/// DOT rendering with canonical element labels and 1-based generator edge
/// labels; byte-stable across runs.
std::string to_dot(const CayleyFragment& fragment);

}  // namespace ipf

#pragma once

#include <map>
#include <string>
#include <vector>

#include "fograph/graph.hpp"
#include "fograph/trees.hpp"

namespace fograph {

// How a constructed graph came to be; rebuild() re-runs the construction
// and must reproduce the graph vertex-for-vertex.
struct ConstructionProvenance {
  std::string family;
  std::map<std::string, std::string> params;
  std::vector<std::string> member_graph6;  // unite_conquer inputs
};

Graph rebuild(const ConstructionProvenance& p);

// Padded graph: one extra vertex per subset X of V(G) (binary-counter
// order), adjacent exactly to X. Order grows to v(G) + 2^v(G); v(G) <= 16.
Graph pad(const Graph& g, ConstructionProvenance* prov = nullptr);

// Vertex-disjoint union of pairwise non-isomorphic graphs, complemented.
Graph unite_conquer(const std::vector<Graph>& members,
                    ConstructionProvenance* prov = nullptr);

// Tree of radius k with a single central vertex whose branches are all
// asymmetric rooted trees of height < k; 3 <= k <= 4 (k = 4 needs the
// explicit large flag: 65537+ vertices).
Graph universal_asymmetric_tree(int k, bool allow_large = false,
                                ConstructionProvenance* prov = nullptr);

}  // namespace fograph

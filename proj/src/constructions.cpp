#include "fograph/constructions.hpp"

#include <stdexcept>

#include "fograph/canonical.hpp"
#include "fograph/errors.hpp"
#include "fograph/graph6.hpp"

namespace fograph {

Graph pad(const Graph& g, ConstructionProvenance* prov) {
  int n = g.order();
  if (n > 16) throw ResourceError("padding is limited to v(G) <= 16");
  auto edges = g.edges();
  // Subset vertices sit at n + mask; v ~ v_X iff v is in X.
  for (uint32_t mask = 0; mask < (1u << n); ++mask)
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) edges.emplace_back(v, n + static_cast<int>(mask));
  if (prov) {
    prov->family = "pad";
    prov->params = {{"base", to_graph6(g)}};
    prov->member_graph6.clear();
  }
  return Graph(n + (1 << n), edges);
}

Graph unite_conquer(const std::vector<Graph>& members,
                    ConstructionProvenance* prov) {
  if (members.size() < 2)
    throw std::invalid_argument("unite_conquer needs at least two members");
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (iso(members[i], members[j]))
        throw std::invalid_argument(
            "unite_conquer members must be pairwise non-isomorphic");
  if (prov) {
    prov->family = "unite_conquer";
    prov->params.clear();
    prov->member_graph6.clear();
    for (const auto& m : members) prov->member_graph6.push_back(to_graph6(m));
  }
  return complement(disjoint_union(members));
}

Graph universal_asymmetric_tree(int k, bool allow_large,
                                ConstructionProvenance* prov) {
  if (k < 3)
    throw std::invalid_argument("universal asymmetric tree requires k >= 3");
  if (k > 4 || (k == 4 && !allow_large))
    throw ResourceError(
        "universal asymmetric tree beyond k = 3 needs the large flag; "
        "k >= 5 is refused");
  auto branches = enumerate_asym_rooted_trees(k - 1, allow_large);
  std::vector<std::pair<int, int>> edges;
  int next = 1;  // vertex 0 is the center
  for (const RootedTree& b : branches) {
    int base = next;
    edges.emplace_back(0, base + b.root);
    for (int v = 0; v < b.order(); ++v)
      if (b.parent[v] >= 0) edges.emplace_back(base + v, base + b.parent[v]);
    next += b.order();
  }
  if (prov) {
    prov->family = "universal_asymmetric_tree";
    prov->params = {{"k", std::to_string(k)}};
    prov->member_graph6.clear();
  }
  return Graph(next, edges);
}

Graph rebuild(const ConstructionProvenance& p) {
  if (p.family == "pad") return pad(from_graph6(p.params.at("base")));
  if (p.family == "unite_conquer") {
    std::vector<Graph> members;
    for (const auto& s : p.member_graph6) members.push_back(from_graph6(s));
    return unite_conquer(members);
  }
  if (p.family == "universal_asymmetric_tree")
    return universal_asymmetric_tree(std::stoi(p.params.at("k")), true);
  throw std::invalid_argument("unknown construction family: " + p.family);
}

}  // namespace fograph

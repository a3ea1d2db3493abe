#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fograph/graph.hpp"

namespace fograph {

// Rooted tree on {0..m-1} as a parent relation (parent[root] = -1).
struct RootedTree {
  std::vector<int> parent;
  int root = 0;

  int order() const { return static_cast<int>(parent.size()); }
  int height() const;
  std::vector<std::vector<int>> children() const;
  Graph to_graph() const;
};

// Canonical nested-parenthesis encoding of a rooted tree; equal strings iff
// isomorphic as rooted trees.
std::string rooted_code(const RootedTree& t);

// Canonical code of a free tree (center-rooted; the two-center case encodes
// the sorted pair of halves).
std::string free_tree_code(const Graph& t);

uint64_t tree_automorphism_count(const Graph& t);

// Vertex v of a tree such that every component of T - v has at most
// floor(n/2) vertices (smallest such index). Throws on non-tree input.
int tree_separator(const Graph& t);

// Code of the branch of T - w containing the neighbor u, rooted at u.
std::string branch_code(const Graph& t, int w, int u);

// Every vertex splits the tree into pairwise non-isomorphic branches.
bool is_diverging(const Graph& t);

// All asymmetric rooted trees of height <= k, deterministic order.
// Count equals r_k where r_0 = 1 and r_k = 2^{r_{k-1}}. k = 4 (65536 trees)
// requires allow_large; k >= 5 is refused.
std::vector<RootedTree> enumerate_asym_rooted_trees(int k,
                                                    bool allow_large = false);

}  // namespace fograph

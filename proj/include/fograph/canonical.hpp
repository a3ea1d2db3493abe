#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fograph/graph.hpp"

namespace fograph {

// Order-prefixed byte encoding of a canonically relabeled graph; two graphs
// have equal codes iff they are isomorphic (within the supported range).
using CanonicalCode = std::string;

// n <= 8: lexicographically minimal upper-triangle bitstring over all
// permutations. Trees of any order: canonical center-rooted encoding.
// Otherwise: refinement with backtracking (individualize smallest color
// class, lexicographic tie-break), minimal leaf string, orbit pruning at the
// root level, budget-guarded.
CanonicalCode canonical_form(const Graph& g);

bool iso(const Graph& g, const Graph& h);

// Exhaustive count for n <= 8; exact for trees via the rooted encoding;
// backtracking search otherwise (budget-guarded).
uint64_t automorphism_count(const Graph& g);
bool is_asymmetric(const Graph& g);

// One canonical representative per isomorphism class, deterministic order
// (ascending minimal code). Exhaustive over all 2^C(n,2) labeled graphs;
// refuses n > 7.
const std::vector<Graph>& enumerate_graphs(int n);

// All unlabeled trees of the given order, deterministic order.
std::vector<Graph> enumerate_trees(int n);

}  // namespace fograph

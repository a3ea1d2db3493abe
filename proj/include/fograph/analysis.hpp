#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fograph/formula.hpp"
#include "fograph/games.hpp"
#include "fograph/graph.hpp"

namespace fograph {

// Tower(0..4); Tower(5) = 2^65536 exceeds every machine type and is kept
// symbolic.
struct TowerTable {
  static constexpr uint64_t values[5] = {1, 2, 4, 16, 65536};
  // min{i : Tower(i) >= n}; any uint64 is covered by Tower(5).
  static int log_star(uint64_t n) {
    for (int i = 0; i < 5; ++i)
      if (values[i] >= n) return i;
    return 5;
  }
};

// Counting-logic depth with k+1 variables, computed from the diagonal
// colors of the standard k-dimensional refinement: one counting quantifier
// settles different orders; otherwise cd^{k+1}(G,H) = 1 + (first round with
// different diagonal color multisets), infinite if they never differ.
GameValue cd_pair(const Graph& g, const Graph& h, int k);

struct CwResult {
  int value = 0;     // exact value, or a lower bound when !exact
  bool exact = true;
  int max_dim_searched = 0;
};

// Counting width: 1 + least dimension whose standard refinement separates
// the pair (1 when the orders differ).
CwResult cw_pair(const Graph& g, const Graph& h, int max_dim = 3);

enum class IdMetric { depth, width, cd, cw };

struct IdentificationReport {
  GameValue value;
  bool exact = true;
  std::optional<Graph> witness;  // extremal same-order opponent
};

// Maximum of the metric over all same-order non-isomorphic graphs. Order
// caps: 6 for depth/width (game per class pair), 7 for cd/cw.
IdentificationReport identification(const Graph& g, IdMetric metric,
                                    int k_for_cd = 1);

struct SieveReport {
  std::vector<int> x;                       // chosen set X
  std::vector<std::vector<int>> classes;    // partition C(X) of V \ X
  std::vector<int> sifted;                  // S(X), including X
  bool weak = false;                        // S(S(X)) = V
  std::vector<int> class_counts_per_step;   // |C(X)| after each greedy step
  int first_weak_size = -1;  // shortest weak prefix of the greedy order
  int size() const { return static_cast<int>(x.size()); }
};

// Greedy C-maximal construction: move u into X while it increases the
// number of X-similarity classes. For twin-free inputs the result is a weak
// sieve with |X| <= (n-1)/2.
SieveReport weak_sieve(const Graph& g);

std::vector<int> sift(const Graph& g, const std::vector<int>& x);

// Every disjoint X, Y with |X u Y| <= k admit a vertex adjacent to all of X
// and none of Y.
bool extension_property(const Graph& g, int k);

// Degree-preserving 2-switch on an equidegree quadruple yielding a graph
// that is certifiably non-isomorphic yet agrees with G on all round-2
// refinement colors; nullopt when no such quadruple works.
std::optional<Graph> two_switch_witness(const Graph& g);

struct SpectrumReport {
  std::string sentence;
  int existentials = 0;
  int universals = 0;
  std::vector<bool> member;   // member[i] for order i, 1-based, up to N
  int small_model_bound = 0;  // max(k, 1)
  long long dichotomy_lower = 0;  // k + l
  long long dichotomy_upper = 0;  // 2^k 4^l
};

// Spectrum membership for orders 1..N (N <= 8): isomorphism classes up to
// order 5, pruned labeled search beyond.
SpectrumReport bs_spectrum(FormulaStore& store, FormulaRef f, int N);

// Finite satisfiability, decided by searching orders up to max(k, 1).
bool bs_satisfiable(FormulaStore& store, FormulaRef f);

// Adds m twins cloned from a class of pairwise twins with uniform mutual
// adjacency (class size >= 2).
Graph clone_twin(const Graph& g, const std::vector<int>& twin_class, int m);

// Fraction of seeded G(n, 1/2) samples satisfying the sentence.
double estimate_sentence_probability(FormulaRef f, int n, int samples,
                                     uint64_t seed);

struct ComponentBoundReport {
  bool applicable = false;  // c_F(G) + v(F) <= d0(G) + 1 for all components
  int d0 = 0;
  int depth_vs_extra_vertex = 0;  // D(G, G + isolated vertex)
  bool depth_lower_ok = false;    // >= d0 + 2
  bool width_lower_ok = false;    // W(G, G + isolated vertex) >= d0 + 1
  bool identification_upper_ok = false;  // same-order depths <= d0 + 2
};

// Checks the isolated-vertex lower-bound regime on a non-empty graph; the
// game-backed verifications run only when the component condition holds.
ComponentBoundReport component_count_bound_check(const Graph& g,
                                                 uint64_t seed = 1);

}  // namespace fograph

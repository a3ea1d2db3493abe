#pragma once

#include <cstdint>
#include <vector>

#include "fograph/games.hpp"
#include "fograph/graph.hpp"

namespace fograph {

enum class WlVersion { standard, count_free };

struct WlRound {
  std::vector<int> colors_g;  // dense color per k-tuple of V(G)^k
  std::vector<int> colors_h;  // empty in single-graph mode
  int classes = 0;
  bool multisets_equal = true;  // C{G} vs C{H}; set comparison if count-free
  bool diag_equal = true;
  bool g_partition_changed = true;      // vs previous round
  bool joint_partition_changed = true;  // vs previous round
  std::vector<int> class_counts_g;      // per-color tuple counts in G
};

// Per-round color state of the k-dimensional refinement. Colors are renamed
// each round by the lexicographic rank of (previous color, aggregated
// neighborhood signature), jointly over both graphs in pairwise mode.
struct Coloring {
  int k = 1;
  WlVersion version = WlVersion::standard;
  int n_g = 0;
  int n_h = 0;               // 0 in single-graph mode
  std::vector<WlRound> rounds;  // index = round, starting at 0
  int stab_g = -1;           // Stab_k(G); -1 if the run stopped early
  int joint_stab = -1;       // first round with the joint partition stable

  const WlRound& last() const { return rounds.back(); }
};

// Runs the r-round k-dimensional refinement until the joint partition
// stabilizes (or max_rounds when nonnegative). h may be null. Standard
// version requires k >= 1; count-free requires k >= 2.
Coloring wl_refine(const Graph& g, const Graph* h, int k, WlVersion version,
                   int max_rounds = -1);

struct WlVerdict {
  bool non_isomorphic = false;
  int round = 0;  // decision round (Rule 1) or the Rule 2 stop round
};

// Termination rules: report non-isomorphism as soon as the color multisets
// differ; stop and report isomorphism once r reaches Stab_k(G) with equal
// multisets.
WlVerdict wl_verdict(const Graph& g, const Graph& h, int k, WlVersion version);

// Equality of the diagonal color multisets (sets when count-free) at round
// r; rounds past stabilization repeat the stable coloring.
bool diag_compare(const Graph& g, const Graph& h, int k, WlVersion version,
                  int r);

int stab_index(const Graph& g, int k, WlVersion version);

// Smallest r at which 1-dimensional refinement splits G into singleton
// classes; infinite when the stable partition is coarser.
GameValue discrete_rounds(const Graph& g);

}  // namespace fograph

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fograph/graph.hpp"

namespace fograph {

// Value of a game query: a number of rounds, or infinity when Duplicator
// survives forever. Infinity is a distinguished state, never a large int.
struct GameValue {
  bool finite = false;
  int rounds = 0;

  static GameValue of(int r) { return {true, r}; }
  static GameValue inf() { return {false, 0}; }

  bool operator==(const GameValue&) const = default;
  bool operator<=(const GameValue& o) const {
    if (!finite) return !o.finite;
    return !o.finite || rounds <= o.rounds;
  }
};

struct GameStats {
  long configs_visited = 0;
  int rounds_explored = 0;
};

// A pebbled position: aligned vertex pairs (u in G, v in H).
using PebblePairs = std::vector<std::pair<int, int>>;

bool is_partial_iso(const Graph& g, const Graph& h, const PebblePairs& cfg);

// D(G,H): minimal r such that Spoiler wins the r-round game with r pebbles
// that are never moved. Precondition: G and H non-isomorphic.
GameValue game_depth(const Graph& g, const Graph& h,
                     GameStats* stats = nullptr);

// D^k(G,H): minimal r with k reusable pebbles, or infinity when the
// Duplicator-safe fixpoint contains the empty position.
GameValue pebble_depth(const Graph& g, const Graph& h, int k,
                       GameStats* stats = nullptr);

// W(G,H): least k with pebble_depth(G,H,k) finite, searched ascending.
GameValue game_width(const Graph& g, const Graph& h,
                     GameStats* stats = nullptr);

// True iff pebble_depth(G,H,j) is infinite for every j < k (cheaper than
// computing the exact width when only a lower bound is asserted).
bool width_at_least(const Graph& g, const Graph& h, int k);

// D_a(G,H): as game_depth, but Spoiler may switch graphs between
// consecutive rounds at most a times; the first round costs no switch.
GameValue alt_depth(const Graph& g, const Graph& h, int a,
                    GameStats* stats = nullptr);

enum class SpoilerStrategy { halving_distance, tree_separator, weak_sieve };

struct PlayOutcome {
  bool won = false;
  int rounds = 0;    // worst case over all Duplicator play, beyond the
                     // initial configuration
  int switches = 0;  // graph switches Spoiler needed (worst case)
  long configs_visited = 0;
};

// Plays a named deterministic Spoiler strategy against an exhaustively
// searched Duplicator. sieve supplies X for the weak-sieve strategy.
PlayOutcome play(const Graph& g, const Graph& h, SpoilerStrategy strategy,
                 const PebblePairs& initial_config,
                 const std::vector<int>& sieve = {});

}  // namespace fograph

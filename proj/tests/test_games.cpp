#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fograph/analysis.hpp"
#include "fograph/canonical.hpp"
#include "fograph/errors.hpp"
#include "fograph/games.hpp"
#include "fograph/rng.hpp"

using namespace fograph;

namespace {

// Independent oracle: minimal Spoiler win by direct recursion over ordered
// pebble tuples, no memoization, no position canonicalization.
bool ref_wins(const Graph& g, const Graph& h, std::vector<int>& us,
              std::vector<int>& vs, int r) {
  // Current position must be a partial isomorphism (checked by caller).
  if (r == 0) return false;
  for (int side = 0; side < 2; ++side) {
    const Graph& mine = side == 0 ? g : h;
    const Graph& theirs = side == 0 ? h : g;
    for (int a = 0; a < mine.order(); ++a) {
      bool all_lose = true;
      for (int b = 0; b < theirs.order() && all_lose; ++b) {
        int u = side == 0 ? a : b;
        int v = side == 0 ? b : a;
        bool ok = true;
        for (size_t i = 0; i < us.size() && ok; ++i) {
          if ((us[i] == u) != (vs[i] == v)) ok = false;
          if (ok && us[i] != u && g.adjacent(us[i], u) != h.adjacent(vs[i], v))
            ok = false;
        }
        if (!ok) continue;  // losing reply
        us.push_back(u);
        vs.push_back(v);
        if (!ref_wins(g, h, us, vs, r - 1)) all_lose = false;
        us.pop_back();
        vs.pop_back();
      }
      if (all_lose) return true;
    }
  }
  return false;
}

int ref_depth(const Graph& g, const Graph& h) {
  std::vector<int> us, vs;
  for (int r = 0;; ++r)
    if (ref_wins(g, h, us, vs, r)) return r;
}

std::vector<Graph> classes_up_to(int n) {
  std::vector<Graph> all;
  for (int i = 1; i <= n; ++i)
    for (const Graph& g : enumerate_graphs(i)) all.push_back(g);
  return all;
}

}  // namespace

TEST_CASE("depth agrees with the naive reference on all pairs up to 3") {
  auto all = classes_up_to(3);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].order() == all[j].order() && iso(all[i], all[j])) continue;
      CHECK(game_depth(all[i], all[j]).rounds == ref_depth(all[i], all[j]));
    }
}

TEST_CASE("depth spot checks against the reference at order 4") {
  Graph k4 = complete_graph(4);
  for (const Graph& h : enumerate_graphs(4)) {
    if (iso(h, k4)) continue;
    CHECK(game_depth(k4, h).rounds == ref_depth(k4, h));
  }
  Graph c4 = cycle_graph(4);
  Graph p4 = path_graph(4);
  CHECK(game_depth(c4, p4).rounds == ref_depth(c4, p4));
}

TEST_CASE("depth examples") {
  CHECK(game_depth(complete_graph(2), empty_graph(2)) == GameValue::of(2));
  Graph m2 = disjoint_union({path_graph(4), path_graph(4)});
  Graph m3 = disjoint_union({path_graph(4), path_graph(4), path_graph(4)});
  GameValue d = game_depth(m2, m3);
  CHECK(d.rounds >= 3);
}

TEST_CASE("preconditions") {
  Graph p3 = path_graph(3);
  CHECK_THROWS_AS(game_depth(p3, relabel(p3, {2, 1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(pebble_depth(p3, p3, 2), std::invalid_argument);
  CHECK_THROWS_AS(alt_depth(p3, path_graph(4), -1), std::invalid_argument);
  CHECK_THROWS_AS(pebble_depth(p3, path_graph(4), 0), std::invalid_argument);
}

TEST_CASE("pebble game: infinity and finiteness") {
  CHECK(pebble_depth(complete_graph(3), complete_graph(4), 3) ==
        GameValue::inf());
  Graph c6 = cycle_graph(6);
  Graph two_c3 = disjoint_union({cycle_graph(3), cycle_graph(3)});
  CHECK(pebble_depth(c6, two_c3, 3).finite);
  CHECK(!pebble_depth(c6, two_c3, 2).finite);
  GameValue p = pebble_depth(path_graph(8), star_graph(3), 3);
  CHECK(p.finite);
  CHECK(p.rounds <= 4);
}

TEST_CASE("width examples") {
  Graph c6 = cycle_graph(6);
  Graph two_c3 = disjoint_union({cycle_graph(3), cycle_graph(3)});
  CHECK(game_width(c6, two_c3) == GameValue::of(3));
  for (int n = 1; n <= 4; ++n)
    CHECK(game_width(complete_graph(n), complete_graph(n + 1)) ==
          GameValue::of(n + 1));
}

TEST_CASE("game values are symmetric and complement invariant, n <= 4") {
  auto all = classes_up_to(4);
  SplitMix64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph& g = all[rng.below(all.size())];
    const Graph& h = all[rng.below(all.size())];
    if (g.order() == h.order() && iso(g, h)) continue;
    GameValue d = game_depth(g, h);
    CHECK(d == game_depth(h, g));
    CHECK(d == game_depth(complement(g), complement(h)));
    GameValue p2 = pebble_depth(g, h, 2);
    CHECK(p2 == pebble_depth(h, g, 2));
    CHECK(p2 == pebble_depth(complement(g), complement(h), 2));
    CHECK(game_width(g, h) == game_width(complement(g), complement(h)));
  }
}

TEST_CASE("pebble monotonicity and depth as the pebble minimum, n <= 4") {
  auto all = classes_up_to(4);
  SplitMix64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph& g = all[rng.below(all.size())];
    const Graph& h = all[rng.below(all.size())];
    if (g.order() == h.order() && iso(g, h)) continue;
    GameValue depth = game_depth(g, h);
    GameValue best = GameValue::inf();
    for (int k = 1; k <= std::min(g.order(), h.order()) + 1; ++k) {
      GameValue cur = pebble_depth(g, h, k);
      GameValue next = pebble_depth(g, h, k + 1);
      CHECK(next <= cur);
      if (cur.finite && (!best.finite || cur.rounds < best.rounds))
        best = cur;
    }
    CHECK(best == depth);
    // Cap soundness.
    CHECK(depth.rounds <= std::min(g.order(), h.order()) + 1);
  }
}

TEST_CASE("alternation-bounded depth") {
  Graph k2 = complete_graph(2);
  Graph e2 = empty_graph(2);
  CHECK(alt_depth(k2, e2, 0) == GameValue::of(2));
  auto all = classes_up_to(4);
  SplitMix64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph& g = all[rng.below(all.size())];
    const Graph& h = all[rng.below(all.size())];
    if (g.order() == h.order() && iso(g, h)) continue;
    GameValue d = game_depth(g, h);
    // Monotone chain D <= ... <= D_1 <= D_0 and agreement once the budget
    // cannot bind.
    GameValue prev = alt_depth(g, h, 0);
    for (int a = 1; a <= d.rounds; ++a) {
      GameValue cur = alt_depth(g, h, a);
      CHECK(cur <= prev);
      prev = cur;
    }
    CHECK(alt_depth(g, h, std::max(0, d.rounds - 1)) == d);
  }
}

TEST_CASE("width lower-bound helper agrees with the full search") {
  Graph c6 = cycle_graph(6);
  Graph two_c3 = disjoint_union({cycle_graph(3), cycle_graph(3)});
  CHECK(width_at_least(c6, two_c3, 3));
  CHECK(!width_at_least(c6, two_c3, 4));
  CHECK(width_at_least(complete_graph(3), complete_graph(4), 4));
}

TEST_CASE("halving strategy play") {
  Graph p9 = path_graph(9);
  Graph c9 = cycle_graph(9);
  // Endpoints of P9 (distance 8) vs a C9 pair at distance 4.
  PlayOutcome o = play(p9, c9, SpoilerStrategy::halving_distance,
                       {{0, 0}, {8, 4}});
  CHECK(o.won);
  CHECK(o.rounds <= 3);  // ceil(log2 8) = 3 covers the smaller mismatch too
  CHECK_THROWS_AS(
      play(p9, c9, SpoilerStrategy::halving_distance, {{0, 0}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      play(p9, c9, SpoilerStrategy::halving_distance, {{0, 0}, {1, 5}}),
      std::invalid_argument);
}

TEST_CASE("weak-sieve strategy play on a hand case") {
  // P4 is twin-free: its greedy sieve has size 1 and the strategy finishes
  // within |X| + 3 = 4 rounds with at most one switch against anything.
  Graph p4 = path_graph(4);
  SieveReport sieve = weak_sieve(p4);
  REQUIRE(sieve.weak);
  for (const Graph& h : enumerate_graphs(4)) {
    if (iso(h, p4)) continue;
    PlayOutcome o = play(p4, h, SpoilerStrategy::weak_sieve, {}, sieve.x);
    CHECK(o.won);
    CHECK(o.rounds <= sieve.size() + 3);
    CHECK(o.switches <= 1);
  }
}

TEST_CASE("tree strategy rejects non-trees") {
  CHECK_THROWS_AS(
      play(path_graph(4), cycle_graph(4), SpoilerStrategy::tree_separator, {}),
      std::invalid_argument);
}

TEST_CASE("tree strategy wins within radius + 2 on small trees") {
  // An asymmetric tree of radius 3 on 7 vertices: a 6-path with a leaf on
  // vertex 2, so the three branches at 2 have distinct sizes.
  Graph t(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
  REQUIRE(t.is_tree());
  REQUIRE(is_asymmetric(t));
  for (const Graph& opp : enumerate_trees(7)) {
    if (iso(opp, t)) continue;
    PlayOutcome o = play(t, opp, SpoilerStrategy::tree_separator, {});
    CHECK(o.won);
    CHECK(o.rounds <= t.radius() + 2);
  }
}

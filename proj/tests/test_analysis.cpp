#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fograph/analysis.hpp"
#include "fograph/canonical.hpp"
#include "fograph/emitters.hpp"
#include "fograph/errors.hpp"
#include "fograph/eval.hpp"
#include "fograph/rng.hpp"

using namespace fograph;

TEST_CASE("counting depth pairs") {
  // Different orders: a single counting quantifier suffices.
  CHECK(cd_pair(path_graph(3), path_graph(4), 1) == GameValue::of(1));
  // Complete graphs differ from any same-order rival by degree multisets.
  for (int n = 2; n <= 5; ++n)
    for (const Graph& h : enumerate_graphs(n)) {
      if (iso(h, complete_graph(n))) continue;
      CHECK(cd_pair(complete_graph(n), h, 1) == GameValue::of(2));
    }
  Graph c6 = cycle_graph(6);
  Graph two_c3 = disjoint_union({cycle_graph(3), cycle_graph(3)});
  CHECK(cd_pair(c6, two_c3, 1) == GameValue::inf());
  CHECK(cd_pair(c6, two_c3, 2).finite);
  CHECK_THROWS_AS(cd_pair(c6, relabel(c6, {1, 2, 3, 4, 5, 0}), 1),
                  std::invalid_argument);
}

TEST_CASE("counting width pairs") {
  Graph c6 = cycle_graph(6);
  Graph two_c3 = disjoint_union({cycle_graph(3), cycle_graph(3)});
  CwResult cw = cw_pair(c6, two_c3);
  CHECK(cw.exact);
  CHECK(cw.value == 3);
  CHECK(cw_pair(path_graph(4), path_graph(5)).value == 1);
}

TEST_CASE("counting dominates the plain game on small pairs") {
  std::vector<Graph> all;
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : enumerate_graphs(n)) all.push_back(g);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      const Graph& g = all[i];
      const Graph& h = all[j];
      if (g.order() == h.order() && iso(g, h)) continue;
      for (int k = 1; k <= 2; ++k) {
        GameValue cd = cd_pair(g, h, k);
        GameValue dk = pebble_depth(g, h, k + 1);
        if (dk.finite) {
          REQUIRE(cd.finite);
          CHECK(cd.rounds <= dk.rounds);
        }
      }
      CwResult cw = cw_pair(g, h, 4);
      GameValue w = game_width(g, h);
      REQUIRE(cw.exact);
      CHECK(cw.value <= w.rounds);
    }
}

TEST_CASE("identification maxima") {
  auto k4 = identification(complete_graph(4), IdMetric::depth);
  CHECK(k4.value == GameValue::of(2));
  CHECK(k4.witness.has_value());
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      auto id = identification(g, IdMetric::depth);
      CHECK(id.value.finite);
      CHECK(id.value.rounds <= (n + 3) / 2);
    }
  auto k5 = identification(complete_graph(5), IdMetric::cw);
  CHECK(k5.exact);
  CHECK(k5.value == GameValue::of(2));
  CHECK_THROWS_AS(identification(empty_graph(7), IdMetric::depth),
                  ResourceError);
}

TEST_CASE("greedy sieve on hand cases and the size bound") {
  SieveReport p4 = weak_sieve(path_graph(4));
  CHECK(p4.size() == 1);
  CHECK(p4.weak);
  // |C(X)| >= |X|+1 after every step, on arbitrary inputs.
  for (uint64_t s = 0; s < 30; ++s) {
    Graph g = gnp(8, 0.5, 500 + s);
    SieveReport r = weak_sieve(g);
    for (size_t step = 0; step < r.class_counts_per_step.size(); ++step)
      CHECK(r.class_counts_per_step[step] >= static_cast<int>(step) + 1);
  }
  // Twin-free graphs: weak sieve with |X| <= (n-1)/2 (exhaustive n <= 5).
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_twin_free(g)) continue;
      SieveReport r = weak_sieve(g);
      CHECK(r.weak);
      CHECK(r.size() <= (n - 1) / 2);
    }
}

TEST_CASE("median weak-sieve size on random order-128 graphs") {
  // The probabilistic bound is an existence statement; the witness is the
  // shortest weak prefix of the greedy order.
  std::vector<int> sizes;
  for (int i = 0; i < 50; ++i) {
    SieveReport r = weak_sieve(gnp(128, 0.5, split_seed(4141, i)));
    REQUIRE(r.first_weak_size >= 0);
    sizes.push_back(r.first_weak_size);
  }
  std::sort(sizes.begin(), sizes.end());
  double bound = std::log2(128.0) - std::log2(std::log(128.0)) + 5;
  CHECK(sizes[25] <= bound);
}

TEST_CASE("extension property checker") {
  CHECK(!extension_property(complete_graph(3), 1));
  CHECK(extension_property(cycle_graph(5), 1));
  CHECK(extension_property(path_graph(1), 0));
  // Agreement with the emitted sentences is covered in the emitter tests;
  // here: monotonicity in k.
  Graph g = gnp(12, 0.5, 99);
  for (int k = 2; k >= 0; --k)
    if (extension_property(g, k + 1)) CHECK(extension_property(g, k));
}

TEST_CASE("sentence probability estimates") {
  FormulaStore st;
  FormulaRef trivial = parse_formula(st, "Ex.(x=x)");
  CHECK(estimate_sentence_probability(trivial, 8, 50, 1) == 1.0);
  // Exact labeled count: 3 of the 8 labeled 3-vertex graphs are paths.
  FormulaRef p3 = generic_defining(st, path_graph(3));
  double freq = estimate_sentence_probability(p3, 3, 4000, 12);
  CHECK(freq > 0.30);
  CHECK(freq < 0.45);
  // Extension at n = 256 holds with high frequency.
  FormulaRef e2 = extension_sentence(st, 2);
  CHECK(estimate_sentence_probability(e2, 256, 60, 7) >= 0.9);
}

TEST_CASE("two-switch witnesses") {
  CHECK(!two_switch_witness(complete_graph(4)).has_value());
  int successes = 0;
  for (int i = 0; i < 25; ++i) {
    Graph g = gnp(64, 0.5, split_seed(31415, i));
    auto w = two_switch_witness(g);
    if (!w) continue;
    ++successes;
    CHECK(w->order() == g.order());
    CHECK(!iso(g, *w));
    // Per-vertex round-2 colors agree, hence cd^2 >= 4.
    GameValue cd = cd_pair(g, *w, 1);
    CHECK((!cd.finite || cd.rounds >= 4));
  }
  CHECK(successes >= 23);
}

TEST_CASE("twin cloning") {
  Graph c4 = cycle_graph(4);
  Graph k23 = clone_twin(c4, {0, 2}, 1);
  CHECK(k23.order() == 5);
  // K_{2,3}: bipartite 2+3 with all 6 cross edges.
  Graph expected(5, {{0, 1}, {0, 3}, {2, 1}, {2, 3}, {4, 1}, {4, 3}});
  CHECK(iso(k23, expected));
  for (int m = 0; m <= 3; ++m)
    CHECK(clone_twin(c4, {0, 2}, m).order() == 4 + m);
  CHECK_THROWS_AS(clone_twin(path_graph(4), {0, 3}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(clone_twin(c4, {0}, 1), std::invalid_argument);
  // True twins clone into a larger clique.
  Graph k4 = complete_graph(4);
  CHECK(iso(clone_twin(k4, {0, 1, 2, 3}, 2), complete_graph(6)));
}

TEST_CASE("spectra of hand sentences") {
  FormulaStore st;
  SpectrumReport one = bs_spectrum(st, parse_formula(st, "Ex.Ay.(y=x)"), 8);
  for (int n = 1; n <= 8; ++n) CHECK(one.member[n] == (n == 1));
  SpectrumReport edge =
      bs_spectrum(st, parse_formula(st, "Ex.Ey.(!x=y & x~y)"), 8);
  for (int n = 1; n <= 8; ++n) CHECK(edge.member[n] == (n >= 2));
  CHECK(edge.existentials == 2);
  CHECK(edge.universals == 0);
  CHECK_THROWS_AS(bs_spectrum(st, parse_formula(st, "Ax.Ey.(x~y)"), 8),
                  std::invalid_argument);
  CHECK_THROWS_AS(bs_spectrum(st, parse_formula(st, "Ex.(x=x)"), 9),
                  ResourceError);
  // "No edges at all" has a full spectrum; "every pair adjacent" too.
  SpectrumReport empty =
      bs_spectrum(st, parse_formula(st, "Ax.Ay.(!x~y)"), 8);
  for (int n = 1; n <= 8; ++n) CHECK(empty.member[n]);
}

TEST_CASE("labeled search agrees with class enumeration at order 5") {
  // Force the pruned labeled search down to order 5 by checking a sentence
  // whose spectrum is nontrivial there, via both code paths' consistency on
  // adjacent orders.
  FormulaStore st;
  FormulaRef f = parse_formula(
      st, "Ex.Ey.Ez.(x~y & y~z & !x~z & !x=z)");  // an induced path of 3
  SpectrumReport rep = bs_spectrum(st, f, 8);
  for (int n = 1; n <= 8; ++n) CHECK(rep.member[n] == (n >= 3));
}

TEST_CASE("component-count bound regime") {
  Graph g = disjoint_union(
      {path_graph(2), empty_graph(1), empty_graph(1), empty_graph(1)});
  ComponentBoundReport rep = component_count_bound_check(g);
  CHECK(rep.applicable);
  CHECK(rep.d0 == 3);
  CHECK(rep.depth_vs_extra_vertex == 5);
  CHECK(rep.depth_lower_ok);
  CHECK(rep.width_lower_ok);
  CHECK(rep.identification_upper_ok);

  ComponentBoundReport k2 = component_count_bound_check(path_graph(2));
  CHECK(!k2.applicable);
  CHECK_THROWS_AS(component_count_bound_check(empty_graph(3)),
                  std::invalid_argument);

  // Width lower bound W(G, G+K1) >= d0+1 for small non-empty graphs.
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g2 : enumerate_graphs(n)) {
      if (g2.edge_count() == 0) continue;
      Graph extra = add_isolated_vertices(g2, 1);
      CHECK(width_at_least(g2, extra, g2.isolated_count() + 1));
    }
}

TEST_CASE("tower table") {
  CHECK(TowerTable::values[0] == 1);
  CHECK(TowerTable::values[4] == 65536);
  CHECK(TowerTable::log_star(1) == 0);
  CHECK(TowerTable::log_star(2) == 1);
  CHECK(TowerTable::log_star(5) == 3);
  CHECK(TowerTable::log_star(65536) == 4);
  CHECK(TowerTable::log_star(65537) == 5);
  CHECK(TowerTable::log_star(~0ull) == 5);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fograph/canonical.hpp"
#include "fograph/emitters.hpp"
#include "fograph/eval.hpp"
#include "fograph/games.hpp"
#include "test_util.hpp"

using namespace fograph;
using fograph::testutil::close_sentence;
using fograph::testutil::random_formula;
using fograph::testutil::random_perm;

TEST_CASE("completeness sentence distinguishes K3 from P3") {
  FormulaStore st;
  int x = st.var("x"), y = st.var("y");
  FormulaRef complete = st.forall(
      x, st.forall(y, st.disj({st.adj(x, y), st.equal(x, y)})));
  CHECK(evaluate(complete_graph(3), complete));
  CHECK(!evaluate(path_graph(3), complete));
}

TEST_CASE("path sentence on paths, cycles, longer paths") {
  FormulaStore st;
  FormulaRef p4 = path_sentence(st, 4);
  CHECK(evaluate(path_graph(4), p4));
  CHECK(!evaluate(cycle_graph(4), p4));
  CHECK(!evaluate(path_graph(5), p4));
  FormulaRef p3 = path_sentence(st, 3);
  CHECK(evaluate(path_graph(3), p3));
  CHECK(!evaluate(complete_graph(3), p3));
}

TEST_CASE("counting order sentences pin the order exactly") {
  FormulaStore st;
  int x = st.var("x");
  for (int n = 1; n <= 5; ++n) {
    FormulaRef order_n =
        st.conj({st.count_exists(n, x, st.equal(x, x)),
                 st.negate(st.count_exists(n + 1, x, st.equal(x, x)))});
    for (int m = 1; m <= 5; ++m)
      for (const Graph& g : enumerate_graphs(m))
        CHECK(evaluate(g, order_n) == (m == n));
  }
}

TEST_CASE("free variables and assignments") {
  FormulaStore st;
  int x = st.var("x"), y = st.var("y");
  FormulaRef adj = st.adj(x, y);
  Graph p3 = path_graph(3);
  CHECK(evaluate(p3, adj, {{x, 0}, {y, 1}}));
  CHECK(!evaluate(p3, adj, {{x, 0}, {y, 2}}));
  CHECK_THROWS_AS(evaluate(p3, adj, {{x, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(p3, adj, {{x, 0}, {y, 9}}), std::invalid_argument);
}

TEST_CASE("evaluation is invariant under simultaneous relabeling") {
  FormulaStore st;
  SplitMix64 rng(99);
  Graph g = gnp(6, 0.5, 4242);
  for (int i = 0; i < 100; ++i) {
    FormulaRef f = random_formula(st, rng, 3, true);
    auto perm = random_perm(g.order(), rng);
    Graph h = relabel(g, perm);
    // Assignment for the free variables, relabeled alongside.
    std::vector<std::pair<int, int>> asg, asg_h;
    int v = 0;
    for (int var : f->free_vars) {
      asg.emplace_back(var, v);
      asg_h.emplace_back(var, perm[v]);
      v = (v + 1) % g.order();
    }
    CHECK(evaluate(g, f, asg) == evaluate(h, f, asg_h));
  }
}

namespace {

// Complementation flips adjacency only on distinct vertex pairs, so the
// atoms-only duality is stated for irreflexive adjacency atoms evaluated
// under injective assignments.
bool has_reflexive_adj(FormulaRef f) {
  if (f->kind == FormulaKind::Adj) return f->var_a == f->var_b;
  for (auto c : f->children)
    if (has_reflexive_adj(c)) return true;
  return false;
}

}  // namespace

TEST_CASE("complement duality on the atoms-only fragment") {
  FormulaStore st;
  SplitMix64 rng(123);
  Graph g = gnp(6, 0.5, 77);
  Graph gc = complement(g);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    FormulaRef f = random_formula(st, rng, 2, false);
    if (measure(f).depth > 0) continue;  // atoms-only fragment
    if (has_reflexive_adj(f)) continue;
    FormulaRef d = st.dual(f);
    std::vector<std::pair<int, int>> asg;
    int v = 0;
    for (int var : f->free_vars) asg.emplace_back(var, v++);  // injective
    CHECK(evaluate(g, f, asg) == evaluate(gc, d, asg));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("depth-d sentences cannot split depth-indistinguishable pairs") {
  FormulaStore st;
  SplitMix64 rng(5);
  std::vector<Graph> all;
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : enumerate_graphs(n)) all.push_back(g);
  std::vector<FormulaRef> sentences;
  for (int i = 0; i < 60; ++i) {
    FormulaRef f = close_sentence(st, random_formula(st, rng, 3, false));
    if (measure(f).depth <= 3) sentences.push_back(f);
  }
  long cross_checks = 0;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].order() == all[j].order() && iso(all[i], all[j])) continue;
      GameValue d = game_depth(all[i], all[j]);
      for (FormulaRef f : sentences) {
        if (measure(f).depth < d.rounds) {
          CHECK(evaluate(all[i], f) == evaluate(all[j], f));
          ++cross_checks;
        }
      }
    }
  CHECK(cross_checks > 100);
}

TEST_CASE("relativized sentence sees the induced subgraph") {
  FormulaStore st;
  // In the padded graph the apex vertex v_V is adjacent to exactly the base
  // vertices, so relativizing a defining sentence to N(apex) must evaluate
  // as the original does on the base graph.
  Graph base = path_graph(2);
  auto edges = base.edges();
  int n = base.order();
  for (int mask = 0; mask < (1 << n); ++mask)
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) edges.emplace_back(v, n + mask);
  Graph padded(n + (1 << n), edges);
  int apex = n + (1 << n) - 1;

  FormulaRef phi = generic_defining(st, base);
  int c = st.var("apex");
  FormulaRef rel = st.relativize(phi, c);
  CHECK(evaluate(padded, rel, {{c, apex}}) == evaluate(base, phi));
  // And a sentence false on the base stays false through the window.
  FormulaRef wrong = generic_defining(st, empty_graph(2));
  FormulaRef rel_wrong = st.relativize(wrong, c);
  CHECK(evaluate(padded, rel_wrong, {{c, apex}}) ==
        evaluate(base, wrong));
  CHECK(!evaluate(padded, rel_wrong, {{c, apex}}));
}

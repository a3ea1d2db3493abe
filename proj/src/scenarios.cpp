#include "fograph/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include <atomic>
#include <thread>

#include "fograph/analysis.hpp"
#include "fograph/canonical.hpp"
#include "fograph/constructions.hpp"
#include "fograph/emitters.hpp"
#include "fograph/errors.hpp"
#include "fograph/eval.hpp"
#include "fograph/graph6.hpp"
#include "fograph/rng.hpp"
#include "fograph/wl.hpp"

namespace fograph {

namespace {

using nlohmann::json;

// Fan-out over independent tasks; results land in pre-sized slots, so the
// aggregate is independent of scheduling.
template <typename Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

struct Checker {
  ScenarioResult& result;

  void check(bool ok, const std::string& what) {
    result.details.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
    if (!ok) result.pass = false;
  }
};

std::vector<Graph> classes_up_to(int max_order) {
  std::vector<Graph> all;
  for (int n = 1; n <= max_order; ++n)
    for (const Graph& g : enumerate_graphs(n)) all.push_back(g);
  return all;
}

int ceil_log2(int d) {
  int r = 0;
  while ((1 << r) < d) ++r;
  return r;
}

// ---- 1. oracle triangle: games vs emitted class sentences ----

void oracle_triangle(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  int max_order = ctx.config["caps"]["oracle_triangle_order"];
  int max_k = ctx.config["caps"]["oracle_triangle_depth"];
  auto all = classes_up_to(max_order);
  FormulaStore store;
  long pairs = 0, checks = 0, mismatches = 0;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      if (i == j) continue;
      const Graph& g = all[i];
      const Graph& h = all[j];
      if (g.order() == h.order() && iso(g, h)) continue;
      ++pairs;
      GameValue d = game_depth(g, h);
      for (int k = 1; k <= max_k; ++k) {
        bool indistinct = d.rounds > k;
        bool holds = evaluate(h, hintikka(store, g, k));
        ++checks;
        if (holds != indistinct) ++mismatches;
      }
    }
  ck.check(mismatches == 0,
           "depth(G,H) > k iff H satisfies the depth-k class sentence of G "
           "(" + std::to_string(checks) + " checks over " +
               std::to_string(pairs) + " ordered pairs)");
  out.report["ordered_pairs"] = pairs;
  out.report["checks"] = checks;
  out.report["mismatches"] = mismatches;
}

// ---- 2. same-order depth bound (n+3)/2 ----

void same_order_depth(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  int max_order = ctx.config["caps"]["same_order_depth_order"];
  json maxima = json::object();
  for (int n = 2; n <= max_order; ++n) {
    const auto& classes = enumerate_graphs(n);
    int bound = (n + 3) / 2;
    int realized = 0;
    bool all_ok = true;
    for (size_t i = 0; i < classes.size(); ++i)
      for (size_t j = i + 1; j < classes.size(); ++j) {
        GameValue d = game_depth(classes[i], classes[j]);
        realized = std::max(realized, d.rounds);
        if (d.rounds > bound) all_ok = false;
      }
    maxima[std::to_string(n)] = realized;
    ck.check(all_ok, "n=" + std::to_string(n) + ": max same-order depth " +
                         std::to_string(realized) + " <= " +
                         std::to_string(bound));
  }
  ck.check(maxima[std::to_string(max_order)].get<int>() <= 4,
           "maximum at n=" + std::to_string(max_order) + " is at most 4");
  out.report["realized_max_per_n"] = maxima;
}

// ---- 3. clique depths ----

void clique_depth(const ScenarioContext&, ScenarioResult& out) {
  Checker ck{out};
  for (int n = 1; n <= 4; ++n)
    for (int m = n + 1; m <= 5; ++m) {
      GameValue d = game_depth(complete_graph(n), complete_graph(m));
      ck.check(d.finite && d.rounds == n + 1,
               "D(K" + std::to_string(n) + ",K" + std::to_string(m) +
                   ") = " + std::to_string(d.rounds) + " (expected " +
                   std::to_string(n + 1) + ")");
    }
}

// ---- 4. count-free 2-WL vs 3-pebble game ----

void countfree_wl_pebble(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  int max_order = ctx.config["caps"]["countfree_order"];
  auto all = classes_up_to(max_order);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].order() == all[j].order() && iso(all[i], all[j])) continue;
      pairs.emplace_back(i, j);
    }
  // 0 = agree, 1 = disagree, 2 = agree but round bound violated.
  std::vector<char> verdicts(pairs.size(), 0);
  parallel_for(static_cast<int>(pairs.size()), ctx.jobs, [&](int t) {
    const Graph& g = all[pairs[t].first];
    const Graph& h = all[pairs[t].second];
    bool separated =
        wl_verdict(g, h, 2, WlVersion::count_free).non_isomorphic;
    GameValue d3 = pebble_depth(g, h, 3);
    if (separated != d3.finite) {
      verdicts[t] = 1;
    } else if (d3.finite) {
      int n = std::min(g.order(), h.order());
      if (d3.rounds > n * n + 1) verdicts[t] = 2;
    }
  });
  long disagreements = std::count(verdicts.begin(), verdicts.end(), 1);
  long bound_violations = std::count(verdicts.begin(), verdicts.end(), 2);
  ck.check(disagreements == 0,
           "count-free 2-WL separates iff the 3-pebble value is finite (" +
               std::to_string(pairs.size()) + " pairs)");
  ck.check(bound_violations == 0,
           "finite 3-pebble values stay within n^2 + 1");
  out.report["pairs"] = pairs.size();
  out.report["disagreements"] = disagreements;
}

// ---- 5. color refinement separates trees ----

void tree_refinement(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  int max_order = ctx.config["caps"]["tree_order"];
  long pairs = 0, false_iso = 0, cw_bad = 0;
  for (int n = 2; n <= max_order; ++n) {
    auto trees = enumerate_trees(n);
    for (size_t i = 0; i < trees.size(); ++i)
      for (size_t j = i + 1; j < trees.size(); ++j) {
        ++pairs;
        if (!wl_verdict(trees[i], trees[j], 1, WlVersion::standard)
                 .non_isomorphic)
          ++false_iso;
        CwResult cw = cw_pair(trees[i], trees[j]);
        if (!cw.exact || cw.value > 2) ++cw_bad;
      }
  }
  ck.check(false_iso == 0, "color refinement separated all " +
                               std::to_string(pairs) +
                               " non-isomorphic tree pairs");
  ck.check(cw_bad == 0, "cw(T,T') <= 2 on every pair");
  out.report["pairs"] = pairs;
}

// ---- 6. diagonal-coloring chain ----

void diag_chain(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  int samples = ctx.config["samples"]["diag_chain_pairs"];
  int k = 2;
  long violations = 0, runs = 0;
  for (int i = 0; i < samples; ++i) {
    int n = 4 + static_cast<int>(split_seed(ctx.seed, 2 * i) % 7);  // 4..10
    Graph g = gnp(n, 0.5, split_seed(ctx.seed, 4 * i));
    Graph h = gnp(n, 0.5, split_seed(ctx.seed, 4 * i + 1));
    for (WlVersion version :
         {WlVersion::standard, WlVersion::count_free}) {
      Coloring c = wl_refine(g, &h, k, version);
      ++runs;
      size_t last = c.rounds.size() - 1;
      for (size_t r = 0; r < c.rounds.size(); ++r) {
        bool diag_neq = !c.rounds[r].diag_equal;
        bool full_neq = !c.rounds[r].multisets_equal;
        if (diag_neq && !full_neq) ++violations;
        size_t rr = std::min(r + k - 1, last);
        if (full_neq && c.rounds[rr].diag_equal) ++violations;
      }
    }
  }
  ck.check(violations == 0,
           "diag inequality at r implies full inequality at r, and full "
           "inequality implies diag inequality by r+1 (" +
               std::to_string(runs) + " runs)");
  out.report["runs"] = runs;
}

// ---- 7. random-graph counting depth at n = 64 ----

void random_cd2(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  int samples = ctx.config["samples"]["random_cd2"];
  double threshold = ctx.config["thresholds"]["whp_fraction"];
  int n = 64;
  int good = 0;
  for (int i = 0; i < samples; ++i) {
    Graph g = gnp(n, 0.5, split_seed(ctx.seed, 1000 + i));
    GameValue disc = discrete_rounds(g);
    if (!(disc.finite && disc.rounds <= 2)) continue;
    auto witness = two_switch_witness(g);
    if (!witness) continue;
    GameValue cd = cd_pair(g, *witness, 1);
    if (cd.finite && cd.rounds < 4) continue;
    ++good;
  }
  double fraction = static_cast<double>(good) / samples;
  std::ostringstream line;
  line << "fraction with discrete refinement in <= 2 rounds and a certified "
          "2-switch witness at cd^2 >= 4: "
       << fraction << " >= " << threshold;
  ck.check(fraction >= threshold, line.str());
  out.report["samples"] = samples;
  out.report["good"] = good;
  out.report["fraction"] = fraction;
}

// ---- 8. extension property forces width >= 3 ----

void extension_width(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  int wanted = ctx.config["samples"]["extension_pairs"];
  int n = 16;
  std::vector<std::pair<Graph, Graph>> pairs;
  uint64_t stream = 0;
  while (static_cast<int>(pairs.size()) < wanted && stream < 10000) {
    Graph g = gnp(n, 0.5, split_seed(ctx.seed, 2000 + 2 * stream));
    Graph h = gnp(n, 0.5, split_seed(ctx.seed, 2001 + 2 * stream));
    ++stream;
    if (!extension_property(g, 1) || !extension_property(h, 1)) continue;
    if (iso(g, h)) continue;
    pairs.emplace_back(std::move(g), std::move(h));
  }
  std::vector<char> wide(pairs.size(), 0);
  parallel_for(static_cast<int>(pairs.size()), ctx.jobs, [&](int t) {
    wide[t] = width_at_least(pairs[t].first, pairs[t].second, 3) ? 1 : 0;
  });
  long ok = std::count(wide.begin(), wide.end(), 1);
  ck.check(static_cast<int>(pairs.size()) == wanted,
           "collected " + std::to_string(pairs.size()) +
               " seeded pairs with the 1-extension property");
  ck.check(ok == static_cast<long>(pairs.size()),
           "width(G,H) >= 3 on every pair (" + std::to_string(ok) + "/" +
               std::to_string(pairs.size()) + ")");
  out.report["pairs"] = pairs.size();
}

// ---- 9. weak sieves: size bound and strategy rounds ----

void weak_sieve_scenario(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  int exhaustive_n = ctx.config["caps"]["sieve_exhaustive_order"];
  long twin_free = 0, size_bad = 0, flag_bad = 0;
  for (int n = 1; n <= exhaustive_n; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_twin_free(g)) continue;
      ++twin_free;
      SieveReport sieve = weak_sieve(g);
      if (sieve.size() > (n - 1) / 2) ++size_bad;
      if (!sieve.weak) ++flag_bad;
    }
  ck.check(size_bad == 0 && flag_bad == 0,
           "greedy sieve is weak with |X| <= (n-1)/2 on all " +
               std::to_string(twin_free) + " twin-free graphs, n <= " +
               std::to_string(exhaustive_n));

  int sampled = ctx.config["samples"]["sieve_n7"];
  long n7_checked = 0, n7_bad = 0;
  for (uint64_t i = 0; n7_checked < sampled && i < 10000; ++i) {
    Graph g = gnp(7, 0.5, split_seed(ctx.seed, 3000 + i));
    if (!is_twin_free(g)) continue;
    ++n7_checked;
    SieveReport sieve = weak_sieve(g);
    if (sieve.size() > 3 || !sieve.weak) ++n7_bad;
  }
  ck.check(n7_checked == sampled && n7_bad == 0,
           "sampled n=7 twin-free sieves within bound (" +
               std::to_string(n7_checked) + " samples)");

  // Strategy: every same-order pair up to order 5 whose first graph has a
  // weak greedy sieve is beaten within |X|+3 rounds and one switch.
  long plays = 0, overruns = 0, switch_bad = 0, losses = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto& classes = enumerate_graphs(n);
    for (size_t i = 0; i < classes.size(); ++i) {
      SieveReport sieve = weak_sieve(classes[i]);
      if (!sieve.weak) continue;
      for (size_t j = 0; j < classes.size(); ++j) {
        if (i == j) continue;
        ++plays;
        PlayOutcome o = play(classes[i], classes[j],
                             SpoilerStrategy::weak_sieve, {}, sieve.x);
        if (!o.won) ++losses;
        if (o.rounds > sieve.size() + 3) ++overruns;
        if (o.switches > 1) ++switch_bad;
      }
    }
  }
  ck.check(losses == 0 && overruns == 0,
           "weak-sieve play wins within |X|+3 rounds on all " +
               std::to_string(plays) + " same-order plays");
  ck.check(switch_bad == 0, "never more than one graph switch");
  out.report["plays"] = plays;
  out.report["twin_free_exhaustive"] = twin_free;
}

// ---- 10. emitted-formula metrics ----

void formula_metrics(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  int max_n = ctx.config["caps"]["metrics_max_n"];
  FormulaStore store;
  bool naive_ok = true, halving_ok = true, three_ok = true, generic_ok = true;
  for (int n = 1; n <= max_n; ++n) {
    FormulaMetrics naive = measure(delta(store, n, DeltaStyle::naive));
    if (naive.depth != n - 1 || naive.width != n + 1) naive_ok = false;
    FormulaMetrics halving = measure(delta(store, n, DeltaStyle::halving));
    if (halving.depth != ceil_log2(n)) halving_ok = false;
    FormulaMetrics three = measure(delta(store, n, DeltaStyle::three_var));
    if (three.width != (n >= 2 ? 3 : 2) || three.depth != ceil_log2(n))
      three_ok = false;
    FormulaMetrics generic =
        measure(generic_defining(store, path_graph(n)));
    if (generic.depth != n + 1) generic_ok = false;
  }
  ck.check(naive_ok, "naive distance formula: D = n-1, W = n+1 up to n=" +
                         std::to_string(max_n));
  ck.check(halving_ok, "halving distance formula: D = ceil(log2 n)");
  ck.check(three_ok, "three-variable distance formula: W = 3");
  ck.check(generic_ok, "generic defining sentence: D = v(G)+1");
}

// ---- 11. padding sentences ----

void padding_scenario(const ScenarioContext&, ScenarioResult& out) {
  Checker ck{out};
  FormulaStore store;
  bool depth_ok = true;
  for (int n = 1; n <= 3; ++n) {
    FormulaRef phi = generic_defining(store, path_graph(n));
    FormulaRef padded = padding_sentence(store, phi);
    if (measure(padded).depth != std::max(measure(phi).depth, 4) + 1)
      depth_ok = false;
  }
  ck.check(depth_ok, "D(padded sentence) = max(D(base), 4) + 1");

  for (int n = 1; n <= 2; ++n) {
    Graph base = path_graph(n);
    Graph padded = pad(base);
    FormulaRef phi =
        padding_sentence(store, generic_defining(store, base));
    bool on_pad = evaluate(padded, phi);
    long wrong = 0, tested = 0;
    for (int m = 1; m <= padded.order() + 1 && m <= 7; ++m)
      for (const Graph& h : enumerate_graphs(m)) {
        if (h.order() == padded.order() && iso(h, padded)) continue;
        ++tested;
        if (evaluate(h, phi)) ++wrong;
      }
    ck.check(on_pad && wrong == 0,
             "padded sentence for P" + std::to_string(n) +
                 " holds exactly on its padded graph (" +
                 std::to_string(tested) + " rivals)");
  }
}

// ---- 12. halving strategy on paths vs cycles ----

void halving_scenario(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  int max_n = ctx.config["caps"]["halving_max_n"];
  long plays = 0, overruns = 0, losses = 0;
  for (int n = 4; n <= max_n; ++n) {
    Graph p = path_graph(n);
    Graph c = cycle_graph(n);
    for (int j = 2; j <= n / 2; ++j) {
      PebblePairs init{{0, 0}, {n - 1, j}};
      if (!is_partial_iso(p, c, init)) continue;
      int d = std::min(n - 1, j);
      PlayOutcome o = play(p, c, SpoilerStrategy::halving_distance, init);
      ++plays;
      if (!o.won) ++losses;
      if (o.rounds > ceil_log2(d)) ++overruns;
    }
  }
  ck.check(losses == 0 && overruns == 0,
           "halving wins within ceil(log2 d) extra moves on all " +
               std::to_string(plays) + " path/cycle seeds");
  out.report["plays"] = plays;
}

// ---- 13. asymmetric-tree strategy ----

void asym_tree_scenario(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  // Path on 13 vertices with an extra leaf at vertex 2: radius 6,
  // asymmetric (the three branches at vertex 2 have distinct sizes),
  // 14 vertices.
  auto edges = path_graph(13).edges();
  edges.emplace_back(2, 13);
  Graph t(14, edges);
  ck.check(t.is_tree() && t.radius() == 6 && is_asymmetric(t),
           "subject is an asymmetric tree of radius 6 on 14 vertices");

  int wanted = ctx.config["samples"]["tree_opponents"];
  int bound = t.radius() + 2;
  int found = 0, losses = 0, overruns = 0, worst = 0;
  uint64_t stream = 0;
  std::vector<CanonicalCode> seen;
  while (found < wanted && stream < 10000) {
    int n = 13 + static_cast<int>(stream % 4);
    Graph opp = random_labeled_tree(n, split_seed(ctx.seed, 5000 + stream));
    ++stream;
    if (opp.order() == t.order() && iso(opp, t)) continue;
    CanonicalCode code = canonical_form(opp);
    if (std::find(seen.begin(), seen.end(), code) != seen.end()) continue;
    seen.push_back(code);
    ++found;
    PlayOutcome o = play(t, opp, SpoilerStrategy::tree_separator, {});
    if (!o.won) ++losses;
    if (o.rounds > bound) ++overruns;
    worst = std::max(worst, o.rounds);
  }
  ck.check(found == wanted,
           "sampled " + std::to_string(found) + " distinct opponent trees");
  ck.check(losses == 0 && overruns == 0,
           "strategy wins within r+2 = " + std::to_string(bound) +
               " rounds (worst " + std::to_string(worst) + ")");
  out.report["opponents"] = found;
  out.report["worst_rounds"] = worst;
}

// ---- 14. Bernays-Schoenfinkel small models and twin cloning ----

FormulaRef random_bs_sentence(FormulaStore& store, uint64_t seed, int* k_out,
                              int* l_out) {
  SplitMix64 rng(seed);
  int k = 1 + static_cast<int>(rng.below(3));
  int l = static_cast<int>(rng.below(3));
  std::vector<int> vars;
  for (int i = 0; i < k; ++i)
    vars.push_back(store.var("e" + std::to_string(i + 1)));
  for (int i = 0; i < l; ++i)
    vars.push_back(store.var("u" + std::to_string(i + 1)));
  int clauses = 1 + static_cast<int>(rng.below(3));
  std::vector<FormulaRef> cnf;
  for (int c = 0; c < clauses; ++c) {
    int lits = 1 + static_cast<int>(rng.below(3));
    std::vector<FormulaRef> clause;
    for (int t = 0; t < lits; ++t) {
      int a = vars[rng.below(vars.size())];
      int b = vars[rng.below(vars.size())];
      FormulaRef atom =
          rng.below(2) ? store.adj(a, b) : store.equal(a, b);
      clause.push_back(rng.below(2) ? store.negate(atom) : atom);
    }
    cnf.push_back(store.disj(std::move(clause)));
  }
  FormulaRef body = store.conj(std::move(cnf));
  for (int i = l - 1; i >= 0; --i) body = store.forall(vars[k + i], body);
  for (int i = k - 1; i >= 0; --i) body = store.exists(vars[i], body);
  *k_out = k;
  *l_out = l;
  return body;
}

// Some existential witness assignment satisfies the universal part while
// avoiding the given vertex class (used by the cloning check).
bool witnesses_avoiding(const Graph& g, FormulaRef f,
                        const std::vector<int>& banned) {
  std::vector<int> exist_vars;
  FormulaRef cur = f;
  while (cur->kind == FormulaKind::Exists) {
    exist_vars.push_back(cur->quant_var);
    cur = cur->children[0];
  }
  FormulaRef rest = cur;  // forall prefix + body
  int k = static_cast<int>(exist_vars.size());
  std::vector<int> assign(k, 0);
  Evaluator ev(g);
  for (;;) {
    bool ok = true;
    for (int v : assign)
      if (std::find(banned.begin(), banned.end(), v) != banned.end())
        ok = false;
    if (ok) {
      std::vector<std::pair<int, int>> env;
      for (int i = 0; i < k; ++i) env.emplace_back(exist_vars[i], assign[i]);
      if (ev.evaluate(rest, env)) return true;
    }
    int i = k - 1;
    while (i >= 0 && assign[i] == g.order() - 1) assign[i--] = 0;
    if (i < 0) return false;
    ++assign[i];
  }
}

// Maximal classes of vertices with equal open (non-adjacent twins) or
// closed (adjacent twins) neighborhoods.
std::vector<std::vector<int>> uniform_twin_classes(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (bool closed : {false, true}) {
    std::map<std::vector<char>, std::vector<int>> groups;
    for (int v = 0; v < g.order(); ++v) {
      std::vector<char> key(g.order(), 0);
      for (int w : g.neighbors(v)) key[w] = 1;
      if (closed) key[v] = 1;
      groups[key].push_back(v);
    }
    for (auto& [key, cls] : groups)
      if (cls.size() >= 2) out.push_back(cls);
  }
  return out;
}

void bs_scenario(const ScenarioContext& ctx, ScenarioResult& out) {
  Checker ck{out};
  int sentences = ctx.config["samples"]["bs_sentences"];
  int max_order = ctx.config["caps"]["bs_spectrum_orders"];
  long small_model_failures = 0, satisfiable = 0;

  struct Candidate {
    FormulaRef f;
    int l;
  };
  FormulaStore store;
  std::vector<Candidate> candidates;
  for (int i = 0; i < sentences; ++i) {
    int k = 0, l = 0;
    FormulaRef f =
        random_bs_sentence(store, split_seed(ctx.seed, 6000 + i), &k, &l);
    SpectrumReport spectrum = bs_spectrum(store, f, max_order);
    bool sat_somewhere = false, sat_small = false;
    for (int n = 1; n <= max_order; ++n) {
      if (!spectrum.member[n]) continue;
      sat_somewhere = true;
      if (n <= std::max(k, 1)) sat_small = true;
    }
    if (sat_somewhere) {
      ++satisfiable;
      if (!sat_small) ++small_model_failures;
      candidates.push_back({f, l});
    }
    // The bounded decision procedure agrees with the order-1..8 search.
    if (bs_satisfiable(store, f) != sat_somewhere) ++small_model_failures;
  }
  ck.check(small_model_failures == 0,
           "every satisfiable sentence (of " + std::to_string(satisfiable) +
               ") has a model of order <= k, matching bs_satisfiable");

  // Twin cloning preserves truth on qualifying instances: a model with a
  // twin class of size >= max(l, 2) and existential witnesses outside it.
  int wanted = ctx.config["samples"]["twin_clone_instances"];
  int qualifying = 0, broken = 0;
  for (const Candidate& cand : candidates) {
    if (qualifying >= wanted) break;
    for (int n = 2; n <= 5 && qualifying < wanted; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        if (qualifying >= wanted) break;
        if (!evaluate(g, cand.f)) continue;
        for (const auto& cls : uniform_twin_classes(g)) {
          if (static_cast<int>(cls.size()) < std::max(cand.l, 2)) continue;
          if (!witnesses_avoiding(g, cand.f, cls)) continue;
          ++qualifying;
          Graph bigger = clone_twin(g, cls, 1 + (qualifying % 2));
          if (!evaluate(bigger, cand.f)) ++broken;
          break;
        }
      }
    }
  }
  ck.check(qualifying >= wanted,
           "found " + std::to_string(qualifying) + " qualifying instances");
  ck.check(broken == 0, "cloning twins preserved truth on all instances");
  out.report["satisfiable"] = satisfiable;
  out.report["qualifying"] = qualifying;
}

// ---- 15. enumeration counts ----

void enumeration_counts(const ScenarioContext&, ScenarioResult& out) {
  Checker ck{out};
  const int expected_r[4] = {1, 2, 4, 16};
  for (int k = 0; k <= 3; ++k) {
    auto trees = enumerate_asym_rooted_trees(k);
    bool distinct = true;
    std::vector<std::string> codes;
    for (const auto& t : trees) codes.push_back(rooted_code(t));
    std::sort(codes.begin(), codes.end());
    if (std::adjacent_find(codes.begin(), codes.end()) != codes.end())
      distinct = false;
    ck.check(static_cast<int>(trees.size()) == expected_r[k] && distinct,
             "asymmetric rooted trees of height <= " + std::to_string(k) +
                 ": " + std::to_string(trees.size()) + " (expected " +
                 std::to_string(expected_r[k]) + "), pairwise distinct");
  }
  const size_t expected_g[5] = {1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n)
    ck.check(enumerate_graphs(n).size() == expected_g[n - 1],
             "graph classes at n=" + std::to_string(n) + ": " +
                 std::to_string(enumerate_graphs(n).size()));
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

nlohmann::json default_config() {
  return nlohmann::json::parse(R"({
    "seed": 20260810,
    "thresholds": {"whp_fraction": 0.8, "extension_frequency": 0.9},
    "samples": {"diag_chain_pairs": 50, "random_cd2": 100,
                "extension_pairs": 20, "sieve_n7": 200, "bs_sentences": 50,
                "twin_clone_instances": 20, "tree_opponents": 30},
    "caps": {"oracle_triangle_order": 4, "oracle_triangle_depth": 3,
             "same_order_depth_order": 5, "countfree_order": 5,
             "tree_order": 8, "sieve_exhaustive_order": 6,
             "halving_max_n": 12, "metrics_max_n": 16,
             "bs_spectrum_orders": 8}
  })");
}

namespace {

using ScenarioFn = void (*)(const ScenarioContext&, ScenarioResult&);

const std::vector<std::pair<std::string, ScenarioFn>>& registry() {
  static const std::vector<std::pair<std::string, ScenarioFn>> table = {
      {"oracle-triangle-n4", oracle_triangle},
      {"same-order-depth-n5", same_order_depth},
      {"clique-depth", clique_depth},
      {"countfree-wl-pebble-n5", countfree_wl_pebble},
      {"tree-refinement-n8", tree_refinement},
      {"diag-chain", diag_chain},
      {"random-cd2-n64", random_cd2},
      {"extension-width-n16", extension_width},
      {"weak-sieve", weak_sieve_scenario},
      {"formula-metrics", formula_metrics},
      {"padding", padding_scenario},
      {"halving-strategy", halving_scenario},
      {"asym-tree-strategy", asym_tree_scenario},
      {"bs-small-model", bs_scenario},
      {"enumeration-counts", enumeration_counts},
  };
  return table;
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

bool has_scenario(const std::string& name) {
  for (auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

ScenarioResult run_scenario(const std::string& name,
                            const ScenarioContext& ctx) {
  for (auto& [n, fn] : registry()) {
    if (n != name) continue;
    ScenarioResult result;
    result.name = name;
    result.pass = true;
    auto start = std::chrono::steady_clock::now();
    fn(ctx, result);
    auto end = std::chrono::steady_clock::now();
    result.runtime_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    result.report["scenario"] = name;
    result.report["pass"] = result.pass;
    result.report["seed"] = ctx.seed;
    result.report["config_hash"] = ctx.config_hash;
    result.report["details"] = result.details;
    return result;
  }
  throw std::invalid_argument("unknown scenario: " + name);
}

}  // namespace fograph

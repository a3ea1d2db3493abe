#include "fograph/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fograph/canonical.hpp"
#include "fograph/errors.hpp"
#include "fograph/eval.hpp"
#include "fograph/rng.hpp"
#include "fograph/wl.hpp"

namespace fograph {

GameValue cd_pair(const Graph& g, const Graph& h, int k) {
  if (iso(g, h))
    throw std::invalid_argument("cd requires non-isomorphic inputs");
  if (g.order() != h.order()) return GameValue::of(1);
  Coloring c = wl_refine(g, &h, k, WlVersion::standard);
  for (size_t r = 0; r < c.rounds.size(); ++r)
    if (!c.rounds[r].diag_equal)
      return GameValue::of(static_cast<int>(r) + 1);
  return GameValue::inf();
}

CwResult cw_pair(const Graph& g, const Graph& h, int max_dim) {
  if (iso(g, h))
    throw std::invalid_argument("cw requires non-isomorphic inputs");
  if (g.order() != h.order()) return {1, true, 0};
  for (int k = 1; k <= max_dim; ++k)
    if (wl_verdict(g, h, k, WlVersion::standard).non_isomorphic)
      return {k + 1, true, k};
  return {max_dim + 2, false, max_dim};
}

IdentificationReport identification(const Graph& g, IdMetric metric,
                                    int k_for_cd) {
  int n = g.order();
  int cap = (metric == IdMetric::depth || metric == IdMetric::width) ? 6 : 7;
  if (n > cap)
    throw ResourceError("identification is capped at order " +
                        std::to_string(cap) + " for this metric; sample");
  CanonicalCode mine = canonical_form(g);
  IdentificationReport report;
  report.value = GameValue::of(0);
  bool any = false;
  for (const Graph& h : enumerate_graphs(n)) {
    if (canonical_form(h) == mine) continue;
    GameValue v;
    switch (metric) {
      case IdMetric::depth:
        v = game_depth(g, h);
        break;
      case IdMetric::width:
        v = game_width(g, h);
        break;
      case IdMetric::cd:
        v = cd_pair(g, h, k_for_cd);
        break;
      case IdMetric::cw: {
        CwResult cw = cw_pair(g, h, 4);
        if (!cw.exact) report.exact = false;
        v = GameValue::of(cw.value);
        break;
      }
    }
    bool better = !v.finite ? report.value.finite
                            : (report.value.finite &&
                               v.rounds > report.value.rounds);
    if (!any || better) {
      report.value = v;
      report.witness = h;
      any = true;
    }
  }
  if (!any) {
    // Only K1 has no same-order rival.
    report.value = GameValue::of(0);
    report.witness.reset();
  }
  return report;
}

namespace {

// Partition of V \ X into classes with equal neighborhoods inside X.
std::vector<std::vector<int>> x_classes(const Graph& g,
                                        const std::vector<int>& x) {
  std::vector<char> in_x(g.order(), 0);
  for (int v : x) in_x[v] = 1;
  std::map<std::vector<char>, std::vector<int>> by_trace;
  for (int v = 0; v < g.order(); ++v) {
    if (in_x[v]) continue;
    std::vector<char> trace;
    trace.reserve(x.size());
    for (int u : x) trace.push_back(g.adjacent(v, u) ? 1 : 0);
    by_trace[trace].push_back(v);
  }
  std::vector<std::vector<int>> out;
  for (auto& [trace, cls] : by_trace) out.push_back(cls);
  return out;
}

}  // namespace

std::vector<int> sift(const Graph& g, const std::vector<int>& x) {
  std::vector<int> out = x;
  for (const auto& cls : x_classes(g, x))
    if (cls.size() == 1) out.push_back(cls[0]);
  std::sort(out.begin(), out.end());
  return out;
}

SieveReport weak_sieve(const Graph& g) {
  SieveReport report;
  auto class_count = [&](const std::vector<int>& x) {
    return static_cast<int>(x_classes(g, x).size());
  };
  int current = class_count(report.x);
  report.class_counts_per_step.push_back(current);
  for (;;) {
    int pick = -1;
    for (int u = 0; u < g.order(); ++u) {
      if (std::find(report.x.begin(), report.x.end(), u) != report.x.end())
        continue;
      auto trial = report.x;
      trial.push_back(u);
      if (class_count(trial) > current) {
        pick = u;
        break;
      }
    }
    if (pick < 0) break;
    report.x.push_back(pick);
    current = class_count(report.x);
    report.class_counts_per_step.push_back(current);
    if (current < static_cast<int>(report.x.size()) + 1)
      throw std::logic_error("greedy sieve invariant |C(X)| >= |X|+1 broke");
  }
  report.classes = x_classes(g, report.x);
  report.sifted = sift(g, report.x);
  report.weak =
      static_cast<int>(sift(g, report.sifted).size()) == g.order();
  // Smallest weak prefix of the greedy order; witnesses the probabilistic
  // size bound on random graphs without giving up C-maximality of X.
  for (size_t t = 0; t <= report.x.size(); ++t) {
    std::vector<int> prefix(report.x.begin(), report.x.begin() + t);
    auto s = sift(g, prefix);
    if (static_cast<int>(sift(g, s).size()) == g.order()) {
      report.first_weak_size = static_cast<int>(t);
      break;
    }
  }
  return report;
}

bool extension_property(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("extension parameter must be >= 0");
  int n = g.order();
  // Enumerate subsets S with |S| <= k and all X/Y splits of S.
  std::vector<int> subset;
  auto all_splits = [&](auto&& self, size_t from) -> bool {
    // Check every split of the current subset.
    size_t s = subset.size();
    for (uint32_t mask = 0; mask < (1u << s); ++mask) {
      bool found = false;
      for (int z = 0; z < n && !found; ++z) {
        bool ok = true;
        for (size_t i = 0; i < s && ok; ++i) {
          if (subset[i] == z) ok = false;
          else if (mask >> i & 1) ok = g.adjacent(z, subset[i]);
          else ok = !g.adjacent(z, subset[i]);
        }
        found = ok;
      }
      if (!found) return false;
    }
    if (static_cast<int>(s) == k) return true;
    for (size_t v = from; v < static_cast<size_t>(n); ++v) {
      subset.push_back(static_cast<int>(v));
      bool ok = self(self, v + 1);
      subset.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return all_splits(all_splits, 0);
}

std::optional<Graph> two_switch_witness(const Graph& g) {
  int n = g.order();
  // Group vertices by degree; the switch needs an equidegree quadruple.
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < n; ++v) by_degree[g.degree(v)].push_back(v);
  for (auto& [deg, us] : by_degree) {
    if (us.size() < 4) continue;
    for (int w : us)
      for (int x : us) {
        if (x == w || !g.adjacent(w, x)) continue;
        for (int y : us) {
          if (y == w || y == x || g.adjacent(x, y)) continue;
          for (int z : us) {
            if (z == w || z == x || z == y) continue;
            if (!g.adjacent(y, z) || g.adjacent(z, w)) continue;
            auto edges = g.edges();
            std::erase_if(edges, [&](auto e) {
              return (e.first == std::min(w, x) &&
                      e.second == std::max(w, x)) ||
                     (e.first == std::min(y, z) &&
                      e.second == std::max(y, z));
            });
            edges.emplace_back(x, y);
            edges.emplace_back(z, w);
            Graph h(n, edges);
            if (!iso(g, h)) return h;
          }
        }
      }
  }
  return std::nullopt;
}

// ---- Bernays-Schoenfinkel spectra ----

namespace {

struct BsParts {
  std::vector<int> exist_vars;
  std::vector<int> univ_vars;
  FormulaRef body = nullptr;
};

BsParts bs_parts(FormulaRef f) {
  FormulaMetrics m = measure(f);
  if (!m.bernays_schonfinkel || !f->free_vars.empty())
    throw std::invalid_argument(
        "input must be a prenex exists*-forall* sentence without counting");
  BsParts p;
  FormulaRef cur = f;
  while (cur->kind == FormulaKind::Exists) {
    p.exist_vars.push_back(cur->quant_var);
    cur = cur->children[0];
  }
  while (cur->kind == FormulaKind::Forall) {
    p.univ_vars.push_back(cur->quant_var);
    cur = cur->children[0];
  }
  p.body = cur;
  return p;
}

// Three-valued evaluation of a quantifier-free body against a partially
// decided adjacency matrix. 0 = false, 1 = true, 2 = unknown.
int eval3(FormulaRef f, const std::vector<int>& env,
          const std::vector<int8_t>& adj, int n) {
  switch (f->kind) {
    case FormulaKind::Equal:
      return env[f->var_a] == env[f->var_b] ? 1 : 0;
    case FormulaKind::Adj: {
      int a = env[f->var_a], b = env[f->var_b];
      if (a == b) return 0;
      int8_t st = adj[a * n + b];
      return st < 0 ? 2 : st;
    }
    case FormulaKind::Not: {
      int r = eval3(f->children[0], env, adj, n);
      return r == 2 ? 2 : 1 - r;
    }
    case FormulaKind::And: {
      int out = 1;
      for (auto c : f->children) {
        int r = eval3(c, env, adj, n);
        if (r == 0) return 0;
        if (r == 2) out = 2;
      }
      return out;
    }
    case FormulaKind::Or: {
      int out = 0;
      for (auto c : f->children) {
        int r = eval3(c, env, adj, n);
        if (r == 1) return 1;
        if (r == 2) out = 2;
      }
      return out;
    }
    default:
      throw std::logic_error("quantified node inside a BS body");
  }
}

struct BsSearcher {
  const BsParts& parts;
  int n;
  int var_count;
  std::vector<std::pair<int, int>> slots;  // edge variables, lexicographic
  std::vector<int8_t> adj;                 // n*n tri-state, -1 unknown
  long budget = 30'000'000;

  BsSearcher(const BsParts& p, int order, int vars)
      : parts(p), n(order), var_count(vars) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    adj.assign(static_cast<size_t>(n) * n, -1);
    for (int u = 0; u < n; ++u) adj[u * n + u] = 0;
  }

  // All universal tuples must avoid definite falsity.
  bool universals_ok(std::vector<int>& env) {
    int l = static_cast<int>(parts.univ_vars.size());
    std::vector<int> tuple(l, 0);
    for (;;) {
      for (int i = 0; i < l; ++i) env[parts.univ_vars[i]] = tuple[i];
      if (eval3(parts.body, env, adj, n) == 0) return false;
      int i = l - 1;
      while (i >= 0 && tuple[i] == n - 1) tuple[i--] = 0;
      if (i < 0) break;
      ++tuple[i];
    }
    return true;
  }

  bool dfs(size_t slot, std::vector<int>& env) {
    if (--budget < 0)
      throw ResourceError("spectrum search budget exceeded at order " +
                          std::to_string(n));
    if (!universals_ok(env)) return false;
    if (slot == slots.size()) return true;
    auto [u, v] = slots[slot];
    for (int8_t bit : {int8_t{0}, int8_t{1}}) {
      adj[u * n + v] = adj[v * n + u] = bit;
      if (dfs(slot + 1, env)) return true;
    }
    adj[u * n + v] = adj[v * n + u] = -1;
    return false;
  }

  bool exists_model() {
    int k = static_cast<int>(parts.exist_vars.size());
    std::vector<int> env(var_count, 0);
    // Witness patterns as restricted growth strings over at most
    // min(k, n) vertices; a model can always be relabeled so witnesses
    // occupy an initial segment.
    std::vector<int> pattern(k, 0);
    auto try_pattern = [&]() {
      for (int i = 0; i < k; ++i) env[parts.exist_vars[i]] = pattern[i];
      for (auto& a : adj) a = -1;
      for (int u = 0; u < n; ++u) adj[u * n + u] = 0;
      return dfs(0, env);
    };
    if (k == 0) return try_pattern();
    std::vector<int> maxes(k, 0);
    for (;;) {
      bool fits = true;
      for (int i = 0; i < k; ++i)
        if (pattern[i] >= n) fits = false;
      if (fits && try_pattern()) return true;
      // Next restricted growth string.
      int i = k - 1;
      for (; i > 0; --i) {
        int cap = 0;
        for (int j = 0; j < i; ++j) cap = std::max(cap, pattern[j]);
        if (pattern[i] <= cap) break;
      }
      if (i == 0) return false;
      ++pattern[i];
      for (int j = i + 1; j < k; ++j) pattern[j] = 0;
    }
  }
};

bool order_in_spectrum(FormulaStore& store, const BsParts& parts,
                       FormulaRef f, int n) {
  if (n <= 5) {
    for (const Graph& g : enumerate_graphs(n))
      if (evaluate(g, f)) return true;
    return false;
  }
  BsSearcher searcher(parts, n, store.var_count());
  return searcher.exists_model();
}

}  // namespace

SpectrumReport bs_spectrum(FormulaStore& store, FormulaRef f, int N) {
  if (N < 1 || N > 8)
    throw ResourceError("spectrum search supports orders 1..8");
  BsParts parts = bs_parts(f);
  SpectrumReport report;
  report.sentence = print_formula(store, f);
  report.existentials = static_cast<int>(parts.exist_vars.size());
  report.universals = static_cast<int>(parts.univ_vars.size());
  report.small_model_bound = std::max(report.existentials, 1);
  report.dichotomy_lower = report.existentials + report.universals;
  report.dichotomy_upper = (1ll << report.existentials);
  for (int i = 0; i < report.universals; ++i) report.dichotomy_upper *= 4;
  report.member.assign(N + 1, false);
  for (int n = 1; n <= N; ++n)
    report.member[n] = order_in_spectrum(store, parts, f, n);
  return report;
}

bool bs_satisfiable(FormulaStore& store, FormulaRef f) {
  BsParts parts = bs_parts(f);
  int bound = std::max(static_cast<int>(parts.exist_vars.size()), 1);
  for (int n = 1; n <= bound; ++n)
    if (order_in_spectrum(store, parts, f, n)) return true;
  return false;
}

Graph clone_twin(const Graph& g, const std::vector<int>& twin_class, int m) {
  if (twin_class.size() < 2)
    throw std::invalid_argument("twin class must have at least two members");
  if (m < 0) throw std::invalid_argument("clone count must be >= 0");
  bool mutual = g.adjacent(twin_class[0], twin_class[1]);
  for (size_t i = 0; i < twin_class.size(); ++i)
    for (size_t j = i + 1; j < twin_class.size(); ++j) {
      if (!are_twins(g, twin_class[i], twin_class[j]))
        throw std::invalid_argument("vertices are not pairwise twins");
      if (g.adjacent(twin_class[i], twin_class[j]) != mutual)
        throw std::invalid_argument("twin class mixes mutual adjacencies");
    }
  int n = g.order();
  auto edges = g.edges();
  std::vector<char> in_class(n, 0);
  for (int v : twin_class) in_class[v] = 1;
  int rep = twin_class[0];
  for (int c = 0; c < m; ++c) {
    int clone = n + c;
    for (int v = 0; v < n; ++v) {
      if (in_class[v]) {
        if (mutual) edges.emplace_back(clone, v);
      } else if (g.adjacent(rep, v)) {
        edges.emplace_back(clone, v);
      }
    }
    if (mutual)
      for (int prev = n; prev < clone; ++prev) edges.emplace_back(clone, prev);
  }
  return Graph(n + m, edges);
}

double estimate_sentence_probability(FormulaRef f, int n, int samples,
                                     uint64_t seed) {
  if (!f->free_vars.empty())
    throw std::invalid_argument("probability estimation needs a sentence");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  int hits = 0;
  for (int i = 0; i < samples; ++i) {
    Graph g = gnp(n, 0.5, split_seed(seed, i));
    if (evaluate(g, f)) ++hits;
  }
  return static_cast<double>(hits) / samples;
}

ComponentBoundReport component_count_bound_check(const Graph& g,
                                                 uint64_t seed) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("component bound check needs >= 1 edge");
  ComponentBoundReport report;
  report.d0 = g.isolated_count();

  std::map<CanonicalCode, std::pair<int, int>> comps;  // code -> (count, v)
  for (const auto& verts : g.components()) {
    Graph f = induced_subgraph(g, verts);
    auto [it, fresh] =
        comps.emplace(canonical_form(f),
                      std::make_pair(0, static_cast<int>(verts.size())));
    ++it->second.first;
  }
  report.applicable = true;
  for (auto& [code, cv] : comps)
    if (cv.first + cv.second > report.d0 + 1) report.applicable = false;
  if (!report.applicable) return report;

  Graph extra = add_isolated_vertices(g, 1);
  GameValue d = game_depth(g, extra);
  report.depth_vs_extra_vertex = d.rounds;
  report.depth_lower_ok = d.finite && d.rounds >= report.d0 + 2;
  report.width_lower_ok = width_at_least(g, extra, report.d0 + 1);

  report.identification_upper_ok = true;
  if (g.order() <= 6) {
    auto id = identification(g, IdMetric::depth);
    report.identification_upper_ok =
        id.value.finite && id.value.rounds <= report.d0 + 2;
  } else {
    for (int i = 0; i < 10; ++i) {
      Graph h = gnp(g.order(), 0.3, split_seed(seed, i));
      if (iso(g, h)) continue;
      GameValue v = game_depth(g, h);
      if (!v.finite || v.rounds > report.d0 + 2)
        report.identification_upper_ok = false;
    }
  }
  return report;
}

}  // namespace fograph

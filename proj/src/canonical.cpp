#include "fograph/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fograph/errors.hpp"
#include "fograph/trees.hpp"

namespace fograph {

namespace {

constexpr int kBruteMax = 8;

int pair_count(int n) { return n * (n - 1) / 2; }

// Upper-triangle bits in column-major order, MSB-first, so lexicographic
// comparison of codes is integer comparison.
uint32_t labeled_code(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  int bits = pair_count(n);
  uint32_t code = 0;
  int t = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++t)
      if (g.adjacent(perm[u], perm[v])) code |= 1u << (bits - 1 - t);
  return code;
}

uint32_t min_code_brute(const Graph& g) {
  int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint32_t best = labeled_code(g, perm);
  while (std::next_permutation(perm.begin(), perm.end()))
    best = std::min(best, labeled_code(g, perm));
  return best;
}

Graph graph_from_code(int n, uint32_t code) {
  int bits = pair_count(n);
  std::vector<std::pair<int, int>> e;
  int t = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++t)
      if (code >> (bits - 1 - t) & 1) e.emplace_back(u, v);
  return Graph(n, e);
}

// ---- refinement with backtracking for n > 8 non-trees ----

// Stable 1-dimensional refinement. Colors are renamed each round by the
// rank of (old color, sorted multiset of neighbor colors), which is
// independent of the input labeling.
std::vector<int> refine_colors(const Graph& g, std::vector<int> color) {
  int n = g.order();
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.push_back(color[v]);
      for (int w : g.neighbors(v)) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int classes = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++classes;
      next[sorted[i].second] = classes;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

struct IrState {
  const Graph& g;
  std::string best;
  bool have_best = false;
  std::string first_leaf;
  std::vector<int> first_leaf_order;  // position -> vertex
  std::vector<int> orbit;             // root-level union-find
  long budget;

  explicit IrState(const Graph& graph, long node_budget)
      : g(graph), orbit(graph.order()), budget(node_budget) {
    std::iota(orbit.begin(), orbit.end(), 0);
  }

  int find(int v) { return orbit[v] == v ? v : orbit[v] = find(orbit[v]); }
  void unite(int a, int b) { orbit[find(a)] = find(b); }

  std::string leaf_string(const std::vector<int>& order) const {
    int n = g.order();
    std::string out((pair_count(n) + 7) / 8, '\0');
    int t = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u, ++t)
        if (g.adjacent(order[u], order[v]))
          out[t >> 3] |= static_cast<char>(1 << (7 - (t & 7)));
    return out;
  }

  void run(std::vector<int> color, int depth) {
    if (--budget < 0)
      throw ResourceError("canonical form search budget exceeded");
    int n = g.order();
    color = refine_colors(g, std::move(color));
    int classes = 1 + *std::max_element(color.begin(), color.end());
    if (classes == n) {
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[color[v]] = v;
      std::string s = leaf_string(order);
      if (first_leaf.empty()) {
        first_leaf = s;
        first_leaf_order = order;
      } else if (s == first_leaf) {
        for (int i = 0; i < n; ++i) unite(first_leaf_order[i], order[i]);
      }
      if (!have_best || s < best) {
        best = s;
        have_best = true;
      }
      return;
    }
    // Target: smallest non-singleton class, lowest color id on ties.
    std::vector<int> size(classes, 0);
    for (int v = 0; v < n; ++v) ++size[color[v]];
    int target = -1;
    for (int c = 0; c < classes; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    std::vector<int> explored;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      if (depth == 0) {
        bool pruned = false;
        for (int e : explored)
          if (find(e) == find(v)) {
            pruned = true;
            break;
          }
        if (pruned) continue;
        explored.push_back(v);
      }
      auto next = color;
      for (int w = 0; w < n; ++w)
        if (next[w] >= target && w != v) ++next[w];
      run(std::move(next), depth + 1);
    }
  }
};

std::string ir_canonical(const Graph& g) {
  IrState state(g, 2'000'000);
  state.run(std::vector<int>(g.order(), 0), 0);
  return state.best;
}

uint64_t brute_automorphisms(const Graph& g) {
  int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

void count_color_preserving(const Graph& g, const std::vector<int>& color,
                            std::vector<int>& image, int v, uint64_t& count,
                            long& budget) {
  if (--budget < 0)
    throw ResourceError("automorphism search budget exceeded");
  int n = g.order();
  if (v == n) {
    ++count;
    return;
  }
  std::vector<char> used(n, 0);
  for (int u = 0; u < v; ++u) used[image[u]] = 1;
  for (int t = 0; t < n; ++t) {
    if (used[t] || color[t] != color[v]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (g.adjacent(u, v) != g.adjacent(image[u], t)) ok = false;
    if (!ok) continue;
    image[v] = t;
    count_color_preserving(g, color, image, v + 1, count, budget);
  }
}

}  // namespace

CanonicalCode canonical_form(const Graph& g) {
  int n = g.order();
  std::string head = "G";
  head.push_back(static_cast<char>(n & 0xff));
  head.push_back(static_cast<char>((n >> 8) & 0xff));
  if (n <= kBruteMax) {
    uint32_t code = min_code_brute(g);
    for (int shift = 24; shift >= 0; shift -= 8)
      head.push_back(static_cast<char>((code >> shift) & 0xff));
    return head;
  }
  if (g.is_tree()) return head + "T" + free_tree_code(g);
  return head + "#" + ir_canonical(g);
}

bool iso(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

uint64_t automorphism_count(const Graph& g) {
  if (g.order() <= kBruteMax) return brute_automorphisms(g);
  if (g.is_tree()) return tree_automorphism_count(g);
  auto color = refine_colors(g, std::vector<int>(g.order(), 0));
  std::vector<int> image(g.order());
  uint64_t count = 0;
  long budget = 50'000'000;
  count_color_preserving(g, color, image, 0, count, budget);
  return count;
}

bool is_asymmetric(const Graph& g) { return automorphism_count(g) == 1; }

const std::vector<Graph>& enumerate_graphs(int n) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  if (n > 7)
    throw ResourceError(
        "exhaustive enumeration is limited to n <= 7; sample instead");
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<uint32_t> codes;
  if (n == 1) {
    codes.push_back(0);
  } else {
    const auto& smaller = enumerate_graphs(n - 1);
    std::vector<char> seen(size_t{1} << pair_count(n), 0);
    for (const Graph& g : smaller) {
      for (uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
        auto edges = g.edges();
        for (int u = 0; u < n - 1; ++u)
          if (nb >> u & 1) edges.emplace_back(u, n - 1);
        Graph h(n, edges);
        uint32_t code = min_code_brute(h);
        if (!seen[code]) {
          seen[code] = 1;
          codes.push_back(code);
        }
      }
    }
    std::sort(codes.begin(), codes.end());
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (uint32_t code : codes) out.push_back(graph_from_code(n, code));
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  if (n > 8) throw ResourceError("tree enumeration is limited to n <= 8");
  if (n == 1) return {empty_graph(1)};
  if (n == 2) return {path_graph(2)};
  std::map<std::string, Graph> by_code;
  std::vector<int> pruefer(n - 2, 0);
  for (;;) {
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<std::pair<int, int>> e;
    auto d = deg;
    std::vector<int> ptr;
    // Decode the sequence with the smallest-leaf rule.
    std::vector<char> done(n, 0);
    for (int x : pruefer) {
      int leaf = -1;
      for (int v = 0; v < n; ++v)
        if (!done[v] && d[v] == 1) {
          leaf = v;
          break;
        }
      done[leaf] = 1;
      e.emplace_back(leaf, x);
      --d[x];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
      if (!done[v]) last.push_back(v);
    e.emplace_back(last[0], last[1]);
    Graph t(n, e);
    by_code.emplace(free_tree_code(t), t);

    int i = n - 3;
    while (i >= 0 && pruefer[i] == n - 1) pruefer[i--] = 0;
    if (i < 0) break;
    ++pruefer[i];
  }
  std::vector<Graph> out;
  for (auto& [code, t] : by_code) out.push_back(std::move(t));
  return out;
}

}  // namespace fograph

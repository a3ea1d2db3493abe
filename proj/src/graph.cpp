#include "fograph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "fograph/rng.hpp"

namespace fograph {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list)
    : n_(n) {
  if (n < 1) throw std::invalid_argument("graph order must be at least 1");
  adj_.assign(n, {});
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  degrees_.resize(n);
  for (int v = 0; v < n; ++v) {
    degrees_[v] = static_cast<int>(adj_[v].size());
    m_ += degrees_[v];
    max_degree_ = std::max(max_degree_, degrees_[v]);
    if (degrees_[v] == 0) ++isolated_;
  }
  m_ /= 2;

  if (n <= kBitsetLimit) {
    words_ = static_cast<size_t>((n + 63) / 64);
    rows_.assign(static_cast<size_t>(n) * words_, 0);
    for (int u = 0; u < n; ++u)
      for (int v : adj_[u])
        rows_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  }

  comp_of_.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp_of_[s] >= 0) continue;
    comp_of_[s] = comp_count_;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj_[u])
        if (comp_of_[v] < 0) {
          comp_of_[v] = comp_count_;
          stack.push_back(v);
        }
    }
    ++comp_count_;
  }

  if (n <= kDistCacheLimit) {
    dist_.assign(static_cast<size_t>(n) * n, kInfDist);
    for (int s = 0; s < n; ++s) {
      auto row = bfs_from(s);
      std::copy(row.begin(), row.end(),
                dist_.begin() + static_cast<size_t>(s) * n);
    }
  }
}

bool Graph::adjacent_slow(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out(comp_count_);
  for (int v = 0; v < n_; ++v) out[comp_of_[v]].push_back(v);
  return out;
}

std::vector<int> Graph::bfs_from(int v) const {
  std::vector<int> d(n_, kInfDist);
  d[v] = 0;
  std::vector<int> queue{v};
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : adj_[u])
      if (d[w] == kInfDist) {
        d[w] = d[u] + 1;
        queue.push_back(w);
      }
  }
  return d;
}

int Graph::dist(int u, int v) const {
  if (!dist_.empty()) return dist_[static_cast<size_t>(u) * n_ + v];
  return bfs_from(u)[v];
}

int Graph::eccentricity(int v) const {
  if (!dist_.empty()) {
    int e = 0;
    for (int u = 0; u < n_; ++u)
      e = std::max(e, dist_[static_cast<size_t>(v) * n_ + u]);
    return e;
  }
  auto d = bfs_from(v);
  return *std::max_element(d.begin(), d.end());
}

int Graph::radius() const {
  int r = kInfDist;
  for (int v = 0; v < n_; ++v) r = std::min(r, eccentricity(v));
  return r;
}

int Graph::diameter() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
  return d;
}

std::vector<int> Graph::centers() const {
  int r = radius();
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (eccentricity(v) == r) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

MetricsReport metrics(const Graph& g) {
  MetricsReport r;
  r.order = g.order();
  r.edges = g.edge_count();
  r.degree_sequence = g.degrees();
  std::sort(r.degree_sequence.rbegin(), r.degree_sequence.rend());
  r.max_degree = g.max_degree();
  r.isolated_count = g.isolated_count();
  r.eccentricities.resize(g.order());
  for (int v = 0; v < g.order(); ++v) r.eccentricities[v] = g.eccentricity(v);
  r.radius = g.radius();
  r.diameter = g.diameter();
  r.centers = g.centers();
  for (const auto& comp : g.components())
    r.component_orders.push_back(static_cast<int>(comp.size()));
  std::sort(r.component_orders.begin(), r.component_orders.end());
  return r;
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star requires >= 1 leaf");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty union");
  int n = 0;
  std::vector<std::pair<int, int>> e;
  for (const auto& g : parts) {
    for (auto [u, v] : g.edges()) e.emplace_back(n + u, n + v);
    n += g.order();
  }
  return Graph(n, e);
}

Graph complement(const Graph& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph gnp(int n, double p, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp requires n >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
  // Pairs are drawn in fixed lexicographic order, one draw per pair, so a
  // seed pins the sample exactly.
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph random_labeled_tree(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree requires n >= 1");
  if (n == 1) return empty_graph(1);
  if (n == 2) return path_graph(2);
  // Uniform over the n^{n-2} labeled trees via a random Pruefer sequence.
  SplitMix64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (auto& x : pruefer) x = static_cast<int>(rng.below(n));
  std::vector<int> deg(n, 1);
  for (int x : pruefer) ++deg[x];
  std::vector<std::pair<int, int>> e;
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  for (int x : pruefer) {
    int leaf = leaves.top();
    leaves.pop();
    e.emplace_back(leaf, x);
    if (--deg[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  e.emplace_back(a, b);
  return Graph(n, e);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), e);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> idx(g.order(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = (int)i;
  std::vector<std::pair<int, int>> e;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (int w : g.neighbors(vertices[i]))
      if (idx[w] > static_cast<int>(i)) e.emplace_back((int)i, idx[w]);
  return Graph(static_cast<int>(vertices.size()), e);
}

Graph add_isolated_vertices(const Graph& g, int count) {
  return Graph(g.order() + count, g.edges());
}

bool are_twins(const Graph& g, int u, int v) {
  for (int s = 0; s < g.order(); ++s) {
    if (s == u || s == v) continue;
    if (g.adjacent(s, u) != g.adjacent(s, v)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> twin_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (are_twins(g, u, v)) out.emplace_back(u, v);
  return out;
}

bool is_twin_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (are_twins(g, u, v)) return false;
  return true;
}

}  // namespace fograph

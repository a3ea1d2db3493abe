#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fograph {

// Immutable finite simple graph. Adjacency is stored as sorted neighbor
// lists, plus per-vertex bitset rows for orders up to kBitsetLimit so the
// exhaustive engines get word-parallel adjacency tests. Degree sequence and
// the component partition are computed eagerly; the all-pairs distance table
// is cached eagerly up to kDistCacheLimit and answered by BFS beyond that.
class Graph {
 public:
  static constexpr int kInfDist = 1 << 29;
  static constexpr int kBitsetLimit = 4096;
  static constexpr int kDistCacheLimit = 512;

  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const {
    if (!rows_.empty())
      return (rows_[static_cast<size_t>(u) * words_ + (v >> 6)] >>
              (v & 63)) & 1u;
    return adjacent_slow(u, v);
  }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  int max_degree() const { return max_degree_; }
  int isolated_count() const { return isolated_; }  // d0

  // Single-word adjacency row; only valid when order() <= 64.
  uint64_t row64(int v) const { return rows_[v]; }

  int component_of(int v) const { return comp_of_[v]; }
  int component_count() const { return comp_count_; }
  std::vector<std::vector<int>> components() const;

  int dist(int u, int v) const;
  std::vector<int> bfs_from(int v) const;
  int eccentricity(int v) const;
  int radius() const;
  int diameter() const;
  std::vector<int> centers() const;
  bool connected() const { return comp_count_ == 1; }
  bool is_tree() const { return connected() && m_ == n_ - 1; }

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  bool adjacent_slow(int u, int v) const;

  int n_;
  int m_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> rows_;  // n_ * words_ bit rows; empty past the limit
  std::vector<std::vector<int>> adj_;
  std::vector<int> degrees_;
  int max_degree_ = 0;
  int isolated_ = 0;
  std::vector<int> comp_of_;
  int comp_count_ = 0;
  std::vector<int> dist_;  // n_ * n_, only when n_ <= kDistCacheLimit
};

struct MetricsReport {
  int order = 0;
  int edges = 0;
  std::vector<int> degree_sequence;  // sorted descending
  int max_degree = 0;
  int isolated_count = 0;
  std::vector<int> eccentricities;
  int radius = 0;    // kInfDist when disconnected
  int diameter = 0;  // kInfDist when disconnected
  std::vector<int> centers;
  std::vector<int> component_orders;  // sorted ascending
};

MetricsReport metrics(const Graph& g);

// Deterministic generators.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}
Graph disjoint_union(const std::vector<Graph>& parts);
Graph complement(const Graph& g);
Graph gnp(int n, double p, uint64_t seed);
Graph random_labeled_tree(int n, uint64_t seed);

Graph relabel(const Graph& g, const std::vector<int>& perm);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph add_isolated_vertices(const Graph& g, int count);

// Twins: u,v such that no third vertex is adjacent to exactly one of them
// (equivalently, transposing them is an automorphism).
bool are_twins(const Graph& g, int u, int v);
std::vector<std::pair<int, int>> twin_pairs(const Graph& g);
bool is_twin_free(const Graph& g);

}  // namespace fograph

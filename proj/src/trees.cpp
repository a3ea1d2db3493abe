#include "fograph/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fograph/errors.hpp"

namespace fograph {

int RootedTree::height() const {
  std::vector<int> depth(parent.size(), 0);
  int h = 0;
  // Parents are created before children by all constructors here, but be
  // safe and iterate until fixpoint-free via repeated passes.
  for (size_t pass = 0; pass < parent.size(); ++pass) {
    bool changed = false;
    for (size_t v = 0; v < parent.size(); ++v)
      if (parent[v] >= 0 && depth[v] != depth[parent[v]] + 1) {
        depth[v] = depth[parent[v]] + 1;
        changed = true;
      }
    if (!changed) break;
  }
  for (int d : depth) h = std::max(h, d);
  return h;
}

std::vector<std::vector<int>> RootedTree::children() const {
  std::vector<std::vector<int>> ch(parent.size());
  for (size_t v = 0; v < parent.size(); ++v)
    if (parent[v] >= 0) ch[parent[v]].push_back(static_cast<int>(v));
  return ch;
}

Graph RootedTree::to_graph() const {
  std::vector<std::pair<int, int>> e;
  for (size_t v = 0; v < parent.size(); ++v)
    if (parent[v] >= 0) e.emplace_back(static_cast<int>(v), parent[v]);
  return Graph(order(), e);
}

namespace {

std::string code_below(const std::vector<std::vector<int>>& ch, int v) {
  std::vector<std::string> parts;
  for (int c : ch[v]) parts.push_back(code_below(ch, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (auto& p : parts) out += p;
  out += ")";
  return out;
}

// Code of the subtree of graph t hanging below u when entered from w
// (w = -1 roots the whole component at u).
std::string graph_code_below(const Graph& t, int w, int u) {
  std::vector<std::string> parts;
  for (int c : t.neighbors(u))
    if (c != w) parts.push_back(graph_code_below(t, u, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (auto& p : parts) out += p;
  out += ")";
  return out;
}

uint64_t aut_below(const Graph& t, int w, int u, std::string* code_out) {
  std::vector<std::pair<std::string, uint64_t>> parts;
  for (int c : t.neighbors(u)) {
    if (c == w) continue;
    std::string code;
    uint64_t a = aut_below(t, u, c, &code);
    parts.emplace_back(std::move(code), a);
  }
  std::sort(parts.begin(), parts.end());
  uint64_t total = 1;
  std::string out = "(";
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j].first == parts[i].first) ++j;
    uint64_t m = j - i;
    for (uint64_t f = 2; f <= m; ++f) total *= f;
    for (size_t k = i; k < j; ++k) total *= parts[k].second;
    i = j;
  }
  for (auto& p : parts) out += p.first;
  out += ")";
  if (code_out) *code_out = std::move(out);
  return total;
}

void require_tree(const Graph& t) {
  if (!t.is_tree()) throw std::invalid_argument("input is not a tree");
}

}  // namespace

std::string rooted_code(const RootedTree& t) {
  return code_below(t.children(), t.root);
}

std::string free_tree_code(const Graph& t) {
  require_tree(t);
  auto centers = t.centers();
  if (centers.size() == 1) return "C" + graph_code_below(t, -1, centers[0]);
  // Two adjacent centers: encode the ordered pair of edge halves.
  int a = centers[0], b = centers[1];
  std::string ca = graph_code_below(t, b, a);
  std::string cb = graph_code_below(t, a, b);
  if (cb < ca) std::swap(ca, cb);
  return "E" + ca + "|" + cb;
}

uint64_t tree_automorphism_count(const Graph& t) {
  require_tree(t);
  auto centers = t.centers();
  if (centers.size() == 1) return aut_below(t, -1, centers[0], nullptr);
  int a = centers[0], b = centers[1];
  std::string ca, cb;
  uint64_t na = aut_below(t, b, a, &ca);
  uint64_t nb = aut_below(t, a, b, &cb);
  return ca == cb ? 2 * na * nb : na * nb;
}

int tree_separator(const Graph& t) {
  require_tree(t);
  int n = t.order();
  for (int v = 0; v < n; ++v) {
    // Size of each branch of T - v, via subtree sizes away from v.
    bool ok = true;
    for (int u : t.neighbors(v)) {
      // Count vertices in the component of T - v containing u.
      std::vector<int> stack{u};
      std::vector<char> seen(n, 0);
      seen[v] = seen[u] = 1;
      int size = 0;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++size;
        for (int y : t.neighbors(x))
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
      }
      if (size > n / 2) {
        ok = false;
        break;
      }
    }
    if (ok) return v;
  }
  throw std::logic_error("tree has no separator vertex");
}

std::string branch_code(const Graph& t, int w, int u) {
  return graph_code_below(t, w, u);
}

bool is_diverging(const Graph& t) {
  require_tree(t);
  for (int w = 0; w < t.order(); ++w) {
    std::vector<std::string> codes;
    for (int u : t.neighbors(w)) codes.push_back(graph_code_below(t, w, u));
    std::sort(codes.begin(), codes.end());
    if (std::adjacent_find(codes.begin(), codes.end()) != codes.end())
      return false;
  }
  return true;
}

std::vector<RootedTree> enumerate_asym_rooted_trees(int k, bool allow_large) {
  if (k < 0) throw std::invalid_argument("height must be >= 0");
  if (k > 4 || (k == 4 && !allow_large))
    throw ResourceError("asymmetric rooted tree enumeration beyond height 3 "
                        "(r_4 = 65536) requires the explicit large flag; "
                        "height 5 and up is refused");
  std::vector<RootedTree> level;
  level.push_back(RootedTree{{-1}, 0});
  for (int h = 1; h <= k; ++h) {
    std::vector<RootedTree> next;
    size_t count = size_t{1} << level.size();
    next.reserve(count);
    for (size_t mask = 0; mask < count; ++mask) {
      RootedTree t;
      t.parent = {-1};
      t.root = 0;
      for (size_t i = 0; i < level.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        const RootedTree& b = level[i];
        int base = t.order();
        for (int v = 0; v < b.order(); ++v)
          t.parent.push_back(b.parent[v] < 0 ? 0 : b.parent[v] + base);
      }
      next.push_back(std::move(t));
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace fograph

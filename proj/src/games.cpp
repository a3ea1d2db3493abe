#include "fograph/games.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "fograph/canonical.hpp"
#include "fograph/errors.hpp"
#include "fograph/trees.hpp"

namespace fograph {

namespace {

// Positions are kept as sorted, deduplicated pair sets: pebble order never
// matters and a duplicated pair is the same position with one more free
// pebble.
using Config = std::vector<uint16_t>;  // (u << 8) | v, sorted

uint16_t pack(int u, int v) {
  return static_cast<uint16_t>((u << 8) | v);
}

bool extend_ok(const Graph& g, const Graph& h, const Config& cfg, int u,
               int v) {
  for (uint16_t p : cfg) {
    int a = p >> 8, b = p & 0xff;
    if ((u == a) != (v == b)) return false;
    if (u != a && g.adjacent(u, a) != h.adjacent(v, b)) return false;
  }
  return true;
}

Config extend(const Config& cfg, int u, int v) {
  Config out = cfg;
  uint16_t p = pack(u, v);
  auto it = std::lower_bound(out.begin(), out.end(), p);
  if (it == out.end() || *it != p) out.insert(it, p);
  return out;
}

struct ConfigHash {
  size_t operator()(const Config& c) const {
    size_t h = c.size();
    for (uint16_t p : c) h = h * 0x100000001b3ull + p;
    return h;
  }
};

void require_non_isomorphic(const Graph& g, const Graph& h) {
  if (iso(g, h))
    throw std::invalid_argument("game value requires non-isomorphic inputs");
}

// ---- plain game (pebbles never moved), optional alternation budget ----

struct PlainGame {
  const Graph& g;
  const Graph& h;
  int alternation_budget;  // negative = unbounded
  GameStats stats;
  // Key: config bytes + (rounds, last side, switches used).
  std::unordered_map<Config, std::map<std::tuple<int, int, int>, bool>,
                     ConfigHash>
      memo;

  PlainGame(const Graph& gg, const Graph& hh, int alt)
      : g(gg), h(hh), alternation_budget(alt) {}

  bool spoiler_wins(const Config& cfg, int r, int last, int used) {
    if (r == 0) return false;
    auto& slot = memo[cfg];
    auto key = std::make_tuple(r, last, used);
    auto it = slot.find(key);
    if (it != slot.end()) return it->second;
    ++stats.configs_visited;

    bool result = false;
    for (int side = 0; side < 2 && !result; ++side) {
      int next_used = used;
      if (alternation_budget >= 0 && last >= 0 && side != last) {
        next_used = used + 1;
        if (next_used > alternation_budget) continue;
      }
      const Graph& mine = side == 0 ? g : h;
      const Graph& theirs = side == 0 ? h : g;
      for (int a = 0; a < mine.order() && !result; ++a) {
        bool all_replies_lose = true;
        for (int b = 0; b < theirs.order(); ++b) {
          int u = side == 0 ? a : b;
          int v = side == 0 ? b : a;
          if (!extend_ok(g, h, cfg, u, v)) continue;  // reply loses at once
          if (!spoiler_wins(extend(cfg, u, v), r - 1, side, next_used)) {
            all_replies_lose = false;
            break;
          }
        }
        result = all_replies_lose;
      }
    }
    slot.emplace(key, result);
    return result;
  }
};

GameValue plain_value(const Graph& g, const Graph& h, int alt,
                      GameStats* stats) {
  require_non_isomorphic(g, h);
  if (g.order() > 255 || h.order() > 255)
    throw ResourceError("plain game limited to orders <= 255");
  int cap = std::min(g.order(), h.order()) + 1;
  PlainGame game(g, h, alt);
  for (int r = 0; r <= cap; ++r) {
    if (game.spoiler_wins({}, r, -1, 0)) {
      if (stats) {
        *stats = game.stats;
        stats->rounds_explored = r;
      }
      return GameValue::of(r);
    }
  }
  throw std::logic_error(
      "plain game exceeded its soundness cap min(v(G),v(H))+1");
}

// ---- pebble game: explicit position space, safety fixpoint + retrograde ----

struct PebbleSpace {
  const Graph& g;
  const Graph& h;
  int k;
  std::vector<Config> configs;
  std::unordered_map<Config, int, ConfigHash> index;
  std::vector<char> partial_iso_flag;

  PebbleSpace(const Graph& gg, const Graph& hh, int kk)
      : g(gg), h(hh), k(kk) {
    size_t pairs = static_cast<size_t>(g.order()) * h.order();
    double count = 1;
    double binom = 1;
    for (int i = 1; i <= k; ++i) {
      binom = binom * static_cast<double>(pairs - i + 1) / i;
      count += binom;
    }
    if (count > 6e6)
      throw ResourceError(
          "pebble game position space too large; lower k or the orders");
    Config cur;
    build(cur, 0);
    partial_iso_flag.resize(configs.size());
    for (size_t i = 0; i < configs.size(); ++i)
      partial_iso_flag[i] = consistent(configs[i]);
  }

  void build(Config& cur, uint32_t from) {
    index.emplace(cur, static_cast<int>(configs.size()));
    configs.push_back(cur);
    if (static_cast<int>(cur.size()) == k) return;
    size_t pairs = static_cast<size_t>(g.order()) * h.order();
    for (uint32_t p = from; p < pairs; ++p) {
      uint16_t packed = pack(static_cast<int>(p) / h.order(),
                             static_cast<int>(p) % h.order());
      cur.push_back(packed);
      build(cur, p + 1);
      cur.pop_back();
    }
  }

  bool consistent(const Config& cfg) const {
    for (size_t i = 0; i < cfg.size(); ++i) {
      int u = cfg[i] >> 8, v = cfg[i] & 0xff;
      for (size_t j = i + 1; j < cfg.size(); ++j) {
        int a = cfg[j] >> 8, b = cfg[j] & 0xff;
        if ((u == a) != (v == b)) return false;
        if (u != a && g.adjacent(u, a) != h.adjacent(v, b)) return false;
      }
    }
    return true;
  }

  // Applies fn(move_base) for every Spoiler move from cfg: the base position
  // after removing the displaced pebble (or nothing when a pebble is free).
  template <typename Fn>
  void for_each_base(const Config& cfg, Fn&& fn) const {
    if (static_cast<int>(cfg.size()) < k) fn(cfg);
    for (size_t i = 0; i < cfg.size(); ++i) {
      Config base;
      base.reserve(cfg.size() - 1);
      for (size_t j = 0; j < cfg.size(); ++j)
        if (j != i) base.push_back(cfg[j]);
      fn(base);
    }
  }
};

// Greatest fixpoint of positions where Duplicator survives forever.
std::vector<char> duplicator_safe(const PebbleSpace& space) {
  std::vector<char> safe = space.partial_iso_flag;
  const Graph& g = space.g;
  const Graph& h = space.h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ci = 0; ci < space.configs.size(); ++ci) {
      if (!safe[ci]) continue;
      const Config& cfg = space.configs[ci];
      bool escapes = false;
      space.for_each_base(cfg, [&](const Config& base) {
        if (escapes) return;
        for (int side = 0; side < 2 && !escapes; ++side) {
          const Graph& mine = side == 0 ? g : h;
          const Graph& theirs = side == 0 ? h : g;
          for (int a = 0; a < mine.order() && !escapes; ++a) {
            bool survivable = false;
            for (int b = 0; b < theirs.order(); ++b) {
              int u = side == 0 ? a : b;
              int v = side == 0 ? b : a;
              if (!extend_ok(g, h, base, u, v)) continue;
              Config child = extend(base, u, v);
              if (safe[space.index.at(child)]) {
                survivable = true;
                break;
              }
            }
            if (!survivable) escapes = true;
          }
        }
      });
      if (escapes) {
        safe[ci] = 0;
        changed = true;
      }
    }
  }
  return safe;
}

// Exact minimal round counts on the non-safe part via Bellman sweeps;
// converges within (max finite value + 2) sweeps.
std::vector<int> pebble_values(const PebbleSpace& space,
                               const std::vector<char>& safe, long* visited) {
  constexpr int kUnset = INT32_MAX;
  std::vector<int> value(space.configs.size(), kUnset);
  for (size_t i = 0; i < space.configs.size(); ++i)
    if (!space.partial_iso_flag[i]) value[i] = 0;
  const Graph& g = space.g;
  const Graph& h = space.h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ci = 0; ci < space.configs.size(); ++ci) {
      if (!space.partial_iso_flag[ci] || safe[ci]) continue;
      const Config& cfg = space.configs[ci];
      int best = kUnset;
      space.for_each_base(cfg, [&](const Config& base) {
        for (int side = 0; side < 2; ++side) {
          const Graph& mine = side == 0 ? g : h;
          const Graph& theirs = side == 0 ? h : g;
          for (int a = 0; a < mine.order(); ++a) {
            int worst = 0;
            for (int b = 0; b < theirs.order(); ++b) {
              int u = side == 0 ? a : b;
              int v = side == 0 ? b : a;
              if (!extend_ok(g, h, base, u, v)) continue;
              int child = space.index.at(extend(base, u, v));
              if (safe[child] || value[child] == kUnset) {
                worst = kUnset;
                break;
              }
              worst = std::max(worst, value[child]);
            }
            if (worst != kUnset) best = std::min(best, worst + 1);
          }
        }
      });
      if (visited) *visited += 1;
      if (best < value[ci]) {
        value[ci] = best;
        changed = true;
      }
    }
  }
  return value;
}

}  // namespace

bool is_partial_iso(const Graph& g, const Graph& h, const PebblePairs& cfg) {
  for (size_t i = 0; i < cfg.size(); ++i) {
    auto [u, v] = cfg[i];
    for (size_t j = i + 1; j < cfg.size(); ++j) {
      auto [a, b] = cfg[j];
      if ((u == a) != (v == b)) return false;
      if (u != a && g.adjacent(u, a) != h.adjacent(v, b)) return false;
    }
  }
  return true;
}

GameValue game_depth(const Graph& g, const Graph& h, GameStats* stats) {
  return plain_value(g, h, -1, stats);
}

GameValue alt_depth(const Graph& g, const Graph& h, int a, GameStats* stats) {
  if (a < 0) throw std::invalid_argument("alternation budget must be >= 0");
  return plain_value(g, h, a, stats);
}

GameValue pebble_depth(const Graph& g, const Graph& h, int k,
                       GameStats* stats) {
  if (k < 1) throw std::invalid_argument("pebble count must be >= 1");
  require_non_isomorphic(g, h);
  if (g.order() > 255 || h.order() > 255)
    throw ResourceError("pebble game limited to orders <= 255");
  PebbleSpace space(g, h, k);
  auto safe = duplicator_safe(space);
  long visited = static_cast<long>(space.configs.size());
  int empty = space.index.at({});
  GameValue result;
  if (safe[empty]) {
    result = GameValue::inf();
  } else {
    auto value = pebble_values(space, safe, &visited);
    int v = value[empty];
    int n = std::min(g.order(), h.order());
    // Stabilization bound: finite values stay within
    // max(n^{k-1} - 1, 1) + k - 1 rounds.
    long cap = 1;
    for (int i = 0; i < k - 1; ++i) cap *= n;
    cap = std::max(cap - 1, 1l) + k - 1;
    if (v > cap)
      throw std::logic_error("pebble value exceeded its theoretical cap");
    result = GameValue::of(v);
  }
  if (stats) {
    stats->configs_visited = visited;
    stats->rounds_explored = result.finite ? result.rounds : -1;
  }
  return result;
}

GameValue game_width(const Graph& g, const Graph& h, GameStats* stats) {
  require_non_isomorphic(g, h);
  int cap = std::min(g.order(), h.order()) + 1;
  for (int k = 1; k <= cap; ++k) {
    GameValue d = pebble_depth(g, h, k, stats);
    if (d.finite) return GameValue::of(k);
  }
  throw std::logic_error("width exceeded min(v(G),v(H))+1");
}

bool width_at_least(const Graph& g, const Graph& h, int k) {
  for (int j = 1; j < k; ++j)
    if (pebble_depth(g, h, j).finite) return false;
  return true;
}

// ---- named Spoiler strategies vs exhaustive Duplicator ----

namespace {

struct BranchResult {
  bool won = true;
  int rounds = 0;  // relative to the current position
  int switches = 0;
};

BranchResult worst_of(BranchResult a, const BranchResult& b) {
  a.won = a.won && b.won;
  a.rounds = std::max(a.rounds, b.rounds);
  a.switches = std::max(a.switches, b.switches);
  return a;
}

struct StrategyEngine {
  const Graph& g;
  const Graph& h;
  long nodes = 0;
  std::unordered_map<std::string, BranchResult> memo;

  StrategyEngine(const Graph& gg, const Graph& hh) : g(gg), h(hh) {}

  void tick() {
    if (++nodes > 200'000'000)
      throw ResourceError("strategy search budget exceeded");
  }

  static void key_int(std::string& k, int v) {
    k.push_back(static_cast<char>(v & 0xff));
    k.push_back(static_cast<char>((v >> 8) & 0xff));
  }

  static std::string make_key(char tag, std::initializer_list<int> params,
                              const Config& cfg) {
    std::string k(1, tag);
    for (int p : params) key_int(k, p);
    for (uint16_t c : cfg) key_int(k, c);
    return k;
  }

  int switch_cost(int last, int side) {
    return last >= 0 && last != side ? 1 : 0;
  }

  // Halving-distance strategy: the active pebbled pair (su,sv),(tu,tv) has
  // strictly different distances; Spoiler bisects in the smaller side.
  BranchResult halving(const Config& cfg, uint16_t p, uint16_t q, int last) {
    tick();
    std::string key = make_key('H', {p, q, last}, cfg);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int pu = p >> 8, pv = p & 0xff, qu = q >> 8, qv = q & 0xff;
    int dg = g.dist(pu, qu), dh = h.dist(pv, qv);
    int side = dg < dh ? 0 : 1;  // bisect in the smaller-distance side
    const Graph& mine = side == 0 ? g : h;
    const Graph& theirs = side == 0 ? h : g;
    int a = side == 0 ? pu : pv;
    int b = side == 0 ? qu : qv;
    int mid = bisect_vertex(mine, a, b);
    int sw = switch_cost(last, side);

    BranchResult result{true, 1, sw};
    for (int reply = 0; reply < theirs.order(); ++reply) {
      int u = side == 0 ? mid : reply;
      int v = side == 0 ? reply : mid;
      if (!extend_ok(g, h, cfg, u, v)) continue;
      Config child = extend(cfg, u, v);
      uint16_t newp = pack(u, v);
      // One of (mid, a) and (mid, b) must again mismatch with the smaller
      // distance on the bisection side.
      uint16_t cand[2] = {p, q};
      int best = -1;
      int best_d = INT32_MAX;
      for (uint16_t c : cand) {
        int cu = c >> 8, cv = c & 0xff;
        int ndg = g.dist(u, cu), ndh = h.dist(v, cv);
        if (ndg == ndh) continue;
        int small = std::min(ndg, ndh);
        if (small < best_d) {
          best_d = small;
          best = c;
        }
      }
      if (best < 0)
        throw std::logic_error("halving invariant broken: no mismatch left");
      BranchResult sub = halving(child, newp, static_cast<uint16_t>(best),
                                 side);
      sub.rounds += 1;
      sub.switches += sw;
      result = worst_of(result, sub);
    }
    memo.emplace(std::move(key), result);
    return result;
  }

  // Deterministic midpoint of a shortest a-b path (smallest-index BFS tree).
  static int bisect_vertex(const Graph& gr, int a, int b) {
    int d = gr.dist(a, b);
    auto from_a = gr.bfs_from(a);
    std::vector<int> path{b};
    int cur = b;
    while (cur != a) {
      for (int w : gr.neighbors(cur))
        if (from_a[w] == from_a[cur] - 1) {
          cur = w;
          break;
        }
      path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());  // path[0] = a
    return path[d / 2];
  }

  // Weak-sieve strategy: pebble all of X in G, then finish with an exact
  // bounded endgame that switches graphs at most once.
  BranchResult sieve(const Config& cfg, const std::vector<int>& x,
                     size_t next) {
    tick();
    if (next == x.size()) return sieve_endgame(cfg);
    std::string key = make_key('S', {static_cast<int>(next)}, cfg);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BranchResult result{true, 1, 0};
    for (int b = 0; b < h.order(); ++b) {
      if (!extend_ok(g, h, cfg, x[next], b)) continue;
      BranchResult sub = sieve(extend(cfg, x[next], b), x, next + 1);
      sub.rounds += 1;
      result = worst_of(result, sub);
    }
    memo.emplace(std::move(key), result);
    return result;
  }

  BranchResult sieve_endgame(const Config& cfg) {
    // Minimal forced win within 3 extra rounds, preferring no graph switch,
    // allowing one.
    for (int budget = 0; budget <= 1; ++budget) {
      PlainGame endgame(g, h, budget);
      for (int r = 0; r <= 3; ++r)
        if (endgame.spoiler_wins(cfg, r, 0, 0))
          return BranchResult{true, r, budget};
    }
    return BranchResult{false, 3, 1};
  }
};

// Counterpart of an h-side vertex in a consistent position (unique).
int counterpart_of(const Config& cfg, int hv) {
  for (uint16_t p : cfg)
    if ((p & 0xff) == hv) return p >> 8;
  throw std::logic_error("counterpart lookup failed");
}

// Spoiler strategy for an asymmetric tree T against a non-isomorphic tree:
// diameters differing hand off to the halving routine; against a diverging
// tree Spoiler descends along matchless branches from a central vertex;
// otherwise he pins the farthest vertex with duplicate branches first.
struct TreeStrategy {
  const Graph& t;
  const Graph& tp;
  StrategyEngine& eng;

  std::vector<std::pair<std::string, int>> child_branches(const Graph& gr,
                                                          int anchor,
                                                          int parent) const {
    std::vector<std::pair<std::string, int>> out;
    for (int c : gr.neighbors(anchor))
      if (c != parent) out.emplace_back(branch_code(gr, anchor, c), c);
    std::sort(out.begin(), out.end());
    return out;
  }

  BranchResult descend(const Config& cfg, int ag, int ah, int pg, int ph,
                       int last) {
    eng.tick();
    std::string key =
        StrategyEngine::make_key('D', {ag, ah, pg, ph, last}, cfg);
    auto it = eng.memo.find(key);
    if (it != eng.memo.end()) return it->second;

    auto bg = child_branches(t, ag, pg);
    auto bh = child_branches(tp, ah, ph);

    // Matchless child branch, preferred from the T side.
    int side = -1, child = -1;
    for (auto& [code, c] : bg) {
      bool found = false;
      for (auto& [code2, c2] : bh)
        if (code2 == code) found = true;
      if (!found) {
        side = 0;
        child = c;
        break;
      }
    }
    if (side < 0) {
      for (auto& [code, c] : bh) {
        bool found = false;
        for (auto& [code2, c2] : bg)
          if (code2 == code) found = true;
        if (!found) {
          side = 1;
          child = c;
          break;
        }
      }
    }

    BranchResult result;
    if (side >= 0) {
      int sc = eng.switch_cost(last, side);
      result = BranchResult{true, 1, sc};
      const Graph& theirs = side == 0 ? tp : t;
      for (int b = 0; b < theirs.order(); ++b) {
        int u = side == 0 ? child : b;
        int v = side == 0 ? b : child;
        if (!extend_ok(t, tp, cfg, u, v)) continue;
        BranchResult sub = descend(extend(cfg, u, v), u, v, ag, ah, side);
        sub.rounds += 1;
        sub.switches += sc;
        result = worst_of(result, sub);
      }
    } else {
      // Branch code sets are equal; the T side never repeats a code, so the
      // opponent must repeat one. Pinning both copies forces two distinct T
      // branches, at least one of which mismatches.
      std::string dup;
      int d1 = -1, d2 = -1;
      for (size_t i = 0; i + 1 < bh.size(); ++i)
        if (bh[i].first == bh[i + 1].first) {
          dup = bh[i].first;
          d1 = bh[i].second;
          d2 = bh[i + 1].second;
          break;
        }
      if (d1 < 0)
        throw std::logic_error(
            "descent invariant broken: equal branch code multisets");
      int sc = eng.switch_cost(last, 1);
      result = BranchResult{true, 1, sc};
      for (int r1 = 0; r1 < t.order(); ++r1) {
        if (!extend_ok(t, tp, cfg, r1, d1)) continue;
        Config cfg1 = extend(cfg, r1, d1);
        BranchResult inner{true, 1, 0};
        for (int r2 = 0; r2 < t.order(); ++r2) {
          if (!extend_ok(t, tp, cfg1, r2, d2)) continue;
          Config cfg2 = extend(cfg1, r2, d2);
          std::string c1 = branch_code(t, ag, r1);
          BranchResult sub;
          if (c1 != dup) {
            sub = descend(cfg2, r1, d1, ag, ah, 1);
          } else {
            std::string c2 = branch_code(t, ag, r2);
            if (c2 == dup)
              throw std::logic_error(
                  "descent invariant broken: duplicate T branches");
            sub = descend(cfg2, r2, d2, ag, ah, 1);
          }
          sub.rounds += 1;
          inner = worst_of(inner, sub);
        }
        inner.rounds += 1;
        inner.switches += sc;
        result = worst_of(result, inner);
      }
    }
    eng.memo.emplace(std::move(key), result);
    return result;
  }

  // Pebble a fixed sequence of h-side vertices (skipping ones already
  // pebbled), then dispatch to `after`.
  template <typename Fn>
  BranchResult pin_sequence(const Config& cfg, const std::vector<int>& seq,
                            size_t i, int last, Fn&& after) {
    if (i == seq.size()) return after(cfg, last);
    bool already = false;
    for (uint16_t p : cfg)
      if ((p & 0xff) == seq[i]) already = true;
    if (already) return pin_sequence(cfg, seq, i + 1, last, after);
    eng.tick();
    int sc = eng.switch_cost(last, 1);
    BranchResult result{true, 1, sc};
    for (int b = 0; b < t.order(); ++b) {
      if (!extend_ok(t, tp, cfg, b, seq[i])) continue;
      BranchResult sub =
          pin_sequence(extend(cfg, b, seq[i]), seq, i + 1, 1, after);
      sub.rounds += 1;
      sub.switches += sc;
      result = worst_of(result, sub);
    }
    return result;
  }

  BranchResult run() {
    if (t.diameter() != tp.diameter()) {
      int side = t.diameter() > tp.diameter() ? 0 : 1;
      const Graph& big = side == 0 ? t : tp;
      int diam = big.diameter();
      int x = -1, y = -1;
      for (int v = 0; v < big.order() && x < 0; ++v)
        if (big.eccentricity(v) == diam) x = v;
      for (int v = 0; v < big.order() && y < 0; ++v)
        if (big.dist(x, v) == diam) y = v;
      BranchResult result{true, 1, 0};
      const Graph& theirs = side == 0 ? tp : t;
      for (int b1 = 0; b1 < theirs.order(); ++b1) {
        int u1 = side == 0 ? x : b1;
        int v1 = side == 0 ? b1 : x;
        Config cfg1 = extend({}, u1, v1);
        BranchResult mid{true, 1, 0};
        for (int b2 = 0; b2 < theirs.order(); ++b2) {
          int u2 = side == 0 ? y : b2;
          int v2 = side == 0 ? b2 : y;
          if (!extend_ok(t, tp, cfg1, u2, v2)) continue;
          Config cfg2 = extend(cfg1, u2, v2);
          BranchResult sub =
              eng.halving(cfg2, pack(u1, v1), pack(u2, v2), side);
          sub.rounds += 1;
          mid = worst_of(mid, sub);
        }
        mid.rounds += 1;
        result = worst_of(result, mid);
      }
      return result;
    }

    if (is_diverging(tp)) {
      int center = t.centers().front();
      BranchResult result{true, 1, 0};
      for (int b = 0; b < tp.order(); ++b) {
        Config cfg = extend({}, center, b);
        BranchResult sub = descend(cfg, center, b, -1, -1, 0);
        sub.rounds += 1;
        result = worst_of(result, sub);
      }
      return result;
    }

    // Opponent is a non-diverging tree: pin the path from a central vertex
    // to the farthest vertex whose removal leaves duplicate branches, then
    // pin the duplicate pair and descend.
    int center = tp.centers().front();
    int u = -1, best_d = -1;
    for (int w = 0; w < tp.order(); ++w) {
      auto branches = child_branches(tp, w, -1);
      bool dup = false;
      for (size_t i = 0; i + 1 < branches.size(); ++i)
        if (branches[i].first == branches[i + 1].first) dup = true;
      if (dup && tp.dist(center, w) > best_d) {
        best_d = tp.dist(center, w);
        u = w;
      }
    }
    if (u < 0) throw std::logic_error("non-diverging tree without duplicates");

    std::vector<int> seq;
    {
      auto from_center = tp.bfs_from(center);
      std::vector<int> rev{u};
      int cur = u;
      while (cur != center) {
        for (int w : tp.neighbors(cur))
          if (from_center[w] == from_center[cur] - 1) {
            cur = w;
            break;
          }
        rev.push_back(cur);
      }
      seq.assign(rev.rbegin(), rev.rend());
    }
    auto branches = child_branches(tp, u, -1);
    std::string dup;
    int d1 = -1, d2 = -1;
    for (size_t i = 0; i + 1 < branches.size(); ++i)
      if (branches[i].first == branches[i + 1].first) {
        dup = branches[i].first;
        d1 = branches[i].second;
        d2 = branches[i + 1].second;
        break;
      }
    seq.push_back(d1);
    seq.push_back(d2);

    return pin_sequence(
        {}, seq, 0, -1, [&](const Config& cfg, int last) -> BranchResult {
          int ru = counterpart_of(cfg, u);
          int r1 = counterpart_of(cfg, d1);
          int r2 = counterpart_of(cfg, d2);
          std::string c1 = branch_code(t, ru, r1);
          if (c1 != dup) return descend(cfg, r1, d1, ru, u, last);
          std::string c2 = branch_code(t, ru, r2);
          if (c2 == dup)
            throw std::logic_error("duplicate branches in an asymmetric tree");
          return descend(cfg, r2, d2, ru, u, last);
        });
  }
};

BranchResult play_tree_strategy(const Graph& g, const Graph& h,
                                StrategyEngine& engine) {
  if (!g.is_tree() || !h.is_tree())
    throw std::invalid_argument(
        "tree strategy requires tree inputs on both sides");
  TreeStrategy strat{g, h, engine};
  return strat.run();
}

}  // namespace

PlayOutcome play(const Graph& g, const Graph& h, SpoilerStrategy strategy,
                 const PebblePairs& initial_config,
                 const std::vector<int>& sieve) {
  if (g.order() > 255 || h.order() > 255)
    throw ResourceError("strategy play limited to orders <= 255");
  Config cfg;
  for (auto [u, v] : initial_config) {
    if (u < 0 || u >= g.order() || v < 0 || v >= h.order())
      throw std::invalid_argument("initial configuration out of range");
    cfg = extend(cfg, u, v);
  }
  if (!is_partial_iso(g, h, initial_config))
    throw std::invalid_argument(
        "initial configuration is not a partial isomorphism");

  StrategyEngine engine(g, h);
  BranchResult result;
  switch (strategy) {
    case SpoilerStrategy::halving_distance: {
      uint16_t p = 0, q = 0;
      int best_d = INT32_MAX;
      for (size_t i = 0; i < cfg.size(); ++i)
        for (size_t j = i + 1; j < cfg.size(); ++j) {
          int dg = g.dist(cfg[i] >> 8, cfg[j] >> 8);
          int dh = h.dist(cfg[i] & 0xff, cfg[j] & 0xff);
          if (dg == dh) continue;
          int small = std::min(dg, dh);
          if (small < best_d) {
            best_d = small;
            p = cfg[i];
            q = cfg[j];
          }
        }
      if (best_d == INT32_MAX)
        throw std::invalid_argument(
            "halving strategy needs a pebbled pair with different distances");
      result = engine.halving(cfg, p, q, -1);
      break;
    }
    case SpoilerStrategy::weak_sieve: {
      if (!cfg.empty())
        throw std::invalid_argument(
            "weak-sieve strategy starts from an empty configuration");
      for (int v : sieve)
        if (v < 0 || v >= g.order())
          throw std::invalid_argument("sieve vertex out of range");
      result = engine.sieve(cfg, sieve, 0);
      break;
    }
    case SpoilerStrategy::tree_separator:
      result = play_tree_strategy(g, h, engine);
      break;
  }
  return PlayOutcome{result.won, result.rounds, result.switches,
                     engine.nodes};
}

}  // namespace fograph

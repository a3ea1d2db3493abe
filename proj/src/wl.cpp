#include "fograph/wl.hpp"

#include <algorithm>
#include <stdexcept>

#include "fograph/errors.hpp"

namespace fograph {

namespace {

// Signatures are packed into u64 sequences; colors stay below 2^14 within
// the enforced tuple budget, so k <= 4 colors fit one word.
using Sig = std::vector<uint64_t>;

struct WlEngine {
  const Graph& g;
  const Graph* h;
  int k;
  WlVersion version;
  size_t tg, th;  // tuple counts

  std::vector<int> colors;  // G tuples first, then H tuples

  WlEngine(const Graph& gg, const Graph* hh, int kk, WlVersion v)
      : g(gg), h(hh), k(kk), version(v) {
    if (version == WlVersion::standard && k < 1)
      throw std::invalid_argument("standard refinement requires k >= 1");
    if (version == WlVersion::count_free && k < 2)
      throw std::invalid_argument("count-free refinement requires k >= 2");
    if (k >= 4 && (g.order() > 20 || (h && h->order() > 20)))
      throw ResourceError("k >= 4 refinement refused beyond order 20");
    tg = tuple_count(g.order());
    th = h ? tuple_count(h->order()) : 0;
    if (tg + th > 3'000'000)
      throw ResourceError("tuple space exceeds the refinement budget");
  }

  size_t tuple_count(int n) const {
    size_t c = 1;
    for (int i = 0; i < k; ++i) {
      c *= static_cast<size_t>(n);
      if (c > 100'000'000) throw ResourceError("tuple space overflow");
    }
    return c;
  }

  const Graph& owner(size_t t) const { return t < tg ? g : *h; }
  size_t local(size_t t) const { return t < tg ? t : t - tg; }

  void decode(size_t idx, int n, int* tuple) const {
    for (int i = 0; i < k; ++i) {
      tuple[i] = static_cast<int>(idx % n);
      idx /= n;
    }
  }

  uint64_t isotype(const Graph& gr, const int* tuple) const {
    uint64_t code = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        code <<= 2;
        if (tuple[i] == tuple[j])
          code |= 1;
        else if (gr.adjacent(tuple[i], tuple[j]))
          code |= 2;
      }
    return code;
  }

  // Dense ranks of arbitrary per-tuple signatures, joint over both graphs.
  void rank_signatures(std::vector<Sig>& sigs) {
    std::vector<uint32_t> order(sigs.size());
    for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
      return sigs[a] < sigs[b];
    });
    colors.resize(sigs.size());
    int next = 0;
    for (size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && sigs[order[i]] != sigs[order[i - 1]]) ++next;
      colors[order[i]] = next;
    }
  }

  void initial_round() {
    std::vector<Sig> sigs(tg + th);
    int tuple[8];
    for (size_t t = 0; t < tg + th; ++t) {
      const Graph& gr = owner(t);
      decode(local(t), gr.order(), tuple);
      sigs[t] = {isotype(gr, tuple)};
    }
    rank_signatures(sigs);
  }

  void refine_round() {
    std::vector<Sig> sigs(tg + th);
    int tuple[8];
    for (size_t t = 0; t < tg + th; ++t) {
      const Graph& gr = owner(t);
      size_t base = t < tg ? 0 : tg;
      size_t idx = local(t);
      decode(idx, gr.order(), tuple);
      Sig sig;
      sig.reserve(1 + gr.order());
      sig.push_back(static_cast<uint64_t>(colors[t]));
      // Powers of n for substitution at position i.
      size_t pw[8];
      size_t p = 1;
      for (int i = 0; i < k; ++i) {
        pw[i] = p;
        p *= static_cast<size_t>(gr.order());
      }
      if (k == 1) {
        for (int w : gr.neighbors(tuple[0]))
          sig.push_back(static_cast<uint64_t>(colors[base + w]));
        std::sort(sig.begin() + 1, sig.end());
        if (version == WlVersion::count_free)
          sig.erase(std::unique(sig.begin() + 1, sig.end()), sig.end());
      } else {
        // Each substitution contributes a k-vector of colors packed into
        // two words (32-bit slots, ample within the tuple budget).
        std::vector<std::pair<uint64_t, uint64_t>> contrib;
        contrib.reserve(gr.order());
        for (int w = 0; w < gr.order(); ++w) {
          uint64_t hi = 0, lo = 0;
          for (int i = 0; i < k; ++i) {
            size_t sub = idx + (static_cast<size_t>(w) - tuple[i]) * pw[i];
            uint64_t c = static_cast<uint64_t>(colors[base + sub]);
            if (i < 2)
              hi = (hi << 32) | c;
            else
              lo = (lo << 32) | c;
          }
          contrib.emplace_back(hi, lo);
        }
        std::sort(contrib.begin(), contrib.end());
        if (version == WlVersion::count_free)
          contrib.erase(std::unique(contrib.begin(), contrib.end()),
                        contrib.end());
        for (auto [hi, lo] : contrib) {
          sig.push_back(hi);
          sig.push_back(lo);
        }
      }
      sigs[t] = std::move(sig);
    }
    rank_signatures(sigs);
  }

  WlRound snapshot(const std::vector<int>* prev) const {
    WlRound r;
    r.colors_g.assign(colors.begin(), colors.begin() + tg);
    if (h) r.colors_h.assign(colors.begin() + tg, colors.end());
    r.classes = colors.empty()
                    ? 0
                    : 1 + *std::max_element(colors.begin(), colors.end());
    r.class_counts_g.assign(r.classes, 0);
    for (size_t t = 0; t < tg; ++t) ++r.class_counts_g[colors[t]];
    if (h) {
      std::vector<int> counts_h(r.classes, 0);
      for (size_t t = tg; t < tg + th; ++t) ++counts_h[colors[t]];
      if (version == WlVersion::standard) {
        r.multisets_equal = r.class_counts_g == counts_h;
      } else {
        r.multisets_equal = true;
        for (int c = 0; c < r.classes; ++c)
          if ((r.class_counts_g[c] > 0) != (counts_h[c] > 0))
            r.multisets_equal = false;
      }
      r.diag_equal = diag_equal();
    }
    if (prev) {
      r.g_partition_changed = class_count_in(*prev, 0, tg) !=
                              class_count_in(colors, 0, tg);
      r.joint_partition_changed = class_count_in(*prev, 0, tg + th) !=
                                  class_count_in(colors, 0, tg + th);
    }
    return r;
  }

  static int class_count_in(const std::vector<int>& cols, size_t from,
                            size_t to) {
    std::vector<int> seen;
    for (size_t t = from; t < to; ++t) seen.push_back(cols[t]);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return static_cast<int>(seen.size());
  }

  bool diag_equal() const {
    std::vector<int> dg, dh;
    size_t pw = 0;
    // Diagonal tuple (u,...,u) has index u * (1 + n + ... + n^{k-1}).
    for (int u = 0; u < g.order(); ++u) {
      size_t idx = 0;
      pw = 1;
      for (int i = 0; i < k; ++i) {
        idx += static_cast<size_t>(u) * pw;
        pw *= static_cast<size_t>(g.order());
      }
      dg.push_back(colors[idx]);
    }
    for (int u = 0; u < h->order(); ++u) {
      size_t idx = 0;
      pw = 1;
      for (int i = 0; i < k; ++i) {
        idx += static_cast<size_t>(u) * pw;
        pw *= static_cast<size_t>(h->order());
      }
      dh.push_back(colors[tg + idx]);
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (version == WlVersion::count_free) {
      dg.erase(std::unique(dg.begin(), dg.end()), dg.end());
      dh.erase(std::unique(dh.begin(), dh.end()), dh.end());
    }
    return dg == dh;
  }
};

}  // namespace

Coloring wl_refine(const Graph& g, const Graph* h, int k, WlVersion version,
                   int max_rounds) {
  WlEngine engine(g, h, k, version);
  Coloring out;
  out.k = k;
  out.version = version;
  out.n_g = g.order();
  out.n_h = h ? h->order() : 0;

  engine.initial_round();
  out.rounds.push_back(engine.snapshot(nullptr));

  size_t round_cap = engine.tg + engine.th + 2;
  while (max_rounds < 0 ||
         static_cast<int>(out.rounds.size()) <= max_rounds) {
    if (out.rounds.size() > round_cap)
      throw std::logic_error("refinement failed to stabilize in bound");
    std::vector<int> prev = engine.colors;
    engine.refine_round();
    out.rounds.push_back(engine.snapshot(&prev));
    const WlRound& r = out.rounds.back();
    int round = static_cast<int>(out.rounds.size()) - 1;
    if (!r.g_partition_changed && out.stab_g < 0) out.stab_g = round;
    if (!r.joint_partition_changed) {
      out.joint_stab = round;
      break;
    }
  }
  return out;
}

WlVerdict wl_verdict(const Graph& g, const Graph& h, int k,
                     WlVersion version) {
  // Incremental application of the two termination rules; the run never
  // extends past Stab_k(G).
  WlEngine engine(g, &h, k, version);
  engine.initial_round();
  WlRound round = engine.snapshot(nullptr);
  int r = 0;
  for (;;) {
    if (!round.multisets_equal) return {true, r};
    std::vector<int> prev = engine.colors;
    engine.refine_round();
    round = engine.snapshot(&prev);
    ++r;
    if (!round.multisets_equal) return {true, r};
    if (!round.g_partition_changed) return {false, r};  // r = Stab_k(G)
    if (r > static_cast<int>(engine.tg + engine.th) + 2)
      throw std::logic_error("verdict failed to reach stabilization");
  }
}

bool diag_compare(const Graph& g, const Graph& h, int k, WlVersion version,
                  int r) {
  if (r < 0) throw std::invalid_argument("round must be >= 0");
  Coloring c = wl_refine(g, &h, k, version, r);
  size_t use = std::min<size_t>(r, c.rounds.size() - 1);
  return c.rounds[use].diag_equal;
}

int stab_index(const Graph& g, int k, WlVersion version) {
  Coloring c = wl_refine(g, nullptr, k, version);
  return c.stab_g;
}

GameValue discrete_rounds(const Graph& g) {
  Coloring c = wl_refine(g, nullptr, 1, WlVersion::standard);
  for (size_t r = 0; r < c.rounds.size(); ++r)
    if (c.rounds[r].classes == g.order())
      return GameValue::of(static_cast<int>(r));
  return GameValue::inf();
}

}  // namespace fograph

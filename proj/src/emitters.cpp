#include "fograph/emitters.hpp"

#include <map>
#include <stdexcept>

#include "fograph/errors.hpp"

namespace fograph {

namespace {

std::vector<int> var_pool(FormulaStore& store, const std::string& stem,
                          int count) {
  std::vector<int> out;
  for (int i = 1; i <= count; ++i)
    out.push_back(store.var(stem + std::to_string(i)));
  return out;
}

// A variable name not occurring in f.
int fresh_var(FormulaStore& store, FormulaRef f, const std::string& stem) {
  std::string name = stem;
  for (;;) {
    int id = store.var(name);
    bool used = std::binary_search(f->vars.begin(), f->vars.end(), id);
    if (!used) return id;
    name += "_";
  }
}

FormulaRef distinct_clause(FormulaStore& store, const std::vector<int>& xs) {
  std::vector<FormulaRef> items;
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      items.push_back(store.negate(store.equal(xs[i], xs[j])));
  if (items.empty()) return store.equal(xs.at(0), xs.at(0));
  return store.conj(std::move(items));
}

}  // namespace

FormulaRef generic_defining(FormulaStore& store, const Graph& g) {
  int n = g.order();
  if (n > 16)
    throw ResourceError("generic defining sentence is limited to n <= 16");
  auto x = var_pool(store, "x", n + 1);
  std::vector<int> first(x.begin(), x.begin() + n);

  std::vector<FormulaRef> adj_items;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      adj_items.push_back(g.adjacent(i, j)
                              ? store.adj(x[i], x[j])
                              : store.negate(store.adj(x[i], x[j])));
  FormulaRef adj_part = adj_items.empty() ? store.equal(x[0], x[0])
                                          : store.conj(std::move(adj_items));

  FormulaRef body = store.conj({distinct_clause(store, first), adj_part});
  for (int i = n - 1; i >= 0; --i) body = store.exists(x[i], body);

  FormulaRef cap = store.negate(distinct_clause(store, x));
  for (int i = n; i >= 0; --i) cap = store.forall(x[i], cap);

  return store.conj({body, cap});
}

namespace {

FormulaRef delta_one(FormulaStore& store, int a, int b) {
  return store.disj({store.adj(a, b), store.equal(a, b)});
}

FormulaRef delta_naive(FormulaStore& store, int n, int a, int b) {
  if (n == 0) return store.equal(a, b);
  if (n == 1) return delta_one(store, a, b);
  auto z = var_pool(store, "z", n - 1);
  std::vector<FormulaRef> chain;
  chain.push_back(delta_one(store, a, z[0]));
  for (int i = 0; i + 1 < n - 1; ++i)
    chain.push_back(delta_one(store, z[i], z[i + 1]));
  chain.push_back(delta_one(store, z[n - 2], b));
  FormulaRef body = store.conj(std::move(chain));
  for (int i = n - 2; i >= 0; --i) body = store.exists(z[i], body);
  return body;
}

FormulaRef delta_halving(FormulaStore& store, int n, int a, int b,
                         int level) {
  if (n == 0) return store.equal(a, b);
  if (n == 1) return delta_one(store, a, b);
  int z = store.var("z" + std::to_string(level + 1));
  return store.exists(
      z, store.conj({delta_halving(store, n / 2, a, z, level + 1),
                     delta_halving(store, (n + 1) / 2, z, b, level + 1)}));
}

FormulaRef delta_three(FormulaStore& store, int n, int a, int b, int third) {
  if (n == 0) return store.equal(a, b);
  if (n == 1) return delta_one(store, a, b);
  // Recycle the third variable as the midpoint; the endpoint it replaces is
  // re-quantified (shadowed) one level down.
  return store.exists(
      third, store.conj({delta_three(store, n / 2, a, third, b),
                         delta_three(store, (n + 1) / 2, third, b, a)}));
}

}  // namespace

FormulaRef delta(FormulaStore& store, int n, DeltaStyle style) {
  if (n < 0) throw std::invalid_argument("distance bound must be >= 0");
  int x = store.var("x"), y = store.var("y");
  switch (style) {
    case DeltaStyle::naive:
      return delta_naive(store, n, x, y);
    case DeltaStyle::halving:
      return delta_halving(store, n, x, y, 0);
    case DeltaStyle::three_var:
      return delta_three(store, n, x, y, store.var("z"));
  }
  throw std::logic_error("unreachable");
}

FormulaRef path_sentence(FormulaStore& store, int n, DeltaStyle style) {
  if (n < 2) throw std::invalid_argument("path sentence requires n >= 2");
  int x = store.var("x"), y = store.var("y");
  auto closed = [&](FormulaRef f) {
    return store.forall(x, store.forall(y, f));
  };
  FormulaRef diam_at_most = closed(delta(store, n - 1, style));
  FormulaRef diam_at_least = store.negate(closed(delta(store, n - 2, style)));

  auto yv = var_pool(store, "y", 3);
  std::vector<FormulaRef> three;
  for (int i = 0; i < 3; ++i) three.push_back(store.adj(x, yv[i]));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      three.push_back(store.negate(store.equal(yv[i], yv[j])));
  FormulaRef deg_le_2 = store.forall(
      x, store.negate(store.exists(
             yv[0], store.exists(yv[1], store.exists(yv[2],
                                                     store.conj(three))))));

  FormulaRef two = store.conj({store.adj(x, yv[0]), store.adj(x, yv[1]),
                               store.negate(store.equal(yv[0], yv[1]))});
  FormulaRef deg_le_1_somewhere = store.exists(
      x, store.negate(store.exists(yv[0], store.exists(yv[1], two))));

  return store.conj({diam_at_most, diam_at_least, deg_le_2,
                     deg_le_1_somewhere});
}

FormulaRef hintikka(FormulaStore& store, const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("hintikka requires k >= 1");
  if (g.order() > 6 || k > 4)
    throw ResourceError("hintikka emission is limited to v(G) <= 6, k <= 4");
  auto x = var_pool(store, "x", k);
  int n = g.order();

  // Class formula for the s-tuple uutf, free in x1..xs, of depth k-s;
  // memoized per tuple so structurally equal classes collapse via the
  // hash-consed store.
  std::map<std::vector<int>, FormulaRef> memo;
  auto rec = [&](auto&& self, const std::vector<int>& tuple) -> FormulaRef {
    auto it = memo.find(tuple);
    if (it != memo.end()) return it->second;
    int s = static_cast<int>(tuple.size());
    FormulaRef result;
    if (s == k) {
      std::vector<FormulaRef> items;
      for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
          items.push_back(tuple[i] == tuple[j]
                              ? store.equal(x[i], x[j])
                              : store.negate(store.equal(x[i], x[j])));
          items.push_back(g.adjacent(tuple[i], tuple[j])
                              ? store.adj(x[i], x[j])
                              : store.negate(store.adj(x[i], x[j])));
        }
      result = items.empty() ? store.equal(x[0], x[0])
                             : store.conj(std::move(items));
    } else {
      std::vector<FormulaRef> classes;
      for (int a = 0; a < n; ++a) {
        auto extended = tuple;
        extended.push_back(a);
        FormulaRef f = self(self, extended);
        if (std::find(classes.begin(), classes.end(), f) == classes.end())
          classes.push_back(f);
      }
      std::vector<FormulaRef> parts;
      for (FormulaRef f : classes) parts.push_back(store.exists(x[s], f));
      parts.push_back(store.forall(x[s], store.disj(classes)));
      result = store.conj(std::move(parts));
    }
    memo.emplace(tuple, result);
    return result;
  };
  return rec(rec, {});
}

FormulaRef extension_sentence(FormulaStore& store, int k) {
  if (k < 2) throw std::invalid_argument("extension sentence requires k >= 2");
  auto v = var_pool(store, "v", k - 1);
  int z = store.var("z");

  std::vector<FormulaRef> conjuncts;
  conjuncts.push_back(store.exists(z, store.equal(z, z)));
  for (int j = 1; j <= k - 1; ++j) {
    for (int i = 0; i <= j; ++i) {
      // First i variables form X, the rest form Y.
      std::vector<FormulaRef> wanted;
      for (int t = 0; t < i; ++t) wanted.push_back(store.adj(z, v[t]));
      for (int t = i; t < j; ++t) {
        wanted.push_back(store.negate(store.adj(z, v[t])));
        wanted.push_back(store.negate(store.equal(z, v[t])));
      }
      FormulaRef body = store.exists(z, store.conj(std::move(wanted)));
      // Guard: X and Y must be disjoint; coincidences inside one side are
      // harmless.
      std::vector<FormulaRef> items;
      for (int a = 0; a < i; ++a)
        for (int b = i; b < j; ++b) items.push_back(store.equal(v[a], v[b]));
      items.push_back(body);
      FormulaRef guarded = items.size() == 1 ? body : store.disj(items);
      for (int t = j - 1; t >= 0; --t) guarded = store.forall(v[t], guarded);
      conjuncts.push_back(guarded);
    }
  }
  return store.conj(std::move(conjuncts));
}

FormulaRef padding_sentence(FormulaStore& store, FormulaRef phi) {
  if (!phi->free_vars.empty())
    throw std::invalid_argument("padding requires a sentence");
  int c = fresh_var(store, phi, "c");
  int a = fresh_var(store, phi, "a");
  int b = fresh_var(store, phi, "b");
  int y = fresh_var(store, phi, "y");
  int z = fresh_var(store, phi, "z");

  // For all vertices outside N(c) ...
  auto outside = [&](int var, FormulaRef body) {
    return store.forall(var, store.disj({store.adj(var, c), body}));
  };

  // Neighborhoods of non-neighbors of c stay inside N(c).
  FormulaRef n_in_c = store.forall(
      z, store.disj({store.negate(store.adj(z, a)), store.adj(z, c)}));
  FormulaRef contained = outside(a, n_in_c);

  // Distinct non-neighbors of c have distinct neighborhoods.
  FormulaRef a_not_b = store.conj({store.adj(z, a),
                                   store.negate(store.adj(z, b))});
  FormulaRef b_not_a = store.conj({store.adj(z, b),
                                   store.negate(store.adj(z, a))});
  FormulaRef separated = store.exists(z, store.disj({a_not_b, b_not_a}));
  FormulaRef injective =
      outside(a, outside(b, store.disj({store.equal(a, b), separated})));

  // Every neighborhood is closed under removing one element: N(b) equals
  // N(a) minus {y} for some non-neighbor b of c.
  FormulaRef b_subset = store.disj(
      {store.negate(store.adj(z, b)),
       store.conj({store.adj(z, a), store.negate(store.equal(z, y))})});
  FormulaRef b_superset = store.disj(
      {store.negate(store.adj(z, a)), store.equal(z, y), store.adj(z, b)});
  FormulaRef witness = store.exists(
      b, store.conj({store.negate(store.adj(b, c)),
                     store.forall(z, store.conj({b_subset, b_superset}))}));
  FormulaRef closed = outside(
      a, store.forall(y, store.disj({store.negate(store.adj(y, a)),
                                     witness})));

  FormulaRef inner =
      store.conj({store.relativize(phi, c), contained, injective, closed});
  return store.exists(c, inner);
}

}  // namespace fograph

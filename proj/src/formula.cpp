#include "fograph/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace fograph {

namespace {

size_t hash_combine(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

std::vector<int> sorted_union(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<int> without(const std::vector<int>& a, int v) {
  std::vector<int> out;
  for (int x : a)
    if (x != v) out.push_back(x);
  return out;
}

}  // namespace

bool FormulaStore::KeyEq::operator()(const FormulaNode* a,
                                     const FormulaNode* b) const {
  return a->kind == b->kind && a->var_a == b->var_a && a->var_b == b->var_b &&
         a->quant_var == b->quant_var && a->count_m == b->count_m &&
         a->children == b->children;
}

int FormulaStore::var(const std::string& name) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = var_ids_.find(name);
  if (it != var_ids_.end()) return it->second;
  int id = static_cast<int>(var_names_.size());
  var_names_.push_back(name);
  var_ids_.emplace(name, id);
  return id;
}

FormulaRef FormulaStore::intern(FormulaNode node) {
  size_t h = static_cast<size_t>(node.kind);
  h = hash_combine(h, static_cast<size_t>(node.var_a + 1));
  h = hash_combine(h, static_cast<size_t>(node.var_b + 1));
  h = hash_combine(h, static_cast<size_t>(node.quant_var + 1));
  h = hash_combine(h, static_cast<size_t>(node.count_m));
  for (auto c : node.children)
    h = hash_combine(h, reinterpret_cast<size_t>(c));
  node.hash = h;

  std::lock_guard<std::mutex> lock(mutex_);
  auto it = table_.find(&node);
  if (it != table_.end()) return it->second;

  switch (node.kind) {
    case FormulaKind::Equal:
    case FormulaKind::Adj: {
      node.length = 3;
      node.depth = 0;
      node.vars = {node.var_a, node.var_b};
      std::sort(node.vars.begin(), node.vars.end());
      node.vars.erase(std::unique(node.vars.begin(), node.vars.end()),
                      node.vars.end());
      node.free_vars = node.vars;
      break;
    }
    case FormulaKind::Not: {
      auto c = node.children[0];
      node.length = 1 + c->length;
      node.depth = c->depth;
      node.vars = c->vars;
      node.free_vars = c->free_vars;
      node.has_counting = c->has_counting;
      break;
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
      node.length = static_cast<long>(node.children.size()) - 1;
      for (auto c : node.children) {
        node.length += c->length;
        node.depth = std::max(node.depth, c->depth);
        node.vars = sorted_union(node.vars, c->vars);
        node.free_vars = sorted_union(node.free_vars, c->free_vars);
        node.has_counting = node.has_counting || c->has_counting;
      }
      break;
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall:
    case FormulaKind::CountExists: {
      auto c = node.children[0];
      node.length = 2 + c->length;
      node.depth = 1 + c->depth;
      node.vars = sorted_union(c->vars, {node.quant_var});
      node.free_vars = without(c->free_vars, node.quant_var);
      node.has_counting =
          c->has_counting || node.kind == FormulaKind::CountExists;
      break;
    }
  }

  nodes_.push_back(std::move(node));
  FormulaRef ref = &nodes_.back();
  table_.emplace(ref, ref);
  return ref;
}

FormulaRef FormulaStore::equal(int x, int y) {
  FormulaNode n;
  n.kind = FormulaKind::Equal;
  n.var_a = x;
  n.var_b = y;
  return intern(std::move(n));
}

FormulaRef FormulaStore::adj(int x, int y) {
  FormulaNode n;
  n.kind = FormulaKind::Adj;
  n.var_a = x;
  n.var_b = y;
  return intern(std::move(n));
}

FormulaRef FormulaStore::negate(FormulaRef f) {
  FormulaNode n;
  n.kind = FormulaKind::Not;
  n.children = {f};
  return intern(std::move(n));
}

FormulaRef FormulaStore::conj(std::vector<FormulaRef> items) {
  if (items.empty()) throw std::invalid_argument("empty conjunction");
  if (items.size() == 1) return items[0];
  FormulaNode n;
  n.kind = FormulaKind::And;
  n.children = std::move(items);
  return intern(std::move(n));
}

FormulaRef FormulaStore::disj(std::vector<FormulaRef> items) {
  if (items.empty()) throw std::invalid_argument("empty disjunction");
  if (items.size() == 1) return items[0];
  FormulaNode n;
  n.kind = FormulaKind::Or;
  n.children = std::move(items);
  return intern(std::move(n));
}

FormulaRef FormulaStore::exists(int v, FormulaRef body) {
  FormulaNode n;
  n.kind = FormulaKind::Exists;
  n.quant_var = v;
  n.children = {body};
  return intern(std::move(n));
}

FormulaRef FormulaStore::forall(int v, FormulaRef body) {
  FormulaNode n;
  n.kind = FormulaKind::Forall;
  n.quant_var = v;
  n.children = {body};
  return intern(std::move(n));
}

FormulaRef FormulaStore::count_exists(int m, int v, FormulaRef body) {
  if (m < 1) throw std::invalid_argument("counting threshold must be >= 1");
  FormulaNode n;
  n.kind = FormulaKind::CountExists;
  n.quant_var = v;
  n.count_m = m;
  n.children = {body};
  return intern(std::move(n));
}

FormulaRef FormulaStore::nnf(FormulaRef f) { return nnf_impl(f, false); }

FormulaRef FormulaStore::nnf_impl(FormulaRef f, bool negated) {
  switch (f->kind) {
    case FormulaKind::Equal:
    case FormulaKind::Adj: {
      FormulaRef atom = f;
      return negated ? negate(atom) : atom;
    }
    case FormulaKind::Not:
      return nnf_impl(f->children[0], !negated);
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<FormulaRef> items;
      items.reserve(f->children.size());
      for (auto c : f->children) items.push_back(nnf_impl(c, negated));
      bool make_and = (f->kind == FormulaKind::And) != negated;
      return make_and ? conj(std::move(items)) : disj(std::move(items));
    }
    case FormulaKind::Exists:
      return negated ? forall(f->quant_var, nnf_impl(f->children[0], true))
                     : exists(f->quant_var, nnf_impl(f->children[0], false));
    case FormulaKind::Forall:
      return negated ? exists(f->quant_var, nnf_impl(f->children[0], true))
                     : forall(f->quant_var, nnf_impl(f->children[0], false));
    case FormulaKind::CountExists: {
      // A counting quantifier has no dual node; a negated one keeps its
      // negation in front, with the body normalized positively.
      FormulaRef body = count_exists(f->count_m, f->quant_var,
                                     nnf_impl(f->children[0], false));
      return negated ? negate(body) : body;
    }
  }
  throw std::logic_error("unreachable");
}

FormulaRef FormulaStore::dual(FormulaRef f) {
  switch (f->kind) {
    case FormulaKind::Equal:
      return f;
    case FormulaKind::Adj:
      return negate(f);
    case FormulaKind::Not: {
      FormulaRef c = f->children[0];
      if (c->kind == FormulaKind::Adj) return adj(c->var_a, c->var_b);
      return negate(dual(c));
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<FormulaRef> items;
      for (auto c : f->children) items.push_back(dual(c));
      return f->kind == FormulaKind::And ? conj(std::move(items))
                                         : disj(std::move(items));
    }
    case FormulaKind::Exists:
      return exists(f->quant_var, dual(f->children[0]));
    case FormulaKind::Forall:
      return forall(f->quant_var, dual(f->children[0]));
    case FormulaKind::CountExists:
      return count_exists(f->count_m, f->quant_var, dual(f->children[0]));
  }
  throw std::logic_error("unreachable");
}

FormulaRef FormulaStore::relativize(FormulaRef f, int guard_var) {
  switch (f->kind) {
    case FormulaKind::Equal:
    case FormulaKind::Adj:
      return f;
    case FormulaKind::Not:
      return negate(relativize(f->children[0], guard_var));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<FormulaRef> items;
      for (auto c : f->children) items.push_back(relativize(c, guard_var));
      return f->kind == FormulaKind::And ? conj(std::move(items))
                                         : disj(std::move(items));
    }
    case FormulaKind::Exists:
    case FormulaKind::CountExists: {
      if (f->quant_var == guard_var)
        throw std::invalid_argument(
            "relativization guard collides with a bound variable");
      FormulaRef body =
          conj({adj(f->quant_var, guard_var),
                relativize(f->children[0], guard_var)});
      return f->kind == FormulaKind::Exists
                 ? exists(f->quant_var, body)
                 : count_exists(f->count_m, f->quant_var, body);
    }
    case FormulaKind::Forall: {
      if (f->quant_var == guard_var)
        throw std::invalid_argument(
            "relativization guard collides with a bound variable");
      return forall(f->quant_var,
                    disj({negate(adj(f->quant_var, guard_var)),
                          relativize(f->children[0], guard_var)}));
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

bool is_quantifier(FormulaRef f) {
  return f->kind == FormulaKind::Exists || f->kind == FormulaKind::Forall ||
         f->kind == FormulaKind::CountExists;
}

bool quantifier_free(FormulaRef f) {
  if (is_quantifier(f)) return false;
  for (auto c : f->children)
    if (!quantifier_free(c)) return false;
  return true;
}

bool in_nnf(FormulaRef f) {
  if (f->kind == FormulaKind::Not) {
    FormulaRef c = f->children[0];
    return c->kind == FormulaKind::Equal || c->kind == FormulaKind::Adj;
  }
  for (auto c : f->children)
    if (!in_nnf(c)) return false;
  return true;
}

// Max number of adjacent AE/EA pairs along quantifier chains; valid on
// negation normal form only. Returns -1 when a negation still stands on a
// non-atom (possible with counting quantifiers).
int alternation_walk(FormulaRef f, int last_kind, int flips) {
  switch (f->kind) {
    case FormulaKind::Equal:
    case FormulaKind::Adj:
      return flips;
    case FormulaKind::Not: {
      FormulaRef c = f->children[0];
      if (c->kind == FormulaKind::Equal || c->kind == FormulaKind::Adj)
        return flips;
      return -1;
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
      int best = flips;
      for (auto c : f->children) {
        int r = alternation_walk(c, last_kind, flips);
        if (r < 0) return -1;
        best = std::max(best, r);
      }
      return best;
    }
    case FormulaKind::Exists:
    case FormulaKind::CountExists:
    case FormulaKind::Forall: {
      int kind = f->kind == FormulaKind::Forall ? 1 : 0;
      int next = flips + (last_kind >= 0 && last_kind != kind ? 1 : 0);
      return alternation_walk(f->children[0], kind, next);
    }
  }
  return -1;
}

}  // namespace

FormulaMetrics measure(FormulaRef f) {
  FormulaMetrics m;
  m.length = f->length;
  m.depth = f->depth;
  m.width = static_cast<int>(f->vars.size());

  if (in_nnf(f)) {
    int a = alternation_walk(f, -1, 0);
    if (a >= 0) m.alternation = a;
  }

  // Prenex / Bernays-Schoenfinkel recognition.
  FormulaRef cur = f;
  std::vector<int> prefix;  // 0 = existential block symbol, 1 = universal
  bool counting_in_prefix = false;
  while (is_quantifier(cur)) {
    prefix.push_back(cur->kind == FormulaKind::Forall ? 1 : 0);
    counting_in_prefix |= cur->kind == FormulaKind::CountExists;
    cur = cur->children[0];
  }
  m.prenex = quantifier_free(cur);
  if (m.prenex && !counting_in_prefix && !cur->has_counting) {
    bool seen_universal = false;
    bool bs = true;
    int k = 0, l = 0;
    for (int q : prefix) {
      if (q == 1) {
        seen_universal = true;
        ++l;
      } else {
        if (seen_universal) bs = false;
        ++k;
      }
    }
    m.bernays_schonfinkel = bs;
    if (bs) {
      m.bs_existentials = k;
      m.bs_universals = l;
    }
  }
  return m;
}

std::optional<int> alternation_number(FormulaStore& store, FormulaRef f) {
  int a = alternation_walk(store.nnf(f), -1, 0);
  if (a < 0) return std::nullopt;
  return a;
}

void check_well_formed(FormulaRef f, int var_count) {
  switch (f->kind) {
    case FormulaKind::Equal:
    case FormulaKind::Adj:
      if (f->var_a < 0 || f->var_b < 0 || f->var_a >= var_count ||
          f->var_b >= var_count)
        throw std::invalid_argument("atom variable out of range");
      return;
    case FormulaKind::Not:
      check_well_formed(f->children[0], var_count);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      if (f->children.size() < 2)
        throw std::invalid_argument("connective arity below 2");
      for (auto c : f->children) check_well_formed(c, var_count);
      return;
    case FormulaKind::CountExists:
      if (f->count_m < 1)
        throw std::invalid_argument("counting threshold must be >= 1");
      [[fallthrough]];
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      if (f->quant_var < 0 || f->quant_var >= var_count)
        throw std::invalid_argument("quantifier variable out of range");
      check_well_formed(f->children[0], var_count);
      return;
  }
}

}  // namespace fograph

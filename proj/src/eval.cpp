#include "fograph/eval.hpp"

#include <stdexcept>

namespace fograph {

bool Evaluator::evaluate(FormulaRef f,
                         const std::vector<std::pair<int, int>>& assignment) {
  int max_var = -1;
  if (!f->vars.empty()) max_var = f->vars.back();
  for (auto [v, u] : assignment) max_var = std::max(max_var, v);
  std::vector<int> env(max_var + 1, -1);
  for (auto [v, u] : assignment) {
    if (u < 0 || u >= g_.order())
      throw std::invalid_argument("assignment maps to a non-vertex");
    env[v] = u;
  }
  for (int v : f->free_vars)
    if (env[v] < 0)
      throw std::invalid_argument("unbound free variable in evaluation");
  return eval(f, env);
}

bool Evaluator::eval(FormulaRef f, std::vector<int>& env) {
  switch (f->kind) {
    case FormulaKind::Equal:
      return env[f->var_a] == env[f->var_b];
    case FormulaKind::Adj:
      return g_.adjacent(env[f->var_a], env[f->var_b]);
    case FormulaKind::Not:
      return !eval(f->children[0], env);
    default:
      break;
  }

  // Memoize compound nodes on the values of their free variables (packed
  // 64-bit key: 22-bit node id plus up to three 14-bit vertex slots; wider
  // nodes are evaluated directly).
  uint64_t key = 0;
  bool use_memo = f->free_vars.size() <= 3 && g_.order() < (1 << 14) - 1;
  if (use_memo) {
    auto [it, inserted] =
        node_ids_.emplace(f, static_cast<uint32_t>(node_ids_.size()));
    use_memo = it->second < (1u << 22);
  }
  if (use_memo) {
    key = static_cast<uint64_t>(node_ids_[f]) << 42;
    int slot = 0;
    for (int v : f->free_vars)
      key |= static_cast<uint64_t>(env[v] + 1) << (14 * slot++);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
  }

  bool result = false;
  switch (f->kind) {
    case FormulaKind::And: {
      result = true;
      for (auto c : f->children)
        if (!eval(c, env)) {
          result = false;
          break;
        }
      break;
    }
    case FormulaKind::Or: {
      result = false;
      for (auto c : f->children)
        if (eval(c, env)) {
          result = true;
          break;
        }
      break;
    }
    case FormulaKind::Exists: {
      int saved = env[f->quant_var];
      for (int u = 0; u < g_.order(); ++u) {
        env[f->quant_var] = u;
        if (eval(f->children[0], env)) {
          result = true;
          break;
        }
      }
      env[f->quant_var] = saved;
      break;
    }
    case FormulaKind::Forall: {
      int saved = env[f->quant_var];
      result = true;
      for (int u = 0; u < g_.order(); ++u) {
        env[f->quant_var] = u;
        if (!eval(f->children[0], env)) {
          result = false;
          break;
        }
      }
      env[f->quant_var] = saved;
      break;
    }
    case FormulaKind::CountExists: {
      // Exhaustive count, no early exit beyond m, in vertex index order.
      int saved = env[f->quant_var];
      int count = 0;
      for (int u = 0; u < g_.order(); ++u) {
        env[f->quant_var] = u;
        if (eval(f->children[0], env)) ++count;
      }
      env[f->quant_var] = saved;
      result = count >= f->count_m;
      break;
    }
    default:
      throw std::logic_error("unreachable");
  }

  if (use_memo) memo_.emplace(key, result);
  return result;
}

bool evaluate(const Graph& g, FormulaRef f,
              const std::vector<std::pair<int, int>>& assignment) {
  Evaluator ev(g);
  return ev.evaluate(f, assignment);
}

}  // namespace fograph

#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "fograph/formula.hpp"
#include "fograph/graph.hpp"

namespace fograph {

// Tarskian model checker with per-(node, free-variable-values) memoization,
// which keeps hash-consed formula DAGs (notably the class-describing
// sentences) polynomial to evaluate. One evaluator is bound to one graph.
class Evaluator {
 public:
  explicit Evaluator(const Graph& g) : g_(g) {}

  // assignment maps variable ids to vertices; it must cover the free
  // variables of f.
  bool evaluate(FormulaRef f,
                const std::vector<std::pair<int, int>>& assignment = {});

 private:
  bool eval(FormulaRef f, std::vector<int>& env);

  const Graph& g_;
  std::unordered_map<uint64_t, bool> memo_;
  std::unordered_map<FormulaRef, uint32_t> node_ids_;
};

bool evaluate(const Graph& g, FormulaRef f,
              const std::vector<std::pair<int, int>>& assignment = {});

}  // namespace fograph

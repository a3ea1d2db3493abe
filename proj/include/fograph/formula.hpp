#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fograph {

enum class FormulaKind : uint8_t {
  Equal,
  Adj,
  Not,
  And,
  Or,
  Exists,
  Forall,
  CountExists
};

struct FormulaNode;
using FormulaRef = const FormulaNode*;

struct FormulaNode {
  FormulaKind kind;
  int var_a = -1;  // atoms
  int var_b = -1;
  int quant_var = -1;
  int count_m = 0;  // CountExists threshold, >= 1
  std::vector<FormulaRef> children;

  // Metrics, memoized at construction. Each variable occurrence counts 1
  // toward the length; a counting quantifier adds exactly 1 to the depth.
  long length = 0;
  int depth = 0;
  std::vector<int> vars;       // sorted distinct variable ids occurring
  std::vector<int> free_vars;  // sorted distinct free variable ids
  bool has_counting = false;
  size_t hash = 0;
};

struct FormulaMetrics {
  long length = 0;  // L
  int depth = 0;    // D
  int width = 0;    // W, distinct variable names
  std::optional<int> alternation;  // computed on negation normal form
  bool prenex = false;
  bool bernays_schonfinkel = false;
  int bs_existentials = 0;
  int bs_universals = 0;
};

// Hash-consed formula arena. Structurally equal formulas built through one
// store share the same node, so pointer equality is structural equality.
// Inserts are serialized; lookups of existing nodes take the same lock
// (uncontended in practice).
class FormulaStore {
 public:
  FormulaStore() = default;
  FormulaStore(const FormulaStore&) = delete;
  FormulaStore& operator=(const FormulaStore&) = delete;

  int var(const std::string& name);
  const std::string& var_name(int id) const { return var_names_[id]; }
  int var_count() const { return static_cast<int>(var_names_.size()); }

  FormulaRef equal(int x, int y);
  FormulaRef adj(int x, int y);
  FormulaRef negate(FormulaRef f);
  // Singleton conjunctions/disjunctions collapse to the element itself.
  FormulaRef conj(std::vector<FormulaRef> items);
  FormulaRef disj(std::vector<FormulaRef> items);
  FormulaRef exists(int v, FormulaRef body);
  FormulaRef forall(int v, FormulaRef body);
  FormulaRef count_exists(int m, int v, FormulaRef body);

  FormulaRef nnf(FormulaRef f);
  // Swaps the polarity of adjacency atoms (complement dual).
  FormulaRef dual(FormulaRef f);
  // Guards every quantifier in f by adjacency to guard_var. Throws if
  // guard_var is bound anywhere in f.
  FormulaRef relativize(FormulaRef f, int guard_var);

 private:
  FormulaRef intern(FormulaNode node);
  FormulaRef nnf_impl(FormulaRef f, bool negated);

  struct KeyHash {
    size_t operator()(const FormulaNode* n) const { return n->hash; }
  };
  struct KeyEq {
    bool operator()(const FormulaNode* a, const FormulaNode* b) const;
  };

  std::mutex mutex_;
  std::deque<FormulaNode> nodes_;
  std::unordered_map<const FormulaNode*, FormulaRef, KeyHash, KeyEq> table_;
  std::vector<std::string> var_names_;
  std::unordered_map<std::string, int> var_ids_;
};

// Alternation is reported only when f is already in negation normal form.
FormulaMetrics measure(FormulaRef f);

// Normalizes to NNF first, then counts adjacent AE/EA pairs. Absent when a
// negated counting quantifier survives normalization.
std::optional<int> alternation_number(FormulaStore& store, FormulaRef f);

// Structural validity: arities, counting thresholds, variable ids. Variable
// shadowing is legal (three-variable formulas depend on recycling).
void check_well_formed(FormulaRef f, int var_count);

// Concrete syntax: A<v>. / E<v>. / E^<m> <v>. quantifiers, infix ~ and =,
// connectives & | !, parentheses; whitespace insignificant.
FormulaRef parse_formula(FormulaStore& store, const std::string& text);
std::string print_formula(const FormulaStore& store, FormulaRef f);

}  // namespace fograph

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "fograph/formula.hpp"

namespace fograph {

namespace {

struct Parser {
  FormulaStore& store;
  const std::string& text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::string variable() {
    skip_ws();
    if (pos >= text.size() || !std::islower(static_cast<unsigned char>(text[pos])))
      fail("expected a variable (lowercase identifier)");
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_' || text[pos] == '\''))
      ++pos;
    return text.substr(start, pos - start);
  }

  int integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected an integer");
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) fail("counting threshold too large");
      ++pos;
    }
    return value;
  }

  FormulaRef formula() {
    char c = peek();
    if (c == 'A') {
      ++pos;
      std::string v = variable();
      if (!eat('.')) fail("expected '.' after quantified variable");
      return store.forall(store.var(v), formula());
    }
    if (c == 'E') {
      ++pos;
      if (eat('^')) {
        int m = integer();
        if (m < 1) fail("counting threshold must be >= 1");
        std::string v = variable();
        if (!eat('.')) fail("expected '.' after quantified variable");
        return store.count_exists(m, store.var(v), formula());
      }
      std::string v = variable();
      if (!eat('.')) fail("expected '.' after quantified variable");
      return store.exists(store.var(v), formula());
    }
    return disjunction();
  }

  FormulaRef disjunction() {
    std::vector<FormulaRef> items{conjunction()};
    while (eat('|')) items.push_back(conjunction());
    return items.size() == 1 ? items[0] : store.disj(std::move(items));
  }

  FormulaRef conjunction() {
    std::vector<FormulaRef> items{unary()};
    while (eat('&')) items.push_back(unary());
    return items.size() == 1 ? items[0] : store.conj(std::move(items));
  }

  FormulaRef unary() {
    if (eat('!')) return store.negate(unary());
    if (eat('(')) {
      FormulaRef f = formula();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    char c = peek();
    if (c == 'A' || c == 'E') return formula();
    return atom();
  }

  FormulaRef atom() {
    std::string a = variable();
    skip_ws();
    if (pos >= text.size()) fail("expected '~' or '=' after variable");
    char op = text[pos++];
    if (op != '~' && op != '=') fail("expected '~' or '='");
    std::string b = variable();
    int x = store.var(a), y = store.var(b);
    return op == '~' ? store.adj(x, y) : store.equal(x, y);
  }
};

void print_rec(const FormulaStore& store, FormulaRef f, std::ostream& out) {
  switch (f->kind) {
    case FormulaKind::Equal:
      out << store.var_name(f->var_a) << "=" << store.var_name(f->var_b);
      return;
    case FormulaKind::Adj:
      out << store.var_name(f->var_a) << "~" << store.var_name(f->var_b);
      return;
    case FormulaKind::Not:
      out << "!";
      if (f->children[0]->kind == FormulaKind::Equal ||
          f->children[0]->kind == FormulaKind::Adj) {
        print_rec(store, f->children[0], out);
      } else {
        out << "(";
        print_rec(store, f->children[0], out);
        out << ")";
      }
      return;
    case FormulaKind::And:
    case FormulaKind::Or: {
      const char* op = f->kind == FormulaKind::And ? " & " : " | ";
      out << "(";
      for (size_t i = 0; i < f->children.size(); ++i) {
        if (i > 0) out << op;
        FormulaRef c = f->children[i];
        bool needs_parens = c->kind == FormulaKind::And ||
                            c->kind == FormulaKind::Or ||
                            c->kind == FormulaKind::Exists ||
                            c->kind == FormulaKind::Forall ||
                            c->kind == FormulaKind::CountExists;
        if (needs_parens) out << "(";
        print_rec(store, c, out);
        if (needs_parens) out << ")";
      }
      out << ")";
      return;
    }
    case FormulaKind::Exists:
      out << "E" << store.var_name(f->quant_var) << ".(";
      print_rec(store, f->children[0], out);
      out << ")";
      return;
    case FormulaKind::Forall:
      out << "A" << store.var_name(f->quant_var) << ".(";
      print_rec(store, f->children[0], out);
      out << ")";
      return;
    case FormulaKind::CountExists:
      out << "E^" << f->count_m << " " << store.var_name(f->quant_var)
          << ".(";
      print_rec(store, f->children[0], out);
      out << ")";
      return;
  }
}

}  // namespace

FormulaRef parse_formula(FormulaStore& store, const std::string& text) {
  Parser p{store, text};
  FormulaRef f = p.formula();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  check_well_formed(f, store.var_count());
  return f;
}

std::string print_formula(const FormulaStore& store, FormulaRef f) {
  std::ostringstream out;
  print_rec(store, f, out);
  return out.str();
}

}  // namespace fograph

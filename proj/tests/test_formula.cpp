#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fograph/emitters.hpp"
#include "fograph/formula.hpp"
#include "test_util.hpp"

using namespace fograph;
using fograph::testutil::random_formula;

TEST_CASE("parsing the spec grammar") {
  FormulaStore st;
  FormulaRef f = parse_formula(st, "Ax.Ay.(x=y)");
  CHECK(f->kind == FormulaKind::Forall);
  CHECK(f->children[0]->kind == FormulaKind::Forall);
  CHECK(measure(f).depth == 2);

  FormulaRef c = parse_formula(st, "E^3 x.(x=x)");
  CHECK(c->kind == FormulaKind::CountExists);
  CHECK(c->count_m == 3);
  CHECK(c->children[0]->kind == FormulaKind::Equal);

  // Whitespace is insignificant; counting threshold may hug the variable.
  CHECK(parse_formula(st, "E^3x.(x=x)") == c);
  CHECK(parse_formula(st, "  Ax . Ay . ( x = y ) ") == f);

  FormulaRef mix = parse_formula(st, "Ex.(x~y & !x=y | y~y)");
  CHECK(mix->kind == FormulaKind::Exists);
  CHECK(mix->children[0]->kind == FormulaKind::Or);
}

TEST_CASE("parse errors carry positions") {
  FormulaStore st;
  CHECK_THROWS_WITH_AS(parse_formula(st, "Ax(x=y)"),
                       doctest::Contains("position"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula(st, "x~"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula(st, "E^0 x.(x=x)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula(st, "(x=y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula(st, "x=y zzz"), std::invalid_argument);
}

TEST_CASE("print/parse round trip on 1000 random formulas") {
  FormulaStore st;
  SplitMix64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    FormulaRef f = random_formula(st, rng, 4, true);
    FormulaRef back = parse_formula(st, print_formula(st, f));
    CHECK(back == f);  // hash-consing makes pointer equality structural
  }
}

TEST_CASE("hash consing shares structure") {
  FormulaStore st;
  int x = st.var("x"), y = st.var("y");
  CHECK(st.adj(x, y) == st.adj(x, y));
  CHECK(st.conj({st.adj(x, y), st.equal(x, y)}) ==
        st.conj({st.adj(x, y), st.equal(x, y)}));
  CHECK(st.adj(x, y) != st.adj(y, x));
}

TEST_CASE("measure on spec formulas") {
  FormulaStore st;
  for (int n = 1; n <= 16; ++n) {
    FormulaMetrics naive = measure(delta(st, n, DeltaStyle::naive));
    CHECK(naive.depth == n - 1);
    CHECK(naive.width == n + 1);
    CHECK(naive.depth < naive.length);
    int lg = 0;
    while ((1 << lg) < n) ++lg;
    CHECK(measure(delta(st, n, DeltaStyle::halving)).depth == lg);
    FormulaMetrics three = measure(delta(st, n, DeltaStyle::three_var));
    CHECK(three.depth == lg);
    if (n >= 2) CHECK(three.width == 3);
  }
  // Path sentence with halving distances: D < log2(n) + 3.
  for (int n = 4; n <= 16; n += 4) {
    double depth = measure(path_sentence(st, n, DeltaStyle::halving)).depth;
    CHECK(depth < std::log2(n) + 3);
  }
  // Counting quantifier adds exactly 1 to depth regardless of m.
  int x = st.var("x");
  CHECK(measure(st.count_exists(7, x, st.equal(x, x))).depth == 1);
}

TEST_CASE("prenex and Bernays-Schoenfinkel flags") {
  FormulaStore st;
  FormulaRef bs = parse_formula(st, "Ex.Ey.Az.(x~y | z=x)");
  FormulaMetrics m = measure(bs);
  CHECK(m.prenex);
  CHECK(m.bernays_schonfinkel);
  CHECK(m.bs_existentials == 2);
  CHECK(m.bs_universals == 1);

  CHECK(!measure(parse_formula(st, "Ax.Ey.(x~y)")).bernays_schonfinkel);
  CHECK(!measure(parse_formula(st, "Ex.(x=x) & Ey.(y=y)")).prenex);
  CHECK(!measure(parse_formula(st, "E^2 x.Ay.(x~y)")).bernays_schonfinkel);
}

TEST_CASE("negation normal form") {
  FormulaStore st;
  int x = st.var("x"), y = st.var("y");
  FormulaRef f = st.negate(st.conj({st.adj(x, y), st.equal(x, y)}));
  FormulaRef n = st.nnf(f);
  CHECK(n == st.disj({st.negate(st.adj(x, y)), st.negate(st.equal(x, y))}));

  FormulaRef g = st.negate(st.exists(x, st.adj(x, y)));
  CHECK(st.nnf(g) == st.forall(x, st.negate(st.adj(x, y))));

  SplitMix64 rng(55);
  for (int i = 0; i < 1000; ++i) {
    FormulaRef r = random_formula(st, rng, 4, false);
    FormulaRef rn = st.nnf(r);
    CHECK(measure(rn).depth == measure(r).depth);
    CHECK(measure(rn).width == measure(r).width);
    CHECK(measure(rn).length <= 2 * measure(r).length);
    CHECK(measure(rn).alternation.has_value());
  }
}

TEST_CASE("alternation number") {
  FormulaStore st;
  // AE pattern: one alternation.
  FormulaRef ae = parse_formula(st, "Ax.Ey.(x~y)");
  CHECK(alternation_number(st, ae) == 1);
  CHECK(alternation_number(st, parse_formula(st, "Ax.Ay.(x=y)")) == 0);
  CHECK(alternation_number(st, parse_formula(st, "Ex.Ay.Ez.(x~z)")) == 2);
  // Reported absent unless in NNF; normalization flips the prefix.
  FormulaRef not_nnf = st.negate(ae);
  CHECK(!measure(not_nnf).alternation.has_value());
  CHECK(alternation_number(st, not_nnf) == 1);  // Ex.Ay.!x~y
}

TEST_CASE("relativization guards every quantifier") {
  FormulaStore st;
  int x = st.var("x"), c = st.var("c");
  FormulaRef f = st.forall(x, st.equal(x, x));
  FormulaRef r = st.relativize(f, c);
  CHECK(r == st.forall(x, st.disj({st.negate(st.adj(x, c)),
                                   st.equal(x, x)})));
  CHECK(measure(r).depth == measure(f).depth);

  SplitMix64 rng(7);
  for (int i = 0; i < 100; ++i) {
    FormulaRef g = random_formula(st, rng, 4, true);
    int guard = st.var("c9");
    FormulaRef rel = st.relativize(g, guard);
    CHECK(measure(rel).depth == measure(g).depth);
    CHECK(measure(rel).width <= measure(g).width + 1);
  }
  // Guard colliding with a bound variable is rejected.
  CHECK_THROWS_AS(st.relativize(st.exists(x, st.equal(x, x)), x),
                  std::invalid_argument);
}

TEST_CASE("well-formedness pass") {
  FormulaStore st;
  CHECK_THROWS_AS(st.count_exists(0, st.var("x"), st.equal(0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(st.conj({}), std::invalid_argument);
  FormulaRef ok = parse_formula(st, "Ex.(x=x)");
  CHECK_NOTHROW(check_well_formed(ok, st.var_count()));
}

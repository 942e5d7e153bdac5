#include <catch2/catch_amalgamated.hpp>

#include "s2e/registry.hpp"
#include "s2e/syntax.hpp"
#include "s2e/text.hpp"

using namespace s2e;

namespace {
const Registry& reg() {
  static Registry r;
  return r;
}
Formula F(const char* s) { return parse_formula(s, reg()); }
Term T(const char* s) { return parse_term(s, reg()); }
}  // namespace

TEST_CASE("substitution", "[syntax]") {
  // substitute(x = x, x, 0) -> 0 = 0
  CHECK(substitute(F("(eq x x)"), "x", Term::zero()) == F("(eq 0 0)"));
  // Capture: substitute(forall y <= s. x = y, x, y) renames the binder.
  Formula a = F("(forall-b y s (eq x y))");
  Formula got = substitute(a, "x", Term::var("y"));
  CHECK(got == F("(forall-b y' s (eq y y'))"));
  CHECK(alpha_eq(got, F("(forall-b z s (eq y z))")));
  // substitute(E x, x, a#b) -> E(a#b)
  CHECK(substitute(F("(E x)"), "x", T("(smash a b)")) == F("(E (smash a b))"));
  // Identity substitution is alpha-equivalent.
  Formula b = F("(exists-b u (len t) (and (eq u x) (E t)))");
  CHECK(alpha_eq(substitute(b, "x", Term::var("x")), b));
}

TEST_CASE("free variables", "[syntax]") {
  CHECK(free_vars(F("(forall x (eq x a))")) == std::vector<std::string>{"a"});
  CHECK(free_vars(F("(eq 0 0)")).empty());
  Sequent s = parse_sequent("(seq ((eq a b)) ((eq b a)))", reg());
  CHECK(free_vars(s) == (std::vector<std::string>{"a", "b"}));
  // The bound term of a quantifier is outside the binder's scope.
  CHECK(free_vars(F("(forall-b x (len y) (le x x))")) ==
        std::vector<std::string>{"y"});
}

TEST_CASE("classification", "[syntax]") {
  CHECK(classify(F("(eq t1 t2)")) == FormulaClass::sigma(0));
  CHECK(classify(F("(exists-b x t (eq x a))")) == FormulaClass::sigma(1));
  CHECK(classify(F("(forall-b x t (exists-b y s (eq y x)))")) ==
        FormulaClass::pi(2));
  CHECK(classify(F("(forall x (eq x x))")) == FormulaClass::unbounded());
  // Monotone embedding: SigmaB(j) satisfies the PiB(j+1) clauses.
  for (const char* src :
       {"(eq a b)", "(exists-b x t (eq x a))", "(and (eq a b) (exists-b x t (le x a)))"}) {
    Formula f = F(src);
    auto c = classify(f);
    if (c.kind == FormulaClass::Kind::SigmaB) CHECK(in_pi_b(f, c.level + 1));
  }
}

TEST_CASE("i-normal recognition", "[syntax]") {
  // E t is i-normal for every i >= 0.
  CHECK(is_i_normal(F("(E t)"), 1));
  // A conjunction of E-forms is only (-1)-normal.
  Formula ee = F("(and (E a) (E b))");
  CHECK(!is_i_normal(ee, 1));
  CHECK(is_i_normal(ee, -1));
  // The prefix shape with a final length bound.
  Formula two = F("(exists-b x t (forall-b y (len s) (eq x y)))");
  CHECK(is_i_normal(two, 1));
  CHECK(is_pure_i_normal(two, 1));
  CHECK(!is_i_normal(two, 0));
  // A single quantifier at i = 1 must sit at position 2 (forall).
  CHECK(is_i_normal(F("(forall-b y (len s) (eq y y))"), 1));
  CHECK(!is_i_normal(F("(exists-b y (len s) (eq y y))"), 1));
  CHECK(is_i_normal(F("(exists-b y (len s) (eq y y))"), 0));
  // Final quantifier must be length-bounded.
  CHECK(!is_i_normal(F("(exists-b y s (eq y y))"), 0));
  // Bodies must be E-free.
  CHECK(!is_i_normal(F("(exists-b y (len s) (E y))"), 0));
  // Subformula property of pure i-normal formulae.
  std::vector<Formula> subs;
  subformulas(two, subs);
  for (const auto& g : subs) CHECK(is_i_normal(g, 1));
}

TEST_CASE("parser and printer round-trip", "[syntax]") {
  for (const char* src : {
           "(seq ((E (oplus a b)) (neq a 0)) ((le (add a b) (mul a b))))",
           "(seq () ())",
           "(seq ((forall-b x (len t) (exists y (eq x y)))) ((E 0)))",
       }) {
    Sequent s = parse_sequent(src, reg());
    CHECK(to_text(s, reg()) == src);
  }
  // Aliases parse to canonical symbols.
  CHECK(T("(|| t)") == T("(len t)"));
  CHECK(T("(# a b)") == T("(smash a b)"));
  CHECK(T("(+ a b)") == T("(add a b)"));
  // Parse errors carry positions.
  try {
    parse_term("(len", reg());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
  }
  CHECK_THROWS_AS(parse_term("(bogus a)", reg()), ParseError);
  CHECK_THROWS_AS(parse_formula("(forall-b x x (eq x x))", reg()), Error);
}

TEST_CASE("proof text round-trip", "[syntax]") {
  const char* src =
      "(proof cut (seq () ((E 0))) (proof ax (seq () ((E 0))) ) (proof id (seq ((E 0)) "
      "((E 0)))))";
  Proof p = parse_proof(src, reg());
  CHECK(p.rule() == Rule::Cut);
  CHECK(parse_proof(to_text(p, reg()), reg()) == p);
  // Payload annotations are accepted and discarded.
  Proof q = parse_proof(
      "(proof id (seq ((E a)) ((E a))) (payload (eigen a)))", reg());
  CHECK(q.children().empty());
}

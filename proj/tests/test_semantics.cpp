#include <catch2/catch_amalgamated.hpp>

#include "s2e/semantics.hpp"
#include "s2e/text.hpp"

using namespace s2e;

namespace {
const Registry& reg() {
  static Registry r;
  return r;
}
Formula F(const char* s) { return parse_formula(s, reg()); }
Term T(const char* s) { return parse_term(s, reg()); }

Environment env(std::initializer_list<std::pair<std::string, long>> pairs) {
  std::vector<std::pair<std::string, Code>> v;
  for (const auto& [k, n] : pairs) v.emplace_back(k, Code(n));
  return Environment(v);
}

// Random quantifier-free generators over a few variables; term values stay
// well below 2^40 with the value cap used here.
Term random_small_term(Rng& rng, int depth, const std::vector<std::string>& vars) {
  if (depth <= 0 || rand_below(rng, 2) == 0) {
    if (rand_below(rng, 3) == 0) return Term::zero();
    return Term::var(vars[rand_below(rng, vars.size() - 1)]);
  }
  static const std::vector<SymbolId> fns{
      builtin::s0,   builtin::s1,     builtin::succ, builtin::half,
      builtin::len,  builtin::parity, builtin::add,  builtin::mul,
      builtin::cond, builtin::oplus,  builtin::ominus};
  SymbolId f = fns[rand_below(rng, fns.size() - 1)];
  std::vector<Term> args;
  for (unsigned i = 0; i < reg().arity(f); ++i)
    args.push_back(random_small_term(rng, depth - 1, vars));
  return Term::app(f, std::move(args));
}

Formula random_qf(Rng& rng, int depth, const std::vector<std::string>& vars) {
  switch (rand_below(rng, depth <= 0 ? 2 : 4)) {
    case 0:
      return Formula::atom(rand_below(rng, 1) ? Pred::Eq : Pred::Le,
                           random_small_term(rng, 2, vars), random_small_term(rng, 2, vars));
    case 1:
      return Formula::neg_atom(rand_below(rng, 1) ? Pred::Eq : Pred::Le,
                               random_small_term(rng, 2, vars),
                               random_small_term(rng, 2, vars));
    case 2: return Formula::e(random_small_term(rng, 2, vars));
    default: {
      Formula a = random_qf(rng, depth - 1, vars);
      Formula b = random_qf(rng, depth - 1, vars);
      return rand_below(rng, 1) ? Formula::land(a, b) : Formula::lor(a, b);
    }
  }
}

Environment random_env(Rng& rng, const std::vector<std::string>& vars, unsigned long cap) {
  std::vector<std::pair<std::string, Code>> v;
  for (const auto& x : vars) v.emplace_back(x, Code(rand_below(rng, cap)));
  return Environment(v);
}
}  // namespace

TEST_CASE("environments", "[semantics]") {
  CHECK(env_holds(env({}), F("(eq 0 0)"), Code(5)));
  CHECK(!env_holds(env({{"a", 5}}), F("(E a)"), Code(4)));
  CHECK(env_holds(env({{"a", 4}}), F("(E a)"), Code(4)));
  // Domain must match the free variables exactly.
  CHECK(!env_holds(env({{"a", 1}, {"b", 1}}), F("(E a)"), Code(4)));

  // bd_env(Ea, 1) is the code of {(a, 1)}.
  CHECK(bd_env(F("(E a)"), Code(1)) == encode_env({{"a", Code(1)}}));
  // Two variables: the max over both orders.
  Code two = bd_env(F("(le a b)"), Code(3));
  Code o1 = encode_env({{"a", Code(3)}, {"b", Code(3)}});
  Code o2 = encode_env({{"b", Code(3)}, {"a", Code(3)}});
  CHECK(two == std::max(o1, o2));
  // Update replaces in place.
  Environment r = env({{"a", 1}});
  CHECK(r.extended("a", Code(7)).at("a") == 7);
  CHECK(r.extended("b", Code(2)).size() == 2);
  CHECK(r.extended("a", Code(7)).size() == 1);
}

TEST_CASE("value_of basics", "[semantics]") {
  CHECK(value_of(Term::zero(), env({}), Code(0), reg()) == Code(0));
  CHECK(value_of(T("(s1 0)"), env({}), Code(1), reg()) == Code(1));
  CHECK(!value_of(T("(s1 0)"), env({}), Code(0), reg()).has_value());
  CHECK(!value_of(T("(smash x x)"), env({{"x", 2}}), Code(10), reg()).has_value());
  CHECK(value_of(T("(smash x x)"), env({{"x", 2}}), Code(16), reg()) == Code(16));
  CHECK_THROWS_AS(value_of(T("(E x)"), env({}), Code(4), reg()), ParseError);
  CHECK_THROWS_AS(value_of(Term::var("x"), env({}), Code(4), reg()), UnboundVariable);

  // Witness tree: nodes are subterms paired with values.
  ValuationTree w;
  auto v = value_of(T("(add x (s1 0))"), env({{"x", 2}}), Code(8), reg(), &w);
  REQUIRE(v == Code(3));
  CHECK(w.value == 3);
  CHECK(w.term_code == encode(T("(add x (s1 0))")));
  REQUIRE(w.children.size() == 2);
  CHECK(w.children[0].value == 2);
  CHECK(w.children[1].value == 1);
}

TEST_CASE("valuation lemma suite", "[semantics]") {
  Rng rng(314159);
  const std::vector<std::string> vars{"x", "y"};
  const unsigned long cap = 1 << 12;
  int sub_cases = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Term t = random_small_term(rng, 4, vars);
    Environment rho = random_env(rng, vars, cap);
    Code u = Code(rand_below(rng, 1) ? 0 : rand_below(rng, 1ul << 24));
    auto v1 = value_of(t, rho, u, reg());
    // Clause 1 (uniqueness by determinism) and v-standard.
    auto subs = [&] {
      std::vector<Term> ts;
      subterms(t, ts);
      return ts;
    }();
    Code maxval = 0;
    for (const auto& st : subs) maxval = std::max(maxval, rho_eval(st, rho, reg()));
    if (maxval <= u) {
      REQUIRE(v1.has_value());
      CHECK(*v1 == rho_eval(t, rho, reg()));
    } else {
      CHECK(!v1.has_value());
    }
    // v-upward.
    if (v1) {
      CHECK(value_of(t, rho, u + 1 + Code(rand_below(rng, 1000)), reg()) == v1);
    }
    // Clause 5: restriction to the variables of t changes nothing.
    Environment rho2 = rho.restricted_to(free_vars(t));
    Environment rho3 = rho.extended("zz", Code(rand_below(rng, cap)));
    auto v2 = value_of(t, rho2, u, reg());
    auto v3 = value_of(t, rho3, u, reg());
    CHECK(v1 == v2);
    CHECK(v1 == v3);
    // Clause 2: decomposition at applications.
    if (t.is_app() && v1) {
      std::vector<Code> ds;
      bool all = true;
      for (const auto& arg : t.args()) {
        auto dv = value_of(arg, rho, u, reg());
        if (!dv) {
          all = false;
          break;
        }
        ds.push_back(*dv);
      }
      REQUIRE(all);
      CHECK(reg().eval(t.fn(), ds) == *v1);
    }
    // v-sub: substitution is equivalent to assignment (the lemma assumes
    // the variable occurs in t).
    if (occurs_in("x", t)) {
      Term tp = random_small_term(rng, 2, vars);
      Term tt = subst_term(t, "x", tp);
      auto lhs = value_of(tt, rho, u, reg());
      auto cp = value_of(tp, rho, u, reg());
      std::optional<Code> rhs;
      if (cp) rhs = value_of(t, rho.extended("x", *cp), u, reg());
      CHECK(lhs == rhs);
      if (lhs) ++sub_cases;
    }
  }
  CHECK(sub_cases > 100);

  // Lemma v clause 3 and 4 directly.
  CHECK(value_of(Term::zero(), env({}), Code(0), reg()) == Code(0));
  Environment rho = env({{"a", 9}});
  CHECK(value_of(Term::var("a"), rho, Code(9), reg()) == Code(9));
  CHECK(!value_of(Term::var("a"), rho, Code(8), reg()).has_value());
}

TEST_CASE("truth_qf basics", "[semantics]") {
  CHECK(truth_qf(Code(0), F("(eq 0 0)"), env({}), reg()));
  CHECK(truth_qf(Code(100), F("(eq 0 0)"), env({}), reg()));
  // Reflection failure: the value 1 exceeds the bound 0.
  CHECK(!truth_qf(Code(0), F("(eq (s1 0) (s1 0))"), env({}), reg()));
  CHECK(truth_qf(Code(1), F("(E (s1 0))"), env({}), reg()));
  CHECK(!truth_qf(Code(0), F("(E (s1 0))"), env({}), reg()));
  // Truth tree witness.
  TruthTree w;
  CHECK(truth_qf(Code(4), F("(and (eq 0 0) (le 0 (s1 0)))"), env({}), reg(), &w));
  CHECK(w.value);
  REQUIRE(w.children.size() == 2);
  CHECK(w.children[0].value);
}

TEST_CASE("truth lemma suite", "[semantics]") {
  Rng rng(271828);
  const std::vector<std::string> vars{"x", "y"};
  const unsigned long cap = 1 << 10;
  for (int trial = 0; trial < 1000; ++trial) {
    Formula a = random_qf(rng, 2, vars);
    Environment rho = random_env(rng, vars, cap);
    Code u = Code(rand_below(rng, 1ul << 20));
    bool v = truth_qf(u, a, rho, reg());
    // Clauses 1-7 of Lemma T_{-1} (atoms, E-forms, and/or recursion).
    switch (a.kind()) {
      case Formula::Kind::Atom:
      case Formula::Kind::NegAtom: {
        auto c1 = value_of(a.term(0), rho, u, reg());
        auto c2 = value_of(a.term(1), rho, u, reg());
        bool expect = false;
        if (c1 && c2) {
          bool rel = a.pred() == Pred::Eq ? *c1 == *c2 : *c1 <= *c2;
          expect = a.kind() == Formula::Kind::Atom ? rel : !rel;
        }
        CHECK(v == expect);
        break;
      }
      case Formula::Kind::E:
        CHECK(v == value_of(a.term(0), rho, u, reg()).has_value());
        break;
      case Formula::Kind::And:
        CHECK(v == (truth_qf(u, a.sub(0), rho, reg()) && truth_qf(u, a.sub(1), rho, reg())));
        break;
      case Formula::Kind::Or:
        CHECK(v == (truth_qf(u, a.sub(0), rho, reg()) || truth_qf(u, a.sub(1), rho, reg())));
        break;
      default: break;
    }
    // T0-upward.
    if (v) CHECK(truth_qf(u + 1 + Code(rand_below(rng, 999)), a, rho, reg()));
    // Clause 9 / restriction.
    CHECK(truth_qf(u, a, rho.extended("zz", Code(3)), reg()) == v);
    // T0-sub: substitution vs assignment (the variable must occur). When
    // the substituted term diverges, only basic formulae are forced false;
    // a compound can still be true through a subformula avoiding x.
    if (occurs_free("x", a)) {
      Term tp = random_small_term(rng, 2, vars);
      Formula at = substitute(a, "x", tp);
      bool lhs = truth_qf(u, at, rho, reg());
      auto cp = value_of(tp, rho, u, reg());
      if (cp) {
        bool rhs = truth_qf(u, a, rho.extended("x", *cp), reg());
        CHECK(lhs == rhs);
      } else if (a.is_basic()) {
        CHECK(!lhs);
      }
    }
    // T0-refl at the basic-formula level.
    if (a.is_basic()) {
      Code maxval = 0;
      for (const auto& st : subterms_of_formula(a))
        maxval = std::max(maxval, rho_eval(st, rho, reg()));
      if (maxval <= u)
        CHECK(v == direct_eval(a, rho, reg()));
      else
        CHECK(!v);
    }
    // Lemma EM.
    if (a.is_basic() && a.kind() != Formula::Kind::E) {
      Formula et1 = Formula::e(a.term(0)), et2 = Formula::e(a.term(1));
      if (truth_qf(u, et1, rho, reg()) && truth_qf(u, et2, rho, reg())) {
        Formula pos = Formula::atom(a.pred(), a.term(0), a.term(1));
        Formula neg = Formula::neg_atom(a.pred(), a.term(0), a.term(1));
        CHECK(truth_qf(u, pos, rho, reg()) != truth_qf(u, neg, rho, reg()));
      }
    }
  }
}

TEST_CASE("truth_i", "[semantics]") {
  // truth_i(1, 1, exists x <= s1 0. x = s1 0) is true with witness 1...
  // the bound term must be a length for i-normality, so use len forms.
  Formula f0 = F("(exists-b x (len (s1 0)) (eq x (len (s1 0))))");
  CHECK(is_i_normal(f0, 0));
  CHECK(truth_i(0, Code(1), f0, env({}), reg()));
  // Bound term diverges under u = 0.
  Formula f1 = F("(exists-b x (len (s1 0)) (eq x x))");
  CHECK(!truth_i(0, Code(0), f1, env({}), reg()));
  CHECK(truth_i(0, Code(1), f1, env({}), reg()));
  // Quantifier-free formulas agree with truth_qf.
  Formula qf = F("(and (eq 0 0) (nle (s1 0) 0))");
  for (long u : {0L, 1L, 5L})
    CHECK(truth_i(2, Code(u), qf, env({}), reg()) ==
          truth_qf(Code(u), qf, env({}), reg()));
  CHECK_THROWS_AS(truth_i(1, Code(4), F("(and (E a) (E b))"), env({{"a", 1}, {"b", 1}}), reg()),
                  NotINormal);
}

TEST_CASE("truth_i lemma suite", "[semantics]") {
  Rng rng(6281);
  const std::vector<std::string> vars{"x", "y"};
  for (int i : {0, 1, 2}) {
    for (int trial = 0; trial < 200; ++trial) {
      // Random i-normal formula: prefix positions j..i+1 with parities, final
      // bound a length.
      unsigned l = 1 + rand_below(rng, static_cast<unsigned>(i));
      unsigned jpos = static_cast<unsigned>(i) + 2 - l;
      std::vector<std::string> body_vars{"x", "y"};
      for (unsigned k = 1; k <= l; ++k) body_vars.push_back("q" + std::to_string(k));
      Formula body = random_qf(rng, 1, body_vars);
      // Bodies of i-normal formulae are E-free.
      while (contains_e_form(body)) body = random_qf(rng, 1, body_vars);
      Formula cur = body;
      for (unsigned k = jpos + l; k-- > jpos;) {
        std::string qv = "q" + std::to_string(k - jpos + 1);
        Term bound = random_small_term(rng, 1, vars);
        if (occurs_in(qv, bound)) bound = Term::var("x");
        if (k == static_cast<unsigned>(i) + 1) bound = t_len(bound);
        bool is_forall = (k % 2) == 0;
        cur = is_forall ? Formula::bforall(qv, bound, cur)
                        : Formula::bexists(qv, bound, cur);
      }
      REQUIRE(is_i_normal(cur, i));
      Environment rho = random_env(rng, vars, 64);
      Code u = Code(rand_below(rng, 1ul << 10));
      bool v = truth_i(i, u, cur, rho, reg());
      // T-upward.
      if (v) CHECK(truth_i(i, u + 1 + Code(rand_below(rng, 99)), cur, rho, reg()));
      // T-rho.
      CHECK(truth_i(i, u, cur, rho.extended("unused", Code(1)), reg()) == v);
      // Lemma T: the outermost quantifier hoists.
      if (cur.is_bounded_quantifier()) {
        auto c = value_of(cur.bound(), rho, u, reg());
        bool expect = false;
        if (c) {
          bool is_forall = cur.kind() == Formula::Kind::BForall;
          expect = is_forall;
          for (Code d = 0; d <= *c; ++d) {
            bool inner = truth_i(i, u, cur.sub(0), rho.extended(cur.var(), d), reg());
            if (is_forall && !inner) {
              expect = false;
              break;
            }
            if (!is_forall && inner) {
              expect = true;
              break;
            }
          }
        }
        CHECK(v == expect);
      }
      // T-sub on the free variable x (when it occurs and the substituted
      // term converges; see the T0-sub caveat above).
      if (occurs_free("x", cur)) {
        Term tp = random_small_term(rng, 1, vars);
        Formula at = substitute(cur, "x", tp);
        auto cp = value_of(tp, rho, u, reg());
        if (is_i_normal(at, i) && cp) {
          bool lhs = truth_i(i, u, at, rho, reg());
          bool rhs = truth_i(i, u, cur, rho.extended("x", *cp), reg());
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("direct_eval", "[semantics]") {
  CHECK(direct_eval(F("(E (smash x x))"), env({{"x", 2}}), reg()));
  CHECK(direct_eval(F("(eq (smash x x) (s0 (s0 (s0 (s0 (s1 0))))))"), env({{"x", 2}}),
                    reg()));
  CHECK(direct_eval(F("(forall-b y x (le y x))"), env({{"x", 3}}), reg()));
  CHECK(!direct_eval(F("(exists-b y x (nle y y))"), env({{"x", 3}}), reg()));
  CHECK_THROWS_AS(direct_eval(F("(forall y (eq y y))"), env({}), reg()),
                  UnboundedQuantifier);
}

#include <catch2/catch_amalgamated.hpp>

#include "s2e/registry.hpp"

using namespace s2e;

namespace {
const Registry& reg() {
  static Registry r;
  return r;
}

Code ev(const char* f, std::initializer_list<long> args, EvalMode m = EvalMode::Default) {
  std::vector<Code> as;
  for (long a : args) as.emplace_back(a);
  return reg().eval(reg().id_of(f), as, m);
}
}  // namespace

TEST_CASE("standard interpretation of core symbols", "[registry]") {
  CHECK(ev("s1", {2}) == 5);
  CHECK(ev("s0", {2}) == 4);
  CHECK(ev("len", {0}) == 0);
  CHECK(ev("len", {1}) == 1);
  CHECK(ev("len", {5}) == 3);
  CHECK(ev("smash", {2, 3}) == 16);
  CHECK(ev("succ", {7}) == 8);
  CHECK(ev("half", {7}) == 3);
  CHECK(ev("add", {13, 29}) == 42);
  CHECK(ev("mul", {12, 11}) == 132);
  CHECK(ev("cond", {0, 5, 9}) == 5);
  CHECK(ev("cond", {2, 5, 9}) == 9);
  CHECK(ev("parity", {6}) == 0);
  CHECK(ev("parity", {7}) == 1);
  CHECK(ev("oplus", {2, 3}) == 11);
  CHECK(ev("ominus", {11, 3}) == 2);
}

TEST_CASE("interpreted recursion agrees with the closed forms", "[registry]") {
  const Registry& r = reg();
  Rng rng(20240901);
  for (SymbolId f = 0; f < r.size(); ++f) {
    unsigned n = r.arity(f);
    // Heavier symbols interpret slowly; keep operands modest but varied.
    const std::uint64_t cap = 255;
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Code> args;
      for (unsigned i = 0; i < n; ++i) args.emplace_back(rand_below(rng, cap));
      Code native = r.eval(f, args, EvalMode::Default);
      Code interp = r.eval(f, args, EvalMode::Interpret);
      INFO("symbol " << r.name(f) << " trial " << trial);
      REQUIRE(native == interp);
    }
  }
}

TEST_CASE("definition degrees", "[registry]") {
  const Registry& r = reg();
  CHECK(r.def_degree(builtin::s0) == 0);
  CHECK(r.def_degree(builtin::zero1) == 0);
  CHECK(r.def_degree(builtin::proj3_2) == 0);
  CHECK(r.def_degree(builtin::cond) == 1);

  Registry ext;
  SymbolId f1 = ext.add_function({"f1", 1, Composition{builtin::s0, {builtin::proj1_1}}, {}});
  CHECK(ext.def_degree(f1) == 1);
  SymbolId h = ext.add_function(
      {"h", 3, Composition{builtin::s0, {builtin::proj3_3}}, {}});
  CHECK(ext.def_degree(h) == 1);
  SymbolId f2 = ext.add_function({"f2", 2, Recursion{builtin::zero1, h, h}, {}});
  CHECK(ext.def_degree(f2) == 2);

  // Degrees strictly decrease into the body.
  for (SymbolId f = 0; f < r.size(); ++f) {
    unsigned d = r.def_degree(f);
    std::visit(
        [&](const auto& body) {
          using B = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<B, Composition>) {
            CHECK(r.def_degree(body.g) < d);
            for (SymbolId hh : body.hs) CHECK(r.def_degree(hh) < d);
          } else if constexpr (std::is_same_v<B, Recursion>) {
            CHECK(r.def_degree(body.g) < d);
            CHECK(r.def_degree(body.h0) < d);
            CHECK(r.def_degree(body.h1) < d);
          }
        },
        r.def(f).body);
  }
}

TEST_CASE("registry rejects ill-formed definitions", "[registry]") {
  Registry ext;
  CHECK_THROWS_AS(
      ext.add_function({"bad", 2, Composition{builtin::add, {builtin::proj1_1}}, {}}),
      Error);
  CHECK_THROWS_AS(
      ext.add_function({"bad2", 1, Recursion{builtin::zero1, builtin::proj2_1,
                                             builtin::proj2_1}, {}}),
      Error);
  CHECK_THROWS(ext.eval(ext.id_of("add"), std::vector<Code>{Code(1)}));
  CHECK_THROWS_AS(ext.id_of("nonexistent"), Error);
}

TEST_CASE("defining equations are true under the standard interpretation",
          "[registry]") {
  // Evaluated both sides with canonical variables bound to random values.
  // This is the numeric guardian of the recursion bootstrap, including the
  // s0-at-zero corners.
  const Registry& r = reg();
  Rng rng(77);
  for (SymbolId f = 0; f < r.size(); ++f) {
    for (const auto& eq : r.defining_equations(f)) {
      for (int trial = 0; trial < 40; ++trial) {
        std::map<std::string, Code> env;
        for (const auto& v : free_vars(eq.lhs)) env[v] = Code(rand_below(rng, 63));
        for (const auto& v : free_vars(eq.rhs))
          if (!env.count(v)) env[v] = Code(rand_below(rng, 63));
        // Force the zero corner regularly.
        if (trial % 4 == 0)
          for (auto& [k, v] : env) v = 0;
        std::function<Code(const Term&)> evt = [&](const Term& t) -> Code {
          switch (t.kind()) {
            case Term::Kind::Zero: return 0;
            case Term::Kind::Var: return env.at(t.var_name());
            case Term::Kind::App: {
              std::vector<Code> as;
              for (const auto& a : t.args()) as.push_back(evt(a));
              return r.eval(t.fn(), as);
            }
          }
          return 0;
        };
        INFO("symbol " << r.name(f) << " trial " << trial);
        REQUIRE(evt(eq.lhs) == evt(eq.rhs));
      }
    }
  }
}

TEST_CASE("numerals evaluate to themselves", "[syntax][registry]") {
  const Registry& r = reg();
  CHECK(numeral(0) == Term::zero());
  CHECK(numeral(2) == s0(s1(Term::zero())));
  CHECK(numeral(5) == s1(s0(s1(Term::zero()))));

  std::function<Code(const Term&)> evt = [&](const Term& t) -> Code {
    if (t.is_zero()) return 0;
    std::vector<Code> as;
    for (const auto& a : t.args()) as.push_back(evt(a));
    return r.eval(t.fn(), as);
  };
  for (unsigned long n = 0; n < (1u << 16); ++n) {
    if (evt(numeral(Code(n))) != Code(n)) {
      FAIL("numeral mismatch at " << n);
    }
  }
}

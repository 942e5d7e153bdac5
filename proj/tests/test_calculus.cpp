#include <catch2/catch_amalgamated.hpp>

#include "s2e/bootstrap.hpp"
#include "s2e/calculus.hpp"
#include "s2e/proofs.hpp"
#include "s2e/registry.hpp"
#include "s2e/semantics.hpp"
#include "s2e/text.hpp"

using namespace s2e;

namespace {
const Registry& reg() {
  static Registry r;
  return r;
}
const AxiomSet& axioms() {
  static AxiomSet a(reg());
  return a;
}
Formula F(const char* s) { return parse_formula(s, reg()); }
Term T(const char* s) { return parse_term(s, reg()); }
Sequent S(const char* s) { return parse_sequent(s, reg()); }
}  // namespace

TEST_CASE("axiom matching", "[calculus]") {
  auto m1 = axioms().match_axiom(S("(seq ((E a)) ((eq a a)))"));
  REQUIRE(m1.has_value());
  CHECK(m1->first->id == "eq-refl");
  CHECK(m1->second.at("a") == T("a"));

  auto m2 = axioms().match_axiom(
      S("(seq ((E (smash 0 0))) ((eq (smash 0 0) (smash 0 0))))"));
  REQUIRE(m2.has_value());
  CHECK(m2->first->id == "eq-refl");
  CHECK(m2->second.at("a") == T("(smash 0 0)"));

  // |- 0 = 0 is not an axiom instance: the Ea premise is missing.
  CHECK(!axioms().match_axiom(S("(seq () ((eq 0 0)))")).has_value());

  // Substitution must be consistent across occurrences.
  CHECK(!axioms().match_axiom(S("(seq ((E a)) ((eq a b)))")).has_value());
}

TEST_CASE("boundedness lint", "[calculus]") {
  const AxiomSchema* refl = axioms().find("eq-refl");
  REQUIRE(refl);
  auto rep = axioms().check_boundedness(*refl, 2000, 1 << 12);
  CHECK(rep.pass);
  CHECK(rep.effective_trials > 0);

  // Hypothetical schema Ea |- a#a = a#a fails condition (3): witness a = 2
  // gives 16 > 4 * 2.
  AxiomSchema bad{"hyp-smash",
                  S("(seq ((E a)) ((eq (smash a a) (smash a a))))"),
                  AxiomFamily::Auxiliary,
                  0,
                  false};
  auto rep2 = axioms().check_boundedness(bad, 2000, 1 << 12);
  REQUIRE(!rep2.pass);
  CHECK(rep2.violated_condition == 3);
  REQUIRE(rep2.witness.lookup("a").has_value());
  CHECK(*rep2.witness.lookup("a") == 2);

  // Data axiom |- E0 passes under the max-empty-set-is-1 convention.
  const AxiomSchema* d0 = axioms().find("data-0");
  REQUIRE(d0);
  CHECK(axioms().check_boundedness(*d0, 100, 16).pass);

  // A schema with an uncovered variable fails condition (2).
  AxiomSchema uncovered{"hyp-uncovered", S("(seq ((E a)) ((eq b b)))"),
                        AxiomFamily::Auxiliary, 0, false};
  auto rep3 = axioms().check_boundedness(uncovered, 10, 4);
  REQUIRE(!rep3.pass);
  CHECK(rep3.violated_condition == 2);
}

TEST_CASE("inference checking", "[calculus]") {
  // Identity.
  Sequent id = S("(seq ((le a b)) ((le a b)))");
  CHECK(!check_inference(Rule::Id, {}, id, axioms()).has_value());
  CHECK(check_inference(Rule::Id, {}, S("(seq ((le a b)) ((le b a)))"), axioms())
            .has_value());

  // R-neg introduces Et1, Et2 in the antecedent.
  Sequent prem = S("(seq ((eq a b) (E c)) ((le c c)))");
  Sequent concl = S("(seq ((E a) (E b) (E c)) ((le c c) (neq a b)))");
  std::vector<Sequent> ps{prem};
  CHECK(!check_inference(Rule::NegR, ps, concl, axioms()).has_value());
  Sequent missing = S("(seq ((E c)) ((le c c) (neq a b)))");
  auto err = check_inference(Rule::NegR, ps, missing, axioms());
  REQUIRE(err.has_value());
  CHECK(*err == "MissingEPremise");

  // Eigenvariable violations.
  {
    // forall-right-b with the eigenvariable free in Gamma.
    Sequent p = S("(seq ((le a t) (le a 0)) ((le a a)))");
    Sequent c = S("(seq ((E t) (le a 0)) ((forall-b x t (le x x))))");
    std::vector<Sequent> pp{p};
    auto e = check_inference(Rule::ForallRb, pp, c, axioms());
    REQUIRE(e.has_value());
    CHECK(*e == "EigenvariableCaptured");
  }
  {
    Sequent p = S("(seq ((le b t)) ((le b b)))");
    Sequent c = S("(seq ((E t)) ((forall-b x t (le x x))))");
    std::vector<Sequent> pp{p};
    CHECK(!check_inference(Rule::ForallRb, pp, c, axioms()).has_value());
  }
}

TEST_CASE("proof checking and strictness", "[calculus]") {
  // Single data-axiom proof |- E0 checks at i = -1 and is strictly i-normal.
  Proof e0 = pf::ax(S("(seq () ((E 0)))"));
  CHECK(check_proof(e0, -1, axioms()).ok);
  CHECK(is_strictly_i_normal_proof(e0, 0, axioms()));
  CHECK(is_strictly_i_normal_proof(e0, -1, axioms()));

  // A forged axiom is rejected.
  Proof forged = pf::ax(S("(seq () ((eq 0 (s1 0))))"));
  auto rep = check_proof(forged, 0, axioms());
  REQUIRE(!rep.ok);
  CHECK(rep.failures.at(0).reason == "NoAxiomMatches");

  // PIND pattern reconstruction and the induction-class police.
  {
    Formula a = F("(exists-b x (len a1) (eq x x))");
    Formula ea1 = F("(E a1)");
    Formula a0 = F("(exists-b x (len 0) (eq x x))");
    Formula as0 = F("(exists-b x (len (s0 a1)) (eq x x))");
    Formula as1 = F("(exists-b x (len (s1 a1)) (eq x x))");
    Sequent base{{}, {a0}};
    Sequent st0{{a}, {as0}};
    Sequent st1{{a}, {as1}};
    Sequent concl{{ea1}, {a}};
    std::vector<Sequent> ps2{base, st0, st1};
    Formula pat;
    std::string pvar;
    auto err2 = check_inference(Rule::PInd, ps2, concl, axioms(), nullptr, &pat, &pvar);
    REQUIRE(!err2.has_value());
    CHECK(pvar == "a1");
    CHECK(in_sigma_b(pat, 1));
    CHECK(!in_sigma_b(pat, 0));
  }
}

TEST_CASE("derive_substitution", "[calculus]") {
  // One-node axiom instance: Ea |- a = a becomes E0 |- 0 = 0.
  Proof refl = pf::ax(S("(seq ((E a)) ((eq a a)))"));
  Proof substituted = derive_substitution(refl, "a", Term::zero());
  CHECK(substituted.conclusion() == S("(seq ((E 0)) ((eq 0 0)))"));
  CHECK(check_proof(substituted, 0, axioms()).ok);

  // Identity substitution is alpha-preserving.
  Proof same = derive_substitution(refl, "a", Term::var("a"));
  CHECK(alpha_eq(same.conclusion(), refl.conclusion()));

  // Eigenvariable clash: substituting a term that contains the eigenvariable
  // forces a rename, and the result stays kernel-valid.
  Proof inner = pf::id(F("(le b t)"));
  Proof q = pf::forall_rb("x", F("(le x t)"), inner);
  REQUIRE(check_proof(q, 0, axioms()).ok);
  Proof r = derive_substitution(q, "t", T("(add b c)"));
  CHECK(check_proof(r, 0, axioms()).ok);
  CHECK(alpha_eq(
      r.conclusion(),
      S("(seq ((E (add b c))) ((forall-b x (add b c) (le x (add b c)))))")));
  // The eigenvariable b collided with the substituted term and was renamed.
  CHECK(r.children().at(0).conclusion().ante.at(0).term(0).var_name() == "b'");
}

TEST_CASE("adjust reaches arbitrary supersequents", "[calculus]") {
  Proof p = pf::ax(S("(seq ((E a)) ((eq a a)))"));
  Sequent target = S(
      "(seq ((E b) (E a) (le a b) (E a)) ((eq b b) (eq a a) (eq a a) (le 0 0)))");
  Proof q = adjust(p, target);
  CHECK(q.conclusion() == target);
  CHECK(check_proof(q, 0, axioms()).ok);

  // Contraction direction: duplicates in the source get merged.
  Proof dup = pf::weak_l(F("(E a)"), pf::ax(S("(seq ((E a)) ((eq a a)))")));
  Proof merged = adjust(dup, S("(seq ((E a)) ((eq a a)))"));
  CHECK(merged.conclusion() == S("(seq ((E a)) ((eq a a)))"));
  CHECK(check_proof(merged, 0, axioms()).ok);
}

#include <catch2/catch_amalgamated.hpp>

#include "s2e/audit.hpp"
#include "s2e/bootstrap.hpp"
#include "s2e/proofs.hpp"
#include "s2e/text.hpp"

using namespace s2e;

namespace {
struct ACtx {
  Registry reg;
  AxiomSet ax{reg};
  Bootstrap boot{reg, ax};
};
ACtx& actx() {
  static ACtx c;
  return c;
}
Sequent S(const char* s) { return parse_sequent(s, actx().reg); }

AuditConfig cfg_for(const Proof& p, int i, unsigned long cap = 8) {
  AuditConfig cfg;
  cfg.i = i;
  cfg.u = all_ones(std::max<std::size_t>(bitlen(encode(p)), 4));
  cfg.env_value_cap = cap;
  return cfg;
}

// A small strictly 0-normal proof with a bounded quantifier:
//   |- 0 = 0  (via eq-refl and cut with |- E0)
//   R-exists-b: 0 <= len(s1 0) |- exists x <= len(s1 0). x = 0
Proof bounded_witness_proof(ACtx& c) {
  Proof refl0 = pf::cut(c.boot.ax_e0(), pf::ax(S("(seq ((E 0)) ((eq 0 0)))")));
  Term bound = parse_term("(len (s1 0))", c.reg);
  return pf::exists_rb("x", bound, parse_formula("(eq x 0)", c.reg), Term::zero(),
                       std::move(refl0));
}
}  // namespace

TEST_CASE("audit accepts sound nodes", "[audit]") {
  auto& c = actx();
  // Single-node |- E0 at the smallest legal all-ones u. (The node codes are
  // the real Goedel codes, so u must have at least |encode(w)| bits.)
  Proof e0 = pf::ax(S("(seq () ((E 0)))"));
  AuditConfig cfg = cfg_for(e0, 0, 8);
  auto rep = audit_proof(e0, cfg, c.ax);
  CHECK(rep.pass);
  REQUIRE(rep.verdicts.size() == 1);
  CHECK(rep.verdicts[0].exhaustive_u);

  // eq-refl instance Ea |- a = a, exhaustively over rho(a) <= 8.
  Proof refl = pf::ax(S("(seq ((E a)) ((eq a a)))"));
  auto rep2 = audit_proof(refl, cfg_for(refl, 0), c.ax);
  CHECK(rep2.pass);

  // The bounded-quantifier proof at i = 0.
  Proof bw = bounded_witness_proof(c);
  REQUIRE(check_proof(bw, -1, c.ax).ok);
  REQUIRE(is_strictly_i_normal_proof(bw, 0, c.ax));
  auto rep3 = audit_proof(bw, cfg_for(bw, 0), c.ax);
  CHECK(rep3.pass);
  CHECK(rep3.cut_slack_ok);
}

TEST_CASE("audit rejects forgeries and bad preconditions", "[audit]") {
  auto& c = actx();
  // A forged "axiom" |- 0 = s1 0 fails with the empty environment.
  Proof forged = pf::ax(S("(seq () ((eq 0 (s1 0))))"));
  AuditConfig cfg;
  cfg.i = 0;
  cfg.u = all_ones(bitlen(encode(forged)));
  cfg.env_value_cap = 4;
  // The kernel refuses it, so audit_proof refuses the precondition...
  CHECK_THROWS_AS(audit_proof(forged, cfg, c.ax), PreconditionViolated);
  // ... and the raw node check finds the counterexample.
  std::optional<AuditCounterexample> cex;
  auto verdict = audit_node(forged, "root", encode(forged), cfg, c.reg, &cex);
  CHECK(!verdict.pass);
  REQUIRE(cex.has_value());
  CHECK(cex->rho.size() == 0);

  // The empty-sequent proof object fails at the root.
  Proof empty = pf::ax(Sequent{});
  std::optional<AuditCounterexample> cex2;
  auto verdict2 = audit_node(empty, "root", encode(empty), cfg, c.reg, &cex2);
  CHECK(!verdict2.pass);

  // Bad u.
  Proof e0 = pf::ax(S("(seq () ((E 0)))"));
  AuditConfig bad = cfg;
  bad.u = 6;  // not all ones
  CHECK_THROWS_AS(audit_proof(e0, bad, c.ax), PreconditionViolated);
  AuditConfig bad2 = cfg;
  bad2.u = 3;  // smaller than encode(w)
  CHECK_THROWS_AS(audit_proof(e0, bad2, c.ax), PreconditionViolated);
}

TEST_CASE("audit is monotone in the environment cap", "[audit]") {
  auto& c = actx();
  Proof refl = pf::ax(S("(seq ((E a)) ((eq a a)))"));
  auto big = audit_proof(refl, cfg_for(refl, 0, 8), c.ax);
  auto small = audit_proof(refl, cfg_for(refl, 0, 3), c.ax);
  REQUIRE(big.pass);
  CHECK(small.pass);
  CHECK(small.verdicts[0].checks < big.verdicts[0].checks);
}

TEST_CASE("strictly normal fragments of generated proofs audit clean", "[audit]") {
  auto& c = actx();
  // Degree-0 and composition totality proofs are induction-free; they are
  // strictly i-normal and must satisfy the invariant.
  for (SymbolId f : {builtin::s0, builtin::s1, builtin::zero1, builtin::proj2_1}) {
    Proof p = c.boot.totality_proof(f);
    INFO(c.reg.name(f));
    REQUIRE(is_strictly_i_normal_proof(p, 0, c.ax));
    AuditConfig cfg = cfg_for(p, 0, 3);
    auto rep = audit_proof(p, cfg, c.ax);
    CHECK(rep.pass);
  }
  Registry reg2;
  SymbolId fc = reg2.add_function(
      {"fcomp", 1, Composition{builtin::s0, {builtin::proj1_1}}, {}});
  AxiomSet ax2(reg2);
  Bootstrap boot2(reg2, ax2);
  Proof p = boot2.totality_proof(fc);
  REQUIRE(is_strictly_i_normal_proof(p, 0, ax2));
  auto rep = audit_proof(p, cfg_for(p, 0, 3), ax2);
  CHECK(rep.pass);
}

TEST_CASE("consistency sweep", "[audit]") {
  auto& c = actx();
  auto zero = consistency_search(0, Code(0), c.ax);
  CHECK(!zero.counterexample);
  CHECK(zero.decoded_proofs == 0);

  auto sweep = consistency_search(0, Code(1) << 15, c.ax);
  CHECK(!sweep.counterexample);
  // The forged <ax, |- > node sits below 2^15 and must have been decoded and
  // rejected by the kernel.
  Code forged_empty = encode(pf::ax(Sequent{}));
  CHECK(forged_empty <= (Code(1) << 15));
  CHECK(sweep.decoded_proofs > 0);
  CHECK(sweep.valid_proofs == sweep.strict_proofs);
}

TEST_CASE("speedup demo", "[audit]") {
  auto& c = actx();
  // t_1(d) = d; t_2(2) = 2 # 2 = 16.
  CHECK(smash_tower(1, 7, c.reg) == 7);
  CHECK(smash_tower(2, 2, c.reg) == 16);
  auto table = speedup_demo(2, 3, 1, 1, Code(8), c.reg);
  REQUIRE(table.first_crossing.has_value());
  // Independent big-integer check of every row.
  for (const auto& row : table.rows) {
    auto ind = [&](unsigned k) {
      Code acc = row.d;
      for (unsigned j = 1; j < k; ++j) acc = shl(Code(1), bitlen(row.d) * bitlen(acc));
      return acc;
    };
    CHECK(row.t_k == ind(2));
    CHECK(row.t_l == ind(3));
    CHECK(row.crossed == (row.t_l > row.t_k + 1));
  }
  CHECK(*table.first_crossing == 1);
}

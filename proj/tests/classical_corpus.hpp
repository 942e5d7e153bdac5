#pragma once

// A small corpus of classical proofs exercising every rule of the classical
// calculus. Shared by the unit tests, the acceptance suite, and the corpus
// file generator.

#include <string>
#include <vector>

#include "s2e/classical.hpp"
#include "s2e/registry.hpp"

namespace s2e::corpus {

// Builders that compute conclusions from premises, mirroring pf::*.
namespace cpf {
inline CProof id(CFormula a) { return CProof::node(CRule::Id, {{a}, {a}}); }
inline CProof ax(CSequent s) { return CProof::node(CRule::Ax, std::move(s)); }
inline CProof weak_l(CFormula a, CProof p) {
  CSequent s = p.conclusion();
  s.ante.insert(s.ante.begin(), std::move(a));
  return CProof::node(CRule::WeakL, std::move(s), {std::move(p)});
}
inline CProof weak_r(CProof p, CFormula a) {
  CSequent s = p.conclusion();
  s.succ.push_back(std::move(a));
  return CProof::node(CRule::WeakR, std::move(s), {std::move(p)});
}
inline CProof contr_l(CProof p) {
  CSequent s = p.conclusion();
  s.ante.erase(s.ante.begin());
  return CProof::node(CRule::ContrL, std::move(s), {std::move(p)});
}
inline CProof exch_l(CProof p, std::size_t i) {
  CSequent s = p.conclusion();
  std::swap(s.ante[i], s.ante[i + 1]);
  return CProof::node(CRule::ExchL, std::move(s), {std::move(p)});
}
inline CProof exch_r(CProof p, std::size_t i) {
  CSequent s = p.conclusion();
  std::swap(s.succ[i], s.succ[i + 1]);
  return CProof::node(CRule::ExchR, std::move(s), {std::move(p)});
}
inline CProof neg_l(CProof p) {
  CSequent s = p.conclusion();
  CFormula a = s.succ.back();
  s.succ.pop_back();
  s.ante.insert(s.ante.begin(), CFormula::lnot(a));
  return CProof::node(CRule::NegL, std::move(s), {std::move(p)});
}
inline CProof neg_r(CProof p) {
  CSequent s = p.conclusion();
  CFormula a = s.ante[0];
  s.ante.erase(s.ante.begin());
  s.succ.push_back(CFormula::lnot(a));
  return CProof::node(CRule::NegR, std::move(s), {std::move(p)});
}
inline CProof impl_l(CProof p1, CProof p2) {
  CSequent s = p1.conclusion();
  CFormula a = s.succ.back();
  s.succ.pop_back();
  CFormula b = p2.conclusion().ante[0];
  s.ante.insert(s.ante.begin(), CFormula::implies(a, b));
  return CProof::node(CRule::ImplL, std::move(s), {std::move(p1), std::move(p2)});
}
inline CProof impl_r(CProof p) {
  CSequent s = p.conclusion();
  CFormula a = s.ante[0];
  s.ante.erase(s.ante.begin());
  CFormula b = s.succ.back();
  s.succ.back() = CFormula::implies(a, b);
  return CProof::node(CRule::ImplR, std::move(s), {std::move(p)});
}
inline CProof and_l1(CFormula b, CProof p) {
  CSequent s = p.conclusion();
  s.ante[0] = CFormula::land(s.ante[0], std::move(b));
  return CProof::node(CRule::AndL1, std::move(s), {std::move(p)});
}
inline CProof and_l2(CFormula b, CProof p) {
  CSequent s = p.conclusion();
  s.ante[0] = CFormula::land(std::move(b), s.ante[0]);
  return CProof::node(CRule::AndL2, std::move(s), {std::move(p)});
}
inline CProof and_r(CProof p1, CProof p2) {
  CSequent s = p1.conclusion();
  s.succ.back() = CFormula::land(s.succ.back(), p2.conclusion().succ.back());
  return CProof::node(CRule::AndR, std::move(s), {std::move(p1), std::move(p2)});
}
inline CProof or_l(CProof p1, CProof p2) {
  CSequent s = p1.conclusion();
  s.ante[0] = CFormula::lor(s.ante[0], p2.conclusion().ante[0]);
  return CProof::node(CRule::OrL, std::move(s), {std::move(p1), std::move(p2)});
}
inline CProof or_r1(CFormula b, CProof p) {
  CSequent s = p.conclusion();
  s.succ.back() = CFormula::lor(s.succ.back(), std::move(b));
  return CProof::node(CRule::OrR1, std::move(s), {std::move(p)});
}
inline CProof or_r2(CFormula b, CProof p) {
  CSequent s = p.conclusion();
  s.succ.back() = CFormula::lor(std::move(b), s.succ.back());
  return CProof::node(CRule::OrR2, std::move(s), {std::move(p)});
}
inline CProof cut(CProof p1, CProof p2) {
  CSequent s;
  const CSequent& s1 = p1.conclusion();
  const CSequent& s2 = p2.conclusion();
  s.ante = s1.ante;
  s.ante.insert(s.ante.end(), s2.ante.begin() + 1, s2.ante.end());
  s.succ.assign(s1.succ.begin(), s1.succ.end() - 1);
  s.succ.insert(s.succ.end(), s2.succ.begin(), s2.succ.end());
  return CProof::node(CRule::Cut, std::move(s), {std::move(p1), std::move(p2)});
}
inline CProof forall_lb(const std::string& x, Term bound, CFormula body, Term t,
                        CProof p) {
  CSequent s = p.conclusion();
  s.ante.erase(s.ante.begin());
  s.ante.insert(s.ante.begin(), CFormula::bforall(x, bound, std::move(body)));
  s.ante.insert(s.ante.begin(), CFormula::atom(Pred::Le, std::move(t), bound));
  return CProof::node(CRule::ForallLb, std::move(s), {std::move(p)});
}
inline CProof forall_rb(const std::string& x, CFormula body, CProof p) {
  CSequent s = p.conclusion();
  Term bound = s.ante[0].term(1);
  s.ante.erase(s.ante.begin());
  s.succ.back() = CFormula::bforall(x, bound, std::move(body));
  return CProof::node(CRule::ForallRb, std::move(s), {std::move(p)});
}
inline CProof exists_lb(const std::string& x, CFormula body, CProof p) {
  CSequent s = p.conclusion();
  Term bound = s.ante[0].term(1);
  s.ante.erase(s.ante.begin(), s.ante.begin() + 2);
  s.ante.insert(s.ante.begin(), CFormula::bexists(x, bound, std::move(body)));
  return CProof::node(CRule::ExistsLb, std::move(s), {std::move(p)});
}
inline CProof exists_rb(const std::string& x, Term bound, CFormula body, Term t,
                        CProof p) {
  CSequent s = p.conclusion();
  s.succ.back() = CFormula::bexists(x, bound, std::move(body));
  s.ante.insert(s.ante.begin(), CFormula::atom(Pred::Le, std::move(t), bound));
  return CProof::node(CRule::ExistsRb, std::move(s), {std::move(p)});
}
inline CProof forall_l(const std::string& x, CFormula body, CProof p) {
  CSequent s = p.conclusion();
  s.ante[0] = CFormula::forall(x, std::move(body));
  return CProof::node(CRule::ForallL, std::move(s), {std::move(p)});
}
inline CProof forall_r(const std::string& x, CFormula body, CProof p) {
  CSequent s = p.conclusion();
  s.succ.back() = CFormula::forall(x, std::move(body));
  return CProof::node(CRule::ForallR, std::move(s), {std::move(p)});
}
inline CProof exists_l(const std::string& x, CFormula body, CProof p) {
  CSequent s = p.conclusion();
  s.ante[0] = CFormula::exists(x, std::move(body));
  return CProof::node(CRule::ExistsL, std::move(s), {std::move(p)});
}
inline CProof exists_r(const std::string& x, CFormula body, Term t, CProof p) {
  CSequent s = p.conclusion();
  s.succ.back() = CFormula::exists(x, std::move(body));
  return CProof::node(CRule::ExistsR, std::move(s), {std::move(p)});
}
inline CProof pind(CFormula body, const std::string& a, Term t, CProof p) {
  CSequent s = p.conclusion();
  s.ante.back() = substitute(body, a, Term::zero());
  s.succ[0] = substitute(body, a, std::move(t));
  return CProof::node(CRule::PInd, std::move(s), {std::move(p)});
}
}  // namespace cpf

struct Entry {
  std::string name;
  CProof proof;
};

inline std::vector<Entry> classical_corpus() {
  using namespace cpf;
  using F = CFormula;
  Term a = Term::var("a"), b = Term::var("b"), c = Term::var("c");
  Term zero = Term::zero();
  auto eq = [](Term l, Term r) { return F::atom(Pred::Eq, std::move(l), std::move(r)); };
  auto le = [](Term l, Term r) { return F::atom(Pred::Le, std::move(l), std::move(r)); };

  std::vector<Entry> out;
  auto add = [&](std::string name, CProof p) { out.push_back({std::move(name), std::move(p)}); };

  // 1. |- 0 = 0: the reflexivity axiom instance.
  add("refl-zero", ax({{}, {eq(zero, zero)}}));
  // 2. a = b |- b = a.
  add("symmetry", ax({{eq(a, b)}, {eq(b, a)}}));
  // 3. |- (a = b implies b = a).
  add("impl-right", impl_r(ax({{eq(a, b)}, {eq(b, a)}})));
  // 4. Conjunction on the right.
  add("and-right", and_r(ax({{}, {eq(a, a)}}), or_r1(le(zero, b), ax({{}, {eq(b, b)}}))));
  // 5. Double negation: |- not not (a = a).
  add("double-neg", neg_r(neg_l(ax({{}, {eq(a, a)}}))));
  // 6. Implication elimination on the left.
  {
    CProof p1 = weak_r(ax({{eq(a, b)}, {eq(b, a)}}), eq(a, a));
    CProof p2 = exch_l(weak_l(eq(a, b), id(eq(b, a))), 0);
    add("impl-left", impl_l(std::move(p1), std::move(p2)));
  }
  // 7. Bounded forall on the right: |- forall x <= a. x <= a.
  add("bforall-right", forall_rb("x", le(Term::var("x"), a), id(le(b, a))));
  // 8. Bounded exists on the right: 0 <= a |- exists x <= a. x = x.
  add("bexists-right",
      exists_rb("x", a, eq(Term::var("x"), Term::var("x")), zero, ax({{}, {eq(zero, zero)}})));
  // 9. Unbounded forall right: |- forall x. x = x.
  add("uforall-right", forall_r("x", eq(Term::var("x"), Term::var("x")), ax({{}, {eq(b, b)}})));
  // 10. Unbounded exists right: |- exists x. x = x.
  add("uexists-right",
      exists_r("x", eq(Term::var("x"), Term::var("x")), zero, ax({{}, {eq(zero, zero)}})));
  // 11. Unbounded forall left: forall x. x = x |- 0 = 0.
  add("uforall-left", forall_l("x", eq(Term::var("x"), Term::var("x")),
                               weak_l(eq(zero, zero), ax({{}, {eq(zero, zero)}}))));
  // 12. Bounded forall left: 0 <= a, forall x <= a. x = x |- 0 = 0.
  add("bforall-left", forall_lb("x", a, eq(Term::var("x"), Term::var("x")), zero,
                                weak_l(eq(zero, zero), ax({{}, {eq(zero, zero)}}))));
  // 13. Unbounded exists left: exists x. b = b |- b = b.
  add("uexists-left", exists_l("x", eq(b, b), weak_l(eq(b, b), ax({{}, {eq(b, b)}}))));
  // 14. Bounded exists left: exists x <= a. not (x = x) |- 0 = 0.
  {
    CProof p = ax({{}, {eq(c, c)}});
    p = weak_l(le(c, a), p);               // c <= a |- c = c
    p = weak_r(p, eq(zero, zero));         // c <= a |- c = c, 0=0
    p = exch_r(p, 0);                      // c <= a |- 0=0, c=c
    p = neg_l(p);                          // not(c=c), c <= a |- 0=0
    p = exch_l(p, 0);                      // c <= a, not(c=c) |- 0=0
    add("bexists-left", exists_lb("x", F::lnot(eq(Term::var("x"), Term::var("x"))), p));
  }
  // 15. Cut: |- 0 <= 0 through 0 = 0.
  add("cut-through", cut(ax({{}, {eq(zero, zero)}}),
                         weak_l(eq(zero, zero), ax({{}, {le(zero, zero)}}))));
  // 16. Reflexivity of <= from the totality axiom 6 via cut and or-left.
  {
    CProof lhs = ax({{}, {F::lor(le(a, a), le(a, a))}});
    CProof rhs = or_l(id(le(a, a)), id(le(a, a)));
    add("le-refl", cut(std::move(lhs), std::move(rhs)));
  }
  // 17. Modus ponens through BASIC 1 and BASIC 3: |- 0 <= S a.
  {
    CProof impl = ax({{}, {F::implies(le(zero, a), le(zero, t_succ(a)))}});
    CProof p1 = exch_r(weak_r(ax({{}, {le(zero, a)}}), le(zero, t_succ(a))), 0);
    // p1: |- 0 <= Sa, 0 <= a
    CProof mp = impl_l(std::move(p1), id(le(zero, t_succ(a))));
    // mp: (0 <= a implies 0 <= Sa) |- 0 <= Sa
    add("zero-le-succ", cut(std::move(impl), std::move(mp)));
  }
  // 18. PIND on 0 <= x (a Sigma^b_0 fact).
  {
    CProof prem = weak_l(le(zero, t_half(a)), ax({{}, {le(zero, a)}}));
    // prem: 0 <= half(a) |- 0 <= a
    add("pind-le", pind(le(zero, a), "a", t_smash(b, c), std::move(prem)));
  }
  // 19. PIND with an |-independent formula (degenerate).
  {
    CProof prem = weak_l(eq(b, b), ax({{}, {eq(b, b)}}));
    add("pind-degenerate", pind(eq(b, b), "zz", a, std::move(prem)));
  }
  // 20. Equality transport over a function: a = b |- s0 a = s0 b via the
  // classical congruence axiom.
  add("fun-congruence", ax({{eq(a, b)}, {eq(Term::app(sym::s0, {a}), Term::app(sym::s0, {b}))}}));
  // 21. Predicate transport.
  add("pred-congruence",
      ax({{eq(a, b), eq(c, c), le(a, c)}, {le(b, c)}}));
  // 22. A five-node proof mixing ImplR and Cut.
  {
    CProof inner = cut(ax({{}, {eq(zero, zero)}}),
                       weak_l(eq(zero, zero), ax({{}, {le(zero, a)}})));
    // inner: |- 0 <= a
    CProof wrapped = impl_r(weak_l(le(a, zero), std::move(inner)));
    add("impl-cut-mix", std::move(wrapped));
  }
  // 23. Or on the left with weakenings.
  {
    CProof l = weak_l(eq(a, b), ax({{}, {eq(zero, zero)}}));
    CProof r = weak_l(le(a, b), ax({{}, {eq(zero, zero)}}));
    add("or-left", or_l(std::move(l), std::move(r)));
  }
  // 24. BASIC 16 instance with concrete numerals: |- 2 # 1 = 1 # 2.
  add("smash-comm-instance",
      ax({{}, {eq(t_smash(numeral(2), numeral(1)), t_smash(numeral(1), numeral(2)))}}));
  // 25. Transitivity chained by cut: a=b, b=c, c=0... keep simple:
  add("transitivity", ax({{eq(a, b), eq(b, c)}, {eq(a, c)}}));
  return out;
}

}  // namespace s2e::corpus

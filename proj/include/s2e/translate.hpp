#pragma once

// The classical side and the proof compiler: a checker for classical proofs
// (equality + BASIC axioms, predicate rules, Buss-style PIND), the admissible
// negation transformers, derivations of the translated axioms, and the full
// bottom-up translation into kernel-checked free-logic proofs.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s2e/basic_axioms.hpp"
#include "s2e/bootstrap.hpp"
#include "s2e/classical.hpp"
#include "s2e/proofs.hpp"

namespace s2e {

struct UnknownAxiom : Error {
  explicit UnknownAxiom(const std::string& w) : Error("unknown axiom: " + w) {}
};
struct UnknownRule : Error {
  explicit UnknownRule(const std::string& w) : Error("unknown rule: " + w) {}
};

// ---------------------------------------------------------------------------
// Classical axioms and matching.

struct CAxiom {
  std::string id;
  CSequent templ;
};

namespace detail {
inline bool cmatch_formula(const CFormula& templ, const CFormula& inst,
                           Substitution& sub) {
  if (templ.kind() != inst.kind()) return false;
  switch (templ.kind()) {
    case CFormula::Kind::Atom:
      return templ.pred() == inst.pred() && match_term(templ.term(0), inst.term(0), sub) &&
             match_term(templ.term(1), inst.term(1), sub);
    case CFormula::Kind::Not: return cmatch_formula(templ.sub(0), inst.sub(0), sub);
    case CFormula::Kind::And:
    case CFormula::Kind::Or:
    case CFormula::Kind::Implies:
      return cmatch_formula(templ.sub(0), inst.sub(0), sub) &&
             cmatch_formula(templ.sub(1), inst.sub(1), sub);
    default: return false;  // classical axioms are quantifier-free
  }
}

// Extracts the term filling the x-holes of a pattern, walking the instance in
// parallel; the caller verifies by substitution afterwards.
inline std::optional<Term> hole_term(const Term& pat, const std::string& x,
                                     const Term& inst) {
  if (pat.is_var() && pat.var_name() == x) return inst;
  if (pat.is_app() && inst.is_app() && pat.fn() == inst.fn() &&
      pat.args().size() == inst.args().size()) {
    for (std::size_t i = 0; i < pat.args().size(); ++i)
      if (auto t = hole_term(pat.args()[i], x, inst.args()[i])) return t;
  }
  return std::nullopt;
}

inline std::optional<Term> hole_term(const CFormula& pat, const std::string& x,
                                     const CFormula& inst) {
  if (pat.kind() != inst.kind()) return std::nullopt;
  switch (pat.kind()) {
    case CFormula::Kind::Atom: {
      if (auto t = hole_term(pat.term(0), x, inst.term(0))) return t;
      return hole_term(pat.term(1), x, inst.term(1));
    }
    case CFormula::Kind::Not: return hole_term(pat.sub(0), x, inst.sub(0));
    case CFormula::Kind::And:
    case CFormula::Kind::Or:
    case CFormula::Kind::Implies: {
      if (auto t = hole_term(pat.sub(0), x, inst.sub(0))) return t;
      return hole_term(pat.sub(1), x, inst.sub(1));
    }
    case CFormula::Kind::BForall:
    case CFormula::Kind::BExists: {
      if (auto t = hole_term(pat.bound(), x, inst.bound())) return t;
      if (pat.var() == x) return std::nullopt;  // shadowed
      return hole_term(pat.sub(0), x, inst.sub(0));
    }
    case CFormula::Kind::Forall:
    case CFormula::Kind::Exists:
      if (pat.var() == x) return std::nullopt;
      return hole_term(pat.sub(0), x, inst.sub(0));
  }
  return std::nullopt;
}
}  // namespace detail

class ClassicalSystem {
 public:
  explicit ClassicalSystem(const Registry& reg) : reg_(reg) { build(); }

  const Registry& registry() const { return reg_; }
  const std::vector<CAxiom>& axioms() const { return axioms_; }

  const CAxiom* find(const std::string& id) const {
    for (const auto& a : axioms_)
      if (a.id == id) return &a;
    return nullptr;
  }

  std::optional<std::pair<const CAxiom*, Substitution>> match_axiom(
      const CSequent& s) const {
    for (const auto& ax : axioms_) {
      if (ax.templ.ante.size() != s.ante.size() || ax.templ.succ.size() != s.succ.size())
        continue;
      Substitution sub;
      bool ok = true;
      for (std::size_t i = 0; ok && i < s.ante.size(); ++i)
        ok = detail::cmatch_formula(ax.templ.ante[i], s.ante[i], sub);
      for (std::size_t i = 0; ok && i < s.succ.size(); ++i)
        ok = detail::cmatch_formula(ax.templ.succ[i], s.succ[i], sub);
      if (ok) return std::make_pair(&ax, std::move(sub));
    }
    return std::nullopt;
  }

 private:
  void build() {
    Term a = Term::var("a"), b = Term::var("b"), c = Term::var("c");
    auto eq = [](Term l, Term r) { return CFormula::atom(Pred::Eq, std::move(l), std::move(r)); };
    axioms_.push_back({"c-eq-refl", {{}, {eq(a, a)}}});
    axioms_.push_back({"c-eq-sym", {{eq(a, b)}, {eq(b, a)}}});
    axioms_.push_back({"c-eq-trans", {{eq(a, b), eq(b, c)}, {eq(a, c)}}});
    for (SymbolId f = 0; f < reg_.size(); ++f) {
      unsigned n = reg_.arity(f);
      std::vector<Term> as, bs;
      for (unsigned i = 1; i <= n; ++i) {
        as.push_back(Term::var("a" + std::to_string(i)));
        bs.push_back(Term::var("b" + std::to_string(i)));
      }
      CSequent s;
      for (unsigned i = 0; i < n; ++i) s.ante.push_back(eq(as[i], bs[i]));
      s.succ.push_back(eq(Term::app(f, as), Term::app(f, bs)));
      axioms_.push_back({"c-eq-fun." + reg_.name(f), std::move(s)});
    }
    for (Pred p : {Pred::Eq, Pred::Le}) {
      Term a1 = Term::var("a1"), a2 = Term::var("a2");
      Term b1 = Term::var("b1"), b2 = Term::var("b2");
      CSequent s;
      s.ante = {eq(a1, b1), eq(a2, b2), CFormula::atom(p, a1, a2)};
      s.succ = {CFormula::atom(p, b1, b2)};
      axioms_.push_back(
          {std::string("c-eq-pred.") + (p == Pred::Eq ? "eq" : "le"), std::move(s)});
    }
    for (const auto& ba : basic_axioms())
      axioms_.push_back({"c-" + ba.name, CSequent{{}, {ba.formula}}});
  }

  const Registry& reg_;
  std::vector<CAxiom> axioms_;
};

// ---------------------------------------------------------------------------
// Classical proof checking.

struct CCheckFailure {
  std::string path;
  CRule rule;
  std::string reason;
};
struct CCheckReport {
  bool ok = true;
  std::vector<CCheckFailure> failures;
};

namespace detail {
inline bool alpha_eq_cspan(std::span<const CFormula> a, std::span<const CFormula> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!alpha_eq(a[i], b[i])) return false;
  return true;
}
inline std::span<const CFormula> cdrop_front(const std::vector<CFormula>& v,
                                             std::size_t k = 1) {
  return std::span<const CFormula>(v).subspan(k);
}
inline std::span<const CFormula> cdrop_back(const std::vector<CFormula>& v,
                                            std::size_t k = 1) {
  return std::span<const CFormula>(v).first(v.size() - k);
}
inline bool is_adjacent_cswap(const std::vector<CFormula>& from,
                              const std::vector<CFormula>& to) {
  if (from.size() != to.size()) return false;
  std::size_t i = 0;
  while (i < from.size() && alpha_eq(from[i], to[i])) ++i;
  if (i == from.size()) return true;
  if (i + 1 >= from.size()) return false;
  if (!alpha_eq(from[i], to[i + 1]) || !alpha_eq(from[i + 1], to[i])) return false;
  for (std::size_t k = i + 2; k < from.size(); ++k)
    if (!alpha_eq(from[k], to[k])) return false;
  return true;
}
}  // namespace detail

// Checks one classical inference; mirrors the free-logic kernel minus the
// existence bookkeeping. Buss-style PIND: the floor-half hypothesis is the
// last antecedent formula and A(a) the first succedent formula.
inline std::optional<std::string> check_cinference(CRule rule,
                                                   std::span<const CSequent> prem,
                                                   const CSequent& c,
                                                   const ClassicalSystem& sys, int i) {
  using detail::alpha_eq_cspan;
  using detail::cdrop_back;
  using detail::cdrop_front;
  if (prem.size() != premise_count(rule)) return "PremiseCountMismatch";
  auto bad = [](const char* w) { return std::optional<std::string>(w); };
  switch (rule) {
    case CRule::Id:
      if (c.ante.size() != 1 || c.succ.size() != 1 || !alpha_eq(c.ante[0], c.succ[0]))
        return bad("IdShape");
      return std::nullopt;
    case CRule::Ax:
      if (!sys.match_axiom(c)) return bad("NoAxiomMatches");
      return std::nullopt;
    case CRule::WeakL: {
      const CSequent& p = prem[0];
      if (c.ante.size() != p.ante.size() + 1 ||
          !alpha_eq_cspan(cdrop_front(c.ante), p.ante) ||
          !alpha_eq_cspan(c.succ, p.succ))
        return bad("WeakeningShape");
      return std::nullopt;
    }
    case CRule::WeakR: {
      const CSequent& p = prem[0];
      if (c.succ.size() != p.succ.size() + 1 ||
          !alpha_eq_cspan(cdrop_back(c.succ), p.succ) ||
          !alpha_eq_cspan(c.ante, p.ante))
        return bad("WeakeningShape");
      return std::nullopt;
    }
    case CRule::ContrL: {
      const CSequent& p = prem[0];
      if (p.ante.size() != c.ante.size() + 1 || c.ante.empty() ||
          !alpha_eq(p.ante[0], p.ante[1]) || !alpha_eq(c.ante[0], p.ante[0]) ||
          !alpha_eq_cspan(cdrop_front(c.ante), cdrop_front(p.ante, 2)) ||
          !alpha_eq_cspan(c.succ, p.succ))
        return bad("ContractionShape");
      return std::nullopt;
    }
    case CRule::ContrR: {
      const CSequent& p = prem[0];
      std::size_t n = p.succ.size();
      if (n != c.succ.size() + 1 || c.succ.empty() ||
          !alpha_eq(p.succ[n - 1], p.succ[n - 2]) ||
          !alpha_eq(c.succ.back(), p.succ[n - 1]) ||
          !alpha_eq_cspan(cdrop_back(c.succ), cdrop_back(p.succ, 2)) ||
          !alpha_eq_cspan(c.ante, p.ante))
        return bad("ContractionShape");
      return std::nullopt;
    }
    case CRule::ExchL:
      if (!alpha_eq_cspan(c.succ, prem[0].succ) ||
          !detail::is_adjacent_cswap(prem[0].ante, c.ante))
        return bad("ExchangeShape");
      return std::nullopt;
    case CRule::ExchR:
      if (!alpha_eq_cspan(c.ante, prem[0].ante) ||
          !detail::is_adjacent_cswap(prem[0].succ, c.succ))
        return bad("ExchangeShape");
      return std::nullopt;
    case CRule::NegL: {
      const CSequent& p = prem[0];
      if (c.ante.empty() || c.ante[0].kind() != CFormula::Kind::Not || p.succ.empty() ||
          !alpha_eq(c.ante[0].sub(0), p.succ.back()) ||
          !alpha_eq_cspan(cdrop_front(c.ante), p.ante) ||
          !alpha_eq_cspan(c.succ, cdrop_back(p.succ)))
        return bad("NegationShape");
      return std::nullopt;
    }
    case CRule::NegR: {
      const CSequent& p = prem[0];
      if (c.succ.empty() || c.succ.back().kind() != CFormula::Kind::Not ||
          p.ante.empty() || !alpha_eq(c.succ.back().sub(0), p.ante[0]) ||
          !alpha_eq_cspan(c.ante, cdrop_front(p.ante)) ||
          !alpha_eq_cspan(cdrop_back(c.succ), p.succ))
        return bad("NegationShape");
      return std::nullopt;
    }
    case CRule::ImplL: {
      const CSequent& p1 = prem[0];
      const CSequent& p2 = prem[1];
      if (c.ante.empty() || c.ante[0].kind() != CFormula::Kind::Implies ||
          p1.succ.empty() || p2.ante.empty())
        return bad("ImplicationShape");
      if (!alpha_eq(c.ante[0].sub(0), p1.succ.back()) ||
          !alpha_eq(c.ante[0].sub(1), p2.ante[0]))
        return bad("ImplicationShape");
      if (!alpha_eq_cspan(cdrop_front(c.ante), p1.ante) ||
          !alpha_eq_cspan(cdrop_front(c.ante), cdrop_front(p2.ante)) ||
          !alpha_eq_cspan(c.succ, cdrop_back(p1.succ)) ||
          !alpha_eq_cspan(c.succ, p2.succ))
        return bad("ImplicationShape");
      return std::nullopt;
    }
    case CRule::ImplR: {
      const CSequent& p = prem[0];
      if (c.succ.empty() || c.succ.back().kind() != CFormula::Kind::Implies ||
          p.ante.empty() || p.succ.empty())
        return bad("ImplicationShape");
      if (!alpha_eq(c.succ.back().sub(0), p.ante[0]) ||
          !alpha_eq(c.succ.back().sub(1), p.succ.back()))
        return bad("ImplicationShape");
      if (!alpha_eq_cspan(c.ante, cdrop_front(p.ante)) ||
          !alpha_eq_cspan(cdrop_back(c.succ), cdrop_back(p.succ)))
        return bad("ImplicationShape");
      return std::nullopt;
    }
    case CRule::AndL1:
    case CRule::AndL2: {
      const CSequent& p = prem[0];
      if (c.ante.empty() || c.ante[0].kind() != CFormula::Kind::And || p.ante.empty())
        return bad("AndShape");
      if (!alpha_eq(c.ante[0].sub(rule == CRule::AndL1 ? 0 : 1), p.ante[0]) ||
          !alpha_eq_cspan(cdrop_front(c.ante), cdrop_front(p.ante)) ||
          !alpha_eq_cspan(c.succ, p.succ))
        return bad("AndShape");
      return std::nullopt;
    }
    case CRule::AndR: {
      const CSequent& p1 = prem[0];
      const CSequent& p2 = prem[1];
      if (c.succ.empty() || c.succ.back().kind() != CFormula::Kind::And ||
          p1.succ.empty() || p2.succ.empty())
        return bad("AndShape");
      if (!alpha_eq(c.succ.back().sub(0), p1.succ.back()) ||
          !alpha_eq(c.succ.back().sub(1), p2.succ.back()) ||
          !alpha_eq_cspan(c.ante, p1.ante) || !alpha_eq_cspan(c.ante, p2.ante) ||
          !alpha_eq_cspan(cdrop_back(c.succ), cdrop_back(p1.succ)) ||
          !alpha_eq_cspan(cdrop_back(c.succ), cdrop_back(p2.succ)))
        return bad("AndShape");
      return std::nullopt;
    }
    case CRule::OrL: {
      const CSequent& p1 = prem[0];
      const CSequent& p2 = prem[1];
      if (c.ante.empty() || c.ante[0].kind() != CFormula::Kind::Or || p1.ante.empty() ||
          p2.ante.empty())
        return bad("OrShape");
      if (!alpha_eq(c.ante[0].sub(0), p1.ante[0]) ||
          !alpha_eq(c.ante[0].sub(1), p2.ante[0]) ||
          !alpha_eq_cspan(cdrop_front(c.ante), cdrop_front(p1.ante)) ||
          !alpha_eq_cspan(cdrop_front(c.ante), cdrop_front(p2.ante)) ||
          !alpha_eq_cspan(c.succ, p1.succ) || !alpha_eq_cspan(c.succ, p2.succ))
        return bad("OrShape");
      return std::nullopt;
    }
    case CRule::OrR1:
    case CRule::OrR2: {
      const CSequent& p = prem[0];
      if (c.succ.empty() || c.succ.back().kind() != CFormula::Kind::Or || p.succ.empty())
        return bad("OrShape");
      if (!alpha_eq(c.succ.back().sub(rule == CRule::OrR1 ? 0 : 1), p.succ.back()) ||
          !alpha_eq_cspan(cdrop_back(c.succ), cdrop_back(p.succ)) ||
          !alpha_eq_cspan(c.ante, p.ante))
        return bad("OrShape");
      return std::nullopt;
    }
    case CRule::ForallLb: {
      const CSequent& p = prem[0];
      if (c.ante.size() < 2 || p.ante.empty()) return bad("QuantifierShape");
      const CFormula& guard = c.ante[0];
      const CFormula& all = c.ante[1];
      if (guard.kind() != CFormula::Kind::Atom || guard.pred() != Pred::Le ||
          all.kind() != CFormula::Kind::BForall ||
          !alpha_eq(guard.term(1), all.bound()))
        return bad("QuantifierShape");
      if (occurs_in(all.var(), all.bound())) return bad("BoundVariableInBoundTerm");
      if (!alpha_eq(p.ante[0], substitute(all.sub(0), all.var(), guard.term(0))) ||
          !alpha_eq_cspan(cdrop_front(c.ante, 2), cdrop_front(p.ante)) ||
          !alpha_eq_cspan(c.succ, p.succ))
        return bad("QuantifierShape");
      return std::nullopt;
    }
    case CRule::ForallRb: {
      const CSequent& p = prem[0];
      if (c.succ.empty() || p.ante.empty() || p.succ.empty())
        return bad("QuantifierShape");
      const CFormula& all = c.succ.back();
      const CFormula& guard = p.ante[0];
      if (all.kind() != CFormula::Kind::BForall || guard.kind() != CFormula::Kind::Atom ||
          guard.pred() != Pred::Le || !guard.term(0).is_var() ||
          !alpha_eq(guard.term(1), all.bound()))
        return bad("QuantifierShape");
      const std::string& a = guard.term(0).var_name();
      if (occurs_in(a, all.bound()) || occurs_in(all.var(), all.bound()))
        return bad("BoundVariableInBoundTerm");
      if (!alpha_eq(p.succ.back(), substitute(all.sub(0), all.var(), Term::var(a))) ||
          !alpha_eq_cspan(cdrop_front(p.ante), c.ante) ||
          !alpha_eq_cspan(cdrop_back(p.succ), cdrop_back(c.succ)))
        return bad("QuantifierShape");
      if (occurs_free(a, c)) return bad("EigenvariableCaptured");
      return std::nullopt;
    }
    case CRule::ExistsLb: {
      const CSequent& p = prem[0];
      if (c.ante.empty() || p.ante.size() < 2) return bad("QuantifierShape");
      const CFormula& ex = c.ante[0];
      const CFormula& guard = p.ante[0];
      if (ex.kind() != CFormula::Kind::BExists || guard.kind() != CFormula::Kind::Atom ||
          guard.pred() != Pred::Le || !guard.term(0).is_var() ||
          !alpha_eq(guard.term(1), ex.bound()))
        return bad("QuantifierShape");
      const std::string& a = guard.term(0).var_name();
      if (occurs_in(a, ex.bound()) || occurs_in(ex.var(), ex.bound()))
        return bad("BoundVariableInBoundTerm");
      if (!alpha_eq(p.ante[1], substitute(ex.sub(0), ex.var(), Term::var(a))) ||
          !alpha_eq_cspan(cdrop_front(p.ante, 2), cdrop_front(c.ante)) ||
          !alpha_eq_cspan(p.succ, c.succ))
        return bad("QuantifierShape");
      if (occurs_free(a, c)) return bad("EigenvariableCaptured");
      return std::nullopt;
    }
    case CRule::ExistsRb: {
      const CSequent& p = prem[0];
      if (c.ante.empty() || c.succ.empty() || p.succ.empty())
        return bad("QuantifierShape");
      const CFormula& guard = c.ante[0];
      const CFormula& ex = c.succ.back();
      if (guard.kind() != CFormula::Kind::Atom || guard.pred() != Pred::Le ||
          ex.kind() != CFormula::Kind::BExists ||
          !alpha_eq(guard.term(1), ex.bound()))
        return bad("QuantifierShape");
      if (occurs_in(ex.var(), ex.bound())) return bad("BoundVariableInBoundTerm");
      if (!alpha_eq(p.succ.back(), substitute(ex.sub(0), ex.var(), guard.term(0))) ||
          !alpha_eq_cspan(cdrop_front(c.ante), p.ante) ||
          !alpha_eq_cspan(cdrop_back(c.succ), cdrop_back(p.succ)))
        return bad("QuantifierShape");
      return std::nullopt;
    }
    case CRule::ForallL: {
      const CSequent& p = prem[0];
      if (c.ante.empty() || p.ante.empty() || c.ante[0].kind() != CFormula::Kind::Forall)
        return bad("QuantifierShape");
      const CFormula& all = c.ante[0];
      std::optional<Term> t = detail::hole_term(all.sub(0), all.var(), p.ante[0]);
      if (!t) t = Term::zero();
      if (!alpha_eq(p.ante[0], substitute(all.sub(0), all.var(), *t)) ||
          !alpha_eq_cspan(cdrop_front(c.ante), cdrop_front(p.ante)) ||
          !alpha_eq_cspan(c.succ, p.succ))
        return bad("QuantifierShape");
      return std::nullopt;
    }
    case CRule::ForallR: {
      const CSequent& p = prem[0];
      if (c.succ.empty() || p.succ.empty() || c.succ.back().kind() != CFormula::Kind::Forall)
        return bad("QuantifierShape");
      const CFormula& all = c.succ.back();
      std::optional<Term> t = detail::hole_term(all.sub(0), all.var(), p.succ.back());
      std::string a;
      if (t && t->is_var())
        a = t->var_name();
      else if (!t)
        a = "a";  // vacuous quantification; any fresh name works
      else
        return bad("QuantifierShape");
      if (!alpha_eq(p.succ.back(), substitute(all.sub(0), all.var(), Term::var(a))) ||
          !alpha_eq_cspan(c.ante, p.ante) ||
          !alpha_eq_cspan(cdrop_back(c.succ), cdrop_back(p.succ)))
        return bad("QuantifierShape");
      if (t && occurs_free(a, c)) return bad("EigenvariableCaptured");
      return std::nullopt;
    }
    case CRule::ExistsL: {
      const CSequent& p = prem[0];
      if (c.ante.empty() || p.ante.empty() || c.ante[0].kind() != CFormula::Kind::Exists)
        return bad("QuantifierShape");
      const CFormula& ex = c.ante[0];
      std::optional<Term> t = detail::hole_term(ex.sub(0), ex.var(), p.ante[0]);
      std::string a;
      if (t && t->is_var())
        a = t->var_name();
      else if (!t)
        a = "a";
      else
        return bad("QuantifierShape");
      if (!alpha_eq(p.ante[0], substitute(ex.sub(0), ex.var(), Term::var(a))) ||
          !alpha_eq_cspan(cdrop_front(p.ante), cdrop_front(c.ante)) ||
          !alpha_eq_cspan(p.succ, c.succ))
        return bad("QuantifierShape");
      if (t && occurs_free(a, c)) return bad("EigenvariableCaptured");
      return std::nullopt;
    }
    case CRule::ExistsR: {
      const CSequent& p = prem[0];
      if (c.succ.empty() || p.succ.empty() || c.succ.back().kind() != CFormula::Kind::Exists)
        return bad("QuantifierShape");
      const CFormula& ex = c.succ.back();
      std::optional<Term> t = detail::hole_term(ex.sub(0), ex.var(), p.succ.back());
      if (!t) t = Term::zero();
      if (!alpha_eq(p.succ.back(), substitute(ex.sub(0), ex.var(), *t)) ||
          !alpha_eq_cspan(c.ante, p.ante) ||
          !alpha_eq_cspan(cdrop_back(c.succ), cdrop_back(p.succ)))
        return bad("QuantifierShape");
      return std::nullopt;
    }
    case CRule::Cut: {
      const CSequent& p1 = prem[0];
      const CSequent& p2 = prem[1];
      if (p1.succ.empty() || p2.ante.empty() ||
          !alpha_eq(p1.succ.back(), p2.ante[0]))
        return bad("CutShape");
      if (c.ante.size() != p1.ante.size() + p2.ante.size() - 1 ||
          c.succ.size() != p1.succ.size() - 1 + p2.succ.size())
        return bad("CutShape");
      for (std::size_t i = 0; i < p1.ante.size(); ++i)
        if (!alpha_eq(c.ante[i], p1.ante[i])) return bad("CutShape");
      for (std::size_t i = 1; i < p2.ante.size(); ++i)
        if (!alpha_eq(c.ante[p1.ante.size() + i - 1], p2.ante[i])) return bad("CutShape");
      for (std::size_t i = 0; i + 1 < p1.succ.size(); ++i)
        if (!alpha_eq(c.succ[i], p1.succ[i])) return bad("CutShape");
      for (std::size_t i = 0; i < p2.succ.size(); ++i)
        if (!alpha_eq(c.succ[p1.succ.size() - 1 + i], p2.succ[i])) return bad("CutShape");
      return std::nullopt;
    }
    case CRule::PInd: {
      // Premise: Gamma, A(half a) |- A(a), Delta.
      // Conclusion: Gamma, A(0) |- A(t), Delta.
      const CSequent& p = prem[0];
      if (p.ante.empty() || p.succ.empty() || c.ante.empty() || c.succ.empty())
        return bad("PIndShape");
      const CFormula& body = p.succ[0];
      auto gammas = cdrop_back(p.ante);
      auto deltas = cdrop_front(p.succ);
      if (!alpha_eq_cspan(cdrop_back(c.ante), gammas) ||
          !alpha_eq_cspan(cdrop_front(c.succ), deltas))
        return bad("PIndShape");
      // Find the induction variable.
      std::string a;
      bool degenerate = true;
      for (const auto& v : free_vars(body)) {
        if (alpha_eq(substitute(body, v, t_half(Term::var(v))), p.ante.back())) {
          a = v;
          degenerate = false;
          break;
        }
      }
      if (degenerate) {
        if (!alpha_eq(p.ante.back(), body) || !alpha_eq(c.ante.back(), body) ||
            !alpha_eq(c.succ[0], body))
          return bad("PIndShape");
        if (!in_sigma_b(body, static_cast<unsigned>(std::max(i, 0))))
          return bad("InductionClassExceeded");
        if (i < 0) return bad("InductionNotAllowed");
        return std::nullopt;
      }
      if (i < 0) return bad("InductionNotAllowed");
      if (!in_sigma_b(body, static_cast<unsigned>(i))) return bad("InductionClassExceeded");
      if (!alpha_eq(c.ante.back(), substitute(body, a, Term::zero())))
        return bad("PIndShape");
      std::optional<Term> t = detail::hole_term(body, a, c.succ[0]);
      if (!t) return bad("PIndShape");
      if (!alpha_eq(c.succ[0], substitute(body, a, *t))) return bad("PIndShape");
      for (const auto& g : gammas)
        if (occurs_free(a, g)) return bad("EigenvariableCaptured");
      for (const auto& d : deltas)
        if (occurs_free(a, d)) return bad("EigenvariableCaptured");
      return std::nullopt;
    }
  }
  return bad("UnknownRule");
}

namespace detail {
inline bool check_cproof_walk(const CProof& p, int i, const ClassicalSystem& sys,
                              const std::string& path, CCheckReport& rep) {
  bool ok = true;
  for (std::size_t k = 0; k < p.children().size(); ++k)
    ok &= check_cproof_walk(p.children()[k], i, sys, path + "." + std::to_string(k), rep);
  std::vector<CSequent> prem;
  for (const auto& ch : p.children()) prem.push_back(ch.conclusion());
  auto err = check_cinference(p.rule(), prem, p.conclusion(), sys, i);
  if (err) {
    rep.failures.push_back({path, p.rule(), *err});
    ok = false;
  }
  return ok;
}
}  // namespace detail

inline CCheckReport check_cproof(const CProof& w, int i, const ClassicalSystem& sys) {
  CCheckReport rep;
  rep.ok = detail::check_cproof_walk(w, i, sys, "root", rep);
  return rep;
}

// ---------------------------------------------------------------------------
// The translator.

struct TraceEntry {
  std::string path;
  CRule rule;
  std::string note;
};
using TranslationTrace = std::vector<TraceEntry>;

namespace detail {
// The sequent with one occurrence of f (alpha) moved to the antecedent front.
inline Sequent move_ante_front(const Sequent& s, const Formula& f) {
  Sequent t = s;
  auto it = std::find_if(t.ante.begin(), t.ante.end(),
                         [&](const Formula& g) { return alpha_eq(g, f); });
  if (it == t.ante.end()) throw ShapeMismatch("formula not in antecedent");
  Formula g = *it;
  t.ante.erase(it);
  t.ante.insert(t.ante.begin(), g);
  return t;
}

inline Sequent move_succ_back(const Sequent& s, const Formula& f) {
  Sequent t = s;
  auto it = std::find_if(t.succ.begin(), t.succ.end(),
                         [&](const Formula& g) { return alpha_eq(g, f); });
  if (it == t.succ.end()) throw ShapeMismatch("formula not in succedent");
  Formula g = *it;
  t.succ.erase(it);
  t.succ.push_back(g);
  return t;
}

// Replace one alpha-occurrence of `from` in the antecedent by `to`, moved to
// the front.
inline Sequent swap_ante_front(const Sequent& s, const Formula& from, const Formula& to) {
  Sequent t = s;
  auto it = std::find_if(t.ante.begin(), t.ante.end(),
                         [&](const Formula& g) { return alpha_eq(g, from); });
  if (it == t.ante.end()) throw ShapeMismatch("formula not in antecedent");
  t.ante.erase(it);
  t.ante.insert(t.ante.begin(), to);
  return t;
}
}  // namespace detail

class Translator {
 public:
  Translator(Bootstrap& boot, const ClassicalSystem& csys)
      : boot_(boot), csys_(csys), reg_(boot.registry()) {}

  Bootstrap& boot() { return boot_; }
  const ClassicalSystem& classical() const { return csys_; }

  // --------------------------------------------------------------
  // Or-tree surgery.

  // From Gamma |- Delta, X | Y derive Gamma |- Delta, X, Y.
  Proof or_split(Proof w) const {
    const Formula& d = w.conclusion().succ.back();
    if (d.kind() != Formula::Kind::Or) throw ShapeMismatch("or_split");
    Formula x = d.sub(0), y = d.sub(1);
    Proof p1 = pf::weak_r(pf::id(x), y);
    Proof p2 = pf::exch_r(pf::weak_r(pf::id(y), x), 0);
    Proof split = pf::or_l(std::move(p1), std::move(p2));
    return pf::cut(std::move(w), std::move(split));
  }

  // Lifts the last succedent formula, which must be alpha-equal to a subtree
  // of the or-tree T, up to T itself by or-introductions.
  Proof or_lift(Proof w, const Formula& t) const {
    for (;;) {
      const Formula& f = w.conclusion().succ.back();
      if (alpha_eq(f, t)) return w;
      // Find the path root->f.
      std::vector<std::pair<bool, Formula>> path;  // (went_left, sibling)
      std::function<bool(const Formula&)> find = [&](const Formula& node) -> bool {
        if (alpha_eq(node, f)) return true;
        if (node.kind() != Formula::Kind::Or) return false;
        if (find(node.sub(0))) {
          path.push_back({true, node.sub(1)});
          return true;
        }
        if (find(node.sub(1))) {
          path.push_back({false, node.sub(0)});
          return true;
        }
        return false;
      };
      if (!find(t)) throw ShapeMismatch("or_lift: not a subtree");
      // path is ordered leaf-to-root already (push after recursion).
      const auto& [went_left, sibling] = path.front();
      w = went_left ? pf::or_r1(sibling, std::move(w)) : pf::or_r2(sibling, std::move(w));
    }
  }

  // Lifts the last `count` succedent formulas into copies of T and contracts
  // them to a single copy.
  Proof assemble_or(Proof w, const Formula& t, std::size_t count) const {
    if (count == 0) throw ShapeMismatch("assemble_or: empty");
    for (std::size_t k = 0; k < count; ++k) {
      w = or_lift(std::move(w), t);
      // Bubble the fresh copy left past the remaining candidates so the next
      // one sits at the back.
      std::size_t rem = count - 1 - k;
      std::size_t n = w.conclusion().succ.size();
      for (std::size_t s = 0; s < rem; ++s) w = pf::exch_r(std::move(w), n - 2 - s);
    }
    for (std::size_t k = 1; k < count; ++k) w = pf::contr_r(std::move(w));
    return w;
  }

  // --------------------------------------------------------------
  // Admissible negation transformers (Lemmata for the neg rules).
  //
  // neg_right: from a proof of ..., A*, ... |- Delta (A* in the antecedent)
  // derive (same minus A*) |- Delta, (not A)*. The antecedent must contain
  // E(v) for the free variables of A.
  Proof neg_right(Proof w, const CFormula& a) {
    Formula astar = star_translate(a);
    // Normalize: A* first.
    Sequent norm = w.conclusion();
    {
      auto it = std::find_if(norm.ante.begin(), norm.ante.end(),
                             [&](const Formula& g) { return alpha_eq(g, astar); });
      if (it == norm.ante.end()) throw ShapeMismatch("neg_right: formula not present");
      Formula g = *it;
      norm.ante.erase(it);
      norm.ante.insert(norm.ante.begin(), g);
      w = adjust(std::move(w), norm);
    }
    Sequent target = norm;
    target.ante.erase(target.ante.begin());
    target.succ.push_back(star_translate(CFormula::lnot(a)));

    switch (a.kind()) {
      case CFormula::Kind::Atom: {
        Proof q = pf::neg_r(std::move(w));
        q = boot_.cut_loose(Formula::e(a.term(0)), boot_.convergence_proof(a.term(0)),
                            std::move(q));
        q = boot_.cut_loose(Formula::e(a.term(1)), boot_.convergence_proof(a.term(1)),
                            std::move(q));
        return adjust(std::move(q), target);
      }
      case CFormula::Kind::Not: {
        // (not not A1)* = A1*: start from E(vars), A1* |- A1* and apply the
        // IH to A1, then cut with w.
        const CFormula& a1 = a.sub(0);
        Formula a1star = star_translate(a1);
        Sequent start;
        start.ante.push_back(a1star);
        for (const auto& v : free_vars(a1)) start.ante.push_back(Formula::e(Term::var(v)));
        start.succ.push_back(a1star);
        Proof base = adjust(pf::id(a1star), start);
        Proof flipped = neg_right(std::move(base), a1);
        // flipped: E(vars) |- A1*, (not A1)*
        return boot_.cut_into(astar, std::move(flipped), std::move(w), target);
      }
      case CFormula::Kind::And: {
        // Split A1* & A2* into separate hypotheses, apply the IH twice, then
        // or-assemble. First a1s, a2s |- a1s & a2s.
        Formula a1s = star_translate(a.sub(0));
        Formula a2s = star_translate(a.sub(1));
        Proof left = adjust(pf::id(a1s), Sequent{{a1s, a2s}, {a1s}});
        Proof right = adjust(pf::id(a2s), Sequent{{a1s, a2s}, {a2s}});
        Proof both = pf::and_r(std::move(left), std::move(right));
        Sequent mid = norm;
        mid.ante.erase(mid.ante.begin());
        mid.ante.insert(mid.ante.begin(), a2s);
        mid.ante.insert(mid.ante.begin(), a1s);
        Proof q = boot_.cut_into(astar, std::move(both), std::move(w), mid);
        q = neg_right(std::move(q), a.sub(0));
        q = neg_right(std::move(q), a.sub(1));
        // q: rest |- Delta, (not A1)*, (not A2)*
        q = assemble_or(std::move(q), target.succ.back(), 2);
        return adjust(std::move(q), target);
      }
      case CFormula::Kind::Or: {
        Formula a1s = star_translate(a.sub(0));
        Formula a2s = star_translate(a.sub(1));
        Sequent mid1 = norm;
        mid1.ante[0] = a1s;
        Proof w1 = boot_.cut_into(astar, pf::or_r1(a2s, pf::id(a1s)), w, mid1);
        Sequent mid2 = norm;
        mid2.ante[0] = a2s;
        Proof w2 = boot_.cut_into(astar, pf::or_r2(a1s, pf::id(a2s)), w, mid2);
        Proof v1 = neg_right(std::move(w1), a.sub(0));
        Proof v2 = neg_right(std::move(w2), a.sub(1));
        Sequent c1 = target;
        c1.succ.back() = star_translate(CFormula::lnot(a.sub(0)));
        Sequent c2 = target;
        c2.succ.back() = star_translate(CFormula::lnot(a.sub(1)));
        Proof q = pf::and_r(adjust(std::move(v1), c1), adjust(std::move(v2), c2));
        return adjust(std::move(q), target);
      }
      case CFormula::Kind::Implies: {
        // A* = (not A1)* | A2*.
        CFormula na1 = CFormula::lnot(a.sub(0));
        Formula na1s = star_translate(na1);
        Formula a2s = star_translate(a.sub(1));
        Sequent mid1 = norm;
        mid1.ante[0] = na1s;
        Proof w1 = boot_.cut_into(astar, pf::or_r1(a2s, pf::id(na1s)), w, mid1);
        Sequent mid2 = norm;
        mid2.ante[0] = a2s;
        Proof w2 = boot_.cut_into(astar, pf::or_r2(na1s, pf::id(a2s)), w, mid2);
        Proof v1 = neg_right(std::move(w1), na1);  // ... |- Delta, A1*
        Proof v2 = neg_right(std::move(w2), a.sub(1));
        Sequent c1 = target;
        c1.succ.back() = star_translate(a.sub(0));
        Sequent c2 = target;
        c2.succ.back() = star_translate(CFormula::lnot(a.sub(1)));
        Proof q = pf::and_r(adjust(std::move(v1), c1), adjust(std::move(v2), c2));
        return adjust(std::move(q), target);
      }
      case CFormula::Kind::BForall:
      case CFormula::Kind::BExists: {
        bool is_forall = a.kind() == CFormula::Kind::BForall;
        const Term& bound = a.bound();
        std::vector<std::string> avoid = free_vars(a);
        for (const auto& g : norm.ante)
          for (const auto& v : free_vars(g)) avoid.push_back(v);
        for (const auto& g : norm.succ)
          for (const auto& v : free_vars(g)) avoid.push_back(v);
        std::string ev = fresh_name("e", avoid);
        CFormula body_cl = substitute(a.sub(0), a.var(), Term::var(ev));
        Formula bodys = star_translate(body_cl);
        Formula nbodys = star_translate(CFormula::lnot(body_cl));
        // E(vars), Ee, body* |- body*; IH gives ... |- body*, (not body)*.
        Sequent start;
        start.ante.push_back(bodys);
        start.ante.push_back(Formula::e(Term::var(ev)));
        for (const auto& v : free_vars(body_cl))
          if (v != ev) start.ante.push_back(Formula::e(Term::var(v)));
        start.succ.push_back(bodys);
        Proof q = neg_right(adjust(pf::id(bodys), start), body_cl);
        // q: Ee, E(vars) |- body*(e), (not body)*(e)
        Formula guard = Formula::atom(Pred::Le, Term::var(ev), bound);
        if (is_forall) {
          // R-exists-b on (not body)*, then R-forall-b on body*.
          q = pf::exists_rb(a.var(), bound,
                            star_translate(CFormula::lnot(a.sub(0))), Term::var(ev),
                            std::move(q));
          // q: e<=bound, Ee, Evars |- body*(e), exists...
          q = boot_.cut_loose(Formula::e(Term::var(ev)),
                              boot_.ax_ep(Pred::Le, Term::var(ev), bound, 1),
                              std::move(q));
          Sequent pre;
          pre.ante.push_back(guard);
          for (const auto& v : free_vars(a)) pre.ante.push_back(Formula::e(Term::var(v)));
          pre.succ.push_back(star_translate(CFormula::lnot(a)));
          pre.succ.push_back(substitute(star_translate(a.sub(0)), a.var(), Term::var(ev)));
          q = adjust(std::move(q), pre);
          q = pf::forall_rb(a.var(), star_translate(a.sub(0)), std::move(q));
          // q: E bound, Evars |- (not A)*, forall...
        } else {
          // R-exists-b on body*, then R-forall-b on (not body)*.
          Sequent pre0 = q.conclusion();
          std::swap(pre0.succ[pre0.succ.size() - 1], pre0.succ[pre0.succ.size() - 2]);
          q = adjust(std::move(q), pre0);
          q = pf::exists_rb(a.var(), bound, star_translate(a.sub(0)), Term::var(ev),
                            std::move(q));
          q = boot_.cut_loose(Formula::e(Term::var(ev)),
                              boot_.ax_ep(Pred::Le, Term::var(ev), bound, 1),
                              std::move(q));
          Sequent pre;
          pre.ante.push_back(guard);
          for (const auto& v : free_vars(a)) pre.ante.push_back(Formula::e(Term::var(v)));
          pre.succ.push_back(star_translate(a));
          pre.succ.push_back(substitute(nbodys, ev, Term::var(ev)));
          q = adjust(std::move(q), pre);
          q = pf::forall_rb(a.var(), star_translate(demorgan_dual(a.sub(0))),
                            std::move(q));
        }
        // Discharge E bound via convergence.
        q = boot_.cut_loose(Formula::e(bound), boot_.convergence_proof(bound),
                            std::move(q));
        // Cut the surviving A*-side formula against w.
        return boot_.cut_into(astar, std::move(q), std::move(w), target);
      }
      case CFormula::Kind::Forall:
      case CFormula::Kind::Exists: {
        bool is_forall = a.kind() == CFormula::Kind::Forall;
        std::vector<std::string> avoid = free_vars(a);
        for (const auto& g : norm.ante)
          for (const auto& v : free_vars(g)) avoid.push_back(v);
        for (const auto& g : norm.succ)
          for (const auto& v : free_vars(g)) avoid.push_back(v);
        std::string ev = fresh_name("e", avoid);
        CFormula body_cl = substitute(a.sub(0), a.var(), Term::var(ev));
        Formula bodys = star_translate(body_cl);
        Sequent start;
        start.ante.push_back(bodys);
        start.ante.push_back(Formula::e(Term::var(ev)));
        for (const auto& v : free_vars(body_cl))
          if (v != ev) start.ante.push_back(Formula::e(Term::var(v)));
        start.succ.push_back(bodys);
        Proof q = neg_right(adjust(pf::id(bodys), start), body_cl);
        if (is_forall) {
          q = pf::exists_r(a.var(), star_translate(CFormula::lnot(a.sub(0))),
                           Term::var(ev), std::move(q));
          // q: Ee, Ee, Evars |- body*, exists x. (not body)*
          Sequent pre;
          pre.ante.push_back(Formula::e(Term::var(ev)));
          for (const auto& v : free_vars(a)) pre.ante.push_back(Formula::e(Term::var(v)));
          pre.succ.push_back(star_translate(CFormula::lnot(a)));
          pre.succ.push_back(substitute(star_translate(a.sub(0)), a.var(), Term::var(ev)));
          q = adjust(std::move(q), pre);
          q = pf::forall_r(a.var(), star_translate(a.sub(0)), std::move(q));
        } else {
          Sequent pre0 = q.conclusion();
          std::swap(pre0.succ[pre0.succ.size() - 1], pre0.succ[pre0.succ.size() - 2]);
          q = adjust(std::move(q), pre0);
          q = pf::exists_r(a.var(), star_translate(a.sub(0)), Term::var(ev),
                           std::move(q));
          Sequent pre;
          pre.ante.push_back(Formula::e(Term::var(ev)));
          for (const auto& v : free_vars(a)) pre.ante.push_back(Formula::e(Term::var(v)));
          pre.succ.push_back(star_translate(a));
          pre.succ.push_back(
              substitute(star_translate(demorgan_dual(a.sub(0))), a.var(), Term::var(ev)));
          q = adjust(std::move(q), pre);
          q = pf::forall_r(a.var(), star_translate(demorgan_dual(a.sub(0))),
                           std::move(q));
        }
        return boot_.cut_into(astar, std::move(q), std::move(w), target);
      }
    }
    throw Error("unreachable");
  }

  // neg_left: from ... |- Delta, A* (last occurrence) derive
  // (not A)*, ... |- Delta.
  Proof neg_left(Proof w, const CFormula& a) {
    Formula astar = star_translate(a);
    Sequent norm = w.conclusion();
    {
      auto it = std::find_if(norm.succ.rbegin(), norm.succ.rend(),
                             [&](const Formula& g) { return alpha_eq(g, astar); });
      if (it == norm.succ.rend()) throw ShapeMismatch("neg_left: formula not present");
      Formula g = *it;
      norm.succ.erase(std::next(it).base());
      norm.succ.push_back(g);
      w = adjust(std::move(w), norm);
    }
    Sequent target = norm;
    target.succ.pop_back();
    target.ante.insert(target.ante.begin(), star_translate(CFormula::lnot(a)));

    switch (a.kind()) {
      case CFormula::Kind::Atom: return adjust(pf::neg_l(std::move(w)), target);
      case CFormula::Kind::Not: {
        const CFormula& a1 = a.sub(0);
        Formula a1star = star_translate(a1);
        Sequent start;
        start.ante.push_back(a1star);
        for (const auto& v : free_vars(a1)) start.ante.push_back(Formula::e(Term::var(v)));
        start.succ.push_back(a1star);
        Proof flipped = neg_left(adjust(pf::id(a1star), start), a1);
        // flipped: (not A1)*, A1*, E(vars) |- ; cut w's succedent A* = (not A1)*.
        return boot_.cut_into(astar, std::move(w), std::move(flipped), target);
      }
      case CFormula::Kind::And: {
        Formula a1s = star_translate(a.sub(0));
        Formula a2s = star_translate(a.sub(1));
        Sequent mid1 = norm;
        mid1.succ.back() = a1s;
        Proof w1 = boot_.cut_into(astar, w, pf::and_l1(a2s, pf::id(a1s)), mid1);
        Sequent mid2 = norm;
        mid2.succ.back() = a2s;
        Proof w2 = boot_.cut_into(astar, w, pf::and_l2(a1s, pf::id(a2s)), mid2);
        Proof u1 = neg_left(std::move(w1), a.sub(0));
        Proof u2 = neg_left(std::move(w2), a.sub(1));
        Proof q = pf::or_l(std::move(u1), std::move(u2));
        return adjust(std::move(q), target);
      }
      case CFormula::Kind::Or: {
        Formula a1s = star_translate(a.sub(0));
        Formula a2s = star_translate(a.sub(1));
        // A1* | A2* |- A1*, A2*.
        Proof split = pf::or_l(pf::weak_r(pf::id(a1s), a2s),
                               pf::exch_r(pf::weak_r(pf::id(a2s), a1s), 0));
        Sequent mid = norm;
        mid.succ.back() = a1s;
        mid.succ.push_back(a2s);
        Proof q = boot_.cut_into(astar, std::move(w), std::move(split), mid);
        q = neg_left(std::move(q), a.sub(1));
        q = neg_left(std::move(q), a.sub(0));
        // q: (not A1)*, (not A2)*, rest |- Delta; conjoin.
        Formula n1 = star_translate(CFormula::lnot(a.sub(0)));
        Formula n2 = star_translate(CFormula::lnot(a.sub(1)));
        Proof r = pf::and_l1(n2, std::move(q));
        r = pf::exch_l(std::move(r), 0);
        r = pf::and_l2(n1, std::move(r));
        r = pf::contr_l(std::move(r));
        return adjust(std::move(r), target);
      }
      case CFormula::Kind::Implies: {
        Formula n1s = star_translate(CFormula::lnot(a.sub(0)));
        Formula a2s = star_translate(a.sub(1));
        Proof split = pf::or_l(pf::weak_r(pf::id(n1s), a2s),
                               pf::exch_r(pf::weak_r(pf::id(a2s), n1s), 0));
        Sequent mid = norm;
        mid.succ.back() = n1s;
        mid.succ.push_back(a2s);
        Proof q = boot_.cut_into(astar, std::move(w), std::move(split), mid);
        q = neg_left(std::move(q), a.sub(1));
        q = neg_left(std::move(q), CFormula::lnot(a.sub(0)));
        // q: A1*, (not A2)*, rest |- Delta.
        Formula a1s = star_translate(a.sub(0));
        Formula n2 = star_translate(CFormula::lnot(a.sub(1)));
        Proof r = pf::and_l1(n2, std::move(q));
        r = pf::exch_l(std::move(r), 0);
        r = pf::and_l2(a1s, std::move(r));
        r = pf::contr_l(std::move(r));
        return adjust(std::move(r), target);
      }
      case CFormula::Kind::BForall:
      case CFormula::Kind::BExists: {
        bool is_forall = a.kind() == CFormula::Kind::BForall;
        const Term& bound = a.bound();
        std::vector<std::string> avoid = free_vars(a);
        for (const auto& g : norm.ante)
          for (const auto& v : free_vars(g)) avoid.push_back(v);
        for (const auto& g : norm.succ)
          for (const auto& v : free_vars(g)) avoid.push_back(v);
        std::string ev = fresh_name("e", avoid);
        CFormula body_cl = substitute(a.sub(0), a.var(), Term::var(ev));
        Formula bodys = star_translate(body_cl);
        Formula nbodys = star_translate(CFormula::lnot(body_cl));
        Sequent start;
        start.ante.push_back(bodys);
        start.ante.push_back(Formula::e(Term::var(ev)));
        for (const auto& v : free_vars(body_cl))
          if (v != ev) start.ante.push_back(Formula::e(Term::var(v)));
        start.succ.push_back(bodys);
        Proof q = neg_left(adjust(pf::id(bodys), start), body_cl);
        // q: (not body)*(e), body*(e), Ee, Evars |-
        Formula guard = Formula::atom(Pred::Le, Term::var(ev), bound);
        if (is_forall) {
          // L-forall-b on body, then L-exists-b on (not body).
          Sequent pre = q.conclusion();
          std::swap(pre.ante[0], pre.ante[1]);
          q = adjust(std::move(q), pre);
          q = pf::forall_lb(a.var(), bound, star_translate(a.sub(0)), Term::var(ev),
                            std::move(q));
          // q: e<=bound, forall*, (not body)*(e), Ee, Evars |-
          q = boot_.cut_loose(Formula::e(Term::var(ev)),
                              boot_.ax_ep(Pred::Le, Term::var(ev), bound, 1),
                              std::move(q));
          Sequent pre2;
          pre2.ante.push_back(guard);
          pre2.ante.push_back(substitute(star_translate(demorgan_dual(a.sub(0))),
                                         a.var(), Term::var(ev)));
          pre2.ante.push_back(astar);
          for (const auto& v : free_vars(a)) pre2.ante.push_back(Formula::e(Term::var(v)));
          q = adjust(std::move(q), pre2);
          q = pf::exists_lb(a.var(), star_translate(demorgan_dual(a.sub(0))),
                            std::move(q));
        } else {
          q = pf::forall_lb(a.var(), bound, star_translate(demorgan_dual(a.sub(0))),
                            Term::var(ev), std::move(q));
          q = boot_.cut_loose(Formula::e(Term::var(ev)),
                              boot_.ax_ep(Pred::Le, Term::var(ev), bound, 1),
                              std::move(q));
          Sequent pre2;
          pre2.ante.push_back(guard);
          pre2.ante.push_back(substitute(star_translate(a.sub(0)), a.var(), Term::var(ev)));
          pre2.ante.push_back(star_translate(CFormula::lnot(a)));
          for (const auto& v : free_vars(a)) pre2.ante.push_back(Formula::e(Term::var(v)));
          q = adjust(std::move(q), pre2);
          q = pf::exists_lb(a.var(), star_translate(a.sub(0)), std::move(q));
        }
        // q: exists-side, forall-side, Evars |- ; cut the A*-side against w.
        return boot_.cut_into(astar, std::move(w), std::move(q), target);
      }
      case CFormula::Kind::Forall:
      case CFormula::Kind::Exists: {
        bool is_forall = a.kind() == CFormula::Kind::Forall;
        std::vector<std::string> avoid = free_vars(a);
        for (const auto& g : norm.ante)
          for (const auto& v : free_vars(g)) avoid.push_back(v);
        for (const auto& g : norm.succ)
          for (const auto& v : free_vars(g)) avoid.push_back(v);
        std::string ev = fresh_name("e", avoid);
        CFormula body_cl = substitute(a.sub(0), a.var(), Term::var(ev));
        Formula bodys = star_translate(body_cl);
        Sequent start;
        start.ante.push_back(bodys);
        start.ante.push_back(Formula::e(Term::var(ev)));
        for (const auto& v : free_vars(body_cl))
          if (v != ev) start.ante.push_back(Formula::e(Term::var(v)));
        start.succ.push_back(bodys);
        Proof q = neg_left(adjust(pf::id(bodys), start), body_cl);
        if (is_forall) {
          Sequent pre = q.conclusion();
          std::swap(pre.ante[0], pre.ante[1]);
          q = adjust(std::move(q), pre);
          q = pf::forall_l(a.var(), star_translate(a.sub(0)), Term::var(ev),
                           std::move(q));
          // q: Ee, forall*, (not-body)*(e), Ee, Evars |-
          Sequent pre2;
          pre2.ante.push_back(Formula::e(Term::var(ev)));
          pre2.ante.push_back(substitute(star_translate(demorgan_dual(a.sub(0))),
                                         a.var(), Term::var(ev)));
          pre2.ante.push_back(astar);
          for (const auto& v : free_vars(a)) pre2.ante.push_back(Formula::e(Term::var(v)));
          q = adjust(std::move(q), pre2);
          q = pf::exists_l(a.var(), star_translate(demorgan_dual(a.sub(0))),
                           std::move(q));
        } else {
          q = pf::forall_l(a.var(), star_translate(demorgan_dual(a.sub(0))),
                           Term::var(ev), std::move(q));
          Sequent pre2;
          pre2.ante.push_back(Formula::e(Term::var(ev)));
          pre2.ante.push_back(substitute(star_translate(a.sub(0)), a.var(), Term::var(ev)));
          pre2.ante.push_back(star_translate(CFormula::lnot(a)));
          for (const auto& v : free_vars(a)) pre2.ante.push_back(Formula::e(Term::var(v)));
          q = adjust(std::move(q), pre2);
          q = pf::exists_l(a.var(), star_translate(a.sub(0)), std::move(q));
        }
        return boot_.cut_into(astar, std::move(w), std::move(q), target);
      }
    }
    throw Error("unreachable");
  }

  // --------------------------------------------------------------
  // Axiom translations.

  // Proof of the *-translation of |- A for a shipped BASIC axiom. Memoized.
  Proof basic_axiom_proof(const std::string& name) {
    auto hit = axiom_proof_memo_.find(name);
    if (hit != axiom_proof_memo_.end()) return hit->second;
    for (const auto& ba : basic_axioms())
      if (ba.name == name) {
        Proof p = prove_star_closed(ba.formula);
        axiom_proof_memo_.emplace(name, p);
        return p;
      }
    throw UnknownAxiom(name);
  }

  // Proof of the *-translation of a classical equality axiom (by id).
  Proof equality_axiom_proof(const std::string& id) {
    auto hit = axiom_proof_memo_.find(id);
    if (hit != axiom_proof_memo_.end()) return hit->second;
    Proof p = build_equality_axiom_proof(id);
    axiom_proof_memo_.emplace(id, p);
    return p;
  }

  Proof build_equality_axiom_proof(const std::string& id) {
    const CAxiom* ax = csys_.find(id);
    if (!ax || id.rfind("c-eq", 0) != 0) throw UnknownAxiom(id);
    Sequent target = star_translate_seq(ax->templ);
    if (id == "c-eq-refl") return adjust(boot_.ax_refl(Term::var("a")), target);
    if (id == "c-eq-sym")
      return adjust(boot_.ax_sym(Term::var("a"), Term::var("b")), target);
    if (id == "c-eq-trans")
      return adjust(boot_.ax_trans(Term::var("a"), Term::var("b"), Term::var("c")),
                    target);
    if (id.rfind("c-eq-fun.", 0) == 0) {
      SymbolId f = reg_.id_of(id.substr(9));
      unsigned n = reg_.arity(f);
      std::vector<Term> as, bs;
      for (unsigned i = 1; i <= n; ++i) {
        as.push_back(Term::var("a" + std::to_string(i)));
        bs.push_back(Term::var("b" + std::to_string(i)));
      }
      Sequent inst;
      inst.ante.push_back(Formula::e(Term::app(f, as)));
      for (unsigned i = 0; i < n; ++i)
        inst.ante.push_back(Formula::atom(Pred::Eq, as[i], bs[i]));
      inst.succ.push_back(
          Formula::atom(Pred::Eq, Term::app(f, as), Term::app(f, bs)));
      Proof q = pf::ax(inst);
      q = boot_.cut_loose(Formula::e(Term::app(f, as)), boot_.totality_proof(f),
                          std::move(q));
      return adjust(std::move(q), target);
    }
    if (id.rfind("c-eq-pred.", 0) == 0) {
      Pred p = id.substr(10) == "eq" ? Pred::Eq : Pred::Le;
      Term a1 = Term::var("a1"), a2 = Term::var("a2");
      Term b1 = Term::var("b1"), b2 = Term::var("b2");
      Sequent inst;
      inst.ante = {Formula::atom(Pred::Eq, a1, b1), Formula::atom(Pred::Eq, a2, b2),
                   Formula::atom(p, a1, a2)};
      inst.succ = {Formula::atom(p, b1, b2)};
      return adjust(pf::ax(inst), target);
    }
    throw UnknownAxiom(id);
  }

  // --------------------------------------------------------------
  // PIND translation (Buss floor-half form to PIND-E).

  Proof translate_pind(Proof premise_star, const CFormula& body, const std::string& a,
                       const Term& t, const CSequent& classical_concl, int i) {
    if (!in_sigma_b(body, static_cast<unsigned>(std::max(i, 0))))
      throw ClassViolation("PIND body exceeds Sigma^b_i");
    Sequent target = star_translate_seq(classical_concl);
    if (!occurs_free(a, body)) return adjust(std::move(premise_star), target);

    Formula bstar = star_translate(body);
    std::vector<std::string> ctx;  // params of A and vars of the contexts
    for (const auto& v : free_vars(classical_concl)) {
      if (v != a) ctx.push_back(v);
    }
    for (const auto& v : free_vars(body))
      if (v != a && std::find(ctx.begin(), ctx.end(), v) == ctx.end()) ctx.push_back(v);
    std::vector<std::string> ctx_a = ctx;
    ctx_a.push_back(a);

    // Gamma/Delta on the star side, a-free.
    std::vector<Formula> gamma;
    for (const auto& v : ctx) gamma.push_back(Formula::e(Term::var(v)));
    for (std::size_t k = 0; k + 1 < classical_concl.ante.size(); ++k)
      gamma.push_back(star_translate(classical_concl.ante[k]));
    gamma.push_back(substitute(bstar, a, Term::zero()));  // A(0)* joins the context
    std::vector<Formula> delta;
    for (std::size_t k = 1; k < classical_concl.succ.size(); ++k)
      delta.push_back(star_translate(classical_concl.succ[k]));

    // Equality Ea |- a = half(sj a), from the defining axioms.
    auto half_arg = [&](int j) {
      return Term::app(j ? sym::s1 : sym::s0, {Term::var(a)});
    };
    auto halfstep = [&](int j) {
      Term av = Term::var(a);
      Term sa = half_arg(j);
      Term ha = t_half(sa);
      Term pr = Term::app(builtin::proj2_1, {av, t_half(av)});
      // Ea |- proj2_1(a, half a) = a
      Sequent projd;
      projd.ante = {Formula::e(av), Formula::e(t_half(av)), Formula::e(av)};
      projd.succ = {Formula::atom(Pred::Eq, pr, av)};
      Proof q = pf::ax(projd);
      q = boot_.cut_loose(Formula::e(t_half(av)),
                          derive_substitution(boot_.totality_proof(builtin::half), "a1", av),
                          std::move(q));
      Sequent m1;
      m1.ante = {Formula::e(av)};
      m1.succ = {Formula::atom(Pred::Eq, pr, av)};
      q = adjust(std::move(q), m1);
      // Ea |- E proj2_1(a, half a)
      Proof epr = boot_.cut_into(Formula::atom(Pred::Eq, pr, av), q,
                                 boot_.ax_ep(Pred::Eq, pr, av, 1),
                                 Sequent{{Formula::e(av)}, {Formula::e(pr)}});
      // defining axiom: Ea, E pr |- half(sj a) = pr
      Sequent dfd;
      dfd.ante = {Formula::e(av), Formula::e(pr)};
      dfd.succ = {Formula::atom(Pred::Eq, ha, pr)};
      Proof d = pf::ax(dfd);
      d = boot_.cut_into(Formula::e(pr), epr, std::move(d),
                         Sequent{{Formula::e(av)}, {Formula::atom(Pred::Eq, ha, pr)}});
      // transitivity: half(sj a) = pr, pr = a |- half(sj a) = a
      Proof tr = boot_.ax_trans(ha, pr, av);
      tr = boot_.cut_into(Formula::atom(Pred::Eq, ha, pr), d, std::move(tr),
                          Sequent{{Formula::e(av), Formula::atom(Pred::Eq, pr, av)},
                                  {Formula::atom(Pred::Eq, ha, av)}});
      tr = boot_.cut_into(Formula::atom(Pred::Eq, pr, av), q, std::move(tr),
                          Sequent{{Formula::e(av)}, {Formula::atom(Pred::Eq, ha, av)}});
      // Flip to a = half(sj a).
      return boot_.flip_equality(tr, ha, av, {a});
    };

    auto mk_step = [&](int j) {
      Term sa = half_arg(j);
      // Substitute a := sj a in the premise proof.
      Proof wj = derive_substitution(premise_star, a, sa);
      // Replacement: E(ctx, a), A(a)* |- A(half sj a)*.
      Sequent eqt;
      for (const auto& v : ctx_a) eqt.ante.push_back(Formula::e(Term::var(v)));
      eqt.succ.push_back(Formula::atom(Pred::Eq, Term::var(a), t_half(sa)));
      Proof eq = adjust(halfstep(j), eqt);
      Proof rc = boot_.formula_replacement(bstar, a, Term::var(a), t_half(sa), eq, ctx_a);
      // Cut into wj, discharge E sj a, and adjust to the PIND-E step shape.
      Formula bhalf = substitute(bstar, a, t_half(sa));
      Proof merged = boot_.cut_loose(bhalf, std::move(rc), std::move(wj));
      merged = boot_.cut_loose(Formula::e(sa), boot_.ax_data_suc(j, Term::var(a)),
                               std::move(merged));
      Sequent shape;
      shape.ante.push_back(Formula::e(Term::var(a)));
      shape.ante.push_back(bstar);
      shape.ante.insert(shape.ante.end(), gamma.begin(), gamma.end());
      shape.succ = delta;
      shape.succ.push_back(substitute(bstar, a, sa));
      return adjust(std::move(merged), shape);
    };

    Proof st0 = mk_step(0);
    Proof st1 = mk_step(1);
    Sequent base_shape;
    base_shape.ante = gamma;
    base_shape.succ = delta;
    base_shape.succ.push_back(substitute(bstar, a, Term::zero()));
    Proof base = adjust(pf::id(substitute(bstar, a, Term::zero())), base_shape);
    Proof ind = boot_.pind_e(std::move(base), std::move(st0), std::move(st1), bstar, a, t);
    // Discharge Et.
    ind = boot_.cut_loose(Formula::e(t), boot_.convergence_proof(t), std::move(ind));
    return adjust(std::move(ind), target);
  }

  // --------------------------------------------------------------
  // Full translation.

  Proof translate_proof(const CProof& w, int i, TranslationTrace* trace = nullptr) {
    return translate_node(w, i, "root", trace);
  }

 private:
  // |- A* for closed-over-variables basic axioms A, from the auxiliary
  // axioms, convergence proofs and propositional steps.
  Proof prove_star_closed(const CFormula& a) {
    Sequent target = star_translate_seq(CSequent{{}, {a}});
    Formula astar = star_translate(a);
    switch (a.kind()) {
      case CFormula::Kind::And: {
        Proof p1 = prove_star_closed(a.sub(0));
        Proof p2 = prove_star_closed(a.sub(1));
        Sequent c1 = target;
        c1.succ = {star_translate(a.sub(0))};
        Sequent c2 = target;
        c2.succ = {star_translate(a.sub(1))};
        return adjust(pf::and_r(adjust(std::move(p1), c1), adjust(std::move(p2), c2)),
                      target);
      }
      case CFormula::Kind::Implies: {
        const CFormula& b = a.sub(0);
        const CFormula& c = a.sub(1);
        if (c.kind() == CFormula::Kind::And) {
          Formula gd = star_translate(demorgan_dual(b));
          Proof q1 = prove_star_closed(CFormula::implies(b, c.sub(0)));
          Proof q2 = prove_star_closed(CFormula::implies(b, c.sub(1)));
          Sequent s1 = target;
          s1.succ = {Formula::lor(gd, star_translate(c.sub(0)))};
          Sequent s2 = target;
          s2.succ = {Formula::lor(gd, star_translate(c.sub(1)))};
          Proof v1 = or_split(adjust(std::move(q1), s1));
          Proof v2 = or_split(adjust(std::move(q2), s2));
          Sequent t1 = target;
          t1.succ = {gd, star_translate(c.sub(0))};
          Sequent t2 = target;
          t2.succ = {gd, star_translate(c.sub(1))};
          Proof j = pf::and_r(adjust(std::move(v1), t1), adjust(std::move(v2), t2));
          j = assemble_or(std::move(j), astar, 2);
          return adjust(std::move(j), target);
        }
        if (b.kind() == CFormula::Kind::Or) {
          Formula cs = star_translate(c);
          Proof q1 = prove_star_closed(CFormula::implies(b.sub(0), c));
          Proof q2 = prove_star_closed(CFormula::implies(b.sub(1), c));
          Sequent s1 = target;
          s1.succ = {Formula::lor(star_translate(demorgan_dual(b.sub(0))), cs)};
          Sequent s2 = target;
          s2.succ = {Formula::lor(star_translate(demorgan_dual(b.sub(1))), cs)};
          Proof v1 = or_split(adjust(std::move(q1), s1));
          Proof v2 = or_split(adjust(std::move(q2), s2));
          Sequent t1 = target;
          t1.succ = {cs, star_translate(demorgan_dual(b.sub(0)))};
          Sequent t2 = target;
          t2.succ = {cs, star_translate(demorgan_dual(b.sub(1)))};
          Proof j = pf::and_r(adjust(std::move(v1), t1), adjust(std::move(v2), t2));
          j = assemble_or(std::move(j), astar, 2);
          return adjust(std::move(j), target);
        }
        return prove_star_flat(a, target);
      }
      default: return prove_star_flat(a, target);
    }
  }

  // The pure-or case: a single rendered sequent, Rneg on each hypothesis,
  // then or-assembly of all the leaves.
  Proof prove_star_flat(const CFormula& a, const Sequent& target) {
    auto rendered = render_connective_free(a);
    if (rendered.size() != 1) throw UnknownAxiom("unsupported basic-axiom shape");
    Sequent aux = auxiliary_from_rendered(rendered[0]);
    Proof q = pf::ax(aux);
    // Discharge the Et prefix.
    for (const auto& f : aux.ante) {
      if (f.kind() != Formula::Kind::E) continue;
      q = boot_.cut_loose(f, boot_.convergence_proof(f.term(0)), std::move(q));
    }
    {
      Sequent mid;
      for (const auto& g : target.ante) mid.ante.push_back(g);
      mid.ante.insert(mid.ante.end(), rendered[0].ante.begin(), rendered[0].ante.end());
      mid.succ = rendered[0].succ;
      q = adjust(std::move(q), mid);
    }
    // Rneg every rendered hypothesis.
    for (const auto& hyp : rendered[0].ante) {
      CFormula hyp_cl = hyp.kind() == Formula::Kind::Atom
                            ? CFormula::atom(hyp.pred(), hyp.term(0), hyp.term(1))
                            : CFormula::lnot(CFormula::atom(hyp.pred(), hyp.term(0),
                                                            hyp.term(1)));
      q = neg_right(std::move(q), hyp_cl);
    }
    Formula astar = star_translate(a);
    q = assemble_or(std::move(q), astar, q.conclusion().succ.size());
    return adjust(std::move(q), target);
  }

  Proof translate_node(const CProof& w, int i, const std::string& path,
                       TranslationTrace* trace) {
    std::vector<Proof> kids;
    for (std::size_t k = 0; k < w.children().size(); ++k)
      kids.push_back(
          translate_node(w.children()[k], i, path + "." + std::to_string(k), trace));
    auto note = [&](std::string n) {
      if (trace) trace->push_back({path, w.rule(), std::move(n)});
    };
    Sequent target = star_translate_seq(w.conclusion());
    const CSequent& cc = w.conclusion();
    switch (w.rule()) {
      case CRule::Id: {
        note("Identity plus weakened existence prefix");
        return adjust(pf::id(star_translate(cc.ante[0])), target);
      }
      case CRule::Ax: {
        auto m = csys_.match_axiom(cc);
        if (!m) throw UnknownAxiom("classical conclusion matches no axiom");
        const auto& [ax, sub] = *m;
        note(std::string("axiom ") + ax->id);
        Proof base = ax->id.rfind("c-basic", 0) == 0
                         ? basic_axiom_proof(ax->id.substr(2))
                         : equality_axiom_proof(ax->id);
        // Instantiate and discharge the existence prefix for each term.
        std::vector<std::pair<std::string, Term>> subs(sub.begin(), sub.end());
        Proof inst = boot_.substitute_many(std::move(base), subs);
        for (const auto& [x, t] : subs) {
          if (t.is_var()) continue;
          Formula et = Formula::e(t);
          while (std::any_of(inst.conclusion().ante.begin(),
                             inst.conclusion().ante.end(),
                             [&](const Formula& g) { return alpha_eq(g, et); }))
            inst = boot_.cut_loose(et, boot_.convergence_proof(t), std::move(inst));
        }
        return adjust(std::move(inst), target);
      }
      case CRule::WeakL:
      case CRule::WeakR:
      case CRule::ContrL:
      case CRule::ContrR:
      case CRule::ExchL:
      case CRule::ExchR: {
        note("structural adjustment");
        return adjust(std::move(kids[0]), target);
      }
      case CRule::NegL: {
        note("Lemma for the left negation rule");
        Proof q = neg_left(std::move(kids[0]), w.children()[0].conclusion().succ.back());
        return adjust(std::move(q), target);
      }
      case CRule::NegR: {
        note("Lemma for the right negation rule");
        Proof q = neg_right(std::move(kids[0]), w.children()[0].conclusion().ante[0]);
        return adjust(std::move(q), target);
      }
      case CRule::ImplL: {
        note("left negation lemma + or-left");
        const CFormula& impl = cc.ante[0];
        Proof u1 = neg_left(std::move(kids[0]), impl.sub(0));
        // u1: (not A1)*, ... |- Delta*; kids[1]: ..., A2* first after prefix.
        Sequent s1;
        s1.ante.push_back(star_translate(CFormula::lnot(impl.sub(0))));
        for (const auto& v : free_vars(cc)) s1.ante.push_back(Formula::e(Term::var(v)));
        for (std::size_t k = 1; k < cc.ante.size(); ++k)
          s1.ante.push_back(star_translate(cc.ante[k]));
        for (const auto& f : cc.succ) s1.succ.push_back(star_translate(f));
        u1 = adjust(std::move(u1), s1);
        Sequent s2 = s1;
        s2.ante[0] = star_translate(impl.sub(1));
        Proof u2 = adjust(std::move(kids[1]), s2);
        return adjust(pf::or_l(std::move(u1), std::move(u2)), target);
      }
      case CRule::ImplR: {
        note("Lemma for the right negation rule + or-right");
        const CFormula& impl = cc.succ.back();
        Proof q = neg_right(std::move(kids[0]), impl.sub(0));
        // q: ... |- Delta*, A2*, (not A1)*; assemble (not A1)* | A2*.
        q = assemble_or(std::move(q), star_translate(impl), 2);
        return adjust(std::move(q), target);
      }
      case CRule::AndL1:
      case CRule::AndL2: {
        note("and-left");
        const CFormula& conj = cc.ante[0];
        Formula other = star_translate(conj.sub(w.rule() == CRule::AndL1 ? 1 : 0));
        Formula used = star_translate(conj.sub(w.rule() == CRule::AndL1 ? 0 : 1));
        Proof q = adjust(std::move(kids[0]),
                         detail::move_ante_front(kids[0].conclusion(), used));
        q = w.rule() == CRule::AndL1 ? pf::and_l1(other, std::move(q))
                                     : pf::and_l2(other, std::move(q));
        return adjust(std::move(q), target);
      }
      case CRule::AndR: {
        note("and-right");
        Sequent s1 = target;
        s1.succ.back() = star_translate(cc.succ.back().sub(0));
        Sequent s2 = target;
        s2.succ.back() = star_translate(cc.succ.back().sub(1));
        return adjust(pf::and_r(adjust(std::move(kids[0]), s1),
                                adjust(std::move(kids[1]), s2)),
                      target);
      }
      case CRule::OrL: {
        note("or-left");
        Sequent s1 = target;
        s1.ante.erase(std::find_if(s1.ante.begin(), s1.ante.end(), [&](const Formula& g) {
          return alpha_eq(g, star_translate(cc.ante[0]));
        }));
        Sequent s2 = s1;
        s1.ante.insert(s1.ante.begin(), star_translate(cc.ante[0].sub(0)));
        s2.ante.insert(s2.ante.begin(), star_translate(cc.ante[0].sub(1)));
        Proof q = pf::or_l(adjust(std::move(kids[0]), s1), adjust(std::move(kids[1]), s2));
        return adjust(std::move(q), target);
      }
      case CRule::OrR1:
      case CRule::OrR2: {
        note("or-right");
        const CFormula& disj = cc.succ.back();
        Formula other = star_translate(disj.sub(w.rule() == CRule::OrR1 ? 1 : 0));
        Sequent pre = target;
        pre.succ.back() = star_translate(disj.sub(w.rule() == CRule::OrR1 ? 0 : 1));
        Proof q = adjust(std::move(kids[0]), pre);
        q = w.rule() == CRule::OrR1 ? pf::or_r1(other, std::move(q))
                                    : pf::or_r2(other, std::move(q));
        return adjust(std::move(q), target);
      }
      case CRule::ForallLb: {
        note("bounded forall-left");
        const CFormula& all = cc.ante[1];
        Term t = cc.ante[0].term(0);
        Formula inst = substitute(star_translate(all.sub(0)), all.var(), t);
        Proof q = adjust(std::move(kids[0]),
                         detail::move_ante_front(kids[0].conclusion(), inst));
        q = pf::forall_lb(all.var(), all.bound(), star_translate(all.sub(0)), t,
                          std::move(q));
        return adjust(std::move(q), target);
      }
      case CRule::ForallL: {
        note("unbounded forall-left with zero instantiation");
        const CFormula& all = cc.ante[0];
        std::optional<Term> t0 = detail::hole_term(all.sub(0), all.var(),
                                                   w.children()[0].conclusion().ante[0]);
        Term t = t0 ? *t0 : Term::zero();
        Proof q = std::move(kids[0]);
        // Substitute 0 for premise variables that vanish in the conclusion.
        auto cvars = free_vars(cc);
        for (const auto& v : free_vars(w.children()[0].conclusion())) {
          if (std::find(cvars.begin(), cvars.end(), v) == cvars.end()) {
            q = derive_substitution(q, v, Term::zero());
            t = subst_term(t, v, Term::zero());
            Formula e0 = Formula::e(Term::zero());
            while (std::any_of(q.conclusion().ante.begin(), q.conclusion().ante.end(),
                               [&](const Formula& g) { return alpha_eq(g, e0); }))
              q = boot_.cut_loose(e0, boot_.ax_e0(), std::move(q));
          }
        }
        Formula inst = substitute(star_translate(all.sub(0)), all.var(), t);
        q = adjust(std::move(q), detail::move_ante_front(q.conclusion(), inst));
        q = pf::forall_l(all.var(), star_translate(all.sub(0)), t, std::move(q));
        q = boot_.cut_loose(Formula::e(t), boot_.convergence_proof(t), std::move(q));
        return adjust(std::move(q), target);
      }
      case CRule::ForallRb: {
        note("bounded forall-right; Ea discharged via the guard");
        const CFormula& all = cc.succ.back();
        const CFormula& guard = w.children()[0].conclusion().ante[0];
        const std::string& a = guard.term(0).var_name();
        Proof q = std::move(kids[0]);
        Formula ea = Formula::e(Term::var(a));
        Formula guard_star = star_translate(guard);
        if (std::any_of(q.conclusion().ante.begin(), q.conclusion().ante.end(),
                        [&](const Formula& g) { return alpha_eq(g, ea); }))
          q = boot_.cut_loose(
              ea, boot_.ax_ep(Pred::Le, Term::var(a), all.bound(), 1), std::move(q));
        Sequent pre;
        pre.ante.push_back(guard_star);
        for (const auto& g : q.conclusion().ante)
          if (!alpha_eq(g, guard_star)) pre.ante.push_back(g);
        pre.succ = q.conclusion().succ;
        q = adjust(std::move(q), pre);
        q = pf::forall_rb(all.var(), star_translate(all.sub(0)), std::move(q));
        q = boot_.cut_loose(Formula::e(all.bound()),
                            boot_.convergence_proof(all.bound()), std::move(q));
        return adjust(std::move(q), target);
      }
      case CRule::ForallR: {
        note("unbounded forall-right (Ea weakened in when absent)");
        const CFormula& all = cc.succ.back();
        std::optional<Term> av = detail::hole_term(all.sub(0), all.var(),
                                                   w.children()[0].conclusion().succ.back());
        std::string a = av && av->is_var() ? av->var_name() : std::string();
        if (a.empty()) {
          std::vector<std::string> avoid = free_vars(cc);
          a = fresh_name("a", avoid);
        }
        Proof q = std::move(kids[0]);
        Formula ea = Formula::e(Term::var(a));
        Sequent pre;
        pre.ante.push_back(ea);
        bool taken = false;
        for (const auto& g : q.conclusion().ante) {
          if (!taken && alpha_eq(g, ea)) {
            taken = true;
            continue;
          }
          pre.ante.push_back(g);
        }
        pre.succ = q.conclusion().succ;
        q = adjust(std::move(q), pre);
        q = pf::forall_r(all.var(), star_translate(all.sub(0)), std::move(q));
        return adjust(std::move(q), target);
      }
      case CRule::ExistsLb: {
        note("bounded exists-left; Ea discharged via the guard");
        const CFormula& ex = cc.ante[0];
        const CFormula& guard = w.children()[0].conclusion().ante[0];
        const std::string& a = guard.term(0).var_name();
        Proof q = std::move(kids[0]);
        Formula ea = Formula::e(Term::var(a));
        Formula guard_star = star_translate(guard);
        if (std::any_of(q.conclusion().ante.begin(), q.conclusion().ante.end(),
                        [&](const Formula& g) { return alpha_eq(g, ea); }))
          q = boot_.cut_loose(ea, boot_.ax_ep(Pred::Le, Term::var(a), ex.bound(), 1),
                              std::move(q));
        Formula body_star =
            substitute(star_translate(ex.sub(0)), ex.var(), Term::var(a));
        Sequent pre;
        pre.ante.push_back(guard_star);
        pre.ante.push_back(body_star);
        bool body_taken = false;
        for (const auto& g : q.conclusion().ante) {
          if (alpha_eq(g, guard_star)) continue;
          if (!body_taken && alpha_eq(g, body_star)) {
            body_taken = true;
            continue;
          }
          pre.ante.push_back(g);
        }
        pre.succ = q.conclusion().succ;
        q = adjust(std::move(q), pre);
        q = pf::exists_lb(ex.var(), star_translate(ex.sub(0)), std::move(q));
        return adjust(std::move(q), target);
      }
      case CRule::ExistsRb: {
        note("bounded exists-right");
        const CFormula& ex = cc.succ.back();
        Term t = cc.ante[0].term(0);
        Sequent pre = kids[0].conclusion();
        pre.succ.back() = substitute(star_translate(ex.sub(0)), ex.var(), t);
        Proof q = adjust(std::move(kids[0]), pre);
        q = pf::exists_rb(ex.var(), ex.bound(), star_translate(ex.sub(0)), t,
                          std::move(q));
        return adjust(std::move(q), target);
      }
      case CRule::ExistsL: {
        note("unbounded exists-left (Ea weakened in when absent)");
        const CFormula& ex = cc.ante[0];
        std::optional<Term> av = detail::hole_term(ex.sub(0), ex.var(),
                                                   w.children()[0].conclusion().ante[0]);
        std::string a = av && av->is_var() ? av->var_name() : std::string();
        if (a.empty()) {
          std::vector<std::string> avoid = free_vars(cc);
          a = fresh_name("a", avoid);
        }
        Formula ea = Formula::e(Term::var(a));
        Formula body_star = substitute(star_translate(ex.sub(0)), ex.var(), Term::var(a));
        Proof q = std::move(kids[0]);
        Sequent pre;
        pre.ante.push_back(ea);
        pre.ante.push_back(body_star);
        bool ea_taken = false, body_taken = false;
        for (const auto& g : q.conclusion().ante) {
          if (!ea_taken && alpha_eq(g, ea)) {
            ea_taken = true;
            continue;
          }
          if (!body_taken && alpha_eq(g, body_star)) {
            body_taken = true;
            continue;
          }
          pre.ante.push_back(g);
        }
        pre.succ = q.conclusion().succ;
        q = adjust(std::move(q), pre);
        q = pf::exists_l(ex.var(), star_translate(ex.sub(0)), std::move(q));
        return adjust(std::move(q), target);
      }
      case CRule::ExistsR: {
        note("unbounded exists-right with zero instantiation");
        const CFormula& ex = cc.succ.back();
        std::optional<Term> t0 = detail::hole_term(ex.sub(0), ex.var(),
                                                   w.children()[0].conclusion().succ.back());
        Term t = t0 ? *t0 : Term::zero();
        Proof q = std::move(kids[0]);
        auto cvars = free_vars(cc);
        for (const auto& v : free_vars(w.children()[0].conclusion())) {
          if (std::find(cvars.begin(), cvars.end(), v) == cvars.end()) {
            q = derive_substitution(q, v, Term::zero());
            t = subst_term(t, v, Term::zero());
            Formula e0 = Formula::e(Term::zero());
            while (std::any_of(q.conclusion().ante.begin(), q.conclusion().ante.end(),
                               [&](const Formula& g) { return alpha_eq(g, e0); }))
              q = boot_.cut_loose(e0, boot_.ax_e0(), std::move(q));
          }
        }
        Sequent pre = q.conclusion();
        pre.succ.back() = substitute(star_translate(ex.sub(0)), ex.var(), t);
        q = adjust(std::move(q), pre);
        q = pf::exists_r(ex.var(), star_translate(ex.sub(0)), t, std::move(q));
        q = boot_.cut_loose(Formula::e(t), boot_.convergence_proof(t), std::move(q));
        return adjust(std::move(q), target);
      }
      case CRule::Cut: {
        note("cut, with zero substitution for vanishing variables");
        CFormula cutf = w.children()[0].conclusion().succ.back();
        Proof q1 = std::move(kids[0]);
        Proof q2 = std::move(kids[1]);
        auto cvars = free_vars(cc);
        for (const auto& v : free_vars(cutf)) {
          if (std::find(cvars.begin(), cvars.end(), v) == cvars.end()) {
            q1 = derive_substitution(q1, v, Term::zero());
            q2 = derive_substitution(q2, v, Term::zero());
            cutf = substitute(cutf, v, Term::zero());
            Formula e0 = Formula::e(Term::zero());
            for (Proof* qq : {&q1, &q2})
              while (std::any_of((*qq).conclusion().ante.begin(),
                                 (*qq).conclusion().ante.end(),
                                 [&](const Formula& g) { return alpha_eq(g, e0); }))
                *qq = boot_.cut_loose(e0, boot_.ax_e0(), std::move(*qq));
          }
        }
        Formula cstar = star_translate(cutf);
        // Provider: cstar last in the succedent; consumer: cstar first.
        {
          Sequent t1 = q1.conclusion();
          auto it = std::find_if(t1.succ.begin(), t1.succ.end(),
                                 [&](const Formula& g) { return alpha_eq(g, cstar); });
          if (it == t1.succ.end()) throw ShapeMismatch("cut translation");
          Formula g = *it;
          t1.succ.erase(it);
          t1.succ.push_back(g);
          q1 = adjust(std::move(q1), t1);
        }
        {
          Sequent t2 = q2.conclusion();
          auto it = std::find_if(t2.ante.begin(), t2.ante.end(),
                                 [&](const Formula& g) { return alpha_eq(g, cstar); });
          if (it == t2.ante.end()) throw ShapeMismatch("cut translation");
          Formula g = *it;
          t2.ante.erase(it);
          t2.ante.insert(t2.ante.begin(), g);
          q2 = adjust(std::move(q2), t2);
        }
        return adjust(pf::cut(std::move(q1), std::move(q2)), target);
      }
      case CRule::PInd: {
        note("PIND via the floor-half lemma and PIND-E");
        const CSequent& p = w.children()[0].conclusion();
        const CFormula& body = p.succ[0];
        std::string a;
        for (const auto& v : free_vars(body)) {
          if (alpha_eq(substitute(body, v, t_half(Term::var(v))), p.ante.back())) {
            a = v;
            break;
          }
        }
        if (a.empty()) {
          // Degenerate: premise and conclusion are identical.
          return adjust(std::move(kids[0]), target);
        }
        std::optional<Term> t = detail::hole_term(body, a, cc.succ[0]);
        if (!t) throw ShapeMismatch("PIND translation");
        return translate_pind(std::move(kids[0]), body, a, *t, cc, i);
      }
    }
    throw UnknownRule("translate");
  }

  Bootstrap& boot_;
  const ClassicalSystem& csys_;
  const Registry& reg_;
  std::map<std::string, Proof> axiom_proof_memo_;
};

}  // namespace s2e

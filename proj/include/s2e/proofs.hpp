#pragma once

// Proof construction helpers: one builder per rule (computing the conclusion
// from the premises), the deterministic multiset-closing adjustment pass
// (exchange / weakening / contraction), free-variable renaming, and the
// Substitution Lemma as a proof transformer.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "s2e/calculus.hpp"
#include "s2e/syntax.hpp"

namespace s2e {

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& w) : Error("shape mismatch: " + w) {}
};

namespace pf {

inline Proof id(Formula a) {
  Sequent s;
  s.ante = {a};
  s.succ = {a};
  return Proof::node(Rule::Id, std::move(s));
}

inline Proof ax(Sequent s) { return Proof::node(Rule::Ax, std::move(s)); }

inline Proof weak_l(Formula a, Proof p) {
  Sequent s = p.conclusion();
  s.ante.insert(s.ante.begin(), std::move(a));
  return Proof::node(Rule::WeakL, std::move(s), {std::move(p)});
}

inline Proof weak_r(Proof p, Formula a) {
  Sequent s = p.conclusion();
  s.succ.push_back(std::move(a));
  return Proof::node(Rule::WeakR, std::move(s), {std::move(p)});
}

inline Proof contr_l(Proof p) {
  Sequent s = p.conclusion();
  if (s.ante.size() < 2 || !alpha_eq(s.ante[0], s.ante[1]))
    throw ShapeMismatch("contr_l");
  s.ante.erase(s.ante.begin());
  return Proof::node(Rule::ContrL, std::move(s), {std::move(p)});
}

inline Proof contr_r(Proof p) {
  Sequent s = p.conclusion();
  std::size_t n = s.succ.size();
  if (n < 2 || !alpha_eq(s.succ[n - 1], s.succ[n - 2])) throw ShapeMismatch("contr_r");
  s.succ.pop_back();
  return Proof::node(Rule::ContrR, std::move(s), {std::move(p)});
}

inline Proof exch_l(Proof p, std::size_t i) {
  Sequent s = p.conclusion();
  if (i + 1 >= s.ante.size()) throw ShapeMismatch("exch_l");
  std::swap(s.ante[i], s.ante[i + 1]);
  return Proof::node(Rule::ExchL, std::move(s), {std::move(p)});
}

inline Proof exch_r(Proof p, std::size_t i) {
  Sequent s = p.conclusion();
  if (i + 1 >= s.succ.size()) throw ShapeMismatch("exch_r");
  std::swap(s.succ[i], s.succ[i + 1]);
  return Proof::node(Rule::ExchR, std::move(s), {std::move(p)});
}

// premise: Gamma |- Delta, p(t1,t2)   ==>   not-p(t1,t2), Gamma |- Delta
inline Proof neg_l(Proof p) {
  Sequent s = p.conclusion();
  if (s.succ.empty() || s.succ.back().kind() != Formula::Kind::Atom)
    throw ShapeMismatch("neg_l");
  Formula at = s.succ.back();
  s.succ.pop_back();
  s.ante.insert(s.ante.begin(), Formula::neg_atom(at.pred(), at.term(0), at.term(1)));
  return Proof::node(Rule::NegL, std::move(s), {std::move(p)});
}

// premise: p(t1,t2), Gamma |- Delta  ==>  Et1, Et2, Gamma |- Delta, not-p
inline Proof neg_r(Proof p) {
  Sequent s = p.conclusion();
  if (s.ante.empty() || s.ante[0].kind() != Formula::Kind::Atom)
    throw ShapeMismatch("neg_r");
  Formula at = s.ante[0];
  s.ante.erase(s.ante.begin());
  s.ante.insert(s.ante.begin(), {Formula::e(at.term(0)), Formula::e(at.term(1))});
  s.succ.push_back(Formula::neg_atom(at.pred(), at.term(0), at.term(1)));
  return Proof::node(Rule::NegR, std::move(s), {std::move(p)});
}

// premise: A, Gamma |- Delta  ==>  A & B, Gamma |- Delta
inline Proof and_l1(Formula b, Proof p) {
  Sequent s = p.conclusion();
  if (s.ante.empty()) throw ShapeMismatch("and_l1");
  Formula a = s.ante[0];
  s.ante[0] = Formula::land(std::move(a), std::move(b));
  return Proof::node(Rule::AndL1, std::move(s), {std::move(p)});
}

// premise: A, Gamma |- Delta  ==>  B & A, Gamma |- Delta
inline Proof and_l2(Formula b, Proof p) {
  Sequent s = p.conclusion();
  if (s.ante.empty()) throw ShapeMismatch("and_l2");
  Formula a = s.ante[0];
  s.ante[0] = Formula::land(std::move(b), std::move(a));
  return Proof::node(Rule::AndL2, std::move(s), {std::move(p)});
}

inline Proof and_r(Proof p1, Proof p2) {
  Sequent s = p1.conclusion();
  if (s.succ.empty() || p2.conclusion().succ.empty()) throw ShapeMismatch("and_r");
  Formula a = s.succ.back();
  s.succ.back() = Formula::land(std::move(a), p2.conclusion().succ.back());
  return Proof::node(Rule::AndR, std::move(s), {std::move(p1), std::move(p2)});
}

inline Proof or_l(Proof p1, Proof p2) {
  Sequent s = p1.conclusion();
  if (s.ante.empty() || p2.conclusion().ante.empty()) throw ShapeMismatch("or_l");
  Formula a = s.ante[0];
  s.ante[0] = Formula::lor(std::move(a), p2.conclusion().ante[0]);
  return Proof::node(Rule::OrL, std::move(s), {std::move(p1), std::move(p2)});
}

// premise: Gamma |- Delta, A  ==>  Gamma |- Delta, A | B
inline Proof or_r1(Formula b, Proof p) {
  Sequent s = p.conclusion();
  if (s.succ.empty()) throw ShapeMismatch("or_r1");
  Formula a = s.succ.back();
  s.succ.back() = Formula::lor(std::move(a), std::move(b));
  return Proof::node(Rule::OrR1, std::move(s), {std::move(p)});
}

// premise: Gamma |- Delta, A  ==>  Gamma |- Delta, B | A
inline Proof or_r2(Formula b, Proof p) {
  Sequent s = p.conclusion();
  if (s.succ.empty()) throw ShapeMismatch("or_r2");
  Formula a = s.succ.back();
  s.succ.back() = Formula::lor(std::move(b), std::move(a));
  return Proof::node(Rule::OrR2, std::move(s), {std::move(p)});
}

// premises: Gamma |- Delta, A  and  A, Pi |- Lambda
inline Proof cut(Proof p1, Proof p2) {
  const Sequent& s1 = p1.conclusion();
  const Sequent& s2 = p2.conclusion();
  if (s1.succ.empty() || s2.ante.empty() || !alpha_eq(s1.succ.back(), s2.ante[0]))
    throw ShapeMismatch("cut");
  Sequent s;
  s.ante = s1.ante;
  s.ante.insert(s.ante.end(), s2.ante.begin() + 1, s2.ante.end());
  s.succ.assign(s1.succ.begin(), s1.succ.end() - 1);
  s.succ.insert(s.succ.end(), s2.succ.begin(), s2.succ.end());
  return Proof::node(Rule::Cut, std::move(s), {std::move(p1), std::move(p2)});
}

// premise: A(t), Gamma |- Delta  ==>  t <= bound, forall x <= bound. A, Gamma |- Delta
inline Proof forall_lb(const std::string& x, Term bound, Formula body, Term t, Proof p) {
  Sequent s = p.conclusion();
  if (s.ante.empty()) throw ShapeMismatch("forall_lb");
  s.ante.erase(s.ante.begin());
  s.ante.insert(s.ante.begin(), Formula::bforall(x, bound, std::move(body)));
  s.ante.insert(s.ante.begin(), Formula::atom(Pred::Le, std::move(t), std::move(bound)));
  return Proof::node(Rule::ForallLb, std::move(s), {std::move(p)});
}

// premise: a <= t, Gamma |- Delta, A(a)  ==>  Et, Gamma |- Delta, forall x <= t. A
inline Proof forall_rb(const std::string& x, Formula body, Proof p) {
  Sequent s = p.conclusion();
  if (s.ante.empty() || s.succ.empty()) throw ShapeMismatch("forall_rb");
  Term bound = s.ante[0].term(1);
  s.ante.erase(s.ante.begin());
  s.ante.insert(s.ante.begin(), Formula::e(bound));
  s.succ.back() = Formula::bforall(x, bound, std::move(body));
  return Proof::node(Rule::ForallRb, std::move(s), {std::move(p)});
}

// premise: a <= t, A(a), Gamma |- Delta  ==>  exists x <= t. A, Gamma |- Delta
inline Proof exists_lb(const std::string& x, Formula body, Proof p) {
  Sequent s = p.conclusion();
  if (s.ante.size() < 2) throw ShapeMismatch("exists_lb");
  Term bound = s.ante[0].term(1);
  s.ante.erase(s.ante.begin(), s.ante.begin() + 2);
  s.ante.insert(s.ante.begin(), Formula::bexists(x, bound, std::move(body)));
  return Proof::node(Rule::ExistsLb, std::move(s), {std::move(p)});
}

// premise: Gamma |- Delta, A(t)  ==>  t <= bound, Gamma |- Delta, exists x <= bound. A
inline Proof exists_rb(const std::string& x, Term bound, Formula body, Term t, Proof p) {
  Sequent s = p.conclusion();
  if (s.succ.empty()) throw ShapeMismatch("exists_rb");
  s.succ.back() = Formula::bexists(x, bound, std::move(body));
  s.ante.insert(s.ante.begin(), Formula::atom(Pred::Le, std::move(t), std::move(bound)));
  return Proof::node(Rule::ExistsRb, std::move(s), {std::move(p)});
}

// premise: A(t), Gamma |- Delta  ==>  Et, forall x. A, Gamma |- Delta
inline Proof forall_l(const std::string& x, Formula body, Term t, Proof p) {
  Sequent s = p.conclusion();
  if (s.ante.empty()) throw ShapeMismatch("forall_l");
  s.ante.erase(s.ante.begin());
  s.ante.insert(s.ante.begin(), Formula::forall(x, std::move(body)));
  s.ante.insert(s.ante.begin(), Formula::e(std::move(t)));
  return Proof::node(Rule::ForallL, std::move(s), {std::move(p)});
}

// premise: Ea, Gamma |- Delta, A(a)  ==>  Gamma |- Delta, forall x. A
inline Proof forall_r(const std::string& x, Formula body, Proof p) {
  Sequent s = p.conclusion();
  if (s.ante.empty() || s.succ.empty()) throw ShapeMismatch("forall_r");
  s.ante.erase(s.ante.begin());
  s.succ.back() = Formula::forall(x, std::move(body));
  return Proof::node(Rule::ForallR, std::move(s), {std::move(p)});
}

// premise: Ea, A(a), Gamma |- Delta  ==>  exists x. A, Gamma |- Delta
inline Proof exists_l(const std::string& x, Formula body, Proof p) {
  Sequent s = p.conclusion();
  if (s.ante.size() < 2) throw ShapeMismatch("exists_l");
  s.ante.erase(s.ante.begin(), s.ante.begin() + 2);
  s.ante.insert(s.ante.begin(), Formula::exists(x, std::move(body)));
  return Proof::node(Rule::ExistsL, std::move(s), {std::move(p)});
}

// premise: Gamma |- Delta, A(t)  ==>  Et, Gamma |- Delta, exists x. A
inline Proof exists_r(const std::string& x, Formula body, Term t, Proof p) {
  Sequent s = p.conclusion();
  if (s.succ.empty()) throw ShapeMismatch("exists_r");
  s.succ.back() = Formula::exists(x, std::move(body));
  s.ante.insert(s.ante.begin(), Formula::e(std::move(t)));
  return Proof::node(Rule::ExistsR, std::move(s), {std::move(p)});
}

// premises: Gamma |- Delta, A(0); A(a), Gamma |- Delta, A(s0 a);
//           A(a), Gamma |- Delta, A(s1 a)
// conclusion: Et, Gamma |- Delta, A(t)
inline Proof pind(Proof base, Proof step0, Proof step1, const Formula& body,
                  const std::string& a, const Term& t) {
  Sequent s;
  s.ante.push_back(Formula::e(t));
  s.ante.insert(s.ante.end(), base.conclusion().ante.begin(),
                base.conclusion().ante.end());
  s.succ.assign(base.conclusion().succ.begin(), base.conclusion().succ.end() - 1);
  s.succ.push_back(substitute(body, a, t));
  return Proof::node(Rule::PInd, std::move(s),
                     {std::move(base), std::move(step0), std::move(step1)});
}

}  // namespace pf

// ---------------------------------------------------------------------------
// The adjustment pass: from a proof of S, derive a proof of T whenever every
// antecedent (succedent) formula of S occurs, up to alpha-equivalence, in the
// antecedent (succedent) of T. Deterministic; uses only exchange, weakening
// and contraction.

namespace detail {
inline std::optional<std::size_t> find_alpha(const std::vector<Formula>& v,
                                             const Formula& f, std::size_t from = 0) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (alpha_eq(v[i], f)) return i;
  return std::nullopt;
}
}  // namespace detail

inline Proof adjust(Proof p, const Sequent& target) {
  // Left side. Phase A: contract duplicates away (targets never need more
  // copies than weakening can add later).
  for (;;) {
    const auto& ante = p.conclusion().ante;
    std::optional<std::pair<std::size_t, std::size_t>> dup;
    for (std::size_t i = 0; !dup && i < ante.size(); ++i)
      for (std::size_t j = i + 1; j < ante.size(); ++j)
        if (alpha_eq(ante[i], ante[j])) {
          dup = {i, j};
          break;
        }
    if (!dup) break;
    auto [i, j] = *dup;
    for (std::size_t k = j; k > 0; --k) p = pf::exch_l(std::move(p), k - 1);
    for (std::size_t k = i + 1; k > 1; --k) p = pf::exch_l(std::move(p), k - 1);
    p = pf::contr_l(std::move(p));
  }
  // Sanity: everything left must appear in the target.
  for (const auto& f : p.conclusion().ante)
    if (!detail::find_alpha(target.ante, f))
      throw ShapeMismatch("adjust: antecedent formula not in target");
  // Phase B/C: weaken in the target antecedent from the right so that the
  // final list matches position by position.
  {
    // Remove-by-need: walk the target from the end, matching present copies.
    std::vector<Formula> need(target.ante.begin(), target.ante.end());
    std::vector<Formula> have = p.conclusion().ante;
    // For each distinct class, decide which target positions the existing
    // copies will fill (the earliest), then weaken the rest in order.
    std::vector<bool> filled(need.size(), false);
    for (const auto& f : have) {
      for (std::size_t i = 0; i < need.size(); ++i)
        if (!filled[i] && alpha_eq(need[i], f)) {
          filled[i] = true;
          break;
        }
    }
    for (std::size_t i = need.size(); i-- > 0;)
      if (!filled[i]) p = pf::weak_l(need[i], std::move(p));
    // Phase D: sort into target order by selection with adjacent swaps.
    for (std::size_t pos = 0; pos < target.ante.size(); ++pos) {
      const auto& ante = p.conclusion().ante;
      std::size_t k = pos;
      while (k < ante.size() && !alpha_eq(ante[k], target.ante[pos])) ++k;
      if (k >= ante.size()) throw ShapeMismatch("adjust: antecedent sort");
      for (; k > pos; --k) p = pf::exch_l(std::move(p), k - 1);
    }
  }

  // Right side, mirrored (weakening appends, contraction folds the tail).
  for (;;) {
    const auto& succ = p.conclusion().succ;
    std::optional<std::pair<std::size_t, std::size_t>> dup;
    for (std::size_t i = 0; !dup && i < succ.size(); ++i)
      for (std::size_t j = i + 1; j < succ.size(); ++j)
        if (alpha_eq(succ[i], succ[j])) {
          dup = {i, j};
          break;
        }
    if (!dup) break;
    auto [i, j] = *dup;
    const std::size_t n = p.conclusion().succ.size();
    for (std::size_t k = j; k + 1 < n; ++k) p = pf::exch_r(std::move(p), k);
    for (std::size_t k = i; k + 2 < n; ++k) p = pf::exch_r(std::move(p), k);
    p = pf::contr_r(std::move(p));
  }
  for (const auto& f : p.conclusion().succ)
    if (!detail::find_alpha(target.succ, f))
      throw ShapeMismatch("adjust: succedent formula not in target");
  {
    std::vector<bool> filled(target.succ.size(), false);
    for (const auto& f : p.conclusion().succ) {
      for (std::size_t i = 0; i < target.succ.size(); ++i)
        if (!filled[i] && alpha_eq(target.succ[i], f)) {
          filled[i] = true;
          break;
        }
    }
    for (std::size_t i = 0; i < target.succ.size(); ++i)
      if (!filled[i]) p = pf::weak_r(std::move(p), target.succ[i]);
    for (std::size_t pos = 0; pos < target.succ.size(); ++pos) {
      const auto& succ = p.conclusion().succ;
      std::size_t k = pos;
      while (k < succ.size() && !alpha_eq(succ[k], target.succ[pos])) ++k;
      if (k >= succ.size()) throw ShapeMismatch("adjust: succedent sort");
      for (; k > pos; --k) p = pf::exch_r(std::move(p), k - 1);
    }
  }
  if (!(p.conclusion() == target) && !alpha_eq(p.conclusion(), target))
    throw ShapeMismatch("adjust: target not reached");
  return p;
}

// ---------------------------------------------------------------------------
// Renaming and the Substitution Lemma.

inline void all_free_vars(const Proof& p, std::vector<std::string>& out) {
  for (const auto& v : free_vars(p.conclusion()))
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  for (const auto& c : p.children()) all_free_vars(c, out);
}

// Renames every free occurrence of a across the proof. The new name must be
// fresh for the whole tree.
inline Proof rename_free_var(const Proof& p, const std::string& a,
                             const std::string& fresh) {
  std::vector<Proof> children;
  children.reserve(p.children().size());
  for (const auto& c : p.children()) children.push_back(rename_free_var(c, a, fresh));
  return Proof::node(p.rule(), substitute(p.conclusion(), a, Term::var(fresh)),
                     std::move(children));
}

namespace detail {
// Eigenvariable of a node, when its rule has one (read off the premises).
inline std::optional<std::string> eigenvariable_of(const Proof& p) {
  const auto& ch = p.children();
  switch (p.rule()) {
    case Rule::ForallRb:
    case Rule::ExistsLb: {
      if (ch.empty() || ch[0].conclusion().ante.empty()) return std::nullopt;
      const Formula& g = ch[0].conclusion().ante[0];
      if (g.kind() == Formula::Kind::Atom && g.term(0).is_var())
        return g.term(0).var_name();
      return std::nullopt;
    }
    case Rule::ForallR:
    case Rule::ExistsL: {
      if (ch.empty() || ch[0].conclusion().ante.empty()) return std::nullopt;
      const Formula& e = ch[0].conclusion().ante[0];
      if (e.kind() == Formula::Kind::E && e.term(0).is_var())
        return e.term(0).var_name();
      return std::nullopt;
    }
    case Rule::PInd: {
      if (ch.size() != 3 || ch[1].conclusion().ante.empty() ||
          ch[1].conclusion().succ.empty())
        return std::nullopt;
      return find_pind_var(ch[1].conclusion().ante[0], ch[1].conclusion().succ.back(),
                           false);
    }
    default: return std::nullopt;
  }
}
}  // namespace detail

// Substitution Lemma as a transformer: from a proof of Gamma(a) |- Delta(a),
// a proof of Gamma(t) |- Delta(t). Eigenvariable clashes are resolved by
// systematic renaming.
inline Proof derive_substitution(const Proof& p, const std::string& x, const Term& t) {
  Proof work = p;
  if (auto eigen = detail::eigenvariable_of(work)) {
    if (*eigen == x || occurs_in(*eigen, t)) {
      std::vector<std::string> avoid{x};
      auto tv = free_vars(t);
      avoid.insert(avoid.end(), tv.begin(), tv.end());
      all_free_vars(work, avoid);
      std::string fresh = fresh_name(*eigen, avoid);
      std::vector<Proof> renamed;
      for (const auto& c : work.children())
        renamed.push_back(rename_free_var(c, *eigen, fresh));
      work = Proof::node(work.rule(), work.conclusion(), std::move(renamed));
    }
  }
  std::vector<Proof> children;
  children.reserve(work.children().size());
  for (const auto& c : work.children()) children.push_back(derive_substitution(c, x, t));
  return Proof::node(work.rule(), substitute(work.conclusion(), x, t),
                     std::move(children));
}

}  // namespace s2e

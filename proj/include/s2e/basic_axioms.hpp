#pragma once

// The 32 BASIC axioms in the classical vocabulary (S, floor-half, length,
// smash, +, *, <=), and the procedure that renders them connective-free as
// sequents of basic formulae. The auxiliary axioms are generated from the
// rendered sequents by prefixing Et for every term in the succedent.

#include <string>
#include <vector>

#include "s2e/classical.hpp"
#include "s2e/registry.hpp"
#include "s2e/syntax.hpp"

namespace s2e {

struct BasicAxiom {
  std::string name;
  CFormula formula;
};

inline std::vector<BasicAxiom> basic_axioms() {
  using F = CFormula;
  Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
  Term u = Term::var("u"), v = Term::var("v");
  Term zero = Term::zero(), one = numeral(1), two = numeral(2);
  auto S = [](Term t) { return t_succ(std::move(t)); };
  auto dbl = [&](Term t) { return t_mul(two, std::move(t)); };
  auto len = [](Term t) { return t_len(std::move(t)); };
  auto half = [](Term t) { return t_half(std::move(t)); };
  auto eq = [](Term a, Term b) { return F::atom(Pred::Eq, std::move(a), std::move(b)); };
  auto le = [](Term a, Term b) { return F::atom(Pred::Le, std::move(a), std::move(b)); };
  auto neq = [&](Term a, Term b) { return F::lnot(eq(std::move(a), std::move(b))); };

  std::vector<BasicAxiom> out;
  auto add = [&](CFormula f) {
    out.push_back({"basic" + std::to_string(out.size() + 1), std::move(f)});
  };

  add(F::implies(le(y, x), le(y, S(x))));                                    // 1
  add(neq(x, S(x)));                                                         // 2
  add(le(zero, x));                                                          // 3
  add(F::iff(F::land(le(x, y), neq(x, y)), le(S(x), y)));                    // 4
  add(F::implies(neq(x, zero), neq(dbl(x), zero)));                          // 5
  add(F::lor(le(y, x), le(x, y)));                                           // 6
  add(F::implies(F::land(le(x, y), le(y, x)), eq(x, y)));                    // 7
  add(F::implies(F::land(le(x, y), le(y, z)), le(x, z)));                    // 8
  add(eq(len(zero), zero));                                                  // 9
  add(F::implies(neq(x, zero), F::land(eq(len(dbl(x)), S(len(x))),
                                       eq(len(S(dbl(x))), S(len(x))))));     // 10
  add(eq(len(one), one));                                                    // 11
  add(F::implies(le(x, y), le(len(x), len(y))));                             // 12
  add(eq(len(t_smash(x, y)), S(t_mul(len(x), len(y)))));                     // 13
  add(eq(t_smash(zero, y), one));                                            // 14
  add(F::implies(neq(x, zero),
                 F::land(eq(t_smash(one, dbl(x)), dbl(t_smash(one, x))),
                         eq(t_smash(one, S(dbl(x))), dbl(t_smash(one, x)))))); // 15
  add(eq(t_smash(x, y), t_smash(y, x)));                                     // 16
  add(F::implies(eq(len(x), len(y)), eq(t_smash(x, z), t_smash(y, z))));     // 17
  add(F::implies(eq(len(x), t_add(len(u), len(v))),
                 eq(t_smash(x, y), t_mul(t_smash(u, y), t_smash(v, y)))));   // 18
  add(le(x, t_add(x, y)));                                                   // 19
  add(F::implies(F::land(le(x, y), neq(x, y)),
                 F::land(le(S(dbl(x)), dbl(y)), neq(S(dbl(x)), dbl(y)))));   // 20
  add(eq(t_add(x, y), t_add(y, x)));                                         // 21
  add(eq(t_add(x, zero), x));                                                // 22
  add(eq(t_add(x, S(y)), S(t_add(x, y))));                                   // 23
  add(eq(t_add(t_add(x, y), z), t_add(x, t_add(y, z))));                     // 24
  add(F::iff(le(t_add(x, y), t_add(x, z)), le(y, z)));                       // 25
  add(eq(t_mul(x, zero), zero));                                             // 26
  add(eq(t_mul(x, S(y)), t_add(t_mul(x, y), x)));                            // 27
  add(eq(t_mul(x, y), t_mul(y, x)));                                         // 28
  add(eq(t_mul(x, t_add(y, z)), t_add(t_mul(x, y), t_mul(x, z))));           // 29
  add(F::implies(le(one, x), F::iff(le(t_mul(x, y), t_mul(x, z)), le(y, z)))); // 30
  add(F::iff(eq(x, half(y)), F::lor(eq(dbl(x), y), eq(S(dbl(x)), y))));      // 31
  add(F::implies(neq(x, zero), eq(len(x), S(len(half(x))))));                // 32
  return out;
}

// ---------------------------------------------------------------------------
// Rendering classical axioms free of logical connectives. The result is a
// list of sequents whose formulae are all basic.

namespace detail {
inline Formula basic_to_free(const CFormula& f) {
  if (f.is_atom()) return Formula::atom(f.pred(), f.term(0), f.term(1));
  if (f.kind() == CFormula::Kind::Not && f.sub(0).is_atom())
    return Formula::neg_atom(f.sub(0).pred(), f.sub(0).term(0), f.sub(0).term(1));
  throw Error("not a basic classical formula");
}

// Hypothesis lists: a conjunction of (negated) atoms yields one list; a
// disjunction splits into several.
inline std::vector<std::vector<Formula>> hypothesis_lists(const CFormula& f) {
  switch (f.kind()) {
    case CFormula::Kind::Atom: return {{basic_to_free(f)}};
    case CFormula::Kind::Not:
      if (f.sub(0).is_atom()) return {{basic_to_free(f)}};
      if (f.sub(0).kind() == CFormula::Kind::Not) return hypothesis_lists(f.sub(0).sub(0));
      throw Error("unsupported hypothesis shape");
    case CFormula::Kind::And: {
      auto ls = hypothesis_lists(f.sub(0));
      auto rs = hypothesis_lists(f.sub(1));
      std::vector<std::vector<Formula>> out;
      for (const auto& l : ls)
        for (const auto& r : rs) {
          std::vector<Formula> both = l;
          both.insert(both.end(), r.begin(), r.end());
          out.push_back(std::move(both));
        }
      return out;
    }
    case CFormula::Kind::Or: {
      auto ls = hypothesis_lists(f.sub(0));
      auto rs = hypothesis_lists(f.sub(1));
      ls.insert(ls.end(), rs.begin(), rs.end());
      return ls;
    }
    default: throw Error("unsupported hypothesis shape");
  }
}
}  // namespace detail

inline std::vector<Sequent> render_connective_free(const CFormula& f) {
  switch (f.kind()) {
    case CFormula::Kind::Atom: return {Sequent{{}, {detail::basic_to_free(f)}}};
    case CFormula::Kind::Not:
      if (f.sub(0).is_atom()) return {Sequent{{}, {detail::basic_to_free(f)}}};
      throw Error("unsupported axiom shape (negation)");
    case CFormula::Kind::And: {
      auto ls = render_connective_free(f.sub(0));
      auto rs = render_connective_free(f.sub(1));
      ls.insert(ls.end(), rs.begin(), rs.end());
      return ls;
    }
    case CFormula::Kind::Or: {
      // Top-level disjunction of basic parts: one multi-succedent sequent.
      Sequent s;
      std::vector<const CFormula*> stack{&f};
      std::vector<Formula> parts;
      std::function<void(const CFormula&)> walk = [&](const CFormula& g) {
        if (g.kind() == CFormula::Kind::Or) {
          walk(g.sub(0));
          walk(g.sub(1));
        } else {
          parts.push_back(detail::basic_to_free(g));
        }
      };
      walk(f);
      s.succ = std::move(parts);
      return {std::move(s)};
    }
    case CFormula::Kind::Implies: {
      auto hyps = detail::hypothesis_lists(f.sub(0));
      auto concls = render_connective_free(f.sub(1));
      std::vector<Sequent> out;
      for (const auto& h : hyps)
        for (const auto& c : concls) {
          Sequent s;
          s.ante = h;
          s.ante.insert(s.ante.end(), c.ante.begin(), c.ante.end());
          s.succ = c.succ;
          out.push_back(std::move(s));
        }
      return out;
    }
    default: throw Error("unsupported axiom shape (quantifier)");
  }
}

// Auxiliary axiom: Et for each distinct term of the succedent, prefixed to
// the rendered antecedent.
inline Sequent auxiliary_from_rendered(const Sequent& rendered) {
  Sequent s;
  std::vector<Term> ts;
  for (const auto& f : rendered.succ) {
    auto push = [&](const Term& t) {
      for (const auto& seen : ts)
        if (seen == t) return;
      ts.push_back(t);
    };
    if (f.is_basic()) {
      for (const auto& t : f.terms()) push(t);
    }
  }
  for (const auto& t : ts) s.ante.push_back(Formula::e(t));
  s.ante.insert(s.ante.end(), rendered.ante.begin(), rendered.ante.end());
  s.succ = rendered.succ;
  return s;
}

}  // namespace s2e

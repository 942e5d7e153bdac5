#pragma once

// Classical-side abstract syntax: formulae with implication and formula-level
// negation, sequents, and proof trees with Buss-style PIND (floor(a/2) form).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "s2e/syntax.hpp"

namespace s2e {

class CFormula {
 public:
  enum class Kind : std::uint8_t {
    Atom,  // p(t1, t2)
    Not,
    And,
    Or,
    Implies,
    BForall,
    BExists,
    Forall,
    Exists,
  };

  static CFormula atom(Pred p, Term t1, Term t2) {
    Node n;
    n.kind = Kind::Atom;
    n.pred = p;
    n.terms = {std::move(t1), std::move(t2)};
    return mk(std::move(n));
  }
  static CFormula lnot(CFormula a) {
    Node n;
    n.kind = Kind::Not;
    n.subs = {std::move(a)};
    return mk(std::move(n));
  }
  static CFormula land(CFormula a, CFormula b) {
    Node n;
    n.kind = Kind::And;
    n.subs = {std::move(a), std::move(b)};
    return mk(std::move(n));
  }
  static CFormula lor(CFormula a, CFormula b) {
    Node n;
    n.kind = Kind::Or;
    n.subs = {std::move(a), std::move(b)};
    return mk(std::move(n));
  }
  static CFormula implies(CFormula a, CFormula b) {
    Node n;
    n.kind = Kind::Implies;
    n.subs = {std::move(a), std::move(b)};
    return mk(std::move(n));
  }
  static CFormula iff(CFormula a, CFormula b) {
    return land(implies(a, b), implies(b, a));
  }
  static CFormula bforall(std::string x, Term bound, CFormula a) {
    if (occurs_in(x, bound))
      throw Error("bound variable " + x + " occurs in its bound term");
    Node n;
    n.kind = Kind::BForall;
    n.var = std::move(x);
    n.terms = {std::move(bound)};
    n.subs = {std::move(a)};
    return mk(std::move(n));
  }
  static CFormula bexists(std::string x, Term bound, CFormula a) {
    if (occurs_in(x, bound))
      throw Error("bound variable " + x + " occurs in its bound term");
    Node n;
    n.kind = Kind::BExists;
    n.var = std::move(x);
    n.terms = {std::move(bound)};
    n.subs = {std::move(a)};
    return mk(std::move(n));
  }
  static CFormula forall(std::string x, CFormula a) {
    Node n;
    n.kind = Kind::Forall;
    n.var = std::move(x);
    n.subs = {std::move(a)};
    return mk(std::move(n));
  }
  static CFormula exists(std::string x, CFormula a) {
    Node n;
    n.kind = Kind::Exists;
    n.var = std::move(x);
    n.subs = {std::move(a)};
    return mk(std::move(n));
  }

  Kind kind() const { return p_->kind; }
  Pred pred() const { return p_->pred; }
  const Term& term(std::size_t i) const { return p_->terms[i]; }
  const Term& bound() const { return p_->terms[0]; }
  const CFormula& sub(std::size_t i = 0) const { return p_->subs[i]; }
  const std::string& var() const { return p_->var; }
  bool is_atom() const { return p_->kind == Kind::Atom; }
  bool is_quantifier() const {
    return p_->kind == Kind::BForall || p_->kind == Kind::BExists ||
           p_->kind == Kind::Forall || p_->kind == Kind::Exists;
  }
  bool is_bounded_quantifier() const {
    return p_->kind == Kind::BForall || p_->kind == Kind::BExists;
  }

  bool operator==(const CFormula& o) const {
    if (p_ == o.p_) return true;
    if (p_->kind != o.p_->kind || p_->pred != o.p_->pred || p_->var != o.p_->var)
      return false;
    return p_->terms == o.p_->terms && p_->subs == o.p_->subs;
  }
  bool operator!=(const CFormula& o) const { return !(*this == o); }

 private:
  struct Node {
    Kind kind{};
    Pred pred = Pred::Eq;
    std::string var;
    std::vector<Term> terms;
    std::vector<CFormula> subs;
  };
  static CFormula mk(Node n) { return CFormula{std::make_shared<const Node>(std::move(n))}; }
  explicit CFormula(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

struct CSequent {
  std::vector<CFormula> ante;
  std::vector<CFormula> succ;
  bool operator==(const CSequent& o) const { return ante == o.ante && succ == o.succ; }
};

enum class CRule : std::uint8_t {
  Id,
  Ax,
  WeakL,
  WeakR,
  ContrL,
  ContrR,
  ExchL,
  ExchR,
  NegL,
  NegR,
  ImplL,
  ImplR,
  AndL1,
  AndL2,
  AndR,
  OrL,
  OrR1,
  OrR2,
  ForallLb,
  ForallRb,
  ExistsLb,
  ExistsRb,
  ForallL,
  ForallR,
  ExistsL,
  ExistsR,
  Cut,
  PInd,
};

// Buss-style PIND takes the single floor-half induction step premise.
inline unsigned premise_count(CRule r) {
  switch (r) {
    case CRule::Id:
    case CRule::Ax: return 0;
    case CRule::AndR:
    case CRule::OrL:
    case CRule::ImplL:
    case CRule::Cut: return 2;
    default: return 1;
  }
}

inline const char* rule_name(CRule r) {
  switch (r) {
    case CRule::Id: return "id";
    case CRule::Ax: return "ax";
    case CRule::WeakL: return "wl";
    case CRule::WeakR: return "wr";
    case CRule::ContrL: return "cl";
    case CRule::ContrR: return "cr";
    case CRule::ExchL: return "xl";
    case CRule::ExchR: return "xr";
    case CRule::NegL: return "negl";
    case CRule::NegR: return "negr";
    case CRule::ImplL: return "impll";
    case CRule::ImplR: return "implr";
    case CRule::AndL1: return "andl1";
    case CRule::AndL2: return "andl2";
    case CRule::AndR: return "andr";
    case CRule::OrL: return "orl";
    case CRule::OrR1: return "orr1";
    case CRule::OrR2: return "orr2";
    case CRule::ForallLb: return "foralllb";
    case CRule::ForallRb: return "forallrb";
    case CRule::ExistsLb: return "existslb";
    case CRule::ExistsRb: return "existsrb";
    case CRule::ForallL: return "foralll";
    case CRule::ForallR: return "forallr";
    case CRule::ExistsL: return "existsl";
    case CRule::ExistsR: return "existsr";
    case CRule::Cut: return "cut";
    case CRule::PInd: return "pind";
  }
  return "?";
}

class CProof {
 public:
  CProof() = default;
  static CProof node(CRule r, CSequent concl, std::vector<CProof> children = {}) {
    return CProof{
        std::make_shared<const Node>(Node{r, std::move(concl), std::move(children)})};
  }
  bool valid() const { return p_ != nullptr; }
  CRule rule() const { return p_->rule; }
  const CSequent& conclusion() const { return p_->conclusion; }
  const std::vector<CProof>& children() const { return p_->children; }
  std::size_t node_count() const {
    std::size_t n = 1;
    for (const auto& c : p_->children) n += c.node_count();
    return n;
  }

 private:
  struct Node {
    CRule rule;
    CSequent conclusion;
    std::vector<CProof> children;
  };
  explicit CProof(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

// Free variables, substitution and alpha-equivalence mirror the free-logic
// side.
namespace detail {
inline void free_vars_cformula(const CFormula& f, std::vector<std::string>& bound,
                               std::vector<std::string>& out) {
  auto add_term = [&](const Term& t) {
    std::vector<std::string> vs;
    free_vars_term(t, vs);
    for (auto& v : vs) {
      if (std::find(bound.begin(), bound.end(), v) != bound.end()) continue;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  };
  switch (f.kind()) {
    case CFormula::Kind::Atom:
      add_term(f.term(0));
      add_term(f.term(1));
      return;
    case CFormula::Kind::Not:
      free_vars_cformula(f.sub(0), bound, out);
      return;
    case CFormula::Kind::And:
    case CFormula::Kind::Or:
    case CFormula::Kind::Implies:
      free_vars_cformula(f.sub(0), bound, out);
      free_vars_cformula(f.sub(1), bound, out);
      return;
    case CFormula::Kind::BForall:
    case CFormula::Kind::BExists:
      add_term(f.bound());
      bound.push_back(f.var());
      free_vars_cformula(f.sub(0), bound, out);
      bound.pop_back();
      return;
    case CFormula::Kind::Forall:
    case CFormula::Kind::Exists:
      bound.push_back(f.var());
      free_vars_cformula(f.sub(0), bound, out);
      bound.pop_back();
      return;
  }
}
}  // namespace detail

inline std::vector<std::string> free_vars(const CFormula& f) {
  std::vector<std::string> bound, out;
  detail::free_vars_cformula(f, bound, out);
  return out;
}

inline std::vector<std::string> free_vars(const CSequent& s) {
  std::vector<std::string> bound, out;
  for (const auto& f : s.ante) detail::free_vars_cformula(f, bound, out);
  for (const auto& f : s.succ) detail::free_vars_cformula(f, bound, out);
  return out;
}

inline bool occurs_free(const std::string& v, const CFormula& f) {
  auto vs = free_vars(f);
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

inline bool occurs_free(const std::string& v, const CSequent& s) {
  auto vs = free_vars(s);
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

inline CFormula substitute(const CFormula& f, const std::string& x, const Term& repl) {
  auto st = [&](const Term& t) { return subst_term(t, x, repl); };
  switch (f.kind()) {
    case CFormula::Kind::Atom:
      return CFormula::atom(f.pred(), st(f.term(0)), st(f.term(1)));
    case CFormula::Kind::Not: return CFormula::lnot(substitute(f.sub(0), x, repl));
    case CFormula::Kind::And:
      return CFormula::land(substitute(f.sub(0), x, repl), substitute(f.sub(1), x, repl));
    case CFormula::Kind::Or:
      return CFormula::lor(substitute(f.sub(0), x, repl), substitute(f.sub(1), x, repl));
    case CFormula::Kind::Implies:
      return CFormula::implies(substitute(f.sub(0), x, repl),
                               substitute(f.sub(1), x, repl));
    case CFormula::Kind::BForall:
    case CFormula::Kind::BExists:
    case CFormula::Kind::Forall:
    case CFormula::Kind::Exists: {
      const bool bounded = f.is_bounded_quantifier();
      Term b = bounded ? st(f.bound()) : Term::zero();
      if (f.var() == x) {
        if (!bounded) return f;
        if (occurs_in(f.var(), b)) {
          auto avoid = free_vars(f.sub(0));
          auto bv = free_vars(b);
          avoid.insert(avoid.end(), bv.begin(), bv.end());
          std::string y = fresh_name(f.var(), avoid);
          CFormula body = substitute(f.sub(0), f.var(), Term::var(y));
          return f.kind() == CFormula::Kind::BForall
                     ? CFormula::bforall(y, std::move(b), std::move(body))
                     : CFormula::bexists(y, std::move(b), std::move(body));
        }
        return f.kind() == CFormula::Kind::BForall
                   ? CFormula::bforall(f.var(), std::move(b), f.sub(0))
                   : CFormula::bexists(f.var(), std::move(b), f.sub(0));
      }
      std::string y = f.var();
      CFormula body = f.sub(0);
      if ((bounded && occurs_in(y, b)) ||
          (occurs_free(x, body) && occurs_in(y, repl))) {
        auto avoid = free_vars(body);
        auto rv = free_vars(repl);
        avoid.insert(avoid.end(), rv.begin(), rv.end());
        if (bounded) {
          auto bv = free_vars(b);
          avoid.insert(avoid.end(), bv.begin(), bv.end());
        }
        avoid.push_back(x);
        y = fresh_name(f.var(), avoid);
        body = substitute(body, f.var(), Term::var(y));
      }
      body = substitute(body, x, repl);
      switch (f.kind()) {
        case CFormula::Kind::BForall:
          return CFormula::bforall(y, std::move(b), std::move(body));
        case CFormula::Kind::BExists:
          return CFormula::bexists(y, std::move(b), std::move(body));
        case CFormula::Kind::Forall: return CFormula::forall(y, std::move(body));
        default: return CFormula::exists(y, std::move(body));
      }
    }
  }
  return f;
}

inline CSequent substitute(const CSequent& s, const std::string& x, const Term& repl) {
  CSequent r;
  for (const auto& f : s.ante) r.ante.push_back(substitute(f, x, repl));
  for (const auto& f : s.succ) r.succ.push_back(substitute(f, x, repl));
  return r;
}

namespace detail {
inline bool alpha_eq_cformula(const CFormula& a, const CFormula& b, RenamePairs& ctx) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case CFormula::Kind::Atom:
      return a.pred() == b.pred() && alpha_eq_term(a.term(0), b.term(0), ctx) &&
             alpha_eq_term(a.term(1), b.term(1), ctx);
    case CFormula::Kind::Not: return alpha_eq_cformula(a.sub(0), b.sub(0), ctx);
    case CFormula::Kind::And:
    case CFormula::Kind::Or:
    case CFormula::Kind::Implies:
      return alpha_eq_cformula(a.sub(0), b.sub(0), ctx) &&
             alpha_eq_cformula(a.sub(1), b.sub(1), ctx);
    case CFormula::Kind::BForall:
    case CFormula::Kind::BExists:
      if (!alpha_eq_term(a.bound(), b.bound(), ctx)) return false;
      [[fallthrough]];
    case CFormula::Kind::Forall:
    case CFormula::Kind::Exists: {
      ctx.emplace_back(a.var(), b.var());
      bool ok = alpha_eq_cformula(a.sub(0), b.sub(0), ctx);
      ctx.pop_back();
      return ok;
    }
  }
  return false;
}
}  // namespace detail

inline bool alpha_eq(const CFormula& a, const CFormula& b) {
  detail::RenamePairs ctx;
  return detail::alpha_eq_cformula(a, b, ctx);
}

inline bool alpha_eq(const CSequent& a, const CSequent& b) {
  if (a.ante.size() != b.ante.size() || a.succ.size() != b.succ.size()) return false;
  for (std::size_t i = 0; i < a.ante.size(); ++i)
    if (!alpha_eq(a.ante[i], b.ante[i])) return false;
  for (std::size_t i = 0; i < a.succ.size(); ++i)
    if (!alpha_eq(a.succ[i], b.succ[i])) return false;
  return true;
}

// Bounded-formula hierarchy on the classical side. Negation swaps the
// levels; implication is classified as (not A) or B.
namespace detail {
inline Levels hierarchy_levels_c(const CFormula& f) {
  switch (f.kind()) {
    case CFormula::Kind::Atom: return {0, 0};
    case CFormula::Kind::Not: {
      Levels a = hierarchy_levels_c(f.sub(0));
      return {a.pi, a.sigma};
    }
    case CFormula::Kind::And:
    case CFormula::Kind::Or:
    case CFormula::Kind::Implies: {
      Levels a = hierarchy_levels_c(f.sub(0));
      if (f.kind() == CFormula::Kind::Implies) std::swap(a.sigma, a.pi);
      Levels b = hierarchy_levels_c(f.sub(1));
      unsigned s = std::max(a.sigma, b.sigma);
      unsigned p = std::max(a.pi, b.pi);
      if (s >= kInf && p >= kInf) return {kInf, kInf};
      s = std::min(s, p >= kInf ? s : p + 1);
      p = std::min(p, s >= kInf ? p : s + 1);
      return {s, p};
    }
    case CFormula::Kind::BForall: {
      Levels a = hierarchy_levels_c(f.sub(0));
      if (a.sigma >= kInf) return {kInf, kInf};
      unsigned p = a.sigma + 1;
      return {p + 1, p};
    }
    case CFormula::Kind::BExists: {
      Levels a = hierarchy_levels_c(f.sub(0));
      if (a.pi >= kInf) return {kInf, kInf};
      unsigned s = a.pi + 1;
      return {s, s + 1};
    }
    case CFormula::Kind::Forall:
    case CFormula::Kind::Exists: return {kInf, kInf};
  }
  return {kInf, kInf};
}
}  // namespace detail

inline FormulaClass classify(const CFormula& f) {
  auto lv = detail::hierarchy_levels_c(f);
  if (lv.sigma >= detail::kInf) return FormulaClass::unbounded();
  if (lv.sigma <= lv.pi) return FormulaClass::sigma(lv.sigma);
  return FormulaClass::pi(lv.pi);
}

inline bool in_sigma_b(const CFormula& f, unsigned j) {
  auto lv = detail::hierarchy_levels_c(f);
  return lv.sigma < detail::kInf && lv.sigma <= j;
}

inline unsigned quantifier_count(const CFormula& f) {
  switch (f.kind()) {
    case CFormula::Kind::Atom: return 0;
    case CFormula::Kind::Not: return quantifier_count(f.sub(0));
    case CFormula::Kind::And:
    case CFormula::Kind::Or:
    case CFormula::Kind::Implies:
      return quantifier_count(f.sub(0)) + quantifier_count(f.sub(1));
    default: return 1 + quantifier_count(f.sub(0));
  }
}

inline unsigned quantifier_count(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::E:
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: return 0;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return quantifier_count(f.sub(0)) + quantifier_count(f.sub(1));
    default: return 1 + quantifier_count(f.sub(0));
  }
}

}  // namespace s2e

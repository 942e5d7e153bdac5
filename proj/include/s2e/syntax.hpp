#pragma once

// Abstract syntax: terms, formulae, sequents, proof trees.
// Values are immutable and share structure; copying is cheap.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "s2e/nat.hpp"

namespace s2e {

using SymbolId = std::uint32_t;

// Registration order of the built-in registry is fixed; these two are pinned
// because numerals and the data axioms are defined in terms of them.
namespace sym {
inline constexpr SymbolId s0 = 0;
inline constexpr SymbolId s1 = 1;
}  // namespace sym

// ---------------------------------------------------------------------------
// Terms

class Term {
 public:
  enum class Kind : std::uint8_t { Zero, Var, App };

  Term() : Term(zero()) {}

  static Term zero() {
    static const Term z{std::make_shared<const Node>(Node{Kind::Zero, 0, {}, {}})};
    return z;
  }
  static Term var(std::string name) {
    return Term{std::make_shared<const Node>(Node{Kind::Var, 0, std::move(name), {}})};
  }
  static Term app(SymbolId f, std::vector<Term> args) {
    return Term{std::make_shared<const Node>(Node{Kind::App, f, {}, std::move(args)})};
  }

  Kind kind() const { return p_->kind; }
  bool is_zero() const { return p_->kind == Kind::Zero; }
  bool is_var() const { return p_->kind == Kind::Var; }
  bool is_app() const { return p_->kind == Kind::App; }
  const std::string& var_name() const { return p_->name; }
  SymbolId fn() const { return p_->sym; }
  const std::vector<Term>& args() const { return p_->args; }

  bool operator==(const Term& o) const {
    if (p_ == o.p_) return true;
    if (p_->kind != o.p_->kind) return false;
    switch (p_->kind) {
      case Kind::Zero: return true;
      case Kind::Var: return p_->name == o.p_->name;
      case Kind::App:
        return p_->sym == o.p_->sym && p_->args == o.p_->args;
    }
    return false;
  }
  bool operator!=(const Term& o) const { return !(*this == o); }

 private:
  struct Node {
    Kind kind;
    SymbolId sym;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

inline Term s0(Term t) { return Term::app(sym::s0, {std::move(t)}); }
inline Term s1(Term t) { return Term::app(sym::s1, {std::move(t)}); }

// Canonical binary numeral: MSB-first application of s0/s1 to 0.
inline Term numeral(const Code& n) {
  Term t = Term::zero();
  for (std::size_t i = bitlen(n); i-- > 0;)
    t = Term::app(bit(n, i) ? sym::s1 : sym::s0, {std::move(t)});
  return t;
}

// ---------------------------------------------------------------------------
// Formulae

enum class Pred : std::uint8_t { Eq, Le };

class Formula {
 public:
  enum class Kind : std::uint8_t {
    E,        // E t
    Atom,     // p(t1, t2)
    NegAtom,  // not p(t1, t2)
    And,
    Or,
    BForall,  // forall x <= t. A
    BExists,  // exists x <= t. A
    Forall,
    Exists,
  };

  Formula() : Formula(atom(Pred::Eq, Term::zero(), Term::zero())) {}

  static Formula e(Term t) {
    Node n;
    n.kind = Kind::E;
    n.terms = {std::move(t)};
    return mk(std::move(n));
  }
  static Formula atom(Pred p, Term t1, Term t2) {
    Node n;
    n.kind = Kind::Atom;
    n.pred = p;
    n.terms = {std::move(t1), std::move(t2)};
    return mk(std::move(n));
  }
  static Formula neg_atom(Pred p, Term t1, Term t2) {
    Node n;
    n.kind = Kind::NegAtom;
    n.pred = p;
    n.terms = {std::move(t1), std::move(t2)};
    return mk(std::move(n));
  }
  static Formula land(Formula a, Formula b) {
    Node n;
    n.kind = Kind::And;
    n.subs = {std::move(a), std::move(b)};
    return mk(std::move(n));
  }
  static Formula lor(Formula a, Formula b) {
    Node n;
    n.kind = Kind::Or;
    n.subs = {std::move(a), std::move(b)};
    return mk(std::move(n));
  }
  static Formula bforall(std::string x, Term bound, Formula a);
  static Formula bexists(std::string x, Term bound, Formula a);
  static Formula forall(std::string x, Formula a) {
    Node n;
    n.kind = Kind::Forall;
    n.var = std::move(x);
    n.subs = {std::move(a)};
    return mk(std::move(n));
  }
  static Formula exists(std::string x, Formula a) {
    Node n;
    n.kind = Kind::Exists;
    n.var = std::move(x);
    n.subs = {std::move(a)};
    return mk(std::move(n));
  }

  Kind kind() const { return p_->kind; }
  Pred pred() const { return p_->pred; }
  const Term& term(std::size_t i = 0) const { return p_->terms[i]; }
  const std::vector<Term>& terms() const { return p_->terms; }
  const Formula& sub(std::size_t i = 0) const { return p_->subs[i]; }
  const std::vector<Formula>& subs() const { return p_->subs; }
  const std::string& var() const { return p_->var; }
  // Bound term of a bounded quantifier.
  const Term& bound() const { return p_->terms[0]; }

  bool is_atom() const { return p_->kind == Kind::Atom; }
  bool is_basic() const {
    return p_->kind == Kind::E || p_->kind == Kind::Atom || p_->kind == Kind::NegAtom;
  }
  bool is_quantifier() const {
    return p_->kind == Kind::BForall || p_->kind == Kind::BExists ||
           p_->kind == Kind::Forall || p_->kind == Kind::Exists;
  }
  bool is_bounded_quantifier() const {
    return p_->kind == Kind::BForall || p_->kind == Kind::BExists;
  }

  bool operator==(const Formula& o) const {
    if (p_ == o.p_) return true;
    if (p_->kind != o.p_->kind || p_->pred != o.p_->pred || p_->var != o.p_->var)
      return false;
    return p_->terms == o.p_->terms && p_->subs == o.p_->subs;
  }
  bool operator!=(const Formula& o) const { return !(*this == o); }

 private:
  struct Node {
    Kind kind{};
    Pred pred = Pred::Eq;
    std::string var;           // quantifiers
    std::vector<Term> terms;   // E: 1; atoms: 2; bounded quantifiers: the bound
    std::vector<Formula> subs;
  };
  static Formula mk(Node n) { return Formula{std::make_shared<const Node>(std::move(n))}; }
  explicit Formula(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

// ---------------------------------------------------------------------------
// Sequents: order-significant lists; exchange is an explicit rule.

struct Sequent {
  std::vector<Formula> ante;
  std::vector<Formula> succ;

  bool operator==(const Sequent& o) const { return ante == o.ante && succ == o.succ; }
  bool operator!=(const Sequent& o) const { return !(*this == o); }
  bool empty() const { return ante.empty() && succ.empty(); }
};

// ---------------------------------------------------------------------------
// Proof trees. A node is <rule, conclusion, children>; everything the checker
// needs (cut formulae, eigenvariables, matched axioms) is reconstructed from
// the conclusion and the premises, so nodes carry no payload.

enum class Rule : std::uint8_t {
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

inline unsigned premise_count(Rule r) {
  switch (r) {
    case Rule::Id:
    case Rule::Ax: return 0;
    case Rule::AndR:
    case Rule::OrL:
    case Rule::Cut: return 2;
    case Rule::PInd: return 3;
    default: return 1;
  }
}

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Id: return "id";
    case Rule::Ax: return "ax";
    case Rule::WeakL: return "wl";
    case Rule::WeakR: return "wr";
    case Rule::ContrL: return "cl";
    case Rule::ContrR: return "cr";
    case Rule::ExchL: return "xl";
    case Rule::ExchR: return "xr";
    case Rule::NegL: return "negl";
    case Rule::NegR: return "negr";
    case Rule::AndL1: return "andl1";
    case Rule::AndL2: return "andl2";
    case Rule::AndR: return "andr";
    case Rule::OrL: return "orl";
    case Rule::OrR1: return "orr1";
    case Rule::OrR2: return "orr2";
    case Rule::ForallLb: return "foralllb";
    case Rule::ForallRb: return "forallrb";
    case Rule::ExistsLb: return "existslb";
    case Rule::ExistsRb: return "existsrb";
    case Rule::ForallL: return "foralll";
    case Rule::ForallR: return "forallr";
    case Rule::ExistsL: return "existsl";
    case Rule::ExistsR: return "existsr";
    case Rule::Cut: return "cut";
    case Rule::PInd: return "pind";
  }
  return "?";
}

class Proof {
 public:
  Proof() = default;
  static Proof node(Rule r, Sequent concl, std::vector<Proof> children = {}) {
    return Proof{std::make_shared<const Node>(
        Node{r, std::move(concl), std::move(children)})};
  }

  bool valid() const { return p_ != nullptr; }
  Rule rule() const { return p_->rule; }
  const Sequent& conclusion() const { return p_->conclusion; }
  const std::vector<Proof>& children() const { return p_->children; }
  const void* id() const { return p_.get(); }

  bool operator==(const Proof& o) const {
    if (p_ == o.p_) return true;
    if (!p_ || !o.p_) return false;
    return p_->rule == o.p_->rule && p_->conclusion == o.p_->conclusion &&
           p_->children == o.p_->children;
  }
  bool operator!=(const Proof& o) const { return !(*this == o); }

  std::size_t node_count() const {
    std::size_t n = 1;
    for (const auto& c : p_->children) n += c.node_count();
    return n;
  }

 private:
  struct Node {
    Rule rule;
    Sequent conclusion;
    std::vector<Proof> children;
  };
  explicit Proof(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

// ---------------------------------------------------------------------------
// Free variables (first-occurrence order) and occurrence tests.

namespace detail {
inline void free_vars_term(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: return;
    case Term::Kind::Var:
      if (std::find(out.begin(), out.end(), t.var_name()) == out.end())
        out.push_back(t.var_name());
      return;
    case Term::Kind::App:
      for (const auto& a : t.args()) free_vars_term(a, out);
      return;
  }
}

inline void free_vars_formula(const Formula& f, std::vector<std::string>& bound,
                              std::vector<std::string>& out) {
  auto add = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) != bound.end()) return;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  auto add_term = [&](const Term& t) {
    std::vector<std::string> vs;
    free_vars_term(t, vs);
    for (auto& v : vs) add(v);
  };
  switch (f.kind()) {
    case Formula::Kind::E:
      add_term(f.term(0));
      return;
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      add_term(f.term(0));
      add_term(f.term(1));
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      free_vars_formula(f.sub(0), bound, out);
      free_vars_formula(f.sub(1), bound, out);
      return;
    case Formula::Kind::BForall:
    case Formula::Kind::BExists:
      add_term(f.bound());
      bound.push_back(f.var());
      free_vars_formula(f.sub(0), bound, out);
      bound.pop_back();
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound.push_back(f.var());
      free_vars_formula(f.sub(0), bound, out);
      bound.pop_back();
      return;
  }
}
}  // namespace detail

inline std::vector<std::string> free_vars(const Term& t) {
  std::vector<std::string> out;
  detail::free_vars_term(t, out);
  return out;
}

inline std::vector<std::string> free_vars(const Formula& f) {
  std::vector<std::string> bound, out;
  detail::free_vars_formula(f, bound, out);
  return out;
}

inline std::vector<std::string> free_vars(const Sequent& s) {
  std::vector<std::string> bound, out;
  for (const auto& f : s.ante) detail::free_vars_formula(f, bound, out);
  for (const auto& f : s.succ) detail::free_vars_formula(f, bound, out);
  return out;
}

inline bool occurs_in(const std::string& v, const Term& t) {
  auto vs = free_vars(t);
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

inline bool occurs_free(const std::string& v, const Formula& f) {
  auto vs = free_vars(f);
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

inline bool occurs_free(const std::string& v, const Sequent& s) {
  auto vs = free_vars(s);
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

inline Formula Formula::bforall(std::string x, Term bound, Formula a) {
  if (occurs_in(x, bound))
    throw Error("bound variable " + x + " occurs in its bound term");
  Node n;
  n.kind = Kind::BForall;
  n.var = std::move(x);
  n.terms = {std::move(bound)};
  n.subs = {std::move(a)};
  return mk(std::move(n));
}

inline Formula Formula::bexists(std::string x, Term bound, Formula a) {
  if (occurs_in(x, bound))
    throw Error("bound variable " + x + " occurs in its bound term");
  Node n;
  n.kind = Kind::BExists;
  n.var = std::move(x);
  n.terms = {std::move(bound)};
  n.subs = {std::move(a)};
  return mk(std::move(n));
}

// ---------------------------------------------------------------------------
// Substitution. Capture is avoided by renaming binders with a deterministic
// prime-suffix scheme, so generated proofs are reproducible bit for bit.

inline std::string fresh_name(const std::string& base,
                              const std::vector<std::string>& avoid) {
  std::string cand = base + "'";
  while (std::find(avoid.begin(), avoid.end(), cand) != avoid.end()) cand += "'";
  return cand;
}

inline Term subst_term(const Term& t, const std::string& x, const Term& repl) {
  switch (t.kind()) {
    case Term::Kind::Zero: return t;
    case Term::Kind::Var: return t.var_name() == x ? repl : t;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      bool changed = false;
      for (const auto& a : t.args()) {
        args.push_back(subst_term(a, x, repl));
        changed = changed || args.back() != a;
      }
      return changed ? Term::app(t.fn(), std::move(args)) : t;
    }
  }
  return t;
}

inline Formula substitute(const Formula& f, const std::string& x, const Term& repl) {
  auto st = [&](const Term& t) { return subst_term(t, x, repl); };
  switch (f.kind()) {
    case Formula::Kind::E: return Formula::e(st(f.term(0)));
    case Formula::Kind::Atom: return Formula::atom(f.pred(), st(f.term(0)), st(f.term(1)));
    case Formula::Kind::NegAtom:
      return Formula::neg_atom(f.pred(), st(f.term(0)), st(f.term(1)));
    case Formula::Kind::And:
      return Formula::land(substitute(f.sub(0), x, repl), substitute(f.sub(1), x, repl));
    case Formula::Kind::Or:
      return Formula::lor(substitute(f.sub(0), x, repl), substitute(f.sub(1), x, repl));
    case Formula::Kind::BForall:
    case Formula::Kind::BExists:
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const bool bounded = f.is_bounded_quantifier();
      Term b = bounded ? st(f.bound()) : Term::zero();
      if (f.var() == x) {
        // x is shadowed; only the bound term (outside the scope) changes.
        if (!bounded) return f;
        if (occurs_in(f.var(), b)) {
          // Renaming required to keep the binder out of its own bound term.
          auto avoid = free_vars(f.sub(0));
          auto bv = free_vars(b);
          avoid.insert(avoid.end(), bv.begin(), bv.end());
          std::string y = fresh_name(f.var(), avoid);
          Formula body = substitute(f.sub(0), f.var(), Term::var(y));
          return f.kind() == Formula::Kind::BForall
                     ? Formula::bforall(y, std::move(b), std::move(body))
                     : Formula::bexists(y, std::move(b), std::move(body));
        }
        return f.kind() == Formula::Kind::BForall
                   ? Formula::bforall(f.var(), std::move(b), f.sub(0))
                   : Formula::bexists(f.var(), std::move(b), f.sub(0));
      }
      std::string y = f.var();
      Formula body = f.sub(0);
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
        case Formula::Kind::BForall: return Formula::bforall(y, std::move(b), std::move(body));
        case Formula::Kind::BExists: return Formula::bexists(y, std::move(b), std::move(body));
        case Formula::Kind::Forall: return Formula::forall(y, std::move(body));
        default: return Formula::exists(y, std::move(body));
      }
    }
  }
  return f;
}

inline Sequent substitute(const Sequent& s, const std::string& x, const Term& repl) {
  Sequent r;
  r.ante.reserve(s.ante.size());
  r.succ.reserve(s.succ.size());
  for (const auto& f : s.ante) r.ante.push_back(substitute(f, x, repl));
  for (const auto& f : s.succ) r.succ.push_back(substitute(f, x, repl));
  return r;
}

// ---------------------------------------------------------------------------
// Alpha-equivalence: the identity used by the kernel when comparing formulae
// across rule applications.

namespace detail {
using RenamePairs = std::vector<std::pair<std::string, std::string>>;

inline bool alpha_eq_var(const std::string& a, const std::string& b,
                         const RenamePairs& ctx) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
    if (it->first == a || it->second == b) return it->first == a && it->second == b;
  }
  return a == b;
}

inline bool alpha_eq_term(const Term& a, const Term& b, const RenamePairs& ctx) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Var: return alpha_eq_var(a.var_name(), b.var_name(), ctx);
    case Term::Kind::App: {
      if (a.fn() != b.fn() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alpha_eq_term(a.args()[i], b.args()[i], ctx)) return false;
      return true;
    }
  }
  return false;
}

inline bool alpha_eq_formula(const Formula& a, const Formula& b, RenamePairs& ctx) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::E: return alpha_eq_term(a.term(0), b.term(0), ctx);
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      return a.pred() == b.pred() && alpha_eq_term(a.term(0), b.term(0), ctx) &&
             alpha_eq_term(a.term(1), b.term(1), ctx);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return alpha_eq_formula(a.sub(0), b.sub(0), ctx) &&
             alpha_eq_formula(a.sub(1), b.sub(1), ctx);
    case Formula::Kind::BForall:
    case Formula::Kind::BExists:
      if (!alpha_eq_term(a.bound(), b.bound(), ctx)) return false;
      [[fallthrough]];
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      ctx.emplace_back(a.var(), b.var());
      bool ok = alpha_eq_formula(a.sub(0), b.sub(0), ctx);
      ctx.pop_back();
      return ok;
    }
  }
  return false;
}
}  // namespace detail

inline bool alpha_eq(const Term& a, const Term& b) {
  if (a == b) return true;
  return detail::alpha_eq_term(a, b, {});
}

inline bool alpha_eq(const Formula& a, const Formula& b) {
  if (a == b) return true;
  detail::RenamePairs ctx;
  return detail::alpha_eq_formula(a, b, ctx);
}

inline bool alpha_eq(const Sequent& a, const Sequent& b) {
  if (a.ante.size() != b.ante.size() || a.succ.size() != b.succ.size()) return false;
  for (std::size_t i = 0; i < a.ante.size(); ++i)
    if (!alpha_eq(a.ante[i], b.ante[i])) return false;
  for (std::size_t i = 0; i < a.succ.size(); ++i)
    if (!alpha_eq(a.succ[i], b.succ[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Formula classification: the Sigma^b_j / Pi^b_j hierarchy.

struct FormulaClass {
  enum class Kind : std::uint8_t { SigmaB, PiB, Unbounded } kind;
  unsigned level = 0;

  bool operator==(const FormulaClass& o) const {
    if (kind != o.kind) return false;
    return kind == Kind::Unbounded || level == o.level;
  }
  static FormulaClass sigma(unsigned j) { return {Kind::SigmaB, j}; }
  static FormulaClass pi(unsigned j) { return {Kind::PiB, j}; }
  static FormulaClass unbounded() { return {Kind::Unbounded, 0}; }
};

namespace detail {
constexpr unsigned kInf = 1u << 30;

// Minimal (sigma, pi) levels per the recursive clauses. Membership in each
// class is upward closed, so the pair determines both hierarchies.
struct Levels {
  unsigned sigma, pi;
};

inline Levels hierarchy_levels(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::E:
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: return {0, 0};
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      Levels a = hierarchy_levels(f.sub(0));
      Levels b = hierarchy_levels(f.sub(1));
      unsigned s = std::max(a.sigma, b.sigma);
      unsigned p = std::max(a.pi, b.pi);
      if (s >= kInf && p >= kInf) return {kInf, kInf};
      // The embeddings Sigma_j <= Pi_{j+1} <= Sigma_{j+2} keep both finite.
      s = std::min(s, p >= kInf ? s : p + 1);
      p = std::min(p, s >= kInf ? p : s + 1);
      return {s, p};
    }
    case Formula::Kind::BForall: {
      Levels a = hierarchy_levels(f.sub(0));
      if (a.sigma >= kInf) return {kInf, kInf};
      unsigned p = a.sigma + 1;
      return {p + 1, p};
    }
    case Formula::Kind::BExists: {
      Levels a = hierarchy_levels(f.sub(0));
      if (a.pi >= kInf) return {kInf, kInf};
      unsigned s = a.pi + 1;
      return {s, s + 1};
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return {kInf, kInf};
  }
  return {kInf, kInf};
}
}  // namespace detail

inline FormulaClass classify(const Formula& f) {
  auto lv = detail::hierarchy_levels(f);
  if (lv.sigma >= detail::kInf) return FormulaClass::unbounded();
  if (lv.sigma <= lv.pi) return FormulaClass::sigma(lv.sigma);
  return FormulaClass::pi(lv.pi);
}

// A is in Sigma^b_j (not necessarily minimally).
inline bool in_sigma_b(const Formula& f, unsigned j) {
  auto lv = detail::hierarchy_levels(f);
  return lv.sigma < detail::kInf && lv.sigma <= j;
}

inline bool in_pi_b(const Formula& f, unsigned j) {
  auto lv = detail::hierarchy_levels(f);
  return lv.pi < detail::kInf && lv.pi <= j;
}

inline bool is_bounded(const Formula& f) {
  return detail::hierarchy_levels(f).sigma < detail::kInf;
}

inline bool is_quantifier_free(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::E:
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return is_quantifier_free(f.sub(0)) && is_quantifier_free(f.sub(1));
    default: return false;
  }
}

inline bool contains_e_form(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::E: return true;
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: return false;
    default:
      for (const auto& s : f.subs())
        if (contains_e_form(s)) return true;
      return false;
  }
}

// ---------------------------------------------------------------------------
// i-normal formulae. For i >= 0 these are E-forms, E-free quantifier-free
// formulae, and suffixes of the pure i-normal prefix shape whose final
// quantifier is bounded by a length |t|. The length symbol is the registry's
// `len`; its id is pinned by the builtin registration order (registry.hpp).

namespace sym {
inline constexpr SymbolId len = 33;
}

inline bool is_i_normal(const Formula& f, int i) {
  if (i < -1) throw Error("is_i_normal: i must be >= -1");
  if (i == -1) return is_quantifier_free(f);
  if (f.kind() == Formula::Kind::E) return true;
  if (is_quantifier_free(f)) return !contains_e_form(f);
  // Quantifier prefix positions j..i+1; Q_k is forall iff k even.
  Formula cur = f;
  std::vector<char> quants;  // 1 = exists, 0 = forall
  std::vector<Term> bounds;
  while (cur.is_bounded_quantifier()) {
    quants.push_back(cur.kind() == Formula::Kind::BExists ? 1 : 0);
    bounds.push_back(cur.bound());
    cur = cur.sub(0);
  }
  if (cur.is_quantifier()) return false;  // unbounded quantifier in prefix
  if (!is_quantifier_free(cur) || contains_e_form(cur)) return false;
  std::size_t l = quants.size();
  if (l < 1 || l > static_cast<std::size_t>(i) + 1) return false;
  std::size_t j = static_cast<std::size_t>(i) + 2 - l;
  for (std::size_t k = 0; k < l; ++k) {
    std::size_t pos = j + k;
    bool want_exists = (pos % 2) == 1;
    if ((quants[k] == 1) != want_exists) return false;
  }
  // The final quantifier is bounded by a length.
  const Term& last = bounds.back();
  if (!(last.is_app() && last.fn() == sym::len && last.args().size() == 1))
    return false;
  return true;
}

inline bool is_pure_i_normal(const Formula& f, int i) {
  if (i < -1) throw Error("is_pure_i_normal: i must be >= -1");
  if (i == -1) return is_quantifier_free(f);
  if (!f.is_bounded_quantifier()) return false;
  // Pure form: the full prefix, positions 1..i+1.
  Formula cur = f;
  std::size_t l = 0;
  while (cur.is_bounded_quantifier()) {
    ++l;
    cur = cur.sub(0);
  }
  if (l != static_cast<std::size_t>(i) + 1) return false;
  return is_i_normal(f, i);
}

// All subformulae, including the formula itself (bodies of quantifiers appear
// with their binder stripped).
inline void subformulas(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  for (const auto& s : f.subs()) subformulas(s, out);
}

}  // namespace s2e

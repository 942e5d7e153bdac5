#pragma once

// Bounded semantics: environments, valuation of terms witnessed by trees with
// every intermediate value below a bound u, the truth definition for
// quantifier-free formulae, its extension to i-normal formulae, and the
// unbounded direct-evaluation oracle.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s2e/godel.hpp"
#include "s2e/registry.hpp"
#include "s2e/syntax.hpp"

namespace s2e {

struct UnboundVariable : Error {
  explicit UnboundVariable(const std::string& v) : Error("unbound variable " + v) {}
};
struct UnboundedQuantifier : Error {
  UnboundedQuantifier() : Error("unbounded quantifier under direct evaluation") {}
};
struct NotINormal : Error {
  explicit NotINormal(const std::string& w) : Error("not i-normal: " + w) {}
};

// ---------------------------------------------------------------------------
// Environments: finite maps from variables to naturals; comparison ignores
// pair order.

class Environment {
 public:
  Environment() = default;
  explicit Environment(std::vector<std::pair<std::string, Code>> pairs) {
    for (auto& [x, v] : pairs) set(x, v);
  }

  std::optional<Code> lookup(const std::string& x) const {
    for (const auto& [k, v] : pairs_)
      if (k == x) return v;
    return std::nullopt;
  }
  Code at(const std::string& x) const {
    auto v = lookup(x);
    if (!v) throw UnboundVariable(x);
    return *v;
  }
  bool binds(const std::string& x) const { return lookup(x).has_value(); }

  // rho[x -> n]: replace the pair if present, append otherwise.
  Environment extended(const std::string& x, const Code& n) const {
    Environment r = *this;
    r.set(x, n);
    return r;
  }

  // Subsequence covering exactly the given variables.
  Environment restricted_to(const std::vector<std::string>& vars) const {
    Environment r;
    for (const auto& [k, v] : pairs_)
      if (std::find(vars.begin(), vars.end(), k) != vars.end()) r.pairs_.emplace_back(k, v);
    return r;
  }

  const std::vector<std::pair<std::string, Code>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  Code code() const { return encode_env(pairs_); }

  // Domain-and-value equality; order is irrelevant.
  bool operator==(const Environment& o) const {
    if (pairs_.size() != o.pairs_.size()) return false;
    for (const auto& [k, v] : pairs_) {
      auto w = o.lookup(k);
      if (!w || *w != v) return false;
    }
    return true;
  }

 private:
  void set(const std::string& x, const Code& n) {
    for (auto& [k, v] : pairs_)
      if (k == x) {
        v = n;
        return;
      }
    pairs_.emplace_back(x, n);
  }
  std::vector<std::pair<std::string, Code>> pairs_;
};

// Env(rho, sigma, u): rho binds exactly the free variables of sigma, all with
// values <= u.
template <typename Syntax>
bool env_holds(const Environment& rho, const Syntax& sigma, const Code& u) {
  auto fv = free_vars(sigma);
  if (rho.size() != fv.size()) return false;
  for (const auto& x : fv) {
    auto v = rho.lookup(x);
    if (!v || *v > u) return false;
  }
  return true;
}

// BdEnv(sigma, u): the greatest Goedel code of an environment rho with
// Env(rho, sigma, u). All values are u; the pair order is chosen to maximize
// the sequence code.
template <typename Syntax>
Code bd_env(const Syntax& sigma, const Code& u) {
  auto fv = free_vars(sigma);
  std::sort(fv.begin(), fv.end());
  Code best = 0;
  bool first = true;
  do {
    std::vector<std::pair<std::string, Code>> pairs;
    for (const auto& x : fv) pairs.emplace_back(x, u);
    Code c = encode_env(pairs);
    if (first || c > best) best = c;
    first = false;
  } while (std::next_permutation(fv.begin(), fv.end()));
  return best;
}

// ---------------------------------------------------------------------------
// Valuation trees and value_of.

struct ValuationTree {
  Code term_code;
  Code value;
  std::vector<ValuationTree> children;
};

// v(<t>, rho) |_u c: Some(c) iff a rho-valuation tree for t bounded by u with
// root value c exists. Throws UnboundVariable when rho misses a free variable.
inline std::optional<Code> value_of(const Term& t, const Environment& rho, const Code& u,
                                    const Registry& reg, ValuationTree* witness = nullptr) {
  switch (t.kind()) {
    case Term::Kind::Zero: {
      if (witness) *witness = {encode(t), 0, {}};
      return Code(0);
    }
    case Term::Kind::Var: {
      Code v = rho.at(t.var_name());
      if (v > u) return std::nullopt;
      if (witness) *witness = {encode(t), v, {}};
      return v;
    }
    case Term::Kind::App: {
      std::vector<Code> ds;
      std::vector<ValuationTree> kids;
      ds.reserve(t.args().size());
      for (const auto& a : t.args()) {
        ValuationTree kid;
        auto d = value_of(a, rho, u, reg, witness ? &kid : nullptr);
        if (!d) return std::nullopt;
        ds.push_back(*d);
        if (witness) kids.push_back(std::move(kid));
      }
      Code c = reg.eval(t.fn(), ds);
      if (c > u) return std::nullopt;
      if (witness) *witness = {encode(t), c, std::move(kids)};
      return c;
    }
  }
  return std::nullopt;
}

// The unbounded standard valuation rho(t).
inline Code rho_eval(const Term& t, const Environment& rho, const Registry& reg) {
  switch (t.kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::Var: return rho.at(t.var_name());
    case Term::Kind::App: {
      std::vector<Code> ds;
      ds.reserve(t.args().size());
      for (const auto& a : t.args()) ds.push_back(rho_eval(a, rho, reg));
      return reg.eval(t.fn(), ds);
    }
  }
  return 0;
}

// All subterms, including the term itself.
inline void subterms(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  if (t.is_app())
    for (const auto& a : t.args()) subterms(a, out);
}

inline std::vector<Term> subterms_of_formula(const Formula& f) {
  std::vector<Term> out;
  switch (f.kind()) {
    case Formula::Kind::E: subterms(f.term(0), out); break;
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      subterms(f.term(0), out);
      subterms(f.term(1), out);
      break;
    default:
      for (const auto& s : f.subs()) {
        auto inner = subterms_of_formula(s);
        out.insert(out.end(), inner.begin(), inner.end());
      }
      if (f.is_bounded_quantifier()) subterms(f.bound(), out);
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Truth trees and the quantifier-free truth definition T_{-1}.

struct TruthTree {
  Code formula_code;
  bool value;
  std::vector<TruthTree> children;
};

inline bool truth_qf(const Code& u, const Formula& a, const Environment& rho,
                     const Registry& reg, TruthTree* witness = nullptr) {
  switch (a.kind()) {
    case Formula::Kind::E: {
      bool v = value_of(a.term(0), rho, u, reg).has_value();
      if (witness) *witness = {encode(a), v, {}};
      return v;
    }
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      auto c1 = value_of(a.term(0), rho, u, reg);
      auto c2 = value_of(a.term(1), rho, u, reg);
      bool v = false;
      if (c1 && c2) {
        bool rel = a.pred() == Pred::Eq ? (*c1 == *c2) : (*c1 <= *c2);
        v = a.kind() == Formula::Kind::Atom ? rel : !rel;
      }
      if (witness) *witness = {encode(a), v, {}};
      return v;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      TruthTree l, r;
      bool vl = truth_qf(u, a.sub(0), rho, reg, witness ? &l : nullptr);
      bool vr = truth_qf(u, a.sub(1), rho, reg, witness ? &r : nullptr);
      bool v = a.kind() == Formula::Kind::And ? (vl && vr) : (vl || vr);
      if (witness) *witness = {encode(a), v, {std::move(l), std::move(r)}};
      return v;
    }
    default: throw NotINormal("truth_qf expects a quantifier-free formula");
  }
}

// ---------------------------------------------------------------------------
// The i-normal truth definition T_i.

inline bool truth_i(int i, const Code& u, const Formula& b, const Environment& rho,
                    const Registry& reg) {
  if (!is_i_normal(b, i)) throw NotINormal("truth_i argument");
  if (is_quantifier_free(b)) return truth_qf(u, b, rho, reg);
  // B = Q x <= t. A; the quantifier hoists to: exists c <= u with t converging
  // to c under u, and Q d <= c on the body.
  auto c = value_of(b.bound(), rho, u, reg);
  if (!c) return false;
  bool is_forall = b.kind() == Formula::Kind::BForall;
  for (Code d = 0; d <= *c; ++d) {
    bool inner = truth_i(i, u, b.sub(0), rho.extended(b.var(), d), reg);
    if (is_forall && !inner) return false;
    if (!is_forall && inner) return true;
  }
  return is_forall;
}

// ---------------------------------------------------------------------------
// The unbounded oracle: the standard interpretation with Et read as t = t.

inline bool direct_eval(const Formula& a, const Environment& rho, const Registry& reg) {
  switch (a.kind()) {
    case Formula::Kind::E:
      rho_eval(a.term(0), rho, reg);  // must be well-scoped
      return true;
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      Code c1 = rho_eval(a.term(0), rho, reg);
      Code c2 = rho_eval(a.term(1), rho, reg);
      bool rel = a.pred() == Pred::Eq ? (c1 == c2) : (c1 <= c2);
      return a.kind() == Formula::Kind::Atom ? rel : !rel;
    }
    case Formula::Kind::And:
      return direct_eval(a.sub(0), rho, reg) && direct_eval(a.sub(1), rho, reg);
    case Formula::Kind::Or:
      return direct_eval(a.sub(0), rho, reg) || direct_eval(a.sub(1), rho, reg);
    case Formula::Kind::BForall:
    case Formula::Kind::BExists: {
      Code c = rho_eval(a.bound(), rho, reg);
      bool is_forall = a.kind() == Formula::Kind::BForall;
      for (Code d = 0; d <= c; ++d) {
        bool inner = direct_eval(a.sub(0), rho.extended(a.var(), d), reg);
        if (is_forall && !inner) return false;
        if (!is_forall && inner) return true;
      }
      return is_forall;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: throw UnboundedQuantifier();
  }
  return false;
}

}  // namespace s2e

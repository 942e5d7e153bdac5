#pragma once

// Textual format: an s-expression grammar for terms, formulae, sequents and
// proofs, plus the classical-side variants. The printer emits the canonical
// form; parse(print(x)) == x and print(parse(s)) == s on canonical input.
//
//   term    := "0" | ident | "(" fname term* ")"
//   formula := "(E" term ")" | "(" pred term term ")" | "(and" A B ")"
//            | "(or" A B ")" | "(forall-b" x term A ")" | "(exists-b" x term A ")"
//            | "(forall" x A ")" | "(exists" x A ")"      pred in {eq le neq nle}
//   sequent := "(seq (" formula* ") (" formula* "))"
//   proof   := "(proof" rule sequent proof* ")"
//
// Parse-only aliases: (|| t) = (len t), # = smash, + = add, * = mul.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "s2e/classical.hpp"
#include "s2e/registry.hpp"
#include "s2e/syntax.hpp"

namespace s2e {

struct ParseError : Error {
  ParseError(const std::string& what, int line, int col)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
              ": " + what),
        line(line),
        col(col) {}
  int line, col;
};

// ---------------------------------------------------------------------------
// Generic s-expressions.

struct SExpr {
  bool is_atom = true;
  std::string atom;
  std::vector<SExpr> items;
  int line = 0, col = 0;

  const SExpr& at(std::size_t i) const {
    if (is_atom || i >= items.size())
      throw ParseError("expected at least " + std::to_string(i + 1) + " items", line, col);
    return items[i];
  }
  std::size_t size() const { return is_atom ? 0 : items.size(); }
  const std::string& head() const {
    if (is_atom) return atom;
    if (items.empty() || !items[0].is_atom)
      throw ParseError("expected a keyword-headed list", line, col);
    return items[0].atom;
  }
};

class SExprParser {
 public:
  explicit SExprParser(std::string_view src) : src_(src) {}

  SExpr parse_one() {
    SExpr e = next();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError("trailing input", line_, col_);
    return e;
  }

  std::vector<SExpr> parse_all() {
    std::vector<SExpr> out;
    skip_ws();
    while (pos_ < src_.size()) {
      out.push_back(next());
      skip_ws();
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  SExpr next() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", line_, col_);
    int l = line_, c = col_;
    if (src_[pos_] == '(') {
      advance();
      SExpr e;
      e.is_atom = false;
      e.line = l;
      e.col = c;
      skip_ws();
      while (pos_ < src_.size() && src_[pos_] != ')') {
        e.items.push_back(next());
        skip_ws();
      }
      if (pos_ >= src_.size()) throw ParseError("unbalanced '('", l, c);
      advance();  // ')'
      return e;
    }
    if (src_[pos_] == ')') throw ParseError("unexpected ')'", l, c);
    SExpr e;
    e.is_atom = true;
    e.line = l;
    e.col = c;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           src_[pos_] != '(' && src_[pos_] != ')' && src_[pos_] != ';') {
      e.atom.push_back(src_[pos_]);
      advance();
    }
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

// ---------------------------------------------------------------------------
// Terms.

namespace detail {
inline std::string resolve_alias(const std::string& name) {
  if (name == "||") return "len";
  if (name == "#") return "smash";
  if (name == "+") return "add";
  if (name == "*") return "mul";
  return name;
}

inline bool is_var_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::islower(static_cast<unsigned char>(c)) &&
        !std::isdigit(static_cast<unsigned char>(c)) && c != '\'' && c != '_')
      return false;
  return true;
}
}  // namespace detail

inline Term term_from_sexpr(const SExpr& e, const Registry& reg) {
  if (e.is_atom) {
    if (e.atom == "0") return Term::zero();
    if (!detail::is_var_name(e.atom))
      throw ParseError("bad variable name '" + e.atom + "'", e.line, e.col);
    return Term::var(e.atom);
  }
  if (e.items.empty() || !e.items[0].is_atom)
    throw ParseError("expected a function application", e.line, e.col);
  std::string fname = detail::resolve_alias(e.items[0].atom);
  if (!reg.has(fname))
    throw ParseError("unknown function symbol '" + fname + "'", e.line, e.col);
  SymbolId f = reg.id_of(fname);
  std::vector<Term> args;
  for (std::size_t i = 1; i < e.items.size(); ++i)
    args.push_back(term_from_sexpr(e.items[i], reg));
  if (args.size() != reg.arity(f))
    throw ParseError("arity mismatch for '" + fname + "'", e.line, e.col);
  return Term::app(f, std::move(args));
}

inline std::string to_text(const Term& t, const Registry& reg) {
  switch (t.kind()) {
    case Term::Kind::Zero: return "0";
    case Term::Kind::Var: return t.var_name();
    case Term::Kind::App: {
      std::string s = "(" + reg.name(t.fn());
      for (const auto& a : t.args()) s += " " + to_text(a, reg);
      return s + ")";
    }
  }
  return "?";
}

inline Term parse_term(const std::string& src, const Registry& reg) {
  return term_from_sexpr(SExprParser(src).parse_one(), reg);
}

// ---------------------------------------------------------------------------
// Formulae.

inline Formula formula_from_sexpr(const SExpr& e, const Registry& reg) {
  if (e.is_atom) throw ParseError("expected a formula", e.line, e.col);
  const std::string& h = e.head();
  auto need = [&](std::size_t n) {
    if (e.size() != n + 1)
      throw ParseError("'" + h + "' takes " + std::to_string(n) + " arguments", e.line,
                       e.col);
  };
  auto var_of = [&](const SExpr& v) {
    if (!v.is_atom || !detail::is_var_name(v.atom))
      throw ParseError("expected a variable", v.line, v.col);
    return v.atom;
  };
  if (h == "E") {
    need(1);
    return Formula::e(term_from_sexpr(e.at(1), reg));
  }
  if (h == "eq" || h == "le" || h == "neq" || h == "nle") {
    need(2);
    Pred p = (h == "eq" || h == "neq") ? Pred::Eq : Pred::Le;
    Term t1 = term_from_sexpr(e.at(1), reg);
    Term t2 = term_from_sexpr(e.at(2), reg);
    if (h == "eq" || h == "le") return Formula::atom(p, std::move(t1), std::move(t2));
    return Formula::neg_atom(p, std::move(t1), std::move(t2));
  }
  if (h == "and" || h == "or") {
    need(2);
    Formula a = formula_from_sexpr(e.at(1), reg);
    Formula b = formula_from_sexpr(e.at(2), reg);
    return h == "and" ? Formula::land(std::move(a), std::move(b))
                      : Formula::lor(std::move(a), std::move(b));
  }
  if (h == "forall-b" || h == "exists-b") {
    need(3);
    std::string x = var_of(e.at(1));
    Term b = term_from_sexpr(e.at(2), reg);
    Formula a = formula_from_sexpr(e.at(3), reg);
    return h == "forall-b" ? Formula::bforall(std::move(x), std::move(b), std::move(a))
                           : Formula::bexists(std::move(x), std::move(b), std::move(a));
  }
  if (h == "forall" || h == "exists") {
    need(2);
    std::string x = var_of(e.at(1));
    Formula a = formula_from_sexpr(e.at(2), reg);
    return h == "forall" ? Formula::forall(std::move(x), std::move(a))
                         : Formula::exists(std::move(x), std::move(a));
  }
  throw ParseError("unknown formula head '" + h + "'", e.line, e.col);
}

inline std::string to_text(const Formula& f, const Registry& reg) {
  switch (f.kind()) {
    case Formula::Kind::E: return "(E " + to_text(f.term(0), reg) + ")";
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      bool neg = f.kind() == Formula::Kind::NegAtom;
      std::string p = f.pred() == Pred::Eq ? (neg ? "neq" : "eq") : (neg ? "nle" : "le");
      return "(" + p + " " + to_text(f.term(0), reg) + " " + to_text(f.term(1), reg) + ")";
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const char* h = f.kind() == Formula::Kind::And ? "and" : "or";
      return std::string("(") + h + " " + to_text(f.sub(0), reg) + " " +
             to_text(f.sub(1), reg) + ")";
    }
    case Formula::Kind::BForall:
    case Formula::Kind::BExists: {
      const char* h = f.kind() == Formula::Kind::BForall ? "forall-b" : "exists-b";
      return std::string("(") + h + " " + f.var() + " " + to_text(f.bound(), reg) + " " +
             to_text(f.sub(0), reg) + ")";
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const char* h = f.kind() == Formula::Kind::Forall ? "forall" : "exists";
      return std::string("(") + h + " " + f.var() + " " + to_text(f.sub(0), reg) + ")";
    }
  }
  return "?";
}

inline Formula parse_formula(const std::string& src, const Registry& reg) {
  return formula_from_sexpr(SExprParser(src).parse_one(), reg);
}

// ---------------------------------------------------------------------------
// Sequents and proofs.

inline Sequent sequent_from_sexpr(const SExpr& e, const Registry& reg) {
  if (e.is_atom || e.size() != 3 || e.head() != "seq")
    throw ParseError("expected (seq (...) (...))", e.line, e.col);
  const SExpr& a = e.at(1);
  const SExpr& s = e.at(2);
  if (a.is_atom || s.is_atom)
    throw ParseError("expected (seq (...) (...))", e.line, e.col);
  Sequent r;
  for (const auto& x : a.items) r.ante.push_back(formula_from_sexpr(x, reg));
  for (const auto& x : s.items) r.succ.push_back(formula_from_sexpr(x, reg));
  return r;
}

inline std::string to_text(const Sequent& s, const Registry& reg) {
  std::string out = "(seq (";
  for (std::size_t i = 0; i < s.ante.size(); ++i)
    out += (i ? " " : "") + to_text(s.ante[i], reg);
  out += ") (";
  for (std::size_t i = 0; i < s.succ.size(); ++i)
    out += (i ? " " : "") + to_text(s.succ[i], reg);
  return out + "))";
}

inline Sequent parse_sequent(const std::string& src, const Registry& reg) {
  return sequent_from_sexpr(SExprParser(src).parse_one(), reg);
}

namespace detail {
template <typename R>
R rule_from_name(const std::string& n, int line, int col) {
  for (int i = 0;; ++i) {
    R r = static_cast<R>(i);
    if (std::string(rule_name(r)) == n) return r;
    if (r == R::PInd) break;
  }
  throw ParseError("unknown rule '" + n + "'", line, col);
}
}  // namespace detail

inline Proof proof_from_sexpr(const SExpr& e, const Registry& reg) {
  if (e.is_atom || e.size() < 3 || e.head() != "proof")
    throw ParseError("expected (proof rule (seq ...) ...)", e.line, e.col);
  const SExpr& rn = e.at(1);
  if (!rn.is_atom) throw ParseError("expected a rule name", rn.line, rn.col);
  Rule rule = detail::rule_from_name<Rule>(rn.atom, rn.line, rn.col);
  Sequent concl = sequent_from_sexpr(e.at(2), reg);
  std::vector<Proof> children;
  for (std::size_t i = 3; i < e.size(); ++i) {
    // Optional annotation lists such as (payload ...) are accepted and
    // ignored; the checker reconstructs everything it needs.
    if (!e.items[i].is_atom && e.items[i].size() > 0 && e.items[i].items[0].is_atom &&
        e.items[i].items[0].atom == "payload")
      continue;
    children.push_back(proof_from_sexpr(e.items[i], reg));
  }
  return Proof::node(rule, std::move(concl), std::move(children));
}

inline std::string to_text(const Proof& p, const Registry& reg) {
  std::string out = "(proof ";
  out += rule_name(p.rule());
  out += " " + to_text(p.conclusion(), reg);
  for (const auto& c : p.children()) out += " " + to_text(c, reg);
  return out + ")";
}

inline Proof parse_proof(const std::string& src, const Registry& reg) {
  return proof_from_sexpr(SExprParser(src).parse_one(), reg);
}

// ---------------------------------------------------------------------------
// Classical formulae, sequents, proofs.

inline CFormula cformula_from_sexpr(const SExpr& e, const Registry& reg) {
  if (e.is_atom) throw ParseError("expected a classical formula", e.line, e.col);
  const std::string& h = e.head();
  auto need = [&](std::size_t n) {
    if (e.size() != n + 1)
      throw ParseError("'" + h + "' takes " + std::to_string(n) + " arguments", e.line,
                       e.col);
  };
  if (h == "eq" || h == "le") {
    need(2);
    return CFormula::atom(h == "eq" ? Pred::Eq : Pred::Le,
                          term_from_sexpr(e.at(1), reg), term_from_sexpr(e.at(2), reg));
  }
  if (h == "neq" || h == "nle") {
    need(2);
    return CFormula::lnot(CFormula::atom(h == "neq" ? Pred::Eq : Pred::Le,
                                         term_from_sexpr(e.at(1), reg),
                                         term_from_sexpr(e.at(2), reg)));
  }
  if (h == "not") {
    need(1);
    return CFormula::lnot(cformula_from_sexpr(e.at(1), reg));
  }
  if (h == "and" || h == "or" || h == "implies") {
    need(2);
    CFormula a = cformula_from_sexpr(e.at(1), reg);
    CFormula b = cformula_from_sexpr(e.at(2), reg);
    if (h == "and") return CFormula::land(std::move(a), std::move(b));
    if (h == "or") return CFormula::lor(std::move(a), std::move(b));
    return CFormula::implies(std::move(a), std::move(b));
  }
  auto var_of = [&](const SExpr& v) {
    if (!v.is_atom || !detail::is_var_name(v.atom))
      throw ParseError("expected a variable", v.line, v.col);
    return v.atom;
  };
  if (h == "forall-b" || h == "exists-b") {
    need(3);
    std::string x = var_of(e.at(1));
    Term b = term_from_sexpr(e.at(2), reg);
    CFormula a = cformula_from_sexpr(e.at(3), reg);
    return h == "forall-b" ? CFormula::bforall(std::move(x), std::move(b), std::move(a))
                           : CFormula::bexists(std::move(x), std::move(b), std::move(a));
  }
  if (h == "forall" || h == "exists") {
    need(2);
    std::string x = var_of(e.at(1));
    CFormula a = cformula_from_sexpr(e.at(2), reg);
    return h == "forall" ? CFormula::forall(std::move(x), std::move(a))
                         : CFormula::exists(std::move(x), std::move(a));
  }
  throw ParseError("unknown classical formula head '" + h + "'", e.line, e.col);
}

inline std::string to_text(const CFormula& f, const Registry& reg) {
  switch (f.kind()) {
    case CFormula::Kind::Atom: {
      std::string p = f.pred() == Pred::Eq ? "eq" : "le";
      return "(" + p + " " + to_text(f.term(0), reg) + " " + to_text(f.term(1), reg) + ")";
    }
    case CFormula::Kind::Not: return "(not " + to_text(f.sub(0), reg) + ")";
    case CFormula::Kind::And:
    case CFormula::Kind::Or:
    case CFormula::Kind::Implies: {
      const char* h = f.kind() == CFormula::Kind::And
                          ? "and"
                          : (f.kind() == CFormula::Kind::Or ? "or" : "implies");
      return std::string("(") + h + " " + to_text(f.sub(0), reg) + " " +
             to_text(f.sub(1), reg) + ")";
    }
    case CFormula::Kind::BForall:
    case CFormula::Kind::BExists: {
      const char* h = f.kind() == CFormula::Kind::BForall ? "forall-b" : "exists-b";
      return std::string("(") + h + " " + f.var() + " " + to_text(f.bound(), reg) + " " +
             to_text(f.sub(0), reg) + ")";
    }
    case CFormula::Kind::Forall:
    case CFormula::Kind::Exists: {
      const char* h = f.kind() == CFormula::Kind::Forall ? "forall" : "exists";
      return std::string("(") + h + " " + f.var() + " " + to_text(f.sub(0), reg) + ")";
    }
  }
  return "?";
}

inline CSequent csequent_from_sexpr(const SExpr& e, const Registry& reg) {
  if (e.is_atom || e.size() != 3 || e.head() != "seq")
    throw ParseError("expected (seq (...) (...))", e.line, e.col);
  CSequent r;
  for (const auto& x : e.at(1).items) r.ante.push_back(cformula_from_sexpr(x, reg));
  for (const auto& x : e.at(2).items) r.succ.push_back(cformula_from_sexpr(x, reg));
  return r;
}

inline std::string to_text(const CSequent& s, const Registry& reg) {
  std::string out = "(seq (";
  for (std::size_t i = 0; i < s.ante.size(); ++i)
    out += (i ? " " : "") + to_text(s.ante[i], reg);
  out += ") (";
  for (std::size_t i = 0; i < s.succ.size(); ++i)
    out += (i ? " " : "") + to_text(s.succ[i], reg);
  return out + "))";
}

inline CProof cproof_from_sexpr(const SExpr& e, const Registry& reg) {
  if (e.is_atom || e.size() < 3 || e.head() != "cproof")
    throw ParseError("expected (cproof rule (seq ...) ...)", e.line, e.col);
  const SExpr& rn = e.at(1);
  if (!rn.is_atom) throw ParseError("expected a rule name", rn.line, rn.col);
  CRule rule = detail::rule_from_name<CRule>(rn.atom, rn.line, rn.col);
  CSequent concl = csequent_from_sexpr(e.at(2), reg);
  std::vector<CProof> children;
  for (std::size_t i = 3; i < e.size(); ++i) {
    if (!e.items[i].is_atom && e.items[i].size() > 0 && e.items[i].items[0].is_atom &&
        e.items[i].items[0].atom == "payload")
      continue;
    children.push_back(cproof_from_sexpr(e.items[i], reg));
  }
  return CProof::node(rule, std::move(concl), std::move(children));
}

inline std::string to_text(const CProof& p, const Registry& reg) {
  std::string out = "(cproof ";
  out += rule_name(p.rule());
  out += " " + to_text(p.conclusion(), reg);
  for (const auto& c : p.children()) out += " " + to_text(c, reg);
  return out + ")";
}

inline CProof parse_cproof(const std::string& src, const Registry& reg) {
  return cproof_from_sexpr(SExprParser(src).parse_one(), reg);
}

// ---------------------------------------------------------------------------
// Registry extensions:
//   (registry (fn NAME ARITY BODY)* )
//   BODY := (zero) | (proj L) | (comp G H...) | (rec G H0 H1)
// Referenced component names must already be registered (well-groundedness).

inline void extend_registry_from_sexpr(const SExpr& e, Registry& reg) {
  if (e.is_atom || e.size() < 1 || e.head() != "registry")
    throw ParseError("expected (registry ...)", e.line, e.col);
  for (std::size_t i = 1; i < e.size(); ++i) {
    const SExpr& fe = e.items[i];
    if (fe.is_atom || fe.head() != "fn" || fe.size() != 4)
      throw ParseError("expected (fn name arity body)", fe.line, fe.col);
    std::string name = fe.at(1).atom;
    unsigned arity = static_cast<unsigned>(std::stoul(fe.at(2).atom));
    const SExpr& be = fe.at(3);
    const std::string& bh = be.head();
    auto sid = [&](const SExpr& x) {
      if (!x.is_atom || !reg.has(x.atom))
        throw ParseError("unknown component function", x.line, x.col);
      return reg.id_of(x.atom);
    };
    FunctionBody body;
    if (bh == "zero") {
      body = ZeroN{};
    } else if (bh == "proj") {
      body = ProjN{static_cast<unsigned>(std::stoul(be.at(1).atom))};
    } else if (bh == "comp") {
      Composition c;
      c.g = sid(be.at(1));
      for (std::size_t k = 2; k < be.size(); ++k) c.hs.push_back(sid(be.items[k]));
      body = std::move(c);
    } else if (bh == "rec") {
      body = Recursion{sid(be.at(1)), sid(be.at(2)), sid(be.at(3))};
    } else {
      throw ParseError("unknown function body kind '" + bh + "'", be.line, be.col);
    }
    reg.add_function(FunctionDef{std::move(name), arity, std::move(body), {}});
  }
}

}  // namespace s2e

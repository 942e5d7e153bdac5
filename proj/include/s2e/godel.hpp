#pragma once

// Arithmetization. Sequence codes follow Buss' method: spread each element
// (insert 0 between consecutive bits, append a trailing 0) and join the
// blocks with the separator 11. (+) concatenates binary strings, (-) shifts
// right by a length. Syntax objects encode as nested sequences over a fixed
// symbol table (documented in docs/format.md):
//
//   constant 0 -> 1,  eq 2, le 3, neq 4, nle 5, and 6, or 7,
//   forall-b 8, exists-b 9, forall 10, exists 11, E 12,
//   rules id..pind -> 13..38,
//   function symbol f -> 64 + 2*id(f),
//   variable x -> 65 + 2*N(x) with N the base-38 reading of the name.

#include <optional>
#include <string>
#include <vector>

#include "s2e/nat.hpp"
#include "s2e/registry.hpp"
#include "s2e/syntax.hpp"

namespace s2e {

struct NotASequenceCode : Error {
  explicit NotASequenceCode(const std::string& w) : Error("not a sequence code: " + w) {}
};
struct MalformedCode : Error {
  explicit MalformedCode(const std::string& w) : Error("malformed code: " + w) {}
};

// ---------------------------------------------------------------------------
// Bit-string primitives.

// Insert 0 between consecutive bits and append a trailing 0; spread(0) = 0.
inline Code spread(const Code& u) {
  std::size_t n = bitlen(u);
  if (n == 0) return 0;
  std::vector<bool> bits(2 * n, false);
  for (std::size_t i = 0; i < n; ++i)
    bits[2 * (n - 1 - i)] = mpz_tstbit(u.get_mpz_t(), i) != 0;
  return code_from_bits_msb(bits);
}

// Concatenation of binary representations; a supplies the most significant
// bits.
inline Code oplus(const Code& a, const Code& b) { return shl(a, bitlen(b)) + b; }

// floor(a / 2^|b|).
inline Code ominus(const Code& a, const Code& b) { return shr(a, bitlen(b)); }

// ---------------------------------------------------------------------------
// Sequence codes.

inline Code encode_seq(const std::vector<Code>& elems) {
  Code r = 0;
  bool first = true;
  for (const auto& u : elems) {
    if (!first) r = oplus(r, 3);
    r = oplus(r, spread(u));
    first = false;
  }
  return r;
}

// Fast-failing internal decoder; the public decode_seq wraps it.
inline std::optional<std::vector<Code>> try_decode_seq(const Code& c) {
  std::vector<Code> out;
  if (c == 0) return out;
  std::vector<bool> bits = bits_msb(c);
  std::vector<bool> block;
  auto close_block = [&]() -> bool {
    if (block.empty()) {
      out.emplace_back(0);
      return true;
    }
    // Valid spread: even length, leading 1, zeros at the odd offsets; the
    // decoded bits sit at the even offsets.
    if (!block.front() || (block.size() % 2) != 0) return false;
    std::vector<bool> payload(block.size() / 2);
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k % 2 == 1) {
        if (block[k]) return false;
      } else {
        payload[k / 2] = block[k];
      }
    }
    out.push_back(code_from_bits_msb(payload));
    block.clear();
    return true;
  };
  std::size_t p = 0;
  const std::size_t n = bits.size();
  while (p < n) {
    if (p + 1 < n && bits[p] && bits[p + 1]) {
      if (!close_block()) return std::nullopt;
      p += 2;
      continue;
    }
    block.push_back(bits[p]);
    ++p;
  }
  if (!close_block()) return std::nullopt;
  return out;
}

inline std::vector<Code> decode_seq(const Code& c) {
  auto r = try_decode_seq(c);
  if (!r) throw NotASequenceCode(to_decimal(c));
  return *r;
}

// ---------------------------------------------------------------------------
// Symbol codes.

namespace codes {
inline constexpr unsigned long zero_const = 1;
inline constexpr unsigned long eq = 2, le = 3, neq = 4, nle = 5;
inline constexpr unsigned long conj = 6, disj = 7;
inline constexpr unsigned long bforall = 8, bexists = 9, forall = 10, exists = 11;
inline constexpr unsigned long e_form = 12;
inline constexpr unsigned long rule_base = 13;  // id..pind -> 13..38
inline constexpr unsigned long symbol_base = 64;
}  // namespace codes

inline Code function_code(SymbolId f) { return Code(codes::symbol_base + 2ul * f); }

// Base-38 reading of a variable name with a leading salt digit, so distinct
// names and lengths never collide.
inline Code var_code(const std::string& name) {
  Code v = 1;
  for (char ch : name) {
    int d;
    if (ch >= '0' && ch <= '9')
      d = ch - '0';
    else if (ch >= 'a' && ch <= 'z')
      d = 10 + (ch - 'a');
    else if (ch == '\'')
      d = 36;
    else if (ch == '_')
      d = 37;
    else
      throw Error("variable name not codable: " + name);
    v = v * 38 + d;
  }
  return Code(codes::symbol_base + 1) + (v - 38) * 2;
}

inline std::optional<std::string> try_decode_var(const Code& c) {
  if (c < codes::symbol_base + 1) return std::nullopt;
  Code d = c - (codes::symbol_base + 1);
  if (mpz_odd_p(d.get_mpz_t())) return std::nullopt;
  Code v = d / 2 + 38;
  std::vector<int> digits;
  while (v > 1) {
    digits.push_back(mpz_class(v % 38).get_ui());
    v /= 38;
  }
  if (v != 1) return std::nullopt;
  std::string name;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    int dg = *it;
    if (dg < 10)
      name.push_back(static_cast<char>('0' + dg));
    else if (dg < 36)
      name.push_back(static_cast<char>('a' + (dg - 10)));
    else if (dg == 36)
      name.push_back('\'');
    else
      name.push_back('_');
  }
  if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) return std::nullopt;
  return name;
}

// ---------------------------------------------------------------------------
// Object encodings.

inline Code encode(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return encode_seq({Code(codes::zero_const)});
    case Term::Kind::Var: return encode_seq({var_code(t.var_name())});
    case Term::Kind::App: {
      std::vector<Code> items{function_code(t.fn())};
      for (const auto& a : t.args()) items.push_back(encode(a));
      return encode_seq(items);
    }
  }
  throw MalformedCode("unreachable");
}

inline Code encode(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::E: return encode_seq({Code(codes::e_form), encode(f.term(0))});
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom: {
      bool neg = f.kind() == Formula::Kind::NegAtom;
      unsigned long p = f.pred() == Pred::Eq ? (neg ? codes::neq : codes::eq)
                                             : (neg ? codes::nle : codes::le);
      return encode_seq({Code(p), encode(f.term(0)), encode(f.term(1))});
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return encode_seq({Code(f.kind() == Formula::Kind::And ? codes::conj : codes::disj),
                         encode(f.sub(0)), encode(f.sub(1))});
    case Formula::Kind::BForall:
    case Formula::Kind::BExists:
      return encode_seq(
          {Code(f.kind() == Formula::Kind::BForall ? codes::bforall : codes::bexists),
           var_code(f.var()), encode(f.bound()), encode(f.sub(0))});
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return encode_seq(
          {Code(f.kind() == Formula::Kind::Forall ? codes::forall : codes::exists),
           var_code(f.var()), encode(f.sub(0))});
  }
  throw MalformedCode("unreachable");
}

inline Code encode(const Sequent& s) {
  std::vector<Code> ante, succ;
  for (const auto& f : s.ante) ante.push_back(encode(f));
  for (const auto& f : s.succ) succ.push_back(encode(f));
  return encode_seq({encode_seq(ante), encode_seq(succ)});
}

// Proof node: <R, code of the conclusion sequent, child codes...>.
inline Code encode(const Proof& p) {
  std::vector<Code> items{Code(codes::rule_base + static_cast<unsigned>(p.rule())),
                          encode(p.conclusion())};
  for (const auto& c : p.children()) items.push_back(encode(c));
  return encode_seq(items);
}

// Environments: sequences of two-element sequences (var code, value).
inline Code encode_env(const std::vector<std::pair<std::string, Code>>& pairs) {
  std::vector<Code> items;
  for (const auto& [x, v] : pairs) items.push_back(encode_seq({var_code(x), v}));
  return encode_seq(items);
}

// ---------------------------------------------------------------------------
// Decoding. The try_* functions fail fast (no exceptions) so that code sweeps
// can skim candidates cheaply; the public decode_* wrappers throw
// MalformedCode.

inline std::optional<Term> try_decode_term(const Code& c, const Registry& reg,
                                           int depth = 0) {
  if (depth > 64) return std::nullopt;
  auto items = try_decode_seq(c);
  if (!items || items->empty()) return std::nullopt;
  const Code& head = (*items)[0];
  if (head == codes::zero_const)
    return items->size() == 1 ? std::optional<Term>(Term::zero()) : std::nullopt;
  if (head < codes::symbol_base) return std::nullopt;
  if (mpz_even_p(Code(head - codes::symbol_base).get_mpz_t())) {
    Code idc = (head - codes::symbol_base) / 2;
    if (!idc.fits_uint_p()) return std::nullopt;
    SymbolId f = static_cast<SymbolId>(idc.get_ui());
    if (!reg.valid_id(f)) return std::nullopt;
    if (items->size() != 1 + reg.arity(f)) return std::nullopt;
    std::vector<Term> args;
    for (std::size_t i = 1; i < items->size(); ++i) {
      auto a = try_decode_term((*items)[i], reg, depth + 1);
      if (!a) return std::nullopt;
      args.push_back(std::move(*a));
    }
    return Term::app(f, std::move(args));
  }
  if (items->size() != 1) return std::nullopt;
  auto name = try_decode_var(head);
  if (!name) return std::nullopt;
  return Term::var(*name);
}

inline std::optional<Formula> try_decode_formula(const Code& c, const Registry& reg,
                                                 int depth = 0) {
  if (depth > 64) return std::nullopt;
  auto items = try_decode_seq(c);
  if (!items || items->empty()) return std::nullopt;
  const Code& head = (*items)[0];
  if (!head.fits_ulong_p()) return std::nullopt;
  unsigned long h = head.get_ui();
  auto term_at = [&](std::size_t i) { return try_decode_term((*items)[i], reg, depth + 1); };
  switch (h) {
    case codes::e_form: {
      if (items->size() != 2) return std::nullopt;
      auto t = term_at(1);
      if (!t) return std::nullopt;
      return Formula::e(std::move(*t));
    }
    case codes::eq:
    case codes::le:
    case codes::neq:
    case codes::nle: {
      if (items->size() != 3) return std::nullopt;
      auto t1 = term_at(1), t2 = term_at(2);
      if (!t1 || !t2) return std::nullopt;
      Pred p = (h == codes::eq || h == codes::neq) ? Pred::Eq : Pred::Le;
      if (h == codes::eq || h == codes::le)
        return Formula::atom(p, std::move(*t1), std::move(*t2));
      return Formula::neg_atom(p, std::move(*t1), std::move(*t2));
    }
    case codes::conj:
    case codes::disj: {
      if (items->size() != 3) return std::nullopt;
      auto a = try_decode_formula((*items)[1], reg, depth + 1);
      auto b = try_decode_formula((*items)[2], reg, depth + 1);
      if (!a || !b) return std::nullopt;
      return h == codes::conj ? Formula::land(std::move(*a), std::move(*b))
                              : Formula::lor(std::move(*a), std::move(*b));
    }
    case codes::bforall:
    case codes::bexists: {
      if (items->size() != 4) return std::nullopt;
      auto x = try_decode_var((*items)[1]);
      auto bnd = term_at(2);
      auto a = try_decode_formula((*items)[3], reg, depth + 1);
      if (!x || !bnd || !a) return std::nullopt;
      if (occurs_in(*x, *bnd)) return std::nullopt;
      return h == codes::bforall
                 ? Formula::bforall(std::move(*x), std::move(*bnd), std::move(*a))
                 : Formula::bexists(std::move(*x), std::move(*bnd), std::move(*a));
    }
    case codes::forall:
    case codes::exists: {
      if (items->size() != 3) return std::nullopt;
      auto x = try_decode_var((*items)[1]);
      auto a = try_decode_formula((*items)[2], reg, depth + 1);
      if (!x || !a) return std::nullopt;
      return h == codes::forall ? Formula::forall(std::move(*x), std::move(*a))
                                : Formula::exists(std::move(*x), std::move(*a));
    }
    default: return std::nullopt;
  }
}

inline std::optional<Sequent> try_decode_sequent(const Code& c, const Registry& reg,
                                                 int depth = 0) {
  auto items = try_decode_seq(c);
  if (!items || items->size() != 2) return std::nullopt;
  auto ante = try_decode_seq((*items)[0]);
  auto succ = try_decode_seq((*items)[1]);
  if (!ante || !succ) return std::nullopt;
  Sequent s;
  for (const auto& fc : *ante) {
    auto f = try_decode_formula(fc, reg, depth + 1);
    if (!f) return std::nullopt;
    s.ante.push_back(std::move(*f));
  }
  for (const auto& fc : *succ) {
    auto f = try_decode_formula(fc, reg, depth + 1);
    if (!f) return std::nullopt;
    s.succ.push_back(std::move(*f));
  }
  return s;
}

inline std::optional<Proof> try_decode_proof(const Code& c, const Registry& reg,
                                             int depth = 0) {
  if (depth > 64) return std::nullopt;
  auto items = try_decode_seq(c);
  if (!items || items->size() < 2) return std::nullopt;
  const Code& head = (*items)[0];
  if (!head.fits_ulong_p()) return std::nullopt;
  unsigned long h = head.get_ui();
  if (h < codes::rule_base || h > codes::rule_base + static_cast<unsigned>(Rule::PInd))
    return std::nullopt;
  Rule rule = static_cast<Rule>(h - codes::rule_base);
  if (items->size() != 2 + premise_count(rule)) return std::nullopt;
  auto concl = try_decode_sequent((*items)[1], reg, depth + 1);
  if (!concl) return std::nullopt;
  std::vector<Proof> children;
  for (std::size_t i = 2; i < items->size(); ++i) {
    auto ch = try_decode_proof((*items)[i], reg, depth + 1);
    if (!ch) return std::nullopt;
    children.push_back(std::move(*ch));
  }
  return Proof::node(rule, std::move(*concl), std::move(children));
}

inline Term decode_term(const Code& c, const Registry& reg) {
  auto t = try_decode_term(c, reg);
  if (!t) throw MalformedCode("term " + to_decimal(c));
  return *t;
}
inline Formula decode_formula(const Code& c, const Registry& reg) {
  auto f = try_decode_formula(c, reg);
  if (!f) throw MalformedCode("formula " + to_decimal(c));
  return *f;
}
inline Sequent decode_sequent(const Code& c, const Registry& reg) {
  auto s = try_decode_sequent(c, reg);
  if (!s) throw MalformedCode("sequent " + to_decimal(c));
  return *s;
}
inline Proof decode_proof(const Code& c, const Registry& reg) {
  auto p = try_decode_proof(c, reg);
  if (!p) throw MalformedCode("proof " + to_decimal(c));
  return *p;
}

}  // namespace s2e

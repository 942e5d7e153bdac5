#include <catch2/catch_amalgamated.hpp>

#include "s2e/godel.hpp"
#include "s2e/proofs.hpp"
#include "s2e/text.hpp"

using namespace s2e;

namespace {
const Registry& reg() {
  static Registry r;
  return r;
}

Term random_term(Rng& rng, int depth) {
  static const std::vector<std::string> vars{"a", "b", "c", "x", "y"};
  if (depth <= 0 || rand_below(rng, 3) == 0) {
    switch (rand_below(rng, 2)) {
      case 0: return Term::zero();
      default: return Term::var(vars[rand_below(rng, vars.size() - 1)]);
    }
  }
  SymbolId f = static_cast<SymbolId>(rand_below(rng, reg().size() - 1));
  std::vector<Term> args;
  for (unsigned i = 0; i < reg().arity(f); ++i) args.push_back(random_term(rng, depth - 1));
  return Term::app(f, std::move(args));
}

Formula random_formula(Rng& rng, int depth) {
  static const std::vector<std::string> vars{"x", "y", "z"};
  unsigned pick = rand_below(rng, depth <= 0 ? 3 : 8);
  switch (pick) {
    case 0: return Formula::e(random_term(rng, depth));
    case 1:
      return Formula::atom(rand_below(rng, 1) ? Pred::Eq : Pred::Le,
                           random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 2:
      return Formula::neg_atom(rand_below(rng, 1) ? Pred::Eq : Pred::Le,
                               random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 3:
      return Formula::land(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4:
      return Formula::lor(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5: {
      std::string v = vars[rand_below(rng, vars.size() - 1)];
      Term bound = random_term(rng, depth - 1);
      if (occurs_in(v, bound)) bound = Term::zero();
      return rand_below(rng, 1)
                 ? Formula::bforall(v, bound, random_formula(rng, depth - 1))
                 : Formula::bexists(v, bound, random_formula(rng, depth - 1));
    }
    default: {
      std::string v = vars[rand_below(rng, vars.size() - 1)];
      return rand_below(rng, 1) ? Formula::forall(v, random_formula(rng, depth - 1))
                                : Formula::exists(v, random_formula(rng, depth - 1));
    }
  }
}

Proof random_proof(Rng& rng, int depth) {
  auto random_sequent = [&](int d) {
    Sequent s;
    unsigned na = rand_below(rng, 2), ns = rand_below(rng, 2);
    for (unsigned i = 0; i < na; ++i) s.ante.push_back(random_formula(rng, d));
    for (unsigned i = 0; i < ns; ++i) s.succ.push_back(random_formula(rng, d));
    return s;
  };
  Rule rule;
  if (depth <= 0) {
    rule = rand_below(rng, 1) ? Rule::Id : Rule::Ax;
  } else {
    rule = static_cast<Rule>(rand_below(rng, static_cast<unsigned>(Rule::PInd)));
  }
  std::vector<Proof> children;
  for (unsigned i = 0; i < premise_count(rule); ++i)
    children.push_back(random_proof(rng, depth - 1));
  return Proof::node(rule, random_sequent(2), std::move(children));
}
}  // namespace

TEST_CASE("spread", "[godel]") {
  CHECK(spread(3) == 10);   // 11 -> 1010
  CHECK(spread(5) == 34);   // 101 -> 100010
  CHECK(spread(0) == 0);
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    Code u = rand_code_below(rng, all_ones(64));
    if (u > 0) CHECK(bitlen(spread(u)) == 2 * bitlen(u));
    // No two adjacent 1 bits.
    Code s = spread(u);
    CHECK((s & (s >> 1)) == 0);
  }
}

TEST_CASE("oplus and ominus", "[godel]") {
  CHECK(oplus(2, 3) == 11);
  CHECK(oplus(Code(7), Code(0)) == 7);
  CHECK(ominus(Code(7), Code(0)) == 7);
  CHECK(ominus(11, 3) == 2);
  Rng rng(8);
  for (int i = 0; i < 5000; ++i) {
    Code a = rand_code_below(rng, all_ones(64));
    Code b = rand_code_below(rng, all_ones(64));
    CHECK(bitlen(oplus(a, b)) == bitlen(a) + bitlen(b));
    CHECK(ominus(oplus(a, b), b) == a);
    // All-ones absorption.
    Code u = all_ones(1 + rand_below(rng, 63));
    Code r = rand_code_below(rng, u);
    CHECK(oplus(ominus(u, r), r) <= u);
  }
}

TEST_CASE("sequence codes", "[godel]") {
  CHECK(encode_seq({}) == 0);
  CHECK(encode_seq({Code(3)}) == 10);
  CHECK(encode_seq({Code(3), Code(3)}) == 698);  // 1010 11 1010
  CHECK(decode_seq(Code(698)) == (std::vector<Code>{3, 3}));
  CHECK(decode_seq(Code(0)).empty());
  // <0,0> encodes to 3 (the code of the empty sequent's two empty lists).
  CHECK(encode_seq({Code(0), Code(0)}) == 3);
  CHECK(decode_seq(Code(3)) == (std::vector<Code>{0, 0}));
  // Malformed: odd-length or misaligned blocks.
  CHECK(!try_decode_seq(Code(1)).has_value());
  CHECK(!try_decode_seq(Code(0b110)).has_value());
  CHECK_THROWS_AS(decode_seq(Code(1)), NotASequenceCode);
  Rng rng(9);
  for (int i = 0; i < 2000; ++i) {
    std::vector<Code> elems;
    for (unsigned k = rand_below(rng, 4); k-- > 0;)
      elems.push_back(rand_code_below(rng, all_ones(24)));
    if (elems.size() == 1 && elems[0] == 0) continue;  // <0> collides with <>
    CHECK(decode_seq(encode_seq(elems)) == elems);
  }
}

TEST_CASE("object round-trips", "[godel]") {
  Rng rng(20240909);
  for (int i = 0; i < 1500; ++i) {
    Term t = random_term(rng, 4);
    CHECK(decode_term(encode(t), reg()) == t);
  }
  for (int i = 0; i < 1500; ++i) {
    Formula f = random_formula(rng, 4);
    CHECK(decode_formula(encode(f), reg()) == f);
  }
  for (int i = 0; i < 300; ++i) {
    Proof p = random_proof(rng, 3);
    CHECK(decode_proof(encode(p), reg()) == p);
  }
  CHECK_THROWS_AS(decode_formula(Code(17), reg()), MalformedCode);
}

TEST_CASE("code structure", "[godel]") {
  // The empty sequent has code 3.
  CHECK(encode(Sequent{}) == 3);
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    Proof p = random_proof(rng, 2);
    Code cp = encode(p);
    for (const auto& ch : p.children()) {
      Code cc = encode(ch);
      // Subproof codes are strictly smaller.
      CHECK(cc < cp);
      // The spread of a child code is a contiguous bit block of the parent.
      Code needle = spread(cc);
      std::size_t nb = bitlen(needle), np = bitlen(cp);
      bool found = nb == 0;
      for (std::size_t off = 0; !found && off + nb <= np; ++off) {
        Code window = shr(cp, off) & all_ones(nb);
        if (window == needle) found = true;
      }
      CHECK(found);
      // Cut-style length slack: |c1 (+) c2| < |parent| whenever there are
      // two children.
      if (p.children().size() == 2) {
        Code c1 = encode(p.children()[0]), c2 = encode(p.children()[1]);
        CHECK(bitlen(oplus(c1, c2)) < bitlen(cp));
      }
    }
  }
}

TEST_CASE("code printing", "[godel]") {
  CHECK(to_hex(Code(698)) == "0x2ba");
  CHECK(parse_code("698") == 698);
  CHECK(parse_code("0x2ba") == 698);
  CHECK_THROWS_AS(parse_code("zzz"), Error);
}

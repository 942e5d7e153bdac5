#pragma once

// Unbounded naturals and the bit-string primitives everything else is built on.
// Numbers are identified with their binary representations; |0| = 0.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace s2e {

using Code = mpz_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Number of bits in the binary representation; |0| = 0.
inline std::size_t bitlen(const Code& a) {
  if (a == 0) return 0;
  return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline bool bit(const Code& a, std::size_t i) {
  return mpz_tstbit(a.get_mpz_t(), i) != 0;
}

inline Code shl(const Code& a, std::size_t k) {
  Code r;
  mpz_mul_2exp(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

inline Code shr(const Code& a, std::size_t k) {
  Code r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

// 2^k - 1: the all-ones string of length k.
inline Code all_ones(std::size_t k) {
  Code r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
  return r - 1;
}

inline bool is_all_ones(const Code& a) {
  if (a == 0) return false;
  return a == all_ones(bitlen(a));
}

inline Code pow2(std::size_t k) { return shl(Code(1), k); }

// Builds a Code from bits given most-significant first (linear time).
inline Code code_from_bits_msb(const std::vector<bool>& bits) {
  std::vector<unsigned char> bytes((bits.size() + 7) / 8, 0);
  // bit k (from the MSB) lands at position bits.size()-1-k from the LSB.
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (!bits[k]) continue;
    std::size_t pos = bits.size() - 1 - k;
    bytes[bytes.size() - 1 - pos / 8] |= static_cast<unsigned char>(1u << (pos % 8));
  }
  Code r;
  if (!bytes.empty())
    mpz_import(r.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return r;
}

// Bits of a, most significant first.
inline std::vector<bool> bits_msb(const Code& a) {
  std::size_t n = bitlen(a);
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = mpz_tstbit(a.get_mpz_t(), n - 1 - i);
  return bits;
}

inline std::string to_decimal(const Code& a) { return a.get_str(10); }

inline std::string to_hex(const Code& a) { return "0x" + a.get_str(16); }

// Accepts decimal or 0x-prefixed hex.
inline Code parse_code(const std::string& s) {
  Code r;
  int rc;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
    rc = r.set_str(s.substr(2), 16);
  else
    rc = r.set_str(s, 10);
  if (rc != 0) throw Error("not a number: " + s);
  if (r < 0) throw Error("negative code: " + s);
  return r;
}

// Deterministic RNG helpers used by the randomized suites.
using Rng = std::mt19937_64;

inline std::uint64_t rand_below(Rng& rng, std::uint64_t bound_inclusive) {
  std::uniform_int_distribution<std::uint64_t> d(0, bound_inclusive);
  return d(rng);
}

// Uniform-ish Code in [0, bound]; draws a bit length first so small values appear.
inline Code rand_code_below(Rng& rng, const Code& bound) {
  if (bound == 0) return 0;
  std::size_t n = bitlen(bound);
  for (;;) {
    std::size_t len = rand_below(rng, n);
    Code r = 0;
    for (std::size_t i = 0; i < len; ++i)
      if (rand_below(rng, 1)) mpz_setbit(r.get_mpz_t(), i);
    if (r <= bound) return r;
  }
}

}  // namespace s2e

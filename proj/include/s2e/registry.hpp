#pragma once

// The well-grounded function-symbol registry: Cobham-style definitions with
// their standard interpretations, the recursion-on-notation evaluator, and
// definition degrees.
//
// Every derived symbol is given a genuine base/composition/recursion body;
// the defining equations generated from those bodies must be true under the
// standard interpretation (the axiom lint checks this), which forces the
// s0-at-zero corner of each recursion to be consistent: h0(0, xs, g(xs)) must
// equal g(xs). Where the naive step function breaks at zero, the step is
// guarded with cond on the recursion variable.

#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "s2e/nat.hpp"
#include "s2e/syntax.hpp"

namespace s2e {

struct ZeroN {};
struct ProjN {
  unsigned index;  // 1-based
};
struct S0Body {};
struct S1Body {};
struct Composition {
  SymbolId g;
  std::vector<SymbolId> hs;
};
struct Recursion {
  SymbolId g, h0, h1;
};

using FunctionBody = std::variant<ZeroN, ProjN, S0Body, S1Body, Composition, Recursion>;

using NativeFn = std::function<Code(std::span<const Code>)>;

struct FunctionDef {
  std::string name;
  unsigned arity = 0;
  FunctionBody body;
  NativeFn native;  // exact closed form; optional (user extensions interpret)
};

enum class EvalMode { Default, Interpret };

// Cache for interpreted evaluation, keyed by (symbol, args).
class EvalCache {
 public:
  std::optional<Code> find(SymbolId f, std::span<const Code> args) const {
    auto it = map_.find(key(f, args));
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(SymbolId f, std::span<const Code> args, const Code& v) {
    if (map_.size() < kMax) map_.emplace(key(f, args), v);
  }

 private:
  static constexpr std::size_t kMax = 1 << 18;
  static std::string key(SymbolId f, std::span<const Code> args) {
    std::string k = std::to_string(f);
    for (const auto& a : args) {
      k.push_back('|');
      k += a.get_str(32);
    }
    return k;
  }
  std::unordered_map<std::string, Code> map_;
};

// One defining equation f(u(a1), a2, ..., an) = t, with u one of
// 0 | a1 | s0 a1 | s1 a1. Variables are canonically named a1..an.
struct DefiningEquation {
  SymbolId fn;
  Term lhs;
  Term rhs;
};

namespace builtin {
// Ids pinned by the registration order below.
inline constexpr SymbolId s0 = 0, s1 = 1;
inline constexpr SymbolId zero0 = 2, zero1 = 3, zero2 = 4, zero3 = 5, zero4 = 6,
                          zero5 = 7;
inline constexpr SymbolId proj1_1 = 8;
inline constexpr SymbolId proj2_1 = 9, proj2_2 = 10;
inline constexpr SymbolId proj3_1 = 11, proj3_2 = 12, proj3_3 = 13;
inline constexpr SymbolId proj4_1 = 14, proj4_2 = 15, proj4_3 = 16, proj4_4 = 17;
inline constexpr SymbolId proj5_1 = 18, proj5_2 = 19, proj5_3 = 20, proj5_4 = 21,
                          proj5_5 = 22;
inline constexpr SymbolId cond = 23;
inline constexpr SymbolId parity = 25;
inline constexpr SymbolId half = 26;
inline constexpr SymbolId succ = 30;
inline constexpr SymbolId len = 33;
inline constexpr SymbolId cat = 37;
inline constexpr SymbolId oplus = 38;
inline constexpr SymbolId shl_fn = 39;
inline constexpr SymbolId rsh_fn = 42;
inline constexpr SymbolId ominus = 43;
inline constexpr SymbolId smash = 47;
inline constexpr SymbolId addaux = 62;
inline constexpr SymbolId add = 64;
inline constexpr SymbolId mul = 66;
inline constexpr SymbolId count = 67;
}  // namespace builtin

class Registry {
 public:
  Registry() { register_builtins(); }

  SymbolId add_function(FunctionDef def) {
    if (by_name_.count(def.name)) throw Error("duplicate function symbol " + def.name);
    validate(def);
    SymbolId id = static_cast<SymbolId>(defs_.size());
    by_name_.emplace(def.name, id);
    defs_.push_back(std::move(def));
    degrees_.push_back(compute_degree(id));
    return id;
  }

  bool has(const std::string& name) const { return by_name_.count(name) != 0; }
  SymbolId id_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw Error("unregistered function symbol " + name);
    return it->second;
  }
  bool valid_id(SymbolId f) const { return f < defs_.size(); }
  const FunctionDef& def(SymbolId f) const {
    if (!valid_id(f)) throw Error("unregistered function symbol id " + std::to_string(f));
    return defs_[f];
  }
  const std::string& name(SymbolId f) const { return def(f).name; }
  unsigned arity(SymbolId f) const { return def(f).arity; }
  std::size_t size() const { return defs_.size(); }

  unsigned def_degree(SymbolId f) const {
    if (!valid_id(f)) throw Error("unregistered function symbol id " + std::to_string(f));
    return degrees_[f];
  }

  Code eval(SymbolId f, std::span<const Code> args, EvalMode mode = EvalMode::Default,
            EvalCache* cache = nullptr) const {
    const FunctionDef& d = def(f);
    if (args.size() != d.arity)
      throw Error("arity mismatch applying " + d.name + ": got " +
                  std::to_string(args.size()) + ", want " + std::to_string(d.arity));
    if (mode == EvalMode::Default && d.native) return d.native(args);
    return std::visit(
        [&](const auto& body) -> Code {
          using B = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<B, ZeroN>) {
            return 0;
          } else if constexpr (std::is_same_v<B, ProjN>) {
            return args[body.index - 1];
          } else if constexpr (std::is_same_v<B, S0Body>) {
            return args[0] * 2;
          } else if constexpr (std::is_same_v<B, S1Body>) {
            return args[0] * 2 + 1;
          } else if constexpr (std::is_same_v<B, Composition>) {
            if (cache) {
              if (auto hit = cache->find(f, args)) return *hit;
            }
            std::vector<Code> inner;
            inner.reserve(body.hs.size());
            for (SymbolId h : body.hs) inner.push_back(eval(h, args, mode, cache));
            Code r = eval(body.g, inner, mode, cache);
            if (cache) cache->insert(f, args, r);
            return r;
          } else {  // Recursion
            if (cache) {
              if (auto hit = cache->find(f, args)) return *hit;
            }
            const Code& x = args[0];
            std::vector<Code> params(args.begin() + 1, args.end());
            std::vector<Code> gargs = params;
            Code r = eval(body.g, gargs, mode, cache);
            std::size_t n = bitlen(x);
            std::vector<Code> hargs(params.size() + 2);
            for (std::size_t m = n; m-- > 0;) {
              Code prev = shr(x, m + 1);
              bool j = bit(x, m);
              hargs[0] = prev;
              for (std::size_t k = 0; k < params.size(); ++k) hargs[k + 1] = params[k];
              hargs.back() = r;
              r = eval(j ? body.h1 : body.h0, hargs, mode, cache);
            }
            if (cache) cache->insert(f, args, r);
            return r;
          }
        },
        d.body);
  }

  Code eval(const std::string& fname, std::span<const Code> args,
            EvalMode mode = EvalMode::Default) const {
    return eval(id_of(fname), args, mode);
  }

  // Defining equations with canonical variables a1..an (recursion on a1).
  std::vector<DefiningEquation> defining_equations(SymbolId f) const {
    const FunctionDef& d = def(f);
    auto var = [](unsigned i) { return Term::var("a" + std::to_string(i)); };
    auto app_vars = [&](SymbolId g, unsigned from, unsigned count) {
      std::vector<Term> as;
      for (unsigned i = 0; i < count; ++i) as.push_back(var(from + i));
      return Term::app(g, std::move(as));
    };
    std::vector<DefiningEquation> out;
    std::visit(
        [&](const auto& body) {
          using B = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<B, ZeroN>) {
            out.push_back({f, app_vars(f, 1, d.arity), Term::zero()});
          } else if constexpr (std::is_same_v<B, ProjN>) {
            out.push_back({f, app_vars(f, 1, d.arity), var(body.index)});
          } else if constexpr (std::is_same_v<B, Composition>) {
            std::vector<Term> inner;
            for (SymbolId h : body.hs) inner.push_back(app_vars(h, 1, d.arity));
            out.push_back({f, app_vars(f, 1, d.arity), Term::app(body.g, inner)});
          } else if constexpr (std::is_same_v<B, Recursion>) {
            unsigned n = d.arity - 1;  // parameters a2..a_{n+1}
            // f(0, as) = g(as)
            std::vector<Term> lhs0{Term::zero()};
            for (unsigned i = 0; i < n; ++i) lhs0.push_back(var(2 + i));
            out.push_back({f, Term::app(f, lhs0), app_vars(body.g, 2, n)});
            // f(sj a1, as) = hj(a1, as, f(a1, as))
            for (int j = 0; j <= 1; ++j) {
              std::vector<Term> lhs{Term::app(j ? sym::s1 : sym::s0, {var(1)})};
              std::vector<Term> hargs{var(1)};
              std::vector<Term> fargs{var(1)};
              for (unsigned i = 0; i < n; ++i) {
                lhs.push_back(var(2 + i));
                hargs.push_back(var(2 + i));
                fargs.push_back(var(2 + i));
              }
              hargs.push_back(Term::app(f, fargs));
              out.push_back({f, Term::app(f, lhs),
                             Term::app(j ? body.h1 : body.h0, hargs)});
            }
          }
          // S0/S1 are primitive: no defining equations (data axioms cover them).
        },
        d.body);
    return out;
  }

 private:
  void validate(const FunctionDef& d) const {
    std::visit(
        [&](const auto& body) {
          using B = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<B, ProjN>) {
            if (body.index < 1 || body.index > d.arity)
              throw Error("projection index out of range in " + d.name);
          } else if constexpr (std::is_same_v<B, S0Body>) {
            if (d.arity != 1) throw Error("s0 must be unary");
          } else if constexpr (std::is_same_v<B, S1Body>) {
            if (d.arity != 1) throw Error("s1 must be unary");
          } else if constexpr (std::is_same_v<B, Composition>) {
            if (!valid_id(body.g)) throw Error("unregistered composition head in " + d.name);
            if (arity(body.g) != body.hs.size())
              throw Error("composition arity mismatch in " + d.name);
            for (SymbolId h : body.hs) {
              if (!valid_id(h)) throw Error("unregistered composition component in " + d.name);
              if (arity(h) != d.arity)
                throw Error("composition component arity mismatch in " + d.name);
            }
          } else if constexpr (std::is_same_v<B, Recursion>) {
            if (d.arity < 1) throw Error("recursion needs arity >= 1 in " + d.name);
            if (!valid_id(body.g) || !valid_id(body.h0) || !valid_id(body.h1))
              throw Error("unregistered recursion component in " + d.name);
            if (arity(body.g) != d.arity - 1 || arity(body.h0) != d.arity + 1 ||
                arity(body.h1) != d.arity + 1)
              throw Error("recursion component arity mismatch in " + d.name);
          }
        },
        d.body);
  }

  unsigned compute_degree(SymbolId f) const {
    return std::visit(
        [&](const auto& body) -> unsigned {
          using B = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<B, Composition>) {
            unsigned m = degrees_[body.g];
            for (SymbolId h : body.hs) m = std::max(m, degrees_[h]);
            return 1 + m;
          } else if constexpr (std::is_same_v<B, Recursion>) {
            return 1 + std::max({degrees_[body.g], degrees_[body.h0], degrees_[body.h1]});
          } else {
            return 0;
          }
        },
        defs_[f].body);
  }

  SymbolId reg(std::string name, unsigned arity, FunctionBody body, NativeFn native) {
    return add_function(FunctionDef{std::move(name), arity, std::move(body),
                                    std::move(native)});
  }

  void register_builtins();

  std::vector<FunctionDef> defs_;
  std::vector<unsigned> degrees_;
  std::map<std::string, SymbolId> by_name_;
};

inline void Registry::register_builtins() {
  // Base symbols.
  reg("s0", 1, S0Body{}, [](std::span<const Code> a) -> Code { return a[0] * 2; });
  reg("s1", 1, S1Body{}, [](std::span<const Code> a) -> Code { return a[0] * 2 + 1; });
  for (unsigned n = 0; n <= 5; ++n)
    reg("zero" + std::to_string(n), n, ZeroN{},
        [](std::span<const Code>) -> Code { return Code(0); });
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned l = 1; l <= n; ++l)
      reg("proj" + std::to_string(n) + "_" + std::to_string(l), n, ProjN{l},
          [l](std::span<const Code> a) -> Code { return a[l - 1]; });

  using B = std::initializer_list<SymbolId>;
  auto comp = [](SymbolId g, B hs) { return Composition{g, std::vector<SymbolId>(hs)}; };

  // cond(x, y, z) = y if x = 0, z otherwise.
  // The s0 step returns the recursive value: cond(s0 x, y, z) = cond(x, y, z)
  // holds for every x, which keeps the defining axiom true at x = 0.
  reg("cond", 3, Recursion{builtin::proj2_1, builtin::proj4_4, builtin::proj4_3},
      [](std::span<const Code> a) -> Code { return a[0] == 0 ? a[1] : a[2]; });

  reg("parity_h1", 2, comp(builtin::s1, {builtin::zero2}),
      [](std::span<const Code>) -> Code { return Code(1); });
  reg("parity", 1, Recursion{builtin::zero0, builtin::zero2, 24 /*parity_h1*/},
      [](std::span<const Code> a) -> Code { return Code(bit(a[0], 0) ? 1 : 0); });

  reg("half", 1, Recursion{builtin::zero0, builtin::proj2_1, builtin::proj2_1},
      [](std::span<const Code> a) -> Code { return shr(a[0], 1); });

  reg("succ_g", 0, comp(builtin::s1, {builtin::zero0}),
      [](std::span<const Code>) -> Code { return Code(1); });
  reg("succ_h0", 2, comp(builtin::s1, {builtin::proj2_1}),
      [](std::span<const Code> a) -> Code { return a[0] * 2 + 1; });
  reg("succ_h1", 2, comp(builtin::s0, {builtin::proj2_2}),
      [](std::span<const Code> a) -> Code { return a[1] * 2; });
  reg("succ", 1, Recursion{27, 28, 29},
      [](std::span<const Code> a) -> Code { return a[0] + 1; });

  // len: |s0 x| = cond(x, 0, succ |x|), |s1 x| = succ |x|.
  reg("len_h1", 2, comp(builtin::succ, {builtin::proj2_2}),
      [](std::span<const Code> a) -> Code { return a[1] + 1; });
  reg("len_h0", 2, comp(builtin::cond, {builtin::proj2_1, builtin::zero2, 31}),
      [](std::span<const Code> a) -> Code { return a[0] == 0 ? Code(0) : Code(a[1] + 1); });
  reg("len", 1, Recursion{builtin::zero0, 32, 31},
      [](std::span<const Code> a) -> Code { return Code(static_cast<unsigned long>(bitlen(a[0]))); });
  static_assert(builtin::len == sym::len);

  // cat(y, x) = x concatenated with y's bits: x * 2^|y| + y.
  reg("cat_h1", 3, comp(builtin::s1, {builtin::proj3_3}),
      [](std::span<const Code> a) -> Code { return a[2] * 2 + 1; });
  reg("cat_step0", 3, comp(builtin::s0, {builtin::proj3_3}),
      [](std::span<const Code> a) -> Code { return a[2] * 2; });
  reg("cat_h0", 3, comp(builtin::cond, {builtin::proj3_1, builtin::proj3_3, 35}),
      [](std::span<const Code> a) -> Code { return a[0] == 0 ? a[2] : Code(a[2] * 2); });
  reg("cat", 2, Recursion{builtin::proj1_1, 36, 34},
      [](std::span<const Code> a) -> Code { return shl(a[1], bitlen(a[0])) + a[0]; });
  reg("oplus", 2, comp(builtin::cat, {builtin::proj2_2, builtin::proj2_1}),
      [](std::span<const Code> a) -> Code { return shl(a[0], bitlen(a[1])) + a[1]; });

  // shl(c, x) = x * 2^|c|; rsh(c, x) = floor(x / 2^|c|).
  reg("shl", 2, Recursion{builtin::proj1_1, 36 /*cat_h0*/, 35 /*cat_step0*/},
      [](std::span<const Code> a) -> Code { return shl(a[1], bitlen(a[0])); });
  reg("rsh_step", 3, comp(builtin::half, {builtin::proj3_3}),
      [](std::span<const Code> a) -> Code { return shr(a[2], 1); });
  reg("rsh_h0", 3, comp(builtin::cond, {builtin::proj3_1, builtin::proj3_3, 40}),
      [](std::span<const Code> a) -> Code { return a[0] == 0 ? a[2] : shr(a[2], 1); });
  reg("rsh", 2, Recursion{builtin::proj1_1, 41, 40},
      [](std::span<const Code> a) -> Code { return shr(a[1], bitlen(a[0])); });
  reg("ominus", 2, comp(builtin::rsh_fn, {builtin::proj2_2, builtin::proj2_1}),
      [](std::span<const Code> a) -> Code { return shr(a[0], bitlen(a[1])); });

  // smash(a, b) = 2^(|a| * |b|), by |a| applications of shl(b, .).
  reg("smash_g", 1, comp(builtin::s1, {builtin::zero1}),
      [](std::span<const Code>) -> Code { return Code(1); });
  reg("smash_step", 3, comp(builtin::shl_fn, {builtin::proj3_2, builtin::proj3_3}),
      [](std::span<const Code> a) -> Code { return shl(a[2], bitlen(a[1])); });
  reg("smash_h0", 3, comp(builtin::cond, {builtin::proj3_1, builtin::proj3_3, 45}),
      [](std::span<const Code> a) -> Code {
        return a[0] == 0 ? a[2] : shl(a[2], bitlen(a[1]));
      });
  reg("smash", 2, Recursion{44, 46, 45}, [](std::span<const Code> a) -> Code {
    return shl(Code(1), bitlen(a[0]) * bitlen(a[1]));
  });

  // addaux(c, cf, x, y): with m = |c|, the sum of the top-m views
  // floor(x / 2^(|cf|-m)) + floor(y / 2^(|cf|-m)). add() calls it with
  // c = cf = s1(x (+) y) so the full sum comes out. The step reads the bit of
  // x and y at position |cf|-m via a shift witness of that exact length.
  auto addaux_native = [](std::span<const Code> a) -> Code {
    // Mirrors the recursion equations exactly (also beyond the |c| <= |cf|
    // regime, where the position witness degenerates to 0).
    const Code &c = a[0], &cf = a[1], &x = a[2], &y = a[3];
    Code r = 0;
    std::size_t n = bitlen(c);
    for (std::size_t m = n; m-- > 0;) {
      bool j = bit(c, m);
      if (!j && shr(c, m + 1) == 0) continue;  // guarded s0 step at zero
      std::size_t zlen = bitlen(shr(cf, bitlen(shr(c, m + 1)))) >= 1
                             ? bitlen(shr(cf, bitlen(shr(c, m + 1)))) - 1
                             : 0;
      int bx = bit(shr(x, zlen), 0) ? 1 : 0;
      int by = bit(shr(y, zlen), 0) ? 1 : 0;
      r = r * 2 + bx + by;
    }
    return r;
  };
  reg("addaux_shift", 5, comp(builtin::rsh_fn, {builtin::proj5_1, builtin::proj5_2}),
      [](std::span<const Code> a) -> Code { return shr(a[1], bitlen(a[0])); });
  reg("addaux_pos", 5, comp(builtin::half, {48}),
      [](std::span<const Code> a) -> Code { return shr(shr(a[1], bitlen(a[0])), 1); });
  reg("addaux_xsh", 5, comp(builtin::rsh_fn, {49, builtin::proj5_3}),
      [](std::span<const Code> a) -> Code {
        return shr(a[2], bitlen(shr(shr(a[1], bitlen(a[0])), 1)));
      });
  reg("addaux_bx", 5, comp(builtin::parity, {50}), [](std::span<const Code> a) -> Code {
    return Code(bit(shr(a[2], bitlen(shr(shr(a[1], bitlen(a[0])), 1))), 0) ? 1 : 0);
  });
  reg("addaux_ysh", 5, comp(builtin::rsh_fn, {49, builtin::proj5_4}),
      [](std::span<const Code> a) -> Code {
        return shr(a[3], bitlen(shr(shr(a[1], bitlen(a[0])), 1)));
      });
  reg("addaux_by", 5, comp(builtin::parity, {52}), [](std::span<const Code> a) -> Code {
    return Code(bit(shr(a[3], bitlen(shr(shr(a[1], bitlen(a[0])), 1))), 0) ? 1 : 0);
  });
  reg("addaux_r0", 5, comp(builtin::s0, {builtin::proj5_5}),
      [](std::span<const Code> a) -> Code { return a[4] * 2; });
  reg("addaux_r1", 5, comp(builtin::s1, {builtin::proj5_5}),
      [](std::span<const Code> a) -> Code { return a[4] * 2 + 1; });
  reg("addaux_rsucc", 5, comp(builtin::succ, {builtin::proj5_5}),
      [](std::span<const Code> a) -> Code { return a[4] + 1; });
  reg("addaux_r2", 5, comp(builtin::s0, {56}),
      [](std::span<const Code> a) -> Code { return (a[4] + 1) * 2; });
  reg("addaux_case0", 5, comp(builtin::cond, {53, 54, 55}),
      [](std::span<const Code> a) -> Code {
        bool by = bit(shr(a[3], bitlen(shr(shr(a[1], bitlen(a[0])), 1))), 0);
        return by ? Code(a[4] * 2 + 1) : Code(a[4] * 2);
      });
  reg("addaux_case1", 5, comp(builtin::cond, {53, 55, 57}),
      [](std::span<const Code> a) -> Code {
        bool by = bit(shr(a[3], bitlen(shr(shr(a[1], bitlen(a[0])), 1))), 0);
        return by ? Code((a[4] + 1) * 2) : Code(a[4] * 2 + 1);
      });
  reg("addaux_h1", 5, comp(builtin::cond, {51, 58, 59}),
      [](std::span<const Code> a) -> Code {
        std::size_t zlen = bitlen(shr(shr(a[1], bitlen(a[0])), 1));
        int bx = bit(shr(a[2], zlen), 0) ? 1 : 0;
        int by = bit(shr(a[3], zlen), 0) ? 1 : 0;
        return a[4] * 2 + bx + by;
      });
  reg("addaux_h0", 5, comp(builtin::cond, {builtin::proj5_1, builtin::proj5_5, 60}),
      [](std::span<const Code> a) -> Code {
        if (a[0] == 0) return a[4];
        std::size_t zlen = bitlen(shr(shr(a[1], bitlen(a[0])), 1));
        int bx = bit(shr(a[2], zlen), 0) ? 1 : 0;
        int by = bit(shr(a[3], zlen), 0) ? 1 : 0;
        return Code(a[4] * 2 + bx + by);
      });
  reg("addaux", 4, Recursion{builtin::zero3, 61, 60}, addaux_native);
  reg("add_fuel", 2, comp(builtin::s1, {builtin::oplus}),
      [](std::span<const Code> a) -> Code { return (shl(a[0], bitlen(a[1])) + a[1]) * 2 + 1; });
  reg("add", 2, comp(builtin::addaux, {63, 63, builtin::proj2_1, builtin::proj2_2}),
      [](std::span<const Code> a) -> Code { return a[0] + a[1]; });

  // mul: a * b by recursion on the notation of a.
  reg("mul_h1", 3, comp(builtin::add, {35 /*cat_step0*/, builtin::proj3_2}),
      [](std::span<const Code> a) -> Code { return a[2] * 2 + a[1]; });
  reg("mul", 2, Recursion{builtin::zero1, 35 /*cat_step0*/, 65},
      [](std::span<const Code> a) -> Code { return a[0] * a[1]; });

  auto pinned = [&](const char* n, SymbolId id) {
    if (by_name_.at(n) != id) throw Error("builtin id drift: " + std::string(n));
  };
  if (defs_.size() != builtin::count) throw Error("builtin count drift");
  pinned("cond", builtin::cond);
  pinned("parity", builtin::parity);
  pinned("half", builtin::half);
  pinned("succ", builtin::succ);
  pinned("len", builtin::len);
  pinned("cat", builtin::cat);
  pinned("oplus", builtin::oplus);
  pinned("shl", builtin::shl_fn);
  pinned("rsh", builtin::rsh_fn);
  pinned("ominus", builtin::ominus);
  pinned("smash", builtin::smash);
  pinned("addaux", builtin::addaux);
  pinned("add", builtin::add);
  pinned("mul", builtin::mul);
}

// Convenience term builders over the builtin symbols.
inline Term t_app(SymbolId f, std::vector<Term> args) { return Term::app(f, std::move(args)); }
inline Term t_succ(Term t) { return Term::app(builtin::succ, {std::move(t)}); }
inline Term t_half(Term t) { return Term::app(builtin::half, {std::move(t)}); }
inline Term t_len(Term t) { return Term::app(builtin::len, {std::move(t)}); }
inline Term t_add(Term a, Term b) { return Term::app(builtin::add, {std::move(a), std::move(b)}); }
inline Term t_mul(Term a, Term b) { return Term::app(builtin::mul, {std::move(a), std::move(b)}); }
inline Term t_smash(Term a, Term b) {
  return Term::app(builtin::smash, {std::move(a), std::move(b)});
}

}  // namespace s2e

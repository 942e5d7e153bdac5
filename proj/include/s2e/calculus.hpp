#pragma once

// The trusted kernel: the axiom set (E, equality, data, separation, defining,
// auxiliary), schema matching, the boundedness lint, and the rule checker.
// Proof nodes carry no payload; every side datum (matched axiom, cut formula,
// eigenvariable, induction pattern) is reconstructed from the conclusion and
// the premises.

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "s2e/basic_axioms.hpp"
#include "s2e/registry.hpp"
#include "s2e/semantics.hpp"
#include "s2e/syntax.hpp"

namespace s2e {

enum class AxiomFamily { E, Equality, Data, Separation, Defining, Auxiliary };

struct AxiomSchema {
  std::string id;
  Sequent templ;  // every variable is schematic
  AxiomFamily family;
  SymbolId defining_fn = 0;  // meaningful for Defining
  bool verified = false;     // hand-checked alpha = 4 whitelist flag
};

using Substitution = std::map<std::string, Term>;

// ---------------------------------------------------------------------------
// First-order matching of basic-formula templates.

namespace detail {
inline bool match_term(const Term& templ, const Term& inst, Substitution& sub) {
  switch (templ.kind()) {
    case Term::Kind::Zero: return inst.is_zero();
    case Term::Kind::Var: {
      auto it = sub.find(templ.var_name());
      if (it == sub.end()) {
        sub.emplace(templ.var_name(), inst);
        return true;
      }
      return it->second == inst;
    }
    case Term::Kind::App: {
      if (!inst.is_app() || inst.fn() != templ.fn() ||
          inst.args().size() != templ.args().size())
        return false;
      for (std::size_t i = 0; i < templ.args().size(); ++i)
        if (!match_term(templ.args()[i], inst.args()[i], sub)) return false;
      return true;
    }
  }
  return false;
}

inline bool match_basic_formula(const Formula& templ, const Formula& inst,
                                Substitution& sub) {
  if (templ.kind() != inst.kind()) return false;
  switch (templ.kind()) {
    case Formula::Kind::E: return match_term(templ.term(0), inst.term(0), sub);
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
      return templ.pred() == inst.pred() &&
             match_term(templ.term(0), inst.term(0), sub) &&
             match_term(templ.term(1), inst.term(1), sub);
    default: return false;  // axiom templates are basic
  }
}
}  // namespace detail

// ---------------------------------------------------------------------------
// The axiom set.

struct BoundednessReport {
  bool pass = true;
  int violated_condition = 0;  // 1, 2 or 3 when failing
  Environment witness;
  std::string detail;
  unsigned effective_trials = 0;
};

class AxiomSet {
 public:
  explicit AxiomSet(const Registry& reg) : reg_(reg) { build(); }

  const std::vector<AxiomSchema>& schemas() const { return schemas_; }
  const Registry& registry() const { return reg_; }

  const AxiomSchema* find(const std::string& id) const {
    for (const auto& s : schemas_)
      if (s.id == id) return &s;
    return nullptr;
  }

  // First schema (in registry order) with a substitution instance equal to s.
  // Schemas are bucketed by shape so the scan touches few candidates.
  std::optional<std::pair<const AxiomSchema*, Substitution>> match_axiom(
      const Sequent& s) const {
    auto it = shape_index_.find(shape_key(s));
    if (it == shape_index_.end()) return std::nullopt;
    for (std::size_t idx : it->second) {
      const AxiomSchema& schema = schemas_[idx];
      Substitution sub;
      bool ok = true;
      for (std::size_t i = 0; ok && i < s.ante.size(); ++i)
        ok = detail::match_basic_formula(schema.templ.ante[i], s.ante[i], sub);
      for (std::size_t i = 0; ok && i < s.succ.size(); ++i)
        ok = detail::match_basic_formula(schema.templ.succ[i], s.succ[i], sub);
      if (ok) return std::make_pair(&schema, std::move(sub));
    }
    return std::nullopt;
  }

  // The boundedness lint. Conditions (1) and (2) are syntactic. Condition (3)
  // asks for S^1_2-provability of max subterm(succedent) <= 4 * max
  // subterm(antecedent); a checker cannot decide that, so it is falsified
  // numerically: environments with values <= cap that satisfy the antecedent
  // must keep the ratio. The antecedent max is floored at 1 (max of the empty
  // set is 1).
  BoundednessReport check_boundedness(const AxiomSchema& schema, unsigned trials,
                                      unsigned long cap) const {
    BoundednessReport rep;
    for (const auto& f : schema.templ.ante)
      if (!f.is_basic()) return fail(rep, 1, "non-basic antecedent formula");
    for (const auto& f : schema.templ.succ)
      if (!f.is_basic()) return fail(rep, 1, "non-basic succedent formula");
    auto vars = free_vars(schema.templ);
    {
      std::vector<std::string> covered;
      for (const auto& f : schema.templ.ante) {
        auto fv = free_vars(f);
        covered.insert(covered.end(), fv.begin(), fv.end());
      }
      for (const auto& x : vars)
        if (std::find(covered.begin(), covered.end(), x) == covered.end())
          return fail(rep, 2, "variable " + x + " not covered by the antecedent");
    }
    Rng rng(0x5b0cafe ^ std::hash<std::string>{}(schema.id));
    for (unsigned trial = 0; trial < trials; ++trial) {
      Environment rho;
      if (trial < 64 && vars.size() <= 6) {
        // Systematic small corner sweep before random sampling.
        unsigned v = trial;
        bool fits = true;
        std::vector<std::pair<std::string, Code>> pairs;
        for (const auto& x : vars) {
          pairs.emplace_back(x, Code(v % 4));
          v /= 4;
        }
        if (v != 0) fits = false;
        if (!fits) continue;
        rho = Environment(pairs);
      } else {
        std::vector<std::pair<std::string, Code>> pairs;
        for (const auto& x : vars) pairs.emplace_back(x, Code(rand_below(rng, cap)));
        rho = Environment(pairs);
      }
      bool ante_true = true;
      for (const auto& f : schema.templ.ante)
        if (!direct_eval(f, rho, reg_)) {
          ante_true = false;
          break;
        }
      if (!ante_true) continue;
      ++rep.effective_trials;
      Code max_ante = 1, max_succ = 0;
      for (const auto& f : schema.templ.ante)
        for (const auto& t : subterms_of_formula(f))
          max_ante = std::max(max_ante, rho_eval(t, rho, reg_));
      for (const auto& f : schema.templ.succ)
        for (const auto& t : subterms_of_formula(f))
          max_succ = std::max(max_succ, rho_eval(t, rho, reg_));
      if (max_succ > 4 * max_ante) {
        rep.witness = rho;
        return fail(rep, 3,
                    "succedent max " + to_decimal(max_succ) + " > 4 * " +
                        to_decimal(max_ante));
      }
    }
    return rep;
  }

 private:
  static BoundednessReport fail(BoundednessReport rep, int cond, std::string detail) {
    rep.pass = false;
    rep.violated_condition = cond;
    rep.detail = std::move(detail);
    return rep;
  }

  static std::uint64_t shape_key(const Sequent& s) {
    // Antecedent/succedent lengths plus the kind+pred of the first formula of
    // each side; enough to keep buckets tiny without constraining matching.
    auto fk = [](const std::vector<Formula>& v) -> std::uint64_t {
      if (v.empty()) return 63;
      return static_cast<std::uint64_t>(v[0].kind()) * 4 +
             static_cast<std::uint64_t>(v[0].is_basic() ? static_cast<int>(v[0].pred()) : 0);
    };
    return (s.ante.size() << 40) ^ (s.succ.size() << 24) ^ (fk(s.ante) << 12) ^
           fk(s.succ);
  }

  void add(std::string id, Sequent templ, AxiomFamily family, SymbolId fn = 0) {
    shape_index_[shape_key(templ)].push_back(schemas_.size());
    schemas_.push_back({std::move(id), std::move(templ), family, fn, true});
  }

  void build() {
    Term a = Term::var("a"), b = Term::var("b"), c = Term::var("c");
    auto E = [](Term t) { return Formula::e(std::move(t)); };
    auto eq = [](Term l, Term r) { return Formula::atom(Pred::Eq, std::move(l), std::move(r)); };
    auto vars_of = [](SymbolId, unsigned n, const char* stem) {
      std::vector<Term> vs;
      for (unsigned i = 1; i <= n; ++i) vs.push_back(Term::var(stem + std::to_string(i)));
      return vs;
    };

    // E-axioms: Ef(a1..an) |- Eaj; p(a1,a2) |- Eaj; not-p(a1,a2) |- Eaj.
    for (SymbolId f = 0; f < reg_.size(); ++f) {
      unsigned n = reg_.arity(f);
      if (n == 0) continue;
      auto as = vars_of(f, n, "a");
      for (unsigned j = 1; j <= n; ++j)
        add("E-f." + reg_.name(f) + "." + std::to_string(j),
            Sequent{{E(Term::app(f, as))}, {E(as[j - 1])}}, AxiomFamily::E);
    }
    for (Pred p : {Pred::Eq, Pred::Le}) {
      const char* pn = p == Pred::Eq ? "eq" : "le";
      for (unsigned j = 1; j <= 2; ++j) {
        add(std::string("E-p.") + pn + "." + std::to_string(j),
            Sequent{{Formula::atom(p, a, b)}, {E(j == 1 ? a : b)}}, AxiomFamily::E);
        add(std::string("E-not-p.") + pn + "." + std::to_string(j),
            Sequent{{Formula::neg_atom(p, a, b)}, {E(j == 1 ? a : b)}}, AxiomFamily::E);
      }
    }

    // Equality axioms.
    add("eq-refl", Sequent{{E(a)}, {eq(a, a)}}, AxiomFamily::Equality);
    add("eq-sym", Sequent{{eq(a, b)}, {eq(b, a)}}, AxiomFamily::Equality);
    add("eq-trans", Sequent{{eq(a, b), eq(b, c)}, {eq(a, c)}}, AxiomFamily::Equality);
    add("eq-succ.0", Sequent{{eq(a, b)}, {eq(s0(a), s0(b))}}, AxiomFamily::Equality);
    add("eq-succ.1", Sequent{{eq(a, b)}, {eq(s1(a), s1(b))}}, AxiomFamily::Equality);
    for (SymbolId f = 0; f < reg_.size(); ++f) {
      unsigned n = reg_.arity(f);
      auto as = vars_of(f, n, "a");
      auto bs = vars_of(f, n, "b");
      Sequent s;
      s.ante.push_back(E(Term::app(f, as)));
      for (unsigned i = 0; i < n; ++i) s.ante.push_back(eq(as[i], bs[i]));
      s.succ.push_back(eq(Term::app(f, as), Term::app(f, bs)));
      add("eq-fun." + reg_.name(f), std::move(s), AxiomFamily::Equality);
    }
    for (Pred p : {Pred::Eq, Pred::Le}) {
      Term a1 = Term::var("a1"), a2 = Term::var("a2");
      Term b1 = Term::var("b1"), b2 = Term::var("b2");
      add(std::string("eq-pred.") + (p == Pred::Eq ? "eq" : "le"),
          Sequent{{eq(a1, b1), eq(a2, b2), Formula::atom(p, a1, a2)},
                  {Formula::atom(p, b1, b2)}},
          AxiomFamily::Equality);
    }

    // Data axioms.
    add("data-0", Sequent{{}, {E(Term::zero())}}, AxiomFamily::Data);
    add("data-suc.0", Sequent{{E(a)}, {E(s0(a))}}, AxiomFamily::Data);
    add("data-suc.1", Sequent{{E(a)}, {E(s1(a))}}, AxiomFamily::Data);

    // Separation axioms.
    add("sep-inj.0", Sequent{{eq(s0(a), s0(b))}, {eq(a, b)}}, AxiomFamily::Separation);
    add("sep-inj.1", Sequent{{eq(s1(a), s1(b))}, {eq(a, b)}}, AxiomFamily::Separation);
    add("sep-01",
        Sequent{{E(a), E(b)}, {Formula::neg_atom(Pred::Eq, s0(a), s1(b))}},
        AxiomFamily::Separation);
    add("sep-s1-nz",
        Sequent{{E(a)}, {Formula::neg_atom(Pred::Eq, s1(a), Term::zero())}},
        AxiomFamily::Separation);
    add("sep-s0-z", Sequent{{eq(s0(a), Term::zero())}, {eq(a, Term::zero())}},
        AxiomFamily::Separation);

    // Defining axioms: E(vars) + E(rhs) |- lhs = rhs.
    for (SymbolId f = 0; f < reg_.size(); ++f) {
      unsigned k = 0;
      for (const auto& eqn : reg_.defining_equations(f)) {
        Sequent s;
        auto vs = free_vars(eqn.lhs);
        for (const auto& v : free_vars(eqn.rhs))
          if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        for (const auto& v : vs) s.ante.push_back(E(Term::var(v)));
        s.ante.push_back(E(eqn.rhs));
        s.succ.push_back(eq(eqn.lhs, eqn.rhs));
        add("def." + reg_.name(f) + "." + std::to_string(++k), std::move(s),
            AxiomFamily::Defining, f);
      }
    }

    // Auxiliary axioms: the mechanically generated unsimplified forms of the
    // BASIC axioms, plus a curated simplified example.
    for (const auto& ba : basic_axioms()) {
      unsigned k = 0;
      for (const auto& rendered : render_connective_free(ba.formula))
        add("aux." + ba.name + "." + std::to_string(++k),
            auxiliary_from_rendered(rendered), AxiomFamily::Auxiliary);
    }
    add("aux.curated.le-succ",
        Sequent{{E(t_succ(a)), Formula::atom(Pred::Le, b, a)},
                {Formula::atom(Pred::Le, b, t_succ(a))}},
        AxiomFamily::Auxiliary);
  }

  const Registry& reg_;
  std::vector<AxiomSchema> schemas_;
  std::map<std::uint64_t, std::vector<std::size_t>> shape_index_;
};

// ---------------------------------------------------------------------------
// Inference checking. Everything is reconstructed; an optional payload, when
// supplied, is cross-validated against the reconstruction.

struct InferencePayload {
  std::optional<std::string> eigenvariable;
  std::optional<Formula> cut_formula;
};

namespace detail {
inline bool alpha_eq_span(std::span<const Formula> a, std::span<const Formula> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!alpha_eq(a[i], b[i])) return false;
  return true;
}

inline std::span<const Formula> drop_front(const std::vector<Formula>& v, std::size_t k = 1) {
  return std::span<const Formula>(v).subspan(k);
}
inline std::span<const Formula> drop_back(const std::vector<Formula>& v, std::size_t k = 1) {
  return std::span<const Formula>(v).first(v.size() - k);
}

// Adjacent-swap check used by the exchange rules.
inline bool is_adjacent_swap(const std::vector<Formula>& from,
                             const std::vector<Formula>& to) {
  if (from.size() != to.size()) return false;
  std::size_t i = 0;
  while (i < from.size() && alpha_eq(from[i], to[i])) ++i;
  if (i == from.size()) return true;  // identical lists
  if (i + 1 >= from.size()) return false;
  if (!alpha_eq(from[i], to[i + 1]) || !alpha_eq(from[i + 1], to[i])) return false;
  for (std::size_t k = i + 2; k < from.size(); ++k)
    if (!alpha_eq(from[k], to[k])) return false;
  return true;
}

// Finds the PIND pattern: a variable a of body such that body[a -> s_j a]
// is alpha-equal to stepped; nullopt signals the degenerate (a not in A)
// case when body == stepped.
inline std::optional<std::string> find_pind_var(const Formula& body,
                                                const Formula& stepped, bool step1) {
  for (const auto& v : free_vars(body)) {
    Term sv = Term::app(step1 ? sym::s1 : sym::s0, {Term::var(v)});
    if (alpha_eq(substitute(body, v, sv), stepped)) return v;
  }
  return std::nullopt;
}
}  // namespace detail

// Returns std::nullopt on success, a named violation otherwise. For PInd the
// reconstructed induction formula and variable are reported through out
// parameters so the proof checker can police the induction class.
inline std::optional<std::string> check_inference(
    Rule rule, std::span<const Sequent> premises, const Sequent& c,
    const AxiomSet& axioms, const InferencePayload* payload = nullptr,
    Formula* pind_formula = nullptr, std::string* pind_var = nullptr) {
  using detail::alpha_eq_span;
  using detail::drop_back;
  using detail::drop_front;
  if (premises.size() != premise_count(rule)) return "PremiseCountMismatch";
  auto mismatch = [](const char* what) { return std::optional<std::string>(what); };

  switch (rule) {
    case Rule::Id: {
      if (c.ante.size() != 1 || c.succ.size() != 1) return mismatch("IdShape");
      if (!alpha_eq(c.ante[0], c.succ[0])) return mismatch("IdShape");
      return std::nullopt;
    }
    case Rule::Ax: {
      if (!axioms.match_axiom(c)) return mismatch("NoAxiomMatches");
      return std::nullopt;
    }
    case Rule::WeakL: {
      const Sequent& p = premises[0];
      if (c.ante.size() != p.ante.size() + 1) return mismatch("WeakeningShape");
      if (!alpha_eq_span(drop_front(c.ante), p.ante)) return mismatch("WeakeningShape");
      if (!alpha_eq_span(c.succ, p.succ)) return mismatch("WeakeningShape");
      return std::nullopt;
    }
    case Rule::WeakR: {
      const Sequent& p = premises[0];
      if (c.succ.size() != p.succ.size() + 1) return mismatch("WeakeningShape");
      if (!alpha_eq_span(drop_back(c.succ), p.succ)) return mismatch("WeakeningShape");
      if (!alpha_eq_span(c.ante, p.ante)) return mismatch("WeakeningShape");
      return std::nullopt;
    }
    case Rule::ContrL: {
      const Sequent& p = premises[0];
      if (p.ante.size() != c.ante.size() + 1 || c.ante.empty())
        return mismatch("ContractionShape");
      if (!alpha_eq(p.ante[0], p.ante[1]) || !alpha_eq(c.ante[0], p.ante[0]))
        return mismatch("ContractionShape");
      if (!alpha_eq_span(drop_front(c.ante), drop_front(p.ante, 2)))
        return mismatch("ContractionShape");
      if (!alpha_eq_span(c.succ, p.succ)) return mismatch("ContractionShape");
      return std::nullopt;
    }
    case Rule::ContrR: {
      const Sequent& p = premises[0];
      if (p.succ.size() != c.succ.size() + 1 || c.succ.empty())
        return mismatch("ContractionShape");
      std::size_t n = p.succ.size();
      if (!alpha_eq(p.succ[n - 1], p.succ[n - 2]) ||
          !alpha_eq(c.succ.back(), p.succ[n - 1]))
        return mismatch("ContractionShape");
      if (!alpha_eq_span(drop_back(c.succ), drop_back(p.succ, 2)))
        return mismatch("ContractionShape");
      if (!alpha_eq_span(c.ante, p.ante)) return mismatch("ContractionShape");
      return std::nullopt;
    }
    case Rule::ExchL: {
      const Sequent& p = premises[0];
      if (!alpha_eq_span(c.succ, p.succ)) return mismatch("ExchangeShape");
      if (!detail::is_adjacent_swap(p.ante, c.ante)) return mismatch("ExchangeShape");
      return std::nullopt;
    }
    case Rule::ExchR: {
      const Sequent& p = premises[0];
      if (!alpha_eq_span(c.ante, p.ante)) return mismatch("ExchangeShape");
      if (!detail::is_adjacent_swap(p.succ, c.succ)) return mismatch("ExchangeShape");
      return std::nullopt;
    }
    case Rule::NegL: {
      const Sequent& p = premises[0];
      if (c.ante.empty() || c.ante[0].kind() != Formula::Kind::NegAtom)
        return mismatch("NegationShape");
      if (p.succ.empty()) return mismatch("NegationShape");
      const Formula& np = c.ante[0];
      const Formula& at = p.succ.back();
      if (at.kind() != Formula::Kind::Atom || at.pred() != np.pred() ||
          !alpha_eq(at.term(0), np.term(0)) || !alpha_eq(at.term(1), np.term(1)))
        return mismatch("NegationShape");
      if (!alpha_eq_span(drop_front(c.ante), p.ante)) return mismatch("NegationShape");
      if (!alpha_eq_span(c.succ, drop_back(p.succ))) return mismatch("NegationShape");
      return std::nullopt;
    }
    case Rule::NegR: {
      const Sequent& p = premises[0];
      if (c.succ.empty() || c.succ.back().kind() != Formula::Kind::NegAtom)
        return mismatch("NegationShape");
      const Formula& np = c.succ.back();
      if (p.ante.empty() || p.ante[0].kind() != Formula::Kind::Atom)
        return mismatch("NegationShape");
      const Formula& at = p.ante[0];
      if (at.pred() != np.pred() || !alpha_eq(at.term(0), np.term(0)) ||
          !alpha_eq(at.term(1), np.term(1)))
        return mismatch("NegationShape");
      // The conclusion antecedent must open with Et1, Et2.
      if (c.ante.size() < 2 || c.ante[0].kind() != Formula::Kind::E ||
          c.ante[1].kind() != Formula::Kind::E ||
          !alpha_eq(c.ante[0].term(0), np.term(0)) ||
          !alpha_eq(c.ante[1].term(0), np.term(1)))
        return mismatch("MissingEPremise");
      if (!alpha_eq_span(drop_front(c.ante, 2), drop_front(p.ante)))
        return mismatch("NegationShape");
      if (!alpha_eq_span(drop_back(c.succ), p.succ)) return mismatch("NegationShape");
      return std::nullopt;
    }
    case Rule::AndL1:
    case Rule::AndL2: {
      const Sequent& p = premises[0];
      if (c.ante.empty() || c.ante[0].kind() != Formula::Kind::And || p.ante.empty())
        return mismatch("AndShape");
      const Formula& used = c.ante[0].sub(rule == Rule::AndL1 ? 0 : 1);
      if (!alpha_eq(used, p.ante[0])) return mismatch("AndShape");
      if (!alpha_eq_span(drop_front(c.ante), drop_front(p.ante)))
        return mismatch("AndShape");
      if (!alpha_eq_span(c.succ, p.succ)) return mismatch("AndShape");
      return std::nullopt;
    }
    case Rule::AndR: {
      const Sequent& p1 = premises[0];
      const Sequent& p2 = premises[1];
      if (c.succ.empty() || c.succ.back().kind() != Formula::Kind::And)
        return mismatch("AndShape");
      if (p1.succ.empty() || p2.succ.empty()) return mismatch("AndShape");
      if (!alpha_eq(c.succ.back().sub(0), p1.succ.back()) ||
          !alpha_eq(c.succ.back().sub(1), p2.succ.back()))
        return mismatch("AndShape");
      if (!alpha_eq_span(c.ante, p1.ante) || !alpha_eq_span(c.ante, p2.ante))
        return mismatch("AndShape");
      if (!alpha_eq_span(drop_back(c.succ), drop_back(p1.succ)) ||
          !alpha_eq_span(drop_back(c.succ), drop_back(p2.succ)))
        return mismatch("AndShape");
      return std::nullopt;
    }
    case Rule::OrL: {
      const Sequent& p1 = premises[0];
      const Sequent& p2 = premises[1];
      if (c.ante.empty() || c.ante[0].kind() != Formula::Kind::Or)
        return mismatch("OrShape");
      if (p1.ante.empty() || p2.ante.empty()) return mismatch("OrShape");
      if (!alpha_eq(c.ante[0].sub(0), p1.ante[0]) ||
          !alpha_eq(c.ante[0].sub(1), p2.ante[0]))
        return mismatch("OrShape");
      if (!alpha_eq_span(drop_front(c.ante), drop_front(p1.ante)) ||
          !alpha_eq_span(drop_front(c.ante), drop_front(p2.ante)))
        return mismatch("OrShape");
      if (!alpha_eq_span(c.succ, p1.succ) || !alpha_eq_span(c.succ, p2.succ))
        return mismatch("OrShape");
      return std::nullopt;
    }
    case Rule::OrR1:
    case Rule::OrR2: {
      const Sequent& p = premises[0];
      if (c.succ.empty() || c.succ.back().kind() != Formula::Kind::Or || p.succ.empty())
        return mismatch("OrShape");
      const Formula& used = c.succ.back().sub(rule == Rule::OrR1 ? 0 : 1);
      if (!alpha_eq(used, p.succ.back())) return mismatch("OrShape");
      if (!alpha_eq_span(drop_back(c.succ), drop_back(p.succ)))
        return mismatch("OrShape");
      if (!alpha_eq_span(c.ante, p.ante)) return mismatch("OrShape");
      return std::nullopt;
    }
    case Rule::ForallLb: {
      const Sequent& p = premises[0];
      if (c.ante.size() < 2 || p.ante.empty()) return mismatch("QuantifierShape");
      const Formula& guard = c.ante[0];
      const Formula& all = c.ante[1];
      if (guard.kind() != Formula::Kind::Atom || guard.pred() != Pred::Le ||
          all.kind() != Formula::Kind::BForall)
        return mismatch("QuantifierShape");
      if (!alpha_eq(guard.term(1), all.bound())) return mismatch("QuantifierShape");
      if (occurs_in(all.var(), all.bound())) return mismatch("BoundVariableInBoundTerm");
      if (!alpha_eq(p.ante[0], substitute(all.sub(0), all.var(), guard.term(0))))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_front(c.ante, 2), drop_front(p.ante)))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(c.succ, p.succ)) return mismatch("QuantifierShape");
      return std::nullopt;
    }
    case Rule::ForallRb: {
      const Sequent& p = premises[0];
      if (c.ante.empty() || c.succ.empty() || p.ante.empty() || p.succ.empty())
        return mismatch("QuantifierShape");
      const Formula& et = c.ante[0];
      const Formula& all = c.succ.back();
      if (et.kind() != Formula::Kind::E || all.kind() != Formula::Kind::BForall)
        return mismatch("QuantifierShape");
      if (!alpha_eq(et.term(0), all.bound())) return mismatch("QuantifierShape");
      const Formula& guard = p.ante[0];
      if (guard.kind() != Formula::Kind::Atom || guard.pred() != Pred::Le ||
          !guard.term(0).is_var() || !alpha_eq(guard.term(1), all.bound()))
        return mismatch("QuantifierShape");
      const std::string& a = guard.term(0).var_name();
      if (payload && payload->eigenvariable && *payload->eigenvariable != a)
        return mismatch("PayloadMismatch");
      if (occurs_in(a, all.bound()) || occurs_in(all.var(), all.bound()))
        return mismatch("BoundVariableInBoundTerm");
      if (!alpha_eq(p.succ.back(), substitute(all.sub(0), all.var(), Term::var(a))))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_front(p.ante), drop_front(c.ante)))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_back(p.succ), drop_back(c.succ)))
        return mismatch("QuantifierShape");
      if (occurs_free(a, c)) return mismatch("EigenvariableCaptured");
      return std::nullopt;
    }
    case Rule::ExistsLb: {
      const Sequent& p = premises[0];
      if (c.ante.empty() || p.ante.size() < 2) return mismatch("QuantifierShape");
      const Formula& ex = c.ante[0];
      if (ex.kind() != Formula::Kind::BExists) return mismatch("QuantifierShape");
      const Formula& guard = p.ante[0];
      if (guard.kind() != Formula::Kind::Atom || guard.pred() != Pred::Le ||
          !guard.term(0).is_var() || !alpha_eq(guard.term(1), ex.bound()))
        return mismatch("QuantifierShape");
      const std::string& a = guard.term(0).var_name();
      if (payload && payload->eigenvariable && *payload->eigenvariable != a)
        return mismatch("PayloadMismatch");
      // Neither a nor x occurs in the bound term.
      if (occurs_in(a, ex.bound()) || occurs_in(ex.var(), ex.bound()))
        return mismatch("BoundVariableInBoundTerm");
      if (!alpha_eq(p.ante[1], substitute(ex.sub(0), ex.var(), Term::var(a))))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_front(p.ante, 2), drop_front(c.ante)))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(p.succ, c.succ)) return mismatch("QuantifierShape");
      if (occurs_free(a, c)) return mismatch("EigenvariableCaptured");
      return std::nullopt;
    }
    case Rule::ExistsRb: {
      const Sequent& p = premises[0];
      if (c.ante.empty() || c.succ.empty() || p.succ.empty())
        return mismatch("QuantifierShape");
      const Formula& guard = c.ante[0];
      const Formula& ex = c.succ.back();
      if (guard.kind() != Formula::Kind::Atom || guard.pred() != Pred::Le ||
          ex.kind() != Formula::Kind::BExists)
        return mismatch("QuantifierShape");
      if (!alpha_eq(guard.term(1), ex.bound())) return mismatch("QuantifierShape");
      if (occurs_in(ex.var(), ex.bound())) return mismatch("BoundVariableInBoundTerm");
      if (!alpha_eq(p.succ.back(), substitute(ex.sub(0), ex.var(), guard.term(0))))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_front(c.ante), p.ante)) return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_back(c.succ), drop_back(p.succ)))
        return mismatch("QuantifierShape");
      return std::nullopt;
    }
    case Rule::ForallL: {
      const Sequent& p = premises[0];
      if (c.ante.size() < 2 || p.ante.empty()) return mismatch("QuantifierShape");
      const Formula& et = c.ante[0];
      const Formula& all = c.ante[1];
      if (et.kind() != Formula::Kind::E || all.kind() != Formula::Kind::Forall)
        return mismatch("QuantifierShape");
      if (!alpha_eq(p.ante[0], substitute(all.sub(0), all.var(), et.term(0))))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_front(c.ante, 2), drop_front(p.ante)))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(c.succ, p.succ)) return mismatch("QuantifierShape");
      return std::nullopt;
    }
    case Rule::ForallR: {
      const Sequent& p = premises[0];
      if (c.succ.empty() || p.ante.empty() || p.succ.empty())
        return mismatch("QuantifierShape");
      const Formula& all = c.succ.back();
      if (all.kind() != Formula::Kind::Forall) return mismatch("QuantifierShape");
      const Formula& ea = p.ante[0];
      if (ea.kind() != Formula::Kind::E || !ea.term(0).is_var())
        return mismatch("QuantifierShape");
      const std::string& a = ea.term(0).var_name();
      if (payload && payload->eigenvariable && *payload->eigenvariable != a)
        return mismatch("PayloadMismatch");
      if (!alpha_eq(p.succ.back(), substitute(all.sub(0), all.var(), Term::var(a))))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_front(p.ante), c.ante)) return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_back(p.succ), drop_back(c.succ)))
        return mismatch("QuantifierShape");
      if (occurs_free(a, c)) return mismatch("EigenvariableCaptured");
      return std::nullopt;
    }
    case Rule::ExistsL: {
      const Sequent& p = premises[0];
      if (c.ante.empty() || p.ante.size() < 2) return mismatch("QuantifierShape");
      const Formula& ex = c.ante[0];
      if (ex.kind() != Formula::Kind::Exists) return mismatch("QuantifierShape");
      const Formula& ea = p.ante[0];
      if (ea.kind() != Formula::Kind::E || !ea.term(0).is_var())
        return mismatch("QuantifierShape");
      const std::string& a = ea.term(0).var_name();
      if (payload && payload->eigenvariable && *payload->eigenvariable != a)
        return mismatch("PayloadMismatch");
      if (!alpha_eq(p.ante[1], substitute(ex.sub(0), ex.var(), Term::var(a))))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_front(p.ante, 2), drop_front(c.ante)))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(p.succ, c.succ)) return mismatch("QuantifierShape");
      if (occurs_free(a, c)) return mismatch("EigenvariableCaptured");
      return std::nullopt;
    }
    case Rule::ExistsR: {
      const Sequent& p = premises[0];
      if (c.ante.empty() || c.succ.empty() || p.succ.empty())
        return mismatch("QuantifierShape");
      const Formula& et = c.ante[0];
      const Formula& ex = c.succ.back();
      if (et.kind() != Formula::Kind::E || ex.kind() != Formula::Kind::Exists)
        return mismatch("QuantifierShape");
      if (!alpha_eq(p.succ.back(), substitute(ex.sub(0), ex.var(), et.term(0))))
        return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_front(c.ante), p.ante)) return mismatch("QuantifierShape");
      if (!alpha_eq_span(drop_back(c.succ), drop_back(p.succ)))
        return mismatch("QuantifierShape");
      return std::nullopt;
    }
    case Rule::Cut: {
      const Sequent& p1 = premises[0];
      const Sequent& p2 = premises[1];
      if (p1.succ.empty() || p2.ante.empty()) return mismatch("CutShape");
      const Formula& cut = p1.succ.back();
      if (!alpha_eq(cut, p2.ante[0])) return mismatch("CutFormulaMismatch");
      if (payload && payload->cut_formula && !alpha_eq(*payload->cut_formula, cut))
        return mismatch("PayloadMismatch");
      if (c.ante.size() != p1.ante.size() + p2.ante.size() - 1 ||
          c.succ.size() != p1.succ.size() - 1 + p2.succ.size())
        return mismatch("CutShape");
      for (std::size_t i = 0; i < p1.ante.size(); ++i)
        if (!alpha_eq(c.ante[i], p1.ante[i])) return mismatch("CutShape");
      for (std::size_t i = 1; i < p2.ante.size(); ++i)
        if (!alpha_eq(c.ante[p1.ante.size() + i - 1], p2.ante[i]))
          return mismatch("CutShape");
      for (std::size_t i = 0; i + 1 < p1.succ.size(); ++i)
        if (!alpha_eq(c.succ[i], p1.succ[i])) return mismatch("CutShape");
      for (std::size_t i = 0; i < p2.succ.size(); ++i)
        if (!alpha_eq(c.succ[p1.succ.size() - 1 + i], p2.succ[i]))
          return mismatch("CutShape");
      return std::nullopt;
    }
    case Rule::PInd: {
      const Sequent& pb = premises[0];
      const Sequent& p0 = premises[1];
      const Sequent& p1 = premises[2];
      if (c.ante.empty() || c.succ.empty() || pb.succ.empty() || p0.ante.empty() ||
          p0.succ.empty() || p1.ante.empty() || p1.succ.empty())
        return mismatch("PIndShape");
      if (c.ante[0].kind() != Formula::Kind::E) return mismatch("PIndShape");
      const Term& t = c.ante[0].term(0);
      const Formula& body = p0.ante[0];
      // Contexts (Gamma |- Delta) from the base premise.
      std::span<const Formula> gamma(pb.ante);
      auto delta = drop_back(pb.succ);
      auto ctx_ok = [&](std::span<const Formula> a, std::span<const Formula> s) {
        return alpha_eq_span(a, gamma) && alpha_eq_span(s, delta);
      };
      if (!ctx_ok(drop_front(p0.ante), drop_back(p0.succ)) ||
          !ctx_ok(drop_front(p1.ante), drop_back(p1.succ)) ||
          !ctx_ok(drop_front(c.ante), drop_back(c.succ)))
        return mismatch("PIndShape");
      if (!alpha_eq(p1.ante[0], body)) return mismatch("PIndShape");
      auto a0 = detail::find_pind_var(body, p0.succ.back(), false);
      std::string a;
      if (!a0) {
        // Degenerate pattern: the variable does not occur in A.
        if (!alpha_eq(body, p0.succ.back()) || !alpha_eq(body, p1.succ.back()) ||
            !alpha_eq(body, pb.succ.back()) || !alpha_eq(body, c.succ.back()))
          return mismatch("PIndShape");
        if (pind_formula) *pind_formula = body;
        if (pind_var) pind_var->clear();
        return std::nullopt;
      }
      a = *a0;
      if (payload && payload->eigenvariable && *payload->eigenvariable != a)
        return mismatch("PayloadMismatch");
      if (!alpha_eq(substitute(body, a, s1(Term::var(a))), p1.succ.back()))
        return mismatch("PIndShape");
      if (!alpha_eq(substitute(body, a, Term::zero()), pb.succ.back()))
        return mismatch("PIndShape");
      if (!alpha_eq(substitute(body, a, t), c.succ.back())) return mismatch("PIndShape");
      // The eigenvariable must not occur free in the context.
      for (const auto& f : gamma)
        if (occurs_free(a, f)) return mismatch("EigenvariableCaptured");
      for (const auto& f : delta)
        if (occurs_free(a, f)) return mismatch("EigenvariableCaptured");
      if (pind_formula) *pind_formula = body;
      if (pind_var) *pind_var = a;
      return std::nullopt;
    }
  }
  return mismatch("UnknownRule");
}

// ---------------------------------------------------------------------------
// Proof checking.

struct CheckFailure {
  std::string path;  // "root", "root.0.2", ...
  Rule rule;
  std::string reason;
};

struct CheckReport {
  bool ok = true;
  std::vector<CheckFailure> failures;
};

namespace detail {
// Returns whether the subtree rooted at p is valid. Shared subtrees are
// checked once; their failures are recorded under the first path seen.
inline bool check_proof_walk(const Proof& p, int i, const AxiomSet& axioms,
                             const std::string& path, CheckReport& rep,
                             std::map<std::pair<const void*, int>, bool>& cache) {
  auto it = cache.find({p.id(), i});
  if (it != cache.end()) return it->second;

  bool ok = true;
  for (std::size_t k = 0; k < p.children().size(); ++k)
    ok &= check_proof_walk(p.children()[k], i, axioms, path + "." + std::to_string(k),
                           rep, cache);

  std::vector<Sequent> prem;
  prem.reserve(p.children().size());
  for (const auto& ch : p.children()) prem.push_back(ch.conclusion());

  if (p.rule() == Rule::PInd && i == -1) {
    rep.failures.push_back({path, p.rule(), "InductionNotAllowed"});
    ok = false;
  } else {
    Formula pind_formula;
    std::string pind_var;
    auto err = check_inference(p.rule(), prem, p.conclusion(), axioms, nullptr,
                               &pind_formula, &pind_var);
    if (err) {
      rep.failures.push_back({path, p.rule(), *err});
      ok = false;
    } else if (p.rule() == Rule::PInd &&
               !in_sigma_b(pind_formula, static_cast<unsigned>(i))) {
      rep.failures.push_back({path, p.rule(), "InductionClassExceeded"});
      ok = false;
    }
  }
  cache[{p.id(), i}] = ok;
  return ok;
}
}  // namespace detail

// Verdicts for shared subtrees, reusable across check_proof calls (proof
// trees share structure; a node's validity does not depend on its context).
using CheckCache = std::map<std::pair<const void*, int>, bool>;

// Checks every node; PIND is rejected outright at i = -1 and its induction
// formula must be Sigma^b_i otherwise.
inline CheckReport check_proof(const Proof& w, int i, const AxiomSet& axioms,
                               CheckCache* cache = nullptr) {
  CheckReport rep;
  CheckCache local;
  rep.ok = detail::check_proof_walk(w, i, axioms, "root", rep, cache ? *cache : local);
  return rep;
}

inline void sequents_of(const Proof& p, std::vector<const Sequent*>& out) {
  out.push_back(&p.conclusion());
  for (const auto& c : p.children()) sequents_of(c, out);
}

// Strictly i-normal: an S^{-1}_2E proof (no induction) all of whose formulae
// are i-normal.
inline bool is_strictly_i_normal_proof(const Proof& w, int i, const AxiomSet& axioms) {
  if (!check_proof(w, -1, axioms).ok) return false;
  std::vector<const Sequent*> seqs;
  sequents_of(w, seqs);
  for (const Sequent* s : seqs) {
    for (const auto& f : s->ante)
      if (!is_i_normal(f, i)) return false;
    for (const auto& f : s->succ)
      if (!is_i_normal(f, i)) return false;
  }
  return true;
}

}  // namespace s2e

#pragma once

// Computational verification of the soundness invariant on strictly i-normal
// proofs, the brute-force consistency sweep, and the growth-rate demo.
//
// For every node r of a strictly i-normal proof w with code(w) <= u (u all
// ones): for all environments over the node's free variables (values capped)
// and all u' <= u (-) r: if every antecedent formula is true at u', some
// succedent formula is true at u' (+) r. The node codes are the actual
// Goedel codes, because the slack arithmetic depends on real code lengths.

#include <atomic>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "s2e/calculus.hpp"
#include "s2e/godel.hpp"
#include "s2e/semantics.hpp"

namespace s2e {

struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& w) : Error("precondition: " + w) {}
};

struct AuditConfig {
  int i = 0;
  Code u;                         // must be all ones (2^k - 1)
  Code env_value_cap = 8;         // <= u
  bool exhaustive = true;         // exhaust u' when the range is small
  unsigned samples = 64;          // sampled u' per node otherwise
  Code exhaustive_threshold = Code(1) << 10;
  std::uint64_t seed = 0x5eed;
  unsigned threads = 0;           // 0 = hardware_concurrency
};

struct AuditCounterexample {
  std::string node_path;
  Environment rho;
  Code u_prime;
};

struct NodeVerdict {
  std::string path;
  Rule rule;
  bool exhaustive_u = true;
  std::uint64_t checks = 0;
  bool pass = true;
};

struct AuditReport {
  bool pass = true;
  std::vector<NodeVerdict> verdicts;
  std::optional<AuditCounterexample> counterexample;
  bool cut_slack_ok = true;  // |r1 (+) r2| < |r| at every Cut node
};

namespace detail {
struct AuditNodeRef {
  const Proof* node;
  std::string path;
  Code code;
};

inline void collect_nodes(const Proof& p, const std::string& path,
                          std::vector<AuditNodeRef>& out) {
  out.push_back({&p, path, encode(p)});
  for (std::size_t k = 0; k < p.children().size(); ++k)
    collect_nodes(p.children()[k], path + "." + std::to_string(k), out);
}

// All value tuples over vars with entries <= cap.
inline bool next_tuple(std::vector<Code>& tuple, const Code& cap) {
  for (auto& v : tuple) {
    if (v < cap) {
      ++v;
      return true;
    }
    v = 0;
  }
  return false;
}
}  // namespace detail

inline NodeVerdict audit_node(const Proof& node, const std::string& path,
                              const Code& node_code, const AuditConfig& cfg,
                              const Registry& reg,
                              std::optional<AuditCounterexample>* counterexample) {
  NodeVerdict verdict;
  verdict.path = path;
  verdict.rule = node.rule();
  const Sequent& seq = node.conclusion();
  auto vars = free_vars(seq);

  Code uprime_max = ominus(cfg.u, node_code);
  std::vector<Code> uprimes;
  bool exhaustive_u = cfg.exhaustive && uprime_max <= cfg.exhaustive_threshold;
  verdict.exhaustive_u = exhaustive_u;
  if (exhaustive_u) {
    for (Code up = 0; up <= uprime_max; ++up) uprimes.push_back(up);
  } else {
    Rng rng(cfg.seed ^ std::hash<std::string>{}(path));
    uprimes.push_back(0);
    uprimes.push_back(uprime_max);
    for (unsigned k = 0; k + 2 < cfg.samples; ++k)
      uprimes.push_back(rand_code_below(rng, uprime_max));
  }

  std::vector<Code> tuple(vars.size(), Code(0));
  Code up_r = oplus(Code(0), node_code);  // placeholder; recomputed per u'
  do {
    std::vector<std::pair<std::string, Code>> pairs;
    for (std::size_t k = 0; k < vars.size(); ++k) pairs.emplace_back(vars[k], tuple[k]);
    Environment rho(pairs);
    for (const Code& up : uprimes) {
      ++verdict.checks;
      bool ante_true = true;
      for (const auto& a : seq.ante)
        if (!truth_i(cfg.i, up, a, rho, reg)) {
          ante_true = false;
          break;
        }
      if (!ante_true) continue;
      up_r = oplus(up, node_code);
      bool succ_true = false;
      for (const auto& b : seq.succ)
        if (truth_i(cfg.i, up_r, b, rho, reg)) {
          succ_true = true;
          break;
        }
      if (!succ_true) {
        verdict.pass = false;
        if (counterexample && !counterexample->has_value())
          *counterexample = AuditCounterexample{path, rho, up};
        return verdict;
      }
    }
  } while (detail::next_tuple(tuple, cfg.env_value_cap));
  return verdict;
}

// Audits every node of a strictly i-normal proof. Throws when the
// preconditions of the soundness statement do not hold.
inline AuditReport audit_proof(const Proof& w, const AuditConfig& cfg,
                               const AxiomSet& axioms) {
  const Registry& reg = axioms.registry();
  if (!is_all_ones(cfg.u)) throw PreconditionViolated("u is not of the form 2^k - 1");
  if (cfg.env_value_cap > cfg.u) throw PreconditionViolated("cap exceeds u");
  if (!is_strictly_i_normal_proof(w, cfg.i, axioms))
    throw PreconditionViolated("not a strictly i-normal proof");
  Code wcode = encode(w);
  if (wcode > cfg.u) throw PreconditionViolated("encode(w) exceeds u");

  std::vector<detail::AuditNodeRef> nodes;
  detail::collect_nodes(w, "root", nodes);

  AuditReport report;
  // The Cut-node length slack used by the induction.
  for (const auto& n : nodes) {
    if (n.node->rule() == Rule::Cut) {
      Code c1 = encode(n.node->children()[0]);
      Code c2 = encode(n.node->children()[1]);
      if (bitlen(oplus(c1, c2)) >= bitlen(n.code)) report.cut_slack_ok = false;
    }
  }

  unsigned nthreads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  nthreads = std::max(1u, std::min<unsigned>(nthreads, nodes.size()));
  std::vector<std::optional<AuditCounterexample>> cexs(nodes.size());
  std::vector<NodeVerdict> verdicts(nodes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= nodes.size()) return;
      verdicts[k] =
          audit_node(*nodes[k].node, nodes[k].path, nodes[k].code, cfg, reg, &cexs[k]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t k = 0; k < nodes.size(); ++k) {
    report.verdicts.push_back(verdicts[k]);
    if (!verdicts[k].pass) {
      report.pass = false;
      if (!report.counterexample) report.counterexample = cexs[k];
    }
  }
  report.pass = report.pass && report.cut_slack_ok;
  return report;
}

// ---------------------------------------------------------------------------
// Desk-scale consistency: sweep every code up to the bound and look for a
// strictly i-normal proof of the empty sequent.

struct ConsistencySweep {
  Code bound;
  std::uint64_t decoded_proofs = 0;   // codes that parse as proof trees
  std::uint64_t valid_proofs = 0;     // ... that the kernel accepts (i = -1)
  std::uint64_t strict_proofs = 0;    // ... that are strictly i-normal
  std::optional<Code> counterexample; // strictly i-normal proof of |- (none expected)
};

inline ConsistencySweep consistency_search(int i, const Code& code_bound,
                                           const AxiomSet& axioms) {
  const Registry& reg = axioms.registry();
  ConsistencySweep sweep;
  sweep.bound = code_bound;
  for (Code c = 0; c <= code_bound; ++c) {
    auto p = try_decode_proof(c, reg);
    if (!p) continue;
    ++sweep.decoded_proofs;
    if (!check_proof(*p, -1, axioms).ok) continue;
    ++sweep.valid_proofs;
    if (!is_strictly_i_normal_proof(*p, i, axioms)) continue;
    ++sweep.strict_proofs;
    if (p->conclusion().empty()) {
      sweep.counterexample = c;
      return sweep;
    }
  }
  return sweep;
}

// ---------------------------------------------------------------------------
// Growth-rate demo: t_k(x) = x # (x # (... # x)) with k copies of x. Any
// strictly i-normal proof of t_l(d) = t_l(d) has code at least t_l(d) (its
// truth at the proof's own bound forces the value below the code), while
// t_k(d)^m + n grows slower for l > k; the demo tabulates the crossover.

struct SpeedupRow {
  Code d;
  Code t_k;        // t_k(d)
  Code t_l;        // t_l(d); also the proof-code lower bound for t_l(d)=t_l(d)
  bool crossed;    // t_l(d) > t_k(d)^m + n
};

struct SpeedupTable {
  unsigned k = 2, l = 3, m = 1, n = 1;
  std::vector<SpeedupRow> rows;
  std::optional<Code> first_crossing;
};

// Object-level evaluation of the k-fold smash tower at d.
inline Code smash_tower(unsigned k, const Code& d, const Registry& reg) {
  if (k == 0) throw Error("smash tower needs k >= 1");
  Code acc = d;
  for (unsigned j = 1; j < k; ++j) {
    std::vector<Code> args{d, acc};
    acc = reg.eval(builtin::smash, args);
  }
  return acc;
}

inline SpeedupTable speedup_demo(unsigned k, unsigned l, unsigned m, unsigned n,
                                 const Code& d_max, const Registry& reg) {
  SpeedupTable table;
  table.k = k;
  table.l = l;
  table.m = m;
  table.n = n;
  for (Code d = 0; d <= d_max; ++d) {
    SpeedupRow row;
    row.d = d;
    row.t_k = smash_tower(k, d, reg);
    row.t_l = smash_tower(l, d, reg);
    Code rhs = 1;
    for (unsigned j = 0; j < m; ++j) rhs *= row.t_k;
    rhs += n;
    row.crossed = row.t_l > rhs;
    if (row.crossed && !table.first_crossing) table.first_crossing = d;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace s2e

// Command-line frontend: parsing, checking, encoding, evaluating, auditing,
// translating. One subcommand per pipeline; every path is a thin adapter over
// the library. Exit codes: 0 success, 1 check/audit failure, 2 usage or parse
// errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "s2e/audit.hpp"
#include "s2e/bootstrap.hpp"
#include "s2e/calculus.hpp"
#include "s2e/godel.hpp"
#include "s2e/semantics.hpp"
#include "s2e/text.hpp"
#include "s2e/translate.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace s2e;

namespace {

enum class OutputFormat { Text, Records };

struct App {
  Registry reg;
  std::unique_ptr<AxiomSet> ax;
  OutputFormat format = OutputFormat::Text;
  int default_i = 0;
  unsigned u_bits = 0;  // 0 = auto (smallest legal)
  unsigned long cap = 8;
  unsigned samples = 64;

  void finish_setup(const std::string& registry_file) {
    if (!registry_file.empty()) {
      std::ifstream in(registry_file);
      if (!in) throw Error("cannot open registry file " + registry_file);
      std::stringstream ss;
      ss << in.rdbuf();
      for (const auto& e : SExprParser(ss.str()).parse_all())
        extend_registry_from_sexpr(e, reg);
    }
    ax = std::make_unique<AxiomSet>(reg);
    // User extensions get the boundedness lint automatically.
    for (const auto& schema : ax->schemas()) {
      if (schema.family != AxiomFamily::Defining) continue;
      if (schema.defining_fn < builtin::count) continue;
      auto rep = ax->check_boundedness(schema, 256, 256);
      if (!rep.pass)
        std::cerr << "warning: extension axiom " << schema.id
                  << " fails boundedness condition " << rep.violated_condition << ": "
                  << rep.detail << " (the condition-3 lint is randomized, not a proof)\n";
    }
  }

  void record(const json& j) { std::cout << j.dump() << "\n"; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Environment parse_env(const std::string& spec) {
  std::vector<std::pair<std::string, Code>> pairs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("bad --env binding: " + item);
    pairs.emplace_back(item.substr(0, eq), parse_code(item.substr(eq + 1)));
  }
  return Environment(pairs);
}

int run_check(App& app, const std::string& file, int i) {
  Proof p = parse_proof(slurp(file), app.reg);
  CheckReport rep = check_proof(p, i, *app.ax);
  if (app.format == OutputFormat::Records) {
    for (const auto& f : rep.failures)
      app.record({{"record", "check-failure"},
                  {"v", 1},
                  {"path", f.path},
                  {"rule", rule_name(f.rule)},
                  {"reason", f.reason}});
    app.record({{"record", "check"}, {"v", 1}, {"ok", rep.ok}, {"i", i}});
  } else {
    for (const auto& f : rep.failures)
      std::cout << "FAIL " << f.path << " " << rule_name(f.rule) << " " << f.reason
                << "\n";
    std::cout << (rep.ok ? "check: ok" : "check: failed") << "\n";
  }
  return rep.ok ? 0 : 1;
}

int run_audit(App& app, const std::string& file, int i, unsigned u_bits,
              unsigned long cap, bool exhaustive, unsigned samples) {
  Proof p = parse_proof(slurp(file), app.reg);
  AuditConfig cfg;
  cfg.i = i;
  std::size_t min_bits = bitlen(encode(p));
  cfg.u = all_ones(u_bits ? std::max<std::size_t>(u_bits, min_bits) : min_bits);
  cfg.env_value_cap = cap;
  cfg.exhaustive = exhaustive;
  cfg.samples = samples;
  AuditReport rep = audit_proof(p, cfg, *app.ax);
  if (app.format == OutputFormat::Records) {
    for (const auto& v : rep.verdicts)
      app.record({{"record", "audit-node"},
                  {"v", 1},
                  {"path", v.path},
                  {"rule", rule_name(v.rule)},
                  {"pass", v.pass},
                  {"checks", v.checks},
                  {"exhaustive", v.exhaustive_u}});
    json top{{"record", "audit"},
             {"v", 1},
             {"pass", rep.pass},
             {"u_bits", bitlen(cfg.u)},
             {"cut_slack_ok", rep.cut_slack_ok}};
    if (rep.counterexample) {
      top["counterexample_path"] = rep.counterexample->node_path;
      top["counterexample_u_prime"] = to_decimal(rep.counterexample->u_prime);
    }
    app.record(top);
  } else {
    for (const auto& v : rep.verdicts)
      std::cout << (v.pass ? "ok   " : "FAIL ") << v.path << " " << rule_name(v.rule)
                << " checks=" << v.checks
                << (v.exhaustive_u ? " (exhaustive u')" : " (sampled u')") << "\n";
    std::cout << "audit: " << (rep.pass ? "pass" : "fail") << " at u = 2^"
              << bitlen(cfg.u) << " - 1, cap " << to_decimal(cfg.env_value_cap) << "\n";
    if (rep.counterexample)
      std::cout << "counterexample at " << rep.counterexample->node_path
                << " with u' = " << to_decimal(rep.counterexample->u_prime) << "\n";
  }
  return rep.pass ? 0 : 1;
}

int run_corpus(App& app, const std::string& dir) {
  unsigned ran = 0, matched = 0, mismatched = 0, skipped = 0;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".sx" || e.path().extension() == ".csx")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  ClassicalSystem csys(app.reg);
  Bootstrap boot(app.reg, *app.ax);
  Translator tr(boot, csys);
  for (const auto& f : files) {
    fs::path side = f;
    side.replace_extension(".expect");
    if (!fs::exists(side)) {
      std::cerr << "warning: no sidecar for " << f.filename().string() << ", skipped\n";
      ++skipped;
      continue;
    }
    std::string expect_verdict = "valid";
    int i = app.default_i;
    bool do_audit = false;
    {
      std::ifstream in(side);
      std::string line;
      while (std::getline(in, line)) {
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = line.substr(0, colon);
        std::string val = line.substr(colon + 1);
        val.erase(0, val.find_first_not_of(" \t"));
        if (key == "verdict") expect_verdict = val;
        if (key == "i") i = std::stoi(val);
        if (key == "audit") do_audit = val == "true";
      }
    }
    ++ran;
    bool ok;
    std::string detail;
    try {
      if (f.extension() == ".csx") {
        CProof p = parse_cproof(slurp(f.string()), app.reg);
        auto crep = check_cproof(p, i, csys);
        ok = crep.ok;
        if (ok) {
          Proof out = tr.translate_proof(p, std::max(i, 1));
          ok = check_proof(out, std::max(i, 1), *app.ax).ok &&
               alpha_eq(out.conclusion(), star_translate_seq(p.conclusion()));
          detail = "translated";
        }
      } else {
        Proof p = parse_proof(slurp(f.string()), app.reg);
        ok = check_proof(p, i, *app.ax).ok;
        if (ok && do_audit) {
          AuditConfig cfg;
          cfg.i = i;
          cfg.u = all_ones(bitlen(encode(p)));
          cfg.env_value_cap = app.cap;
          ok = audit_proof(p, cfg, *app.ax).pass;
          detail = "audited";
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    bool expected_ok = expect_verdict == "valid";
    bool match = ok == expected_ok;
    matched += match;
    mismatched += !match;
    if (app.format == OutputFormat::Records) {
      app.record({{"record", "corpus-file"},
                  {"v", 1},
                  {"file", f.filename().string()},
                  {"ok", ok},
                  {"expected", expected_ok},
                  {"match", match}});
    } else {
      std::cout << (match ? "ok   " : "MISMATCH ") << f.filename().string()
                << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    }
  }
  if (app.format == OutputFormat::Records) {
    app.record({{"record", "corpus"},
                {"v", 1},
                {"ran", ran},
                {"matched", matched},
                {"mismatched", mismatched},
                {"skipped", skipped}});
  } else {
    std::cout << "corpus: " << ran << " run, " << matched << " matched, " << mismatched
              << " mismatched, " << skipped << " skipped\n";
  }
  return mismatched == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"proof kernel, arithmetization and bounded-semantics tools for "
               "free-logic bounded arithmetic"};
  cli.require_subcommand(1);

  App app;
  std::string registry_file;
  std::string format = "text";
  if (const char* cfg_path = std::getenv("S2E_CONFIG")) {
    try {
      json cfg = json::parse(slurp(cfg_path));
      app.default_i = cfg.value("i", 0);
      app.u_bits = cfg.value("u_bits", 0u);
      app.cap = cfg.value("cap", 8ul);
      app.samples = cfg.value("samples", 64u);
      format = cfg.value("format", "text");
      registry_file = cfg.value("registry", "");
    } catch (const std::exception& e) {
      std::cerr << "bad config " << cfg_path << ": " << e.what() << "\n";
      return 2;
    }
  }
  cli.add_option("--registry", registry_file, "registry extension file");
  cli.add_option("--format", format, "output format: text | records")
      ->check(CLI::IsMember({"text", "records"}));

  auto* c_check = cli.add_subcommand("check", "kernel-check a proof file");
  std::string check_file;
  int check_i = 0;
  c_check->add_option("file", check_file)->required();
  c_check->add_option("--i", check_i, "system index (-1 forbids induction)");

  auto* c_classify = cli.add_subcommand("classify", "bounded-hierarchy class of a formula");
  std::string classify_src;
  c_classify->add_option("formula", classify_src)->required();

  auto* c_godel = cli.add_subcommand("godel", "Goedel encoding and decoding");
  c_godel->require_subcommand(1);
  auto* c_enc = c_godel->add_subcommand("encode");
  auto* c_dec = c_godel->add_subcommand("decode");
  std::string enc_kind = "term", enc_arg, dec_kind = "term", dec_arg;
  bool godel_hex = false;
  c_enc->add_option("--kind", enc_kind)->check(CLI::IsMember({"term", "formula", "sequent", "proof"}));
  c_enc->add_option("input", enc_arg)->required();
  c_enc->add_flag("--hex", godel_hex, "print the code in hex");
  c_dec->add_option("--kind", dec_kind)->check(CLI::IsMember({"term", "formula", "sequent", "proof"}));
  c_dec->add_option("input", dec_arg)->required();

  auto* c_evt = cli.add_subcommand("eval-term", "bounded valuation of a term");
  std::string evt_src, evt_env, evt_bound;
  bool evt_witness = false;
  c_evt->add_option("term", evt_src)->required();
  c_evt->add_option("--env", evt_env, "bindings, e.g. x=5,y=0");
  c_evt->add_option("--bound", evt_bound, "the bound u")->required();
  c_evt->add_flag("--witness", evt_witness, "print the valuation tree");

  auto* c_evf = cli.add_subcommand("eval-truth", "bounded truth of an i-normal formula");
  std::string evf_src, evf_env, evf_bound;
  int evf_i = 0;
  c_evf->add_option("formula", evf_src)->required();
  c_evf->add_option("--env", evf_env);
  c_evf->add_option("--bound", evf_bound)->required();
  c_evf->add_option("--i", evf_i);

  auto* c_audit = cli.add_subcommand("audit", "soundness-invariant audit of a proof");
  std::string audit_file;
  int audit_i = 0;
  unsigned audit_ubits = 0;
  unsigned long audit_cap = 8;
  unsigned audit_samples = 64;
  bool audit_sampled = false;
  c_audit->add_option("file", audit_file)->required();
  c_audit->add_option("--i", audit_i);
  c_audit->add_option("--u-bits", audit_ubits, "u = 2^k - 1 (at least |encode(w)|)");
  c_audit->add_option("--cap", audit_cap, "environment value cap");
  c_audit->add_option("--samples", audit_samples, "sampled u' per node");
  c_audit->add_flag("--sampled", audit_sampled, "never exhaust the u' range");

  auto* c_cons = cli.add_subcommand("search-consistency",
                                    "sweep all codes for an empty-sequent proof");
  int cons_i = 0;
  std::string cons_bound = "1048576";
  c_cons->add_option("--i", cons_i);
  c_cons->add_option("--code-bound", cons_bound);

  auto* c_tr = cli.add_subcommand("translate", "compile a classical proof");
  std::string tr_in, tr_out, tr_trace;
  int tr_i = 1;
  c_tr->add_option("file", tr_in)->required();
  c_tr->add_option("-o,--out", tr_out);
  c_tr->add_option("--trace", tr_trace);
  c_tr->add_option("--i", tr_i);

  auto* c_tot = cli.add_subcommand("totality", "emit the totality proof of a symbol");
  std::string tot_fn, tot_out;
  c_tot->add_option("function", tot_fn)->required();
  c_tot->add_option("-o,--out", tot_out);
  auto* c_conv = cli.add_subcommand("converge", "emit the convergence proof of a term");
  std::string conv_src, conv_out;
  c_conv->add_option("term", conv_src)->required();
  c_conv->add_option("-o,--out", conv_out);

  auto* c_sp = cli.add_subcommand("speedup-demo", "growth-rate crossover table");
  unsigned sp_k = 2, sp_l = 3, sp_m = 1, sp_n = 1;
  std::string sp_dmax = "16";
  c_sp->add_option("--k", sp_k);
  c_sp->add_option("--l", sp_l);
  c_sp->add_option("--m", sp_m);
  c_sp->add_option("--n", sp_n);
  c_sp->add_option("--d-max", sp_dmax);

  auto* c_corpus = cli.add_subcommand("corpus", "run a directory of expected-verdict proofs");
  std::string corpus_dir;
  int corpus_i = 0;
  c_corpus->add_option("dir", corpus_dir)->required();
  c_corpus->add_option("--i", corpus_i);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = cli.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    app.format = format == "records" ? OutputFormat::Records : OutputFormat::Text;
    app.finish_setup(registry_file);

    if (*c_check) return run_check(app, check_file, check_i);

    if (*c_classify) {
      Formula f = parse_formula(classify_src, app.reg);
      FormulaClass cls = classify(f);
      std::string txt =
          cls.kind == FormulaClass::Kind::Unbounded
              ? "unbounded"
              : (cls.kind == FormulaClass::Kind::SigmaB ? "sigma^b_" : "pi^b_") +
                    std::to_string(cls.level);
      if (app.format == OutputFormat::Records)
        app.record({{"record", "classify"}, {"v", 1}, {"class", txt}});
      else
        std::cout << txt << "\n";
      return 0;
    }

    if (*c_enc) {
      Code code;
      if (enc_kind == "term")
        code = encode(parse_term(enc_arg, app.reg));
      else if (enc_kind == "formula")
        code = encode(parse_formula(enc_arg, app.reg));
      else if (enc_kind == "sequent")
        code = encode(parse_sequent(enc_arg, app.reg));
      else
        code = encode(parse_proof(enc_arg, app.reg));
      std::cout << (godel_hex ? to_hex(code) : to_decimal(code)) << "\n";
      return 0;
    }
    if (*c_dec) {
      Code code = parse_code(dec_arg);
      std::string out;
      if (dec_kind == "term")
        out = to_text(decode_term(code, app.reg), app.reg);
      else if (dec_kind == "formula")
        out = to_text(decode_formula(code, app.reg), app.reg);
      else if (dec_kind == "sequent")
        out = to_text(decode_sequent(code, app.reg), app.reg);
      else
        out = to_text(decode_proof(code, app.reg), app.reg);
      std::cout << out << "\n";
      return 0;
    }

    if (*c_evt) {
      Term t = parse_term(evt_src, app.reg);
      Environment rho = parse_env(evt_env);
      ValuationTree tree;
      auto v =
          value_of(t, rho, parse_code(evt_bound), app.reg, evt_witness ? &tree : nullptr);
      if (app.format == OutputFormat::Records) {
        json j{{"record", "eval-term"}, {"v", 1}, {"converges", v.has_value()}};
        if (v) j["value"] = to_decimal(*v);
        app.record(j);
      } else if (v) {
        std::cout << to_decimal(*v) << "\n";
      } else {
        std::cout << "diverges (no valuation tree bounded by u)\n";
      }
      if (evt_witness && v) {
        std::function<void(const ValuationTree&, int)> dump =
            [&](const ValuationTree& n, int depth) {
              std::cout << std::string(2 * depth, ' ') << "(" << to_decimal(n.term_code)
                        << " -> " << to_decimal(n.value) << ")\n";
              for (const auto& ch : n.children) dump(ch, depth + 1);
            };
        dump(tree, 0);
      }
      return 0;
    }

    if (*c_evf) {
      Formula f = parse_formula(evf_src, app.reg);
      Environment rho = parse_env(evf_env);
      bool v = truth_i(evf_i, parse_code(evf_bound), f, rho, app.reg);
      if (app.format == OutputFormat::Records)
        app.record({{"record", "eval-truth"}, {"v", 1}, {"true", v}});
      else
        std::cout << (v ? "true" : "false") << "\n";
      return 0;
    }

    if (*c_audit)
      return run_audit(app, audit_file, audit_i, audit_ubits, audit_cap, !audit_sampled,
                       audit_samples);

    if (*c_cons) {
      auto sweep = consistency_search(cons_i, parse_code(cons_bound), *app.ax);
      if (app.format == OutputFormat::Records) {
        app.record({{"record", "consistency"},
                    {"v", 1},
                    {"bound", to_decimal(sweep.bound)},
                    {"decoded_proofs", sweep.decoded_proofs},
                    {"valid_proofs", sweep.valid_proofs},
                    {"strict_proofs", sweep.strict_proofs},
                    {"counterexample", sweep.counterexample.has_value()}});
      } else {
        std::cout << "codes <= " << to_decimal(sweep.bound) << ": "
                  << sweep.decoded_proofs << " decode as proofs, " << sweep.valid_proofs
                  << " kernel-valid, " << sweep.strict_proofs << " strictly " << cons_i
                  << "-normal\n";
        if (sweep.counterexample)
          std::cout << "EMPTY-SEQUENT PROOF FOUND: " << to_decimal(*sweep.counterexample)
                    << "\n";
        else
          std::cout << "no strictly " << cons_i << "-normal proof of the empty sequent\n";
      }
      return sweep.counterexample ? 1 : 0;
    }

    if (*c_tr) {
      CProof p = parse_cproof(slurp(tr_in), app.reg);
      ClassicalSystem csys(app.reg);
      auto crep = check_cproof(p, tr_i, csys);
      if (!crep.ok) {
        for (const auto& f : crep.failures)
          std::cerr << "classical FAIL " << f.path << " " << rule_name(f.rule) << " "
                    << f.reason << "\n";
        return 1;
      }
      Bootstrap boot(app.reg, *app.ax);
      Translator tr(boot, csys);
      TranslationTrace trace;
      Proof out = tr.translate_proof(p, tr_i, &trace);
      if (!check_proof(out, tr_i, *app.ax).ok) {
        std::cerr << "internal error: translated proof failed the kernel\n";
        return 1;
      }
      std::string text = to_text(out, app.reg);
      if (tr_out.empty()) {
        std::cout << text << "\n";
      } else {
        std::ofstream o(tr_out);
        o << text << "\n";
        std::cout << "translated: " << out.node_count() << " nodes -> " << tr_out
                  << "\n";
      }
      if (!tr_trace.empty()) {
        std::ofstream o(tr_trace);
        for (const auto& e : trace)
          o << json{{"path", e.path}, {"rule", rule_name(e.rule)}, {"note", e.note}}.dump()
            << "\n";
      }
      return 0;
    }

    if (*c_tot || *c_conv) {
      Bootstrap boot(app.reg, *app.ax);
      Proof p = *c_tot ? boot.totality_proof(app.reg.id_of(tot_fn))
                       : boot.convergence_proof(parse_term(conv_src, app.reg));
      if (!check_proof(p, 0, *app.ax).ok) {
        std::cerr << "internal error: generated proof failed the kernel\n";
        return 1;
      }
      const std::string& out_path = *c_tot ? tot_out : conv_out;
      std::string text = to_text(p, app.reg);
      if (out_path.empty())
        std::cout << text << "\n";
      else {
        std::ofstream o(out_path);
        o << text << "\n";
      }
      std::cerr << "kernel-checked, " << p.node_count() << " nodes\n";
      return 0;
    }

    if (*c_sp) {
      auto table = speedup_demo(sp_k, sp_l, sp_m, sp_n, parse_code(sp_dmax), app.reg);
      if (app.format == OutputFormat::Records) {
        for (const auto& row : table.rows)
          app.record({{"record", "speedup-row"},
                      {"v", 1},
                      {"d", to_decimal(row.d)},
                      {"t_k_bits", bitlen(row.t_k)},
                      {"t_l_bits", bitlen(row.t_l)},
                      {"crossed", row.crossed}});
        json j{{"record", "speedup"}, {"v", 1}};
        if (table.first_crossing) j["first_crossing"] = to_decimal(*table.first_crossing);
        app.record(j);
      } else {
        std::cout << "d\tt_" << sp_k << "(d)\tt_" << sp_l << "(d)\tt_" << sp_l << " > t_"
                  << sp_k << "^" << sp_m << "+" << sp_n << "\n";
        auto compact = [](const Code& v) {
          return bitlen(v) > 64 ? "~2^" + std::to_string(bitlen(v) - 1) : to_decimal(v);
        };
        for (const auto& row : table.rows)
          std::cout << to_decimal(row.d) << "\t" << compact(row.t_k) << "\t"
                    << compact(row.t_l) << "\t" << (row.crossed ? "yes" : "no") << "\n";
        if (table.first_crossing)
          std::cout << "first crossing at d = " << to_decimal(*table.first_crossing)
                    << "\n";
        else
          std::cout << "no crossing up to d = " << sp_dmax << "\n";
      }
      return 0;
    }

    if (*c_corpus) {
      app.default_i = corpus_i;
      return run_corpus(app, corpus_dir);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

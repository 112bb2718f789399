// Command-line front end: evaluate, gate, diagnose, synth, prompts,
// repair-prompt, report.
//
// Exit codes: 0 success, 2 schema error, 3 oracle failure, 4 empty
// attackable set, 1 anything else.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vasr/atom_io.h"
#include "vasr/dataset.h"
#include "vasr/diagnostics.h"
#include "vasr/errors.h"
#include "vasr/extractor.h"
#include "vasr/gate.h"
#include "vasr/pipeline.h"
#include "vasr/prompts.h"
#include "vasr/report.h"
#include "vasr/synth.h"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct OracleFlags {
  std::string oracle = "baseline";
  std::string url;
  std::optional<double> threshold;
  std::string premise_mode = "atom";

  void add(CLI::App* cmd) {
    cmd->add_option("--oracle", oracle, "Entailment backend")
        ->check(CLI::IsMember({"baseline", "remote"}));
    cmd->add_option("--oracle-url", url, "Model service base URL");
    cmd->add_option("--entail-threshold", threshold,
                    "Entailment threshold (default per backend)");
    cmd->add_option("--premise-mode", premise_mode, "Premise for B(a, p)")
        ->check(CLI::IsMember({"atom", "sentence"}));
  }

  vasr::OracleConfig config() const {
    vasr::OracleConfig cfg;
    cfg.backend = oracle == "remote" ? vasr::Backend::kRemote
                                     : vasr::Backend::kLexicalBaseline;
    cfg.remote_endpoint = url;
    cfg.entail_threshold = threshold;
    cfg.validate();
    return cfg;
  }

  vasr::PremiseMode mode() const {
    return *vasr::parse_premise_mode(premise_mode);
  }
};

void write_file(const fs::path& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw vasr::ConfigError("cannot write " + path.string());
  f << data;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw vasr::SchemaError("", "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
  } else {
    write_file(path, data);
  }
}

json single_pair_json(const vasr::AtomSet& claim, const vasr::AtomSet& rewrite,
                      const vasr::GateVerdict& v) {
  return {{"claim_atoms", vasr::atoms_to_json(claim)},
          {"claim_fallback", claim.fallback},
          {"rewrite_atoms", vasr::atoms_to_json(rewrite)},
          {"rewrite_fallback", rewrite.fallback},
          {"gate", vasr::verdict_to_json(v)}};
}

void print_trace(const vasr::AtomSet& claim, const vasr::AtomSet& rewrite,
                 const vasr::GateVerdict& v) {
  auto dump = [](const char* label, const vasr::AtomSet& s) {
    std::cout << label << (s.fallback ? " (fallback)" : "") << ":\n";
    for (const auto& a : s.atoms) {
      std::cout << "  " << a.atom_id << "  " << vasr::render_atom(a) << "\n";
    }
  };
  dump("claim atoms", claim);
  dump("rewrite atoms", rewrite);
  std::cout << "verdict: " << (v.valid ? "valid" : "invalid") << "  ["
            << v.config_fingerprint << "]\n";
  for (const auto& t : v.traces) {
    std::cout << "  " << t.original_atom_id << ": "
              << (t.preserved ? "preserved by " + *t.matched_rewrite_atom_id
                              : std::string("not preserved"));
    if (t.entail_score) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.4f", *t.entail_score);
      std::cout << "  entail=" << buf;
    }
    if (t.cons_passed) std::cout << "  cons=" << (*t.cons_passed ? "ok" : "fail");
    std::cout << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Validity-aware attack success evaluation for fact verification"};
  app.require_subcommand(1);

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "Run the full pipeline on a dataset");
  std::string input, output_dir, format = "table_text";
  OracleFlags eval_oracle;
  double sbert = 0.65, ppl = 100.0;
  size_t workers = 1;
  bool no_diag = false, fetch_surface = false;
  eval->add_option("--input", input, "Dataset JSONL")->required();
  eval->add_option("--output-dir", output_dir, "Write report and instances here");
  eval_oracle.add(eval);
  eval->add_option("--sbert-threshold", sbert, "S-ASR keeps similarity >= this");
  eval->add_option("--ppl-threshold", ppl, "P-ASR keeps perplexity <= this");
  eval->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  eval->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"table_text", "csv", "json_lines", "markdown"}));
  eval->add_flag("--no-diagnostics", no_diag, "Skip post-hoc diagnostics");
  eval->add_flag("--fetch-surface", fetch_surface,
                 "Fetch missing SBERT/PPL scores from the model service");

  // gate
  auto* gate_cmd = app.add_subcommand("gate", "Gate one claim/rewrite pair");
  std::string claim, rewrite, evidence;
  bool as_json = false;
  OracleFlags gate_oracle;
  gate_cmd->add_option("--claim", claim)->required();
  gate_cmd->add_option("--rewrite", rewrite)->required();
  gate_oracle.add(gate_cmd);
  gate_cmd->add_flag("--json", as_json, "Print JSON instead of a trace");

  // diagnose
  auto* diag_cmd = app.add_subcommand("diagnose", "Gate and diagnose one pair");
  OracleFlags diag_oracle;
  diag_cmd->add_option("--claim", claim)->required();
  diag_cmd->add_option("--rewrite", rewrite)->required();
  diag_cmd->add_option("--evidence", evidence)->required();
  diag_oracle.add(diag_cmd);

  // synth
  auto* synth = app.add_subcommand("synth", "Generate rule-based synthetic attacks");
  std::string family = "all", seed_file, out_path;
  size_t count = 100;
  uint64_t seed = 0;
  synth->add_option("--family", family, "Attack family or 'all'")
      ->check(CLI::IsMember({"all", "colloquial", "deseption", "factmix",
                             "omission", "advadd"}));
  synth->add_option("--count", count, "Instances (family 'all') or seeds");
  synth->add_option("--seed", seed, "RNG seed");
  synth->add_option("--seed-file", seed_file,
                    "JSONL of {id, claim, evidence} seeds instead of the built-in corpus");
  synth->add_option("--output", out_path, "Output JSONL (default stdout)");

  // prompts
  auto* prompts = app.add_subcommand("prompts", "Emit attack prompts for a dataset");
  std::string prompt_family;
  prompts->add_option("--input", input, "Dataset JSONL")->required();
  prompts->add_option("--family", prompt_family, "Attack family")
      ->required()
      ->check(CLI::IsMember({"colloquial", "deseption", "factmix", "omission",
                             "advadd"}));
  prompts->add_option("--output", out_path, "Output JSONL (default stdout)");

  // repair-prompt
  auto* repair = app.add_subcommand("repair-prompt",
                                    "Repair prompt for an invalid raw success");
  std::string instance_id;
  OracleFlags repair_oracle;
  repair->add_option("--input", input, "Dataset JSONL")->required();
  repair->add_option("--instance-id", instance_id)->required();
  repair_oracle.add(repair);

  // report
  auto* report = app.add_subcommand("report", "Re-render a json_lines report");
  report->add_option("--input", input, "Report JSONL")->required();
  report->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"table_text", "csv", "json_lines", "markdown"}));
  report->add_option("--output", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*eval) {
    vasr::RunConfig cfg;
    cfg.oracle = eval_oracle.config();
    cfg.premise_mode = eval_oracle.mode();
    cfg.screens = {sbert, ppl};
    cfg.workers = workers;
    cfg.diagnostics = !no_diag;
    cfg.fetch_surface = fetch_surface;
    vasr::Dataset ds = vasr::load_dataset(input);
    for (const auto& [v, n] : ds.attackable) {
      std::cerr << "attackable[" << v << "] = " << n << "\n";
    }
    vasr::RunResult res = vasr::evaluate_run(ds, cfg);
    std::string problem = vasr::check_consistency(res.report);
    if (!problem.empty()) throw vasr::Error("inconsistent report: " + problem);
    auto fmt = *vasr::parse_format(format);
    std::string rendered = vasr::render_report(res.report, fmt);
    if (output_dir.empty()) {
      std::cout << rendered;
    } else {
      fs::create_directories(output_dir);
      fs::path dir(output_dir);
      write_file(dir / ("report." + std::string(vasr::format_extension(fmt))),
                 rendered);
      if (fmt != vasr::ReportFormat::kJsonLines) {
        write_file(dir / "report.jsonl",
                   vasr::render_report(res.report, vasr::ReportFormat::kJsonLines));
      }
      write_file(dir / "instances.jsonl", vasr::instance_results_jsonl(ds, res));
      std::cerr << "wrote " << dir.string() << "\n";
    }
    return 0;
  }

  if (*gate_cmd) {
    vasr::EntailmentOracle oracle(gate_oracle.config());
    vasr::Gate gate(oracle, gate_oracle.mode());
    auto a = vasr::extract_or_fallback(claim);
    auto b = vasr::extract_or_fallback(rewrite);
    auto v = gate.gate(a, b);
    if (as_json) {
      std::cout << single_pair_json(a, b, v).dump(2) << "\n";
    } else {
      print_trace(a, b, v);
    }
    return 0;
  }

  if (*diag_cmd) {
    vasr::EntailmentOracle oracle(diag_oracle.config());
    vasr::Gate gate(oracle, diag_oracle.mode());
    vasr::Diagnostics diag(gate);
    auto a = vasr::extract_or_fallback(claim);
    auto b = vasr::extract_or_fallback(rewrite);
    auto v = gate.gate(a, b);
    vasr::DiagnosticInput in{a, b, claim, rewrite, evidence, v};
    json out = single_pair_json(a, b, v);
    out["diagnostics"] = vasr::flags_to_json(diag.diagnose(in));
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*synth) {
    std::vector<vasr::SyntheticCase> cases;
    std::vector<vasr::SeedClaim> seeds;
    if (!seed_file.empty()) {
      std::istringstream in(read_file(seed_file));
      std::string line;
      int n = 0;
      while (std::getline(in, line)) {
        ++n;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
          j = json::parse(line);
          seeds.push_back({j.at("id").get<std::string>(),
                           j.at("claim").get<std::string>(),
                           j.at("evidence").get<std::string>()});
        } catch (const json::exception& e) {
          throw vasr::SchemaError("", e.what(), n);
        }
      }
    } else {
      seeds = vasr::seed_corpus(count);
    }
    std::string skipped_note;
    if (family == "all" && seed_file.empty()) {
      cases = vasr::synthetic_dataset(count, seed);
    } else {
      for (vasr::AttackFamily f : vasr::kAllFamilies) {
        if (family != "all" && vasr::family_name(f) != family) continue;
        auto r = vasr::generate_synthetic_attacks(seeds, f, seed);
        std::cerr << vasr::family_name(f) << ": " << r.cases.size() << " cases, "
                  << r.unextractable.size() << " unextractable seeds, "
                  << r.inapplicable.size() << " inapplicable\n";
        for (auto& c : r.cases) {
          c.instance.verifiers["verifier-a"] = {vasr::Label::kRefuted,
                                                vasr::Label::kSupported,
                                                vasr::Label::kRefuted};
          cases.push_back(std::move(c));
        }
      }
    }
    std::string out;
    for (const auto& c : cases) {
      json j = vasr::instance_to_json(c.instance);
      j["expected_gate"] = c.expected_gate;
      j["expected_flags"] = c.expected_flags.describe();
      j["rule"] = c.rule;
      out += j.dump() + "\n";
    }
    emit(out_path, out);
    return 0;
  }

  if (*prompts) {
    vasr::Dataset ds = vasr::load_dataset(input);
    auto fam = *vasr::parse_family(prompt_family);
    std::string out;
    for (const auto& doc : vasr::emit_attack_prompts(ds.instances, fam)) {
      out += json{{"instance_id", doc.instance_id},
                  {"attack_family", std::string(vasr::family_name(doc.family))},
                  {"prompt", doc.text}}
                 .dump() +
             "\n";
    }
    emit(out_path, out);
    return 0;
  }

  if (*repair) {
    vasr::Dataset ds = vasr::load_dataset(input);
    const vasr::EvaluationInstance* inst = nullptr;
    for (const auto& i : ds.instances) {
      if (i.instance_id == instance_id) inst = &i;
    }
    if (!inst) throw vasr::ConfigError("no instance " + instance_id);
    vasr::EntailmentOracle oracle(repair_oracle.config());
    vasr::Gate gate(oracle, repair_oracle.mode());
    vasr::Diagnostics diag(gate);
    auto a = inst->claim_atoms ? *inst->claim_atoms
                               : vasr::extract_or_fallback(inst->claim);
    auto b = inst->rewrite_atoms ? *inst->rewrite_atoms
                                 : vasr::extract_or_fallback(inst->rewrite);
    auto v = gate.gate(a, b);
    vasr::DiagnosticInput in{a, b, inst->claim, inst->rewrite, inst->evidence, v};
    std::cout << vasr::emit_repair_prompt(*inst, a, v, diag.diagnose(in),
                                          vasr::any_raw_success(*inst));
    return 0;
  }

  if (*report) {
    auto rep = vasr::parse_report_json_lines(read_file(input));
    emit(out_path, vasr::render_report(rep, *vasr::parse_format(format)));
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const vasr::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const vasr::DuplicateInstanceId& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const vasr::MissingSurfaceScore& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const vasr::RemoteUnavailable& e) {
    std::cerr << "oracle failure: " << e.what() << "\n";
    return 3;
  } catch (const vasr::EmptyAttackableSet& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

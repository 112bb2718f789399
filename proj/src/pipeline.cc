#include "vasr/pipeline.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "vasr/atom_io.h"
#include "vasr/errors.h"
#include "vasr/extractor.h"
#include "vasr/remote_client.h"

namespace vasr {
namespace {

using nlohmann::json;

InstanceResult process(const EvaluationInstance& inst, Gate& gate,
                       Diagnostics& diag, const RunConfig& cfg) {
  InstanceResult r;
  r.instance_id = inst.instance_id;
  r.claim_atoms = inst.claim_atoms
                      ? *inst.claim_atoms
                      : extract_or_fallback(inst.claim, cfg.triggers);
  r.rewrite_atoms = inst.rewrite_atoms
                        ? *inst.rewrite_atoms
                        : extract_or_fallback(inst.rewrite, cfg.triggers);
  r.verdict = gate.gate(r.claim_atoms, r.rewrite_atoms);
  if (cfg.diagnostics && any_raw_success(inst)) {
    DiagnosticInput in{r.claim_atoms, r.rewrite_atoms, inst.claim,
                       inst.rewrite,  inst.evidence,  r.verdict};
    r.flags = diag.diagnose(in);
  }
  return r;
}

}  // namespace

RunResult evaluate_run(const Dataset& dataset, const RunConfig& cfg) {
  EntailmentOracle oracle(cfg.oracle);
  return evaluate_run(dataset, cfg, oracle);
}

RunResult evaluate_run(const Dataset& dataset, const RunConfig& cfg,
                       EntailmentOracle& oracle) {
  size_t attackable = 0;
  for (const auto& inst : dataset.instances) {
    for (const auto& [v, o] : inst.verifiers) attackable += o.attackable();
  }
  if (attackable == 0) throw EmptyAttackableSet();

  const auto& insts = dataset.instances;
  RunResult out;
  out.instances.resize(insts.size());

  // Parallel map over instances; each slot is written by one worker.
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    Gate gate(oracle, cfg.premise_mode, cfg.triggers);
    Diagnostics diag(gate, cfg.diagnostic);
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= insts.size()) return;
      try {
        out.instances[i] = process(insts[i], gate, diag, cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = insts.size();
        return;
      }
    }
  };
  size_t n_workers = std::max<size_t>(1, std::min(cfg.workers, insts.size()));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Surface scores: from the input, optionally completed by the service.
  std::vector<SurfaceScores> surfaces;
  surfaces.reserve(insts.size());
  bool any_input_sbert = false, any_input_ppl = false;
  for (const auto& inst : insts) {
    surfaces.push_back(inst.surface);
    any_input_sbert |= inst.surface.sbert_similarity.has_value();
    any_input_ppl |= inst.surface.perplexity.has_value();
  }
  bool fetched = false;
  if (cfg.fetch_surface) {
    RemoteClientOptions opts;
    opts.endpoint = cfg.surface_endpoint.empty() ? cfg.oracle.remote_endpoint
                                                 : cfg.surface_endpoint;
    if (opts.endpoint.empty()) {
      throw ConfigError("surface fetching needs a service endpoint");
    }
    RemoteClient client(opts);
    std::vector<size_t> need_sim, need_ppl;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> texts;
    for (size_t i = 0; i < insts.size(); ++i) {
      if (!any_raw_success(insts[i])) continue;
      if (!surfaces[i].sbert_similarity) {
        need_sim.push_back(i);
        pairs.emplace_back(insts[i].claim, insts[i].rewrite);
      }
      if (!surfaces[i].perplexity) {
        need_ppl.push_back(i);
        texts.push_back(insts[i].rewrite);
      }
    }
    if (!pairs.empty()) {
      auto sims = client.similarity(pairs);
      for (size_t k = 0; k < need_sim.size(); ++k) {
        surfaces[need_sim[k]].sbert_similarity = sims[k];
        surfaces[need_sim[k]].source = SurfaceSource::kRemoteService;
      }
    }
    if (!texts.empty()) {
      auto ppls = client.perplexity(texts);
      for (size_t k = 0; k < need_ppl.size(); ++k) {
        surfaces[need_ppl[k]].perplexity = ppls[k];
        surfaces[need_ppl[k]].source = SurfaceSource::kRemoteService;
      }
    }
    fetched = !pairs.empty() || !texts.empty();
  }
  const bool use_sbert = any_input_sbert || cfg.fetch_surface;
  const bool use_ppl = any_input_ppl || cfg.fetch_surface;

  // Ordered reduce.
  RunReport& rep = out.report;
  rep.meta.config_fingerprint = Gate(oracle, cfg.premise_mode).fingerprint();
  rep.meta.dataset_hash = dataset.hash;
  rep.meta.oracle = oracle.identity();
  rep.meta.premise_mode = std::string(premise_mode_name(cfg.premise_mode));
  rep.meta.entail_threshold = oracle.threshold();
  rep.meta.sbert_threshold = cfg.screens.sbert_min;
  rep.meta.ppl_threshold = cfg.screens.ppl_max;
  rep.meta.diagnostics = cfg.diagnostics;
  rep.meta.n_instances = static_cast<int64_t>(insts.size());
  if (any_input_sbert || any_input_ppl) {
    rep.meta.surface_source = fetched ? "mixed" : "input_file";
  } else {
    rep.meta.surface_source = fetched ? "remote_service" : "none";
  }

  for (size_t i = 0; i < insts.size(); ++i) {
    const EvaluationInstance& inst = insts[i];
    const InstanceResult& r = out.instances[i];
    rep.meta.n_fallback_claims += r.claim_atoms.fallback ? 1 : 0;
    rep.meta.n_fallback_rewrites += r.rewrite_atoms.fallback ? 1 : 0;
    for (const auto& [verifier, o] : inst.verifiers) {
      if (!o.attackable()) continue;
      CellKey key{verifier, inst.generator, std::string(family_name(inst.family))};
      CellStats& c = rep.cells[key];
      if (use_sbert && !c.n_sbert_pass) c.n_sbert_pass = 0;
      if (use_ppl && !c.n_ppl_pass) c.n_ppl_pass = 0;
      ++c.n_attackable;
      if (!raw_success(o)) continue;
      ++c.n_raw_success;
      if (use_sbert) {
        if (!surfaces[i].sbert_similarity) throw MissingSurfaceScore(inst.instance_id);
        if (passes_screen(surfaces[i], ScreenKind::kSbert, cfg.screens)) {
          ++*c.n_sbert_pass;
        }
      }
      if (use_ppl) {
        if (!surfaces[i].perplexity) throw MissingSurfaceScore(inst.instance_id);
        if (passes_screen(surfaces[i], ScreenKind::kPpl, cfg.screens)) {
          ++*c.n_ppl_pass;
        }
      }
      if (r.verdict.valid) {
        ++c.n_valid;
      } else {
        ++c.n_invalid;
      }
      if (r.flags) {
        c.n_ev_drift += r.flags->ev_drift.value_or(false) ? 1 : 0;
        c.n_scope_loss += r.flags->scope_loss.value_or(false) ? 1 : 0;
        c.n_ev_ent += r.flags->ev_ent.value_or(false) ? 1 : 0;
        c.n_unver_add += r.flags->unver_add.value_or(false) ? 1 : 0;
      }
    }
  }
  return out;
}

json verdict_to_json(const GateVerdict& v) {
  json traces = json::array();
  for (const PreservationTrace& t : v.traces) {
    json j = {{"original_atom_id", t.original_atom_id},
              {"preserved", t.preserved}};
    j["matched_rewrite_atom_id"] =
        t.matched_rewrite_atom_id ? json(*t.matched_rewrite_atom_id) : json();
    j["entail_score"] = t.entail_score ? json(*t.entail_score) : json();
    j["cons_passed"] = t.cons_passed ? json(*t.cons_passed) : json();
    traces.push_back(j);
  }
  return {{"valid", v.valid},
          {"config_fingerprint", v.config_fingerprint},
          {"traces", traces}};
}

json flags_to_json(const DiagnosticFlags& f) {
  auto opt = [](const std::optional<bool>& b) {
    return b ? json(*b) : json("not_applicable");
  };
  json drift = json::array();
  for (const auto& w : f.drift_witnesses) {
    drift.push_back({{"rewrite_atom_id", w.rewrite_atom_id},
                     {"original_atom_id", w.original_atom_id},
                     {"alignment", w.alignment}});
  }
  json loss = json::array();
  for (const auto& w : f.loss_witnesses) {
    loss.push_back({{"original_atom_id", w.original_atom_id},
                    {"rule", w.rule},
                    {"detail", w.detail}});
  }
  return {{"ev_drift", opt(f.ev_drift)},
          {"scope_loss", opt(f.scope_loss)},
          {"ev_ent", opt(f.ev_ent)},
          {"unver_add", opt(f.unver_add)},
          {"added_atom_ids", f.added_atom_ids},
          {"supported_added_ids", f.supported_added_ids},
          {"drift_witnesses", drift},
          {"loss_witnesses", loss}};
}

std::string instance_results_jsonl(const Dataset& dataset,
                                   const RunResult& result) {
  using Key = std::tuple<std::string, std::string, std::string, std::string>;
  std::vector<std::pair<Key, json>> rows;
  for (size_t i = 0; i < dataset.instances.size(); ++i) {
    const EvaluationInstance& inst = dataset.instances[i];
    const InstanceResult& r = result.instances[i];
    for (const auto& [verifier, o] : inst.verifiers) {
      if (!o.attackable()) continue;
      std::string fam(family_name(inst.family));
      json j = {{"verifier", verifier},
                {"generator", inst.generator},
                {"attack_family", fam},
                {"instance_id", inst.instance_id},
                {"post_attack", std::string(label_name(o.post_attack))},
                {"raw_success", raw_success(o)},
                {"claim_atoms", atoms_to_json(r.claim_atoms)},
                {"rewrite_atoms", atoms_to_json(r.rewrite_atoms)},
                {"claim_fallback", r.claim_atoms.fallback},
                {"rewrite_fallback", r.rewrite_atoms.fallback},
                {"gate", verdict_to_json(r.verdict)}};
      j["diagnostics"] = raw_success(o) && r.flags ? flags_to_json(*r.flags) : json();
      rows.emplace_back(Key{verifier, inst.generator, fam, inst.instance_id},
                        std::move(j));
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [k, j] : rows) out += j.dump() + "\n";
  return out;
}

}  // namespace vasr

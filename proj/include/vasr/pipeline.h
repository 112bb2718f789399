#ifndef VASR_PIPELINE_H_
#define VASR_PIPELINE_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vasr/constraints.h"
#include "vasr/dataset.h"
#include "vasr/diagnostics.h"
#include "vasr/gate.h"
#include "vasr/oracle.h"
#include "vasr/report.h"

namespace vasr {

struct RunConfig {
  OracleConfig oracle;
  PremiseMode premise_mode = PremiseMode::kAtom;
  ScreenThresholds screens;
  TriggerTables triggers = TriggerTables::defaults();
  DiagnosticConfig diagnostic;
  bool diagnostics = true;
  size_t workers = 1;
  // Fetch missing SBERT / PPL scores from the model service at
  // oracle.remote_endpoint (or this endpoint when set).
  bool fetch_surface = false;
  std::string surface_endpoint;
};

struct InstanceResult {
  std::string instance_id;
  AtomSet claim_atoms;
  AtomSet rewrite_atoms;
  GateVerdict verdict;
  // Set when diagnostics ran (the instance is a raw success for some
  // verifier and diagnostics are on).
  std::optional<DiagnosticFlags> flags;
};

struct RunResult {
  RunReport report;
  // Index-aligned with the dataset's instances.
  std::vector<InstanceResult> instances;
};

// Extract (or ingest) atoms, gate, diagnose raw successes, aggregate per
// (verifier, generator, family). Instances run on `cfg.workers` threads;
// aggregation is an ordered fold, so the report does not depend on the
// worker count. Throws EmptyAttackableSet, MissingSurfaceScore, and
// RemoteUnavailable (after the client's bounded retries).
RunResult evaluate_run(const Dataset& dataset, const RunConfig& cfg);

// Same, with an existing oracle (tests, shared caches).
RunResult evaluate_run(const Dataset& dataset, const RunConfig& cfg,
                       EntailmentOracle& oracle);

// Per-instance JSON lines, one per (verifier, attackable instance), sorted
// by (verifier, generator, family, instance_id).
std::string instance_results_jsonl(const Dataset& dataset,
                                   const RunResult& result);

nlohmann::json verdict_to_json(const GateVerdict& v);
nlohmann::json flags_to_json(const DiagnosticFlags& f);

}  // namespace vasr

#endif  // VASR_PIPELINE_H_

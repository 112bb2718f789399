#include <gtest/gtest.h>

#include "json.hpp"
#include "vasr/dataset.h"
#include "vasr/errors.h"
#include "vasr/pipeline.h"
#include "vasr/report.h"
#include "vasr/synth.h"

namespace vasr {
namespace {

using nlohmann::json;

Dataset synthetic(size_t n, uint64_t seed, bool all_success = false) {
  SyntheticDatasetOptions o;
  o.all_raw_success = all_success;
  std::vector<EvaluationInstance> insts;
  for (auto& c : synthetic_dataset(n, seed, o)) insts.push_back(c.instance);
  return parse_dataset(dataset_to_jsonl(insts));
}

std::string render_all(const Dataset& ds, const RunResult& r) {
  return render_report(r.report, ReportFormat::kJsonLines) +
         render_report(r.report, ReportFormat::kTableText) +
         instance_results_jsonl(ds, r);
}

TEST(Pipeline, WorkerCountDoesNotChangeOutput) {
  Dataset ds = synthetic(60, 4);
  RunConfig one;
  RunConfig many;
  many.workers = 8;
  std::string a = render_all(ds, evaluate_run(ds, one));
  std::string b = render_all(ds, evaluate_run(ds, many));
  std::string c = render_all(ds, evaluate_run(ds, many));
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
}

// The gate never reads evidence: swapping it leaves every verdict alone.
TEST(Pipeline, VerdictsIgnoreEvidence) {
  Dataset ds = synthetic(40, 5, true);
  Dataset swapped = ds;
  for (auto& inst : swapped.instances) inst.evidence = "Unrelated text about rivers.";
  RunResult a = evaluate_run(ds, RunConfig{});
  RunResult b = evaluate_run(swapped, RunConfig{});
  ASSERT_EQ(a.instances.size(), b.instances.size());
  for (size_t i = 0; i < a.instances.size(); ++i) {
    EXPECT_EQ(verdict_to_json(a.instances[i].verdict),
              verdict_to_json(b.instances[i].verdict));
  }
}

TEST(Pipeline, SuppliedAtomsSkipExtraction) {
  Dataset ds = synthetic(5, 6, true);
  auto& inst = ds.instances[0];
  AtomSet s;
  s.origin = AtomOrigin::kExternalSupplied;
  s.atoms.push_back({"a0", "x", "is", "y", {}, "", ""});
  inst.claim_atoms = s;
  inst.rewrite_atoms = s;
  RunResult r = evaluate_run(ds, RunConfig{});
  EXPECT_EQ(r.instances[0].claim_atoms.origin, AtomOrigin::kExternalSupplied);
  EXPECT_TRUE(r.instances[0].verdict.valid);
}

TEST(Pipeline, DiagnosticsOnlyForRawSuccesses) {
  Dataset ds = synthetic(30, 7);
  RunResult r = evaluate_run(ds, RunConfig{});
  for (size_t i = 0; i < ds.instances.size(); ++i) {
    EXPECT_EQ(r.instances[i].flags.has_value(), any_raw_success(ds.instances[i]))
        << ds.instances[i].instance_id;
  }
  RunConfig off;
  off.diagnostics = false;
  RunResult q = evaluate_run(ds, off);
  for (const auto& ir : q.instances) EXPECT_FALSE(ir.flags.has_value());
  EXPECT_FALSE(q.report.meta.diagnostics);
}

TEST(Pipeline, NoAttackableInstances) {
  Dataset ds = synthetic(5, 8);
  for (auto& inst : ds.instances) {
    for (auto& [name, o] : inst.verifiers) o.pre_attack = Label::kSupported;
  }
  EXPECT_THROW(evaluate_run(ds, RunConfig{}), EmptyAttackableSet);
}

TEST(Pipeline, PartialSurfaceScoresAreAnError) {
  Dataset ds = synthetic(10, 9, true);
  for (auto& inst : ds.instances) inst.surface.sbert_similarity = 0.9;
  ds.instances[3].surface.sbert_similarity.reset();
  try {
    evaluate_run(ds, RunConfig{});
    FAIL();
  } catch (const MissingSurfaceScore& e) {
    EXPECT_NE(std::string(e.what()).find(ds.instances[3].instance_id),
              std::string::npos);
  }
  // With no scores at all the screened columns are simply absent.
  for (auto& inst : ds.instances) inst.surface.sbert_similarity.reset();
  RunResult r = evaluate_run(ds, RunConfig{});
  EXPECT_EQ(r.report.meta.surface_source, "none");
  EXPECT_FALSE(r.report.cells.begin()->second.n_sbert_pass.has_value());
}

TEST(Pipeline, InstanceLinesAreSortedAndComplete) {
  Dataset ds = synthetic(20, 10);
  RunResult r = evaluate_run(ds, RunConfig{});
  std::string text = instance_results_jsonl(ds, r);
  std::istringstream in(text);
  std::string line, prev;
  size_t n = 0, expected = 0;
  for (const auto& [name, count] : ds.attackable) expected += count;
  while (std::getline(in, line)) {
    json j = json::parse(line);
    std::string key = j["verifier"].get<std::string>() + "|" +
                      j["generator"].get<std::string>() + "|" +
                      j["attack_family"].get<std::string>() + "|" +
                      j["instance_id"].get<std::string>();
    EXPECT_LT(prev, key);
    prev = key;
    ++n;
  }
  EXPECT_EQ(n, expected);
  EXPECT_EQ(check_consistency(r.report), "");
}

TEST(Pipeline, FlagsJsonMarksTheInapplicableSide) {
  DiagnosticFlags f;
  f.ev_ent = true;
  f.unver_add = false;
  json j = flags_to_json(f);
  EXPECT_EQ(j["ev_ent"], true);
  EXPECT_EQ(j["ev_drift"], "not_applicable");
}

}  // namespace
}  // namespace vasr

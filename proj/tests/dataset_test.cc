#include <gtest/gtest.h>

#include "json.hpp"
#include "vasr/dataset.h"
#include "vasr/errors.h"
#include "vasr/oracle.h"

namespace vasr {
namespace {

using nlohmann::json;

json record(const std::string& id) {
  json r = json::parse(R"({
    "instance_id": "x", "claim": "Danger UXB is a desk.",
    "evidence": "Danger UXB is a 1979 British television series.",
    "rewrite": "Danger UXB is a television series.",
    "gold_label": "refuted", "generator": "gpt-4.1",
    "attack_family": "omission",
    "verifiers": {"gemma": {"pre_attack": "refuted", "post_attack": "supported"},
                  "bert": {"pre_attack": "supported", "post_attack": "supported"}},
    "sbert": 0.8, "ppl": 42.5})");
  r["instance_id"] = id;
  return r;
}

std::string lines(std::initializer_list<json> recs) {
  std::string out;
  for (const auto& r : recs) out += r.dump() + "\n";
  return out;
}

void expect_schema(const std::string& doc, int line, const std::string& path) {
  try {
    parse_dataset(doc);
    FAIL() << "expected SchemaError at " << path;
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.field_path(), path) << e.what();
  }
}

TEST(Dataset, ParsesAllFields) {
  Dataset ds = parse_dataset(lines({record("i0")}));
  ASSERT_EQ(ds.instances.size(), 1u);
  const auto& inst = ds.instances[0];
  EXPECT_EQ(inst.family, AttackFamily::kOmission);
  EXPECT_EQ(inst.generator, "gpt-4.1");
  ASSERT_EQ(inst.verifiers.size(), 2u);
  EXPECT_EQ(inst.verifiers.begin()->first, "bert");  // ordered by name
  EXPECT_EQ(inst.verifiers.at("gemma").post_attack, Label::kSupported);
  EXPECT_EQ(inst.surface.sbert_similarity, 0.8);
  EXPECT_EQ(inst.surface.perplexity, 42.5);
  EXPECT_EQ(ds.attackable.at("gemma"), 1u);
  EXPECT_EQ(ds.attackable.at("bert"), 0u);
  EXPECT_TRUE(any_raw_success(inst));
}

TEST(Dataset, HashIsOverRawBytes) {
  std::string doc = lines({record("i0")});
  EXPECT_EQ(parse_dataset(doc).hash, hex64(fnv1a64(doc)));
  EXPECT_NE(parse_dataset(doc + "\n").hash, parse_dataset(doc).hash);
}

TEST(Dataset, BlankLinesAreSkippedButCounted) {
  json bad = record("i1");
  bad.erase("rewrite");
  expect_schema(lines({record("i0")}) + "\n  \n" + lines({bad}), 4, "rewrite");
}

TEST(Dataset, FieldPathsForBadRecords) {
  json r = record("i0");
  r["gold_label"] = "true";
  expect_schema(lines({r}), 1, "gold_label");
  r = record("i0");
  r["verifiers"]["gemma"]["post_attack"] = "maybe";
  expect_schema(lines({r}), 1, "verifiers.gemma.post_attack");
  r = record("i0");
  r["verifiers"] = json::object();
  expect_schema(lines({r}), 1, "verifiers");
  r = record("i0");
  r["attack_family"] = "paraphrase";
  expect_schema(lines({r}), 1, "attack_family");
  r = record("i0");
  r["sbert"] = 1.5;
  expect_schema(lines({r}), 1, "sbert");
  r = record("i0");
  r["ppl"] = 0;
  expect_schema(lines({r}), 1, "ppl");
  r = record("i0");
  r["claim"] = 3;
  expect_schema(lines({record("i1"), r}), 2, "claim");
  r = record("i0");
  r["instance_id"] = "";
  expect_schema(lines({r}), 1, "instance_id");
  r = record("i0");
  r["claim_atoms"] = json::array();
  expect_schema(lines({r}), 1, "claim_atoms");
  r = record("i0");
  r["rewrite_atoms"] = json::parse(R"([{"subject": "s", "object": ""}])");
  expect_schema(lines({r}), 1, "rewrite_atoms[0].relation");
}

TEST(Dataset, MalformedJsonReportsLine) {
  expect_schema(lines({record("i0")}) + "{not json\n", 2, "");
}

TEST(Dataset, DuplicateIds) {
  EXPECT_THROW(parse_dataset(lines({record("i0"), record("i0")})),
               DuplicateInstanceId);
}

// Records for the same claim (after normalization) must share evidence.
TEST(Dataset, EvidenceConsistency) {
  json other = record("i1");
  other["claim"] = "Danger UXB  is a DESK";
  other["evidence"] = "Something else.";
  expect_schema(lines({record("i0"), other}), 2, "evidence");
  other["evidence"] = record("i0")["evidence"];
  EXPECT_EQ(parse_dataset(lines({record("i0"), other})).instances.size(), 2u);
}

TEST(Dataset, OptionalScoresAndAtoms) {
  json r = record("i0");
  r.erase("sbert");
  r.erase("ppl");
  r["claim_atoms"] = json::parse(
      R"([{"subject": "Danger UXB", "relation": "is", "object": "desk"}])");
  Dataset ds = parse_dataset(lines({r}));
  const auto& inst = ds.instances[0];
  EXPECT_FALSE(inst.surface.sbert_similarity.has_value());
  ASSERT_TRUE(inst.claim_atoms.has_value());
  EXPECT_EQ(inst.claim_atoms->atoms[0].subject, "danger uxb");
  EXPECT_FALSE(inst.rewrite_atoms.has_value());
}

TEST(Dataset, JsonRoundTrip) {
  json r = record("i0");
  r["claim_atoms"] = json::parse(
      R"([{"subject": "danger uxb", "relation": "is", "object": "desk"}])");
  Dataset a = parse_dataset(lines({r, record("i1")}));
  Dataset b = parse_dataset(dataset_to_jsonl(a.instances));
  ASSERT_EQ(b.instances.size(), 2u);
  for (size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(instance_to_json(a.instances[i]), instance_to_json(b.instances[i]));
  }
}

TEST(Dataset, FamilyNames) {
  for (AttackFamily f : kAllFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_FALSE(parse_family("lexical").has_value());
}

}  // namespace
}  // namespace vasr

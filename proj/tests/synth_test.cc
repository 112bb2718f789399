#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "soundness.h"
#include "vasr/dataset.h"
#include "vasr/synth.h"

namespace vasr {
namespace {

class FamilyTest : public ::testing::TestWithParam<AttackFamily> {};

TEST_P(FamilyTest, HundredCasesMatchTheirRule) {
  auto s = testing::check_family(GetParam(), 100, 42);
  EXPECT_EQ(s.cases, 100u);
  EXPECT_EQ(s.gate_ok, 100u) << s.first_mismatch;
  EXPECT_EQ(s.flags_ok, 100u) << s.first_mismatch;
}

INSTANTIATE_TEST_SUITE_P(AllFamilies, FamilyTest, ::testing::ValuesIn(kAllFamilies),
                         [](const auto& info) {
                           return std::string(family_name(info.param));
                         });

TEST(Synth, SeedCorpusIsDeterministic) {
  auto a = seed_corpus(50);
  auto b = seed_corpus(50);
  ASSERT_EQ(a.size(), 50u);
  std::set<std::string> ids;
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].claim, b[i].claim);
    EXPECT_EQ(a[i].evidence, b[i].evidence);
    ids.insert(a[i].id);
  }
  EXPECT_EQ(ids.size(), 50u);
  EXPECT_EQ(a[0].id, "seed-0000");
}

// Per-seed generators: a case does not depend on which other seeds ran.
TEST(Synth, OutputIndependentOfCorpusOrder) {
  auto seeds = seed_corpus(20);
  auto forward = generate_synthetic_attacks(seeds, AttackFamily::kFactmix, 9);
  std::reverse(seeds.begin(), seeds.end());
  auto backward = generate_synthetic_attacks(seeds, AttackFamily::kFactmix, 9);
  ASSERT_EQ(forward.cases.size(), backward.cases.size());
  std::map<std::string, std::string> f, b;
  for (const auto& c : forward.cases) f[c.instance.instance_id] = c.instance.rewrite;
  for (const auto& c : backward.cases) b[c.instance.instance_id] = c.instance.rewrite;
  EXPECT_EQ(f, b);
}

TEST(Synth, DatasetSpreadsFamiliesAndParses) {
  auto cases = synthetic_dataset(25, 3);
  ASSERT_EQ(cases.size(), 25u);
  std::map<AttackFamily, int> per;
  std::vector<EvaluationInstance> insts;
  for (const auto& c : cases) {
    ++per[c.instance.family];
    insts.push_back(c.instance);
  }
  for (AttackFamily f : kAllFamilies) EXPECT_EQ(per[f], 5);
  Dataset ds = parse_dataset(dataset_to_jsonl(insts));
  EXPECT_EQ(ds.instances.size(), 25u);
}

TEST(Synth, AllRawSuccessOption) {
  SyntheticDatasetOptions o;
  o.all_raw_success = true;
  for (const auto& c : synthetic_dataset(10, 1, o)) {
    EXPECT_TRUE(any_raw_success(c.instance));
    for (const auto& [name, v] : c.instance.verifiers) EXPECT_TRUE(v.attackable());
  }
}

TEST(Synth, FlagExpectationMatching) {
  FlagExpectation e;
  e.scope_loss = true;
  DiagnosticFlags f;
  f.ev_drift = true;
  f.scope_loss = true;
  EXPECT_TRUE(e.matches(f));  // ev_drift is not asserted
  f.scope_loss = false;
  EXPECT_FALSE(e.matches(f));
  f.scope_loss.reset();
  EXPECT_FALSE(e.matches(f));
  EXPECT_EQ(e.describe(), "scope_loss=true");
}

}  // namespace
}  // namespace vasr

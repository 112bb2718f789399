#include <gtest/gtest.h>

#include "cases.h"
#include "random_atoms.h"
#include "vasr/atom.h"
#include "vasr/constraints.h"
#include "vasr/errors.h"
#include "vasr/extractor.h"
#include "vasr/gate.h"
#include "vasr/oracle.h"

namespace vasr {
namespace {

class GateTest : public ::testing::Test {
 protected:
  OracleConfig cfg_;
  EntailmentOracle oracle_{cfg_};
  Gate gate_{oracle_};

  GateVerdict run(const char* claim, const char* rewrite) {
    return gate_.gate(extract_or_fallback(claim), extract_or_fallback(rewrite));
  }
};

// Straight double loop over the definition, no batching and no early exit.
bool naive_gate(EntailmentOracle& oracle, const AtomSet& c, const AtomSet& r) {
  bool all = true;
  for (const auto& a : c.atoms) {
    bool any = false;
    for (const auto& b : r.atoms) {
      std::string p = render_atom(b);
      if (oracle.entails({p, render_atom(a)}) && cons_check(a, p)) any = true;
    }
    all = all && any;
  }
  return all;
}

TEST_F(GateTest, DriftedYearIsInvalid) {
  GateVerdict v = run(cases::kReignClaim, cases::kReignMistral);
  EXPECT_FALSE(v.valid);
  ASSERT_EQ(v.traces.size(), 1u);
  const auto& t = v.traces[0];
  EXPECT_FALSE(t.preserved);
  EXPECT_FALSE(t.matched_rewrite_atom_id.has_value());
  // Best entail over the two rewrite atoms: 3/4 overlap x 1/2 recall.
  ASSERT_TRUE(t.entail_score.has_value());
  EXPECT_DOUBLE_EQ(*t.entail_score, 0.375);
  EXPECT_EQ(t.cons_passed, false);
}

TEST_F(GateTest, WrappedClaimIsValid) {
  GateVerdict v = run(cases::kReignClaim, cases::kReignGpt);
  EXPECT_TRUE(v.valid);
  ASSERT_EQ(v.traces.size(), 1u);
  EXPECT_TRUE(v.traces[0].preserved);
  EXPECT_EQ(v.traces[0].matched_rewrite_atom_id, "a1");
  EXPECT_EQ(v.traces[0].cons_passed, true);
}

TEST_F(GateTest, IdentityIsValid) {
  for (const char* s : {cases::kReignClaim, cases::kDeskClaim,
                        cases::kDeskEvidence, cases::kReignMistral}) {
    AtomSet a = extract_or_fallback(s);
    EXPECT_TRUE(gate_.gate(a, a).valid) << s;
  }
}

TEST_F(GateTest, ConjunctionNeedsEveryAtom) {
  AtomSet c = extract_or_fallback(
      "The bridge was built in 1932. Kate Winslet won the award. "
      "The album sold 3 million copies.");
  ASSERT_EQ(c.size(), 3u);
  AtomSet r = extract_or_fallback(
      "The bridge was built in 1932. The album sold 3 million copies.");
  GateVerdict v = gate_.gate(c, r);
  EXPECT_FALSE(v.valid);
  int failing = 0;
  for (const auto& t : v.traces) {
    if (!t.preserved) {
      ++failing;
      EXPECT_EQ(t.original_atom_id, "a1");
    }
  }
  EXPECT_EQ(failing, 1);
}

TEST_F(GateTest, DisjointContentFails) {
  GateVerdict v = run(cases::kDeskClaim, "The weather in Lisbon was mild.");
  EXPECT_FALSE(v.valid);
  EXPECT_FALSE(v.traces[0].preserved);
}

TEST_F(GateTest, EmptyRewriteFailsWithoutScore) {
  AtomSet c = extract_or_fallback(cases::kDeskClaim);
  GateVerdict v = gate_.gate(c, AtomSet{});
  EXPECT_FALSE(v.valid);
  EXPECT_FALSE(v.traces[0].entail_score.has_value());
}

TEST_F(GateTest, FirstPassingRewriteAtomIsTheWitness) {
  AtomSet c = extract_or_fallback(cases::kDeskClaim);
  AtomSet r = extract_or_fallback(
      "The weather was mild. Danger UXB is a desk. Danger UXB is a desk.");
  ASSERT_EQ(r.size(), 3u);
  PreservationTrace t = gate_.preserves(c.atoms[0], r);
  EXPECT_TRUE(t.preserved);
  EXPECT_EQ(t.matched_rewrite_atom_id, "a1");
}

TEST_F(GateTest, EmptyOriginalThrows) {
  EXPECT_THROW(gate_.gate(AtomSet{}, extract_or_fallback(cases::kDeskClaim)),
               EmptyOriginal);
}

TEST_F(GateTest, CheckPairSplitsBothArms) {
  AtomSet c = extract_or_fallback(cases::kReignClaim);
  AtomSet r = extract_or_fallback(cases::kReignMistral);
  PairCheck p = gate_.check_pair(c.atoms[0], r.atoms[0]);
  EXPECT_FALSE(p.passed);
  EXPECT_FALSE(p.entailed);
  EXPECT_FALSE(p.cons_passed);
  auto m = gate_.check_matrix(c, r);
  ASSERT_EQ(m.size(), 1u);
  ASSERT_EQ(m[0].size(), 2u);
  EXPECT_EQ(m[0][0].entail_score, p.entail_score);
}

TEST_F(GateTest, SentencePremiseMode) {
  Gate g(oracle_, PremiseMode::kSentence);
  AtomSet c = extract_or_fallback(cases::kDeskClaim);
  AtomSet r = extract_or_fallback(cases::kDeskFactmixGpt);
  EXPECT_EQ(g.premise_for(r.atoms[0]), r.atoms[0].source_sentence);
  EXPECT_EQ(gate_.premise_for(r.atoms[0]), render_atom(r.atoms[0]));
  EXPECT_NE(g.fingerprint(), gate_.fingerprint());
}

TEST_F(GateTest, FingerprintTracksOracleConfig) {
  OracleConfig other = cfg_;
  other.entail_threshold = 0.7;
  EntailmentOracle o2(other);
  Gate g2(o2);
  EXPECT_NE(g2.fingerprint(), gate_.fingerprint());
  Gate g3(oracle_);
  EXPECT_EQ(g3.fingerprint(), gate_.fingerprint());
  EXPECT_EQ(run(cases::kDeskClaim, cases::kDeskClaim).config_fingerprint,
            gate_.fingerprint());
}

TEST_F(GateTest, MatchesNaiveReferenceOnRandomSets) {
  testing::AtomGen gen(7);
  int valid = 0;
  for (int i = 0; i < 100; ++i) {
    AtomSet c = gen.set(1, 4);
    AtomSet r = gen.set(0, 4);
    if (i % 3 == 0) r.atoms.insert(r.atoms.end(), c.atoms.begin(), c.atoms.end());
    bool v = gate_.gate(c, r).valid;
    valid += v;
    EXPECT_EQ(v, naive_gate(oracle_, c, r)) << i;
  }
  // Both outcomes are exercised.
  EXPECT_GT(valid, 0);
  EXPECT_LT(valid, 100);
}

// Adding rewrite atoms or dropping original atoms never turns valid into
// invalid.
TEST_F(GateTest, Monotone) {
  testing::AtomGen gen(11);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    AtomSet c = gen.set(1, 4);
    AtomSet r = gen.set(1, 4);
    // Seed some validity by copying an original atom into the rewrite.
    r.atoms.push_back(c.atoms[0]);
    if (!gate_.gate(c, r).valid) continue;
    ++checked;
    AtomSet wider = r;
    wider.atoms.push_back(gen.atom("x"));
    EXPECT_TRUE(gate_.gate(c, wider).valid);
    AtomSet narrower = c;
    narrower.atoms.pop_back();
    if (!narrower.atoms.empty()) EXPECT_TRUE(gate_.gate(narrower, r).valid);
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace vasr

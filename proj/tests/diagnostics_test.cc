#include <gtest/gtest.h>

#include "cases.h"
#include "random_atoms.h"
#include "vasr/diagnostics.h"
#include "vasr/extractor.h"
#include "vasr/gate.h"
#include "vasr/oracle.h"

namespace vasr {
namespace {

struct Outcome {
  GateVerdict verdict;
  DiagnosticFlags flags;
};

class DiagnosticsTest : public ::testing::Test {
 protected:
  OracleConfig cfg_;
  EntailmentOracle oracle_{cfg_};
  Gate gate_{oracle_};
  Diagnostics diag_{gate_};

  Outcome run(const std::string& claim, const std::string& rewrite,
              const std::string& evidence) {
    AtomSet c = extract_or_fallback(claim);
    AtomSet r = extract_or_fallback(rewrite);
    GateVerdict v = gate_.gate(c, r);
    DiagnosticFlags f = diag_.diagnose({c, r, claim, rewrite, evidence, v});
    return {v, f};
  }
};

void expect_invalid_side(const DiagnosticFlags& f, bool drift, bool loss) {
  ASSERT_TRUE(f.ev_drift.has_value());
  ASSERT_TRUE(f.scope_loss.has_value());
  EXPECT_FALSE(f.ev_ent.has_value());
  EXPECT_FALSE(f.unver_add.has_value());
  EXPECT_EQ(*f.ev_drift, drift);
  EXPECT_EQ(*f.scope_loss, loss);
}

void expect_valid_side(const DiagnosticFlags& f, bool ent, bool unver) {
  ASSERT_TRUE(f.ev_ent.has_value());
  ASSERT_TRUE(f.unver_add.has_value());
  EXPECT_FALSE(f.ev_drift.has_value());
  EXPECT_FALSE(f.scope_loss.has_value());
  EXPECT_EQ(*f.ev_ent, ent);
  EXPECT_EQ(*f.unver_add, unver);
}

TEST_F(DiagnosticsTest, DriftedYearRewrite) {
  Outcome o = run(cases::kReignClaim, cases::kReignMistral, cases::kReignEvidence);
  ASSERT_FALSE(o.verdict.valid);
  expect_invalid_side(o.flags, true, true);
  ASSERT_EQ(o.flags.drift_witnesses.size(), 1u);
  EXPECT_EQ(o.flags.drift_witnesses[0].rewrite_atom_id, "a0");
  EXPECT_EQ(o.flags.drift_witnesses[0].alignment, "subject_equal");
  // All three rules fire: the year is gone, the yearless variant is
  // entailed, and "some insiders" hedges a clause about the same film.
  ASSERT_EQ(o.flags.loss_witnesses.size(), 3u);
  EXPECT_EQ(o.flags.loss_witnesses[0].rule, "missing_constraint");
  EXPECT_EQ(o.flags.loss_witnesses[0].detail, "temporal_year=2010");
  EXPECT_EQ(o.flags.loss_witnesses[1].rule, "weakened_variant");
  EXPECT_EQ(o.flags.loss_witnesses[2].rule, "hedge");
  EXPECT_EQ(o.flags.loss_witnesses[2].detail, "some in a1");
  // Released-in-2007 is supported; filmed-in-2005 is not.
  EXPECT_EQ(o.flags.supported_added_ids, std::vector<std::string>{"a0"});
}

TEST_F(DiagnosticsTest, WrappedClaimAddsUnverifiedContext) {
  Outcome o = run(cases::kReignClaim, cases::kReignGpt, cases::kReignEvidence);
  ASSERT_TRUE(o.verdict.valid);
  expect_valid_side(o.flags, false, true);
  EXPECT_EQ(o.flags.added_atom_ids, std::vector<std::string>{"a0"});
  EXPECT_TRUE(o.flags.supported_added_ids.empty());
}

TEST_F(DiagnosticsTest, GeneralizedObjectIsScopeLoss) {
  Outcome o = run(cases::kDeskClaim, cases::kDeskLexicalGpt, cases::kDeskEvidence);
  ASSERT_FALSE(o.verdict.valid);
  expect_invalid_side(o.flags, false, true);
  ASSERT_EQ(o.flags.loss_witnesses.size(), 1u);
  EXPECT_EQ(o.flags.loss_witnesses[0].rule, "weakened_variant");
  EXPECT_EQ(o.flags.loss_witnesses[0].detail,
            "object desk -> piece of furniture entailed by a0");
}

TEST_F(DiagnosticsTest, ColloquialRewriteDriftsToEvidence) {
  Outcome o = run(cases::kDeskClaim, cases::kDeskLexicalMistral, cases::kDeskEvidence);
  ASSERT_FALSE(o.verdict.valid);
  expect_invalid_side(o.flags, true, false);
  ASSERT_EQ(o.flags.drift_witnesses.size(), 1u);
  EXPECT_EQ(o.flags.drift_witnesses[0].rewrite_atom_id, "a1");
}

TEST_F(DiagnosticsTest, BlendedDetailsAreUnverified) {
  Outcome o = run(cases::kDeskClaim, cases::kDeskFactmixGpt, cases::kDeskEvidence);
  ASSERT_TRUE(o.verdict.valid);
  expect_valid_side(o.flags, false, true);
  EXPECT_EQ(o.flags.added_atom_ids, std::vector<std::string>{"a1"});
}

TEST_F(DiagnosticsTest, OmissionReplacesClaimWithEvidence) {
  Outcome o = run(cases::kDeskClaim, cases::kDeskOmissionGpt, cases::kDeskEvidence);
  ASSERT_FALSE(o.verdict.valid);
  expect_invalid_side(o.flags, true, false);
  EXPECT_EQ(o.flags.supported_added_ids, std::vector<std::string>{"a0"});
}

// Three rewrites where the lexical baseline sees less than a neural NLI model
// would. The outcomes are frozen here so a change in behavior is noticed.
TEST_F(DiagnosticsTest, BaselineLimits) {
  // "shares its name with a ... television series" is paraphrase, not
  // token overlap, so it is not found supported: EvEnt stays false.
  Outcome a = run(cases::kDeskClaim, cases::kDeskDeseptionGpt, cases::kDeskEvidence);
  ASSERT_TRUE(a.verdict.valid);
  expect_valid_side(a.flags, false, true);
  // The title is the object of "titled", not a subject, so no supported
  // atom aligns with "danger uxb".
  Outcome b = run(cases::kDeskClaim, cases::kDeskDeseptionMistral, cases::kDeskEvidence);
  ASSERT_FALSE(b.verdict.valid);
  expect_invalid_side(b.flags, false, false);
  EXPECT_EQ(b.flags.supported_added_ids, std::vector<std::string>{"a1"});
  // The participle phrase carrying "Danger UXB" is not extracted.
  Outcome c = run(cases::kDeskClaim, cases::kDeskFactmixMistral, cases::kDeskEvidence);
  ASSERT_FALSE(c.verdict.valid);
  expect_invalid_side(c.flags, false, false);
}

TEST_F(DiagnosticsTest, HedgeInAlignedClauseIsScopeLoss) {
  Outcome o = run("The bridge was built in 1932.",
                  "The bridge was possibly built in the 1930s.",
                  "The bridge opened in 1932.");
  ASSERT_FALSE(o.verdict.valid);
  ASSERT_TRUE(o.flags.scope_loss.value_or(false));
  bool hedge = false, missing = false;
  for (const auto& w : o.flags.loss_witnesses) {
    hedge |= w.rule == "hedge";
    missing |= w.rule == "missing_constraint";
  }
  EXPECT_TRUE(hedge);
  EXPECT_TRUE(missing);
}

TEST_F(DiagnosticsTest, AlignmentRules) {
  AtomSet c = extract_or_fallback("Reign Over Me is a film.");
  Atom same{"b0", "reign over me", "was", "", {}, "", ""};
  Atom partial{"b1", "reign over", "was", "", {}, "", ""};
  Atom other{"b2", "the bridge", "was", "", {}, "", ""};
  auto w = diag_.aligned(same, c);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->alignment, "subject_equal");
  w = diag_.aligned(partial, c);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->alignment, "subject_overlap=0.67");
  EXPECT_FALSE(diag_.aligned(other, c).has_value());
}

TEST_F(DiagnosticsTest, AddedAtomsArePreservingNothing) {
  AtomSet c = extract_or_fallback(cases::kReignClaim);
  AtomSet r = extract_or_fallback(cases::kReignGpt);
  EXPECT_EQ(diag_.added_atoms(c, r), std::vector<size_t>{0});
  EXPECT_TRUE(diag_.added_atoms(c, c).empty());
}

TEST_F(DiagnosticsTest, WeakenedVariantsIncludeDroppedModifiers) {
  AtomSet c = extract_or_fallback(cases::kReignClaim);
  auto vs = diag_.weakened_variants(c.atoms[0], AtomSet{});
  bool dropped = false;
  for (const auto& [v, label] : vs) {
    if (v.modifiers.empty() && v.object == c.atoms[0].object) dropped = true;
  }
  EXPECT_TRUE(dropped);
}

// Exactly one side of the flags is set, chosen by the verdict.
TEST_F(DiagnosticsTest, SidesPartitionOnRandomInstances) {
  testing::AtomGen gen(23);
  for (int i = 0; i < 100; ++i) {
    AtomSet c = gen.set(1, 3);
    AtomSet r = gen.set(1, 3);
    if (i % 2 == 0) r.atoms.push_back(c.atoms[0]);
    std::string claim = c.atoms[0].source_sentence;
    std::string rewrite = r.atoms[0].source_sentence;
    std::string evidence = gen.atom("e").source_sentence;
    GateVerdict v = gate_.gate(c, r);
    DiagnosticFlags f = diag_.diagnose({c, r, claim, rewrite, evidence, v});
    EXPECT_EQ(f.ev_drift.has_value(), !v.valid);
    EXPECT_EQ(f.scope_loss.has_value(), !v.valid);
    EXPECT_EQ(f.ev_ent.has_value(), v.valid);
    EXPECT_EQ(f.unver_add.has_value(), v.valid);
    // Witnesses agree with the flags.
    EXPECT_EQ(f.ev_drift.value_or(false), !f.drift_witnesses.empty());
    EXPECT_EQ(f.scope_loss.value_or(false), !f.loss_witnesses.empty());
    // Nothing added: nothing to be supported or unverified. Something added:
    // each added atom is one or the other.
    if (v.valid && f.added_atom_ids.empty()) {
      EXPECT_FALSE(*f.ev_ent);
      EXPECT_FALSE(*f.unver_add);
    }
    if (v.valid && !f.added_atom_ids.empty()) {
      EXPECT_TRUE(*f.ev_ent || *f.unver_add);
    }
  }
}

}  // namespace
}  // namespace vasr

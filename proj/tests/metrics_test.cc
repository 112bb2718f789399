#include <gtest/gtest.h>

#include "vasr/errors.h"
#include "vasr/metrics.h"

namespace vasr {
namespace {

// n attackable outcomes, the first k of which flip the verifier.
std::vector<VerifierOutcome> outcomes(int n, int k) {
  std::vector<VerifierOutcome> out(n);
  for (int i = 0; i < k; ++i) out[i].post_attack = Label::kSupported;
  return out;
}

std::vector<bool> first_valid(int n, int v) {
  std::vector<bool> out(n, false);
  for (int i = 0; i < v; ++i) out[i] = true;
  return out;
}

// Published rows: counts recovered from the percentages over n = 375
// (Gemma-7B) or n = 331 (BERT). Columns are ASR, S-ASR, P-ASR, VASR.
struct Row {
  int n, asr, sasr, pasr, vasr;
  const char* expected[4];
};

TEST(Metrics, PublishedRows) {
  const Row rows[] = {
      {375, 154, 151, 77, 8, {"41.07", "40.27", "20.53", "2.13"}},
      {375, 294, 120, 180, 1, {"78.40", "32.00", "48.00", "0.27"}},
      {331, 165, 69, 96, 0, {"49.85", "20.85", "29.00", "0.00"}},
      {375, 11, 11, 9, 11, {"2.93", "2.93", "2.40", "2.93"}},
      {331, 37, 37, 33, 37, {"11.18", "11.18", "9.97", "11.18"}},
  };
  for (const auto& r : rows) {
    auto o = outcomes(r.n, r.asr);
    std::vector<SurfaceScores> s(r.n);
    for (int i = 0; i < r.n; ++i) {
      s[i].sbert_similarity = i < r.sasr ? 0.9 : 0.3;
      s[i].perplexity = i < r.pasr ? 40.0 : 400.0;
    }
    EXPECT_EQ(compute_asr(o).format(), r.expected[0]);
    EXPECT_EQ(compute_screened_asr(o, s, ScreenKind::kSbert).format(), r.expected[1]);
    EXPECT_EQ(compute_screened_asr(o, s, ScreenKind::kPpl).format(), r.expected[2]);
    EXPECT_EQ(compute_vasr(o, first_valid(r.n, r.vasr)).format(), r.expected[3]);
  }
}

TEST(Metrics, VasrNeverExceedsAsr) {
  auto o = outcomes(10, 3);
  // Valid flags on non-successes are ignored.
  Rate v = compute_vasr(o, std::vector<bool>(10, true));
  EXPECT_EQ(v.numerator, 3);
  EXPECT_EQ(v.denominator, 10);
}

TEST(Metrics, RoundHalfUp) {
  EXPECT_EQ(format_percent(1, 8, 1), "12.5");
  EXPECT_EQ(format_percent(1, 8, 0), "13");
  EXPECT_EQ(format_percent(1, 16, 2), "6.25");
  EXPECT_EQ(format_percent(1, 16, 1), "6.3");
  EXPECT_EQ(format_percent(1, 3, 2), "33.33");
  EXPECT_EQ(format_percent(2, 3, 2), "66.67");
  EXPECT_EQ(format_percent(0, 5, 2), "0.00");
  EXPECT_EQ(format_percent(5, 5, 2), "100.00");
  // 0.285 is not exact in binary; integer arithmetic still rounds up.
  EXPECT_EQ(format_percent(57, 20000, 2), "0.29");
}

TEST(Metrics, Errors) {
  EXPECT_THROW(compute_asr({}), EmptyDenominator);
  std::vector<VerifierOutcome> bad(1);
  bad[0].pre_attack = Label::kSupported;
  EXPECT_THROW(compute_asr(bad), NotAttackable);
  EXPECT_THROW(raw_success(bad[0]), NotAttackable);
  EXPECT_THROW(compute_vasr(outcomes(3, 1), {true}), MisalignedInputs);
  std::vector<SurfaceScores> s(2);
  s[1].sbert_similarity = 0.9;
  try {
    compute_screened_asr(outcomes(2, 1), s, ScreenKind::kSbert, {}, {"x0", "x1"});
    FAIL();
  } catch (const MissingSurfaceScore& e) {
    EXPECT_NE(std::string(e.what()).find("x0"), std::string::npos);
  }
  // A missing score on a non-success is never read.
  s[0].sbert_similarity = 0.9;
  s[1].sbert_similarity.reset();
  EXPECT_EQ(compute_screened_asr(outcomes(2, 1), s, ScreenKind::kSbert).numerator, 1);
}

TEST(Metrics, ScreenBoundsAreInclusive) {
  ScreenThresholds t;
  SurfaceScores s;
  s.sbert_similarity = 0.65;
  s.perplexity = 100.0;
  EXPECT_TRUE(passes_screen(s, ScreenKind::kSbert, t));
  EXPECT_TRUE(passes_screen(s, ScreenKind::kPpl, t));
  s.sbert_similarity = 0.6499;
  s.perplexity = 100.01;
  EXPECT_FALSE(passes_screen(s, ScreenKind::kSbert, t));
  EXPECT_FALSE(passes_screen(s, ScreenKind::kPpl, t));
}

TEST(Metrics, RawSuccessIsAnyNonRefutedLabel) {
  VerifierOutcome o;
  EXPECT_FALSE(raw_success(o));
  o.post_attack = Label::kNotEnoughInfo;
  EXPECT_TRUE(raw_success(o));
  o.post_attack = Label::kSupported;
  EXPECT_TRUE(raw_success(o));
}

TEST(Metrics, LabelNames) {
  for (Label l : {Label::kSupported, Label::kRefuted, Label::kNotEnoughInfo}) {
    EXPECT_EQ(parse_label(label_name(l)), l);
  }
  EXPECT_FALSE(parse_label("true").has_value());
}

}  // namespace
}  // namespace vasr

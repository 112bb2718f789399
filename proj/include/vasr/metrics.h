#ifndef VASR_METRICS_H_
#define VASR_METRICS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vasr {

enum class Label { kSupported, kRefuted, kNotEnoughInfo };

std::string_view label_name(Label l);  // "supported" / "refuted" / "not_enough_info"
std::optional<Label> parse_label(std::string_view s);

struct VerifierOutcome {
  Label pre_attack = Label::kRefuted;
  Label post_attack = Label::kRefuted;
  Label gold = Label::kRefuted;

  bool attackable() const {
    return gold == Label::kRefuted && pre_attack == Label::kRefuted;
  }
};

enum class SurfaceSource { kInputFile, kRemoteService };

std::string_view surface_source_name(SurfaceSource s);

struct SurfaceScores {
  std::optional<double> sbert_similarity;
  std::optional<double> perplexity;
  SurfaceSource source = SurfaceSource::kInputFile;
};

// FV(C', E) != refuted. Throws NotAttackable unless o.attackable().
bool raw_success(const VerifierOutcome& o);

// A rate kept as an exact fraction; percent() and format() round at
// render time only.
struct Rate {
  int64_t numerator = 0;
  int64_t denominator = 0;

  double percent() const;
  // 100 * num / den rounded half-up to `decimals`, e.g. "41.07".
  std::string format(int decimals = 2) const;
};

// 100 * num / den, rounded half-up, using integer arithmetic only.
std::string format_percent(int64_t num, int64_t den, int decimals);

// ASR: raw successes / N. Throws EmptyDenominator for N = 0 and
// NotAttackable for a non-attackable outcome.
Rate compute_asr(const std::vector<VerifierOutcome>& outcomes);

// VASR: raw successes with a valid verdict / N. `valid` is index-aligned
// with `outcomes`; entries for non-successes are ignored. Throws
// MisalignedInputs on length mismatch.
Rate compute_vasr(const std::vector<VerifierOutcome>& outcomes,
                  const std::vector<bool>& valid);

enum class ScreenKind { kSbert, kPpl };

struct ScreenThresholds {
  double sbert_min = 0.65;  // keep similarity >= sbert_min
  double ppl_max = 100.0;   // keep perplexity <= ppl_max
};

// S-ASR / P-ASR. `surfaces` and `ids` are index-aligned with outcomes; a
// raw success without the requested score throws MissingSurfaceScore with
// its id.
Rate compute_screened_asr(const std::vector<VerifierOutcome>& outcomes,
                          const std::vector<SurfaceScores>& surfaces,
                          ScreenKind kind,
                          const ScreenThresholds& thresholds = {},
                          const std::vector<std::string>& ids = {});

bool passes_screen(const SurfaceScores& s, ScreenKind kind,
                   const ScreenThresholds& thresholds);

}  // namespace vasr

#endif  // VASR_METRICS_H_

#include "vasr/metrics.h"

#include "vasr/errors.h"

namespace vasr {

std::string_view label_name(Label l) {
  switch (l) {
    case Label::kSupported:
      return "supported";
    case Label::kRefuted:
      return "refuted";
    case Label::kNotEnoughInfo:
      return "not_enough_info";
  }
  return "refuted";
}

std::optional<Label> parse_label(std::string_view s) {
  if (s == "supported") return Label::kSupported;
  if (s == "refuted") return Label::kRefuted;
  if (s == "not_enough_info") return Label::kNotEnoughInfo;
  return std::nullopt;
}

std::string_view surface_source_name(SurfaceSource s) {
  return s == SurfaceSource::kRemoteService ? "remote_service" : "input_file";
}

bool raw_success(const VerifierOutcome& o) {
  if (!o.attackable()) {
    throw NotAttackable("outcome is not attackable (gold " +
                        std::string(label_name(o.gold)) + ", pre-attack " +
                        std::string(label_name(o.pre_attack)) + ")");
  }
  return o.post_attack != Label::kRefuted;
}

std::string format_percent(int64_t num, int64_t den, int decimals) {
  if (den <= 0) throw EmptyDenominator();
  int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  // round(100 * scale * num / den), half-up, for non-negative num.
  __int128 n = static_cast<__int128>(num) * 100 * scale;
  __int128 q = (2 * n + den) / (2 * static_cast<__int128>(den));
  int64_t v = static_cast<int64_t>(q);
  std::string whole = std::to_string(v / scale);
  if (decimals == 0) return whole;
  std::string frac = std::to_string(v % scale);
  while (static_cast<int>(frac.size()) < decimals) frac.insert(0, "0");
  return whole + "." + frac;
}

double Rate::percent() const {
  if (denominator <= 0) throw EmptyDenominator();
  return 100.0 * static_cast<double>(numerator) /
         static_cast<double>(denominator);
}

std::string Rate::format(int decimals) const {
  return format_percent(numerator, denominator, decimals);
}

Rate compute_asr(const std::vector<VerifierOutcome>& outcomes) {
  if (outcomes.empty()) throw EmptyDenominator();
  Rate r;
  r.denominator = static_cast<int64_t>(outcomes.size());
  for (const auto& o : outcomes) r.numerator += raw_success(o) ? 1 : 0;
  return r;
}

Rate compute_vasr(const std::vector<VerifierOutcome>& outcomes,
                  const std::vector<bool>& valid) {
  if (outcomes.size() != valid.size()) {
    throw MisalignedInputs(outcomes.size(), valid.size());
  }
  if (outcomes.empty()) throw EmptyDenominator();
  Rate r;
  r.denominator = static_cast<int64_t>(outcomes.size());
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (raw_success(outcomes[i]) && valid[i]) ++r.numerator;
  }
  return r;
}

bool passes_screen(const SurfaceScores& s, ScreenKind kind,
                   const ScreenThresholds& t) {
  if (kind == ScreenKind::kSbert) {
    return s.sbert_similarity && *s.sbert_similarity >= t.sbert_min;
  }
  return s.perplexity && *s.perplexity <= t.ppl_max;
}

Rate compute_screened_asr(const std::vector<VerifierOutcome>& outcomes,
                          const std::vector<SurfaceScores>& surfaces,
                          ScreenKind kind, const ScreenThresholds& thresholds,
                          const std::vector<std::string>& ids) {
  if (outcomes.size() != surfaces.size()) {
    throw MisalignedInputs(outcomes.size(), surfaces.size());
  }
  if (outcomes.empty()) throw EmptyDenominator();
  Rate r;
  r.denominator = static_cast<int64_t>(outcomes.size());
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (!raw_success(outcomes[i])) continue;
    const SurfaceScores& s = surfaces[i];
    bool present = kind == ScreenKind::kSbert ? s.sbert_similarity.has_value()
                                              : s.perplexity.has_value();
    if (!present) {
      throw MissingSurfaceScore(i < ids.size() ? ids[i]
                                               : "#" + std::to_string(i));
    }
    if (passes_screen(s, kind, thresholds)) ++r.numerator;
  }
  return r;
}

}  // namespace vasr

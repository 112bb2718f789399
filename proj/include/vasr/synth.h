#ifndef VASR_SYNTH_H_
#define VASR_SYNTH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vasr/dataset.h"
#include "vasr/diagnostics.h"

namespace vasr {

struct SeedClaim {
  std::string id;
  std::string claim;     // false claim
  std::string evidence;  // refuting evidence
};

// Expected diagnostic outcome; unset members are not asserted.
struct FlagExpectation {
  std::optional<bool> ev_drift;
  std::optional<bool> scope_loss;
  std::optional<bool> ev_ent;
  std::optional<bool> unver_add;

  bool matches(const DiagnosticFlags& f) const;
  std::string describe() const;
};

struct SyntheticCase {
  EvaluationInstance instance;
  bool expected_gate = true;
  FlagExpectation expected_flags;
  std::string rule;  // which rule variant produced the rewrite
};

struct SynthResult {
  std::vector<SyntheticCase> cases;
  // Seeds the extractor could not parse.
  std::vector<std::string> unextractable;
  // Seeds the family rule had nothing to act on.
  std::vector<std::string> inapplicable;
};

// Templated seed corpus: refuted claims with fixed evidence. Deterministic;
// ids are "seed-0000", "seed-0001", ...
std::vector<SeedClaim> seed_corpus(size_t n);

// Applies one family rule to every seed. Expectations come from the rule:
//   colloquial  synonym swap, valid, no added atoms
//   deseption   evidence sentence appended, valid, EvEnt
//   factmix     year or object swapped for the evidence one,
//               invalid, EvDrift
//   omission    a year, negation or exclusivity modifier deleted, or the
//               object generalized, invalid, ScopeLoss
//   advadd      fabricated clause appended, valid, UnverAdd
// Draws use a per-seed generator derived from (rng_seed, family, seed id),
// so output does not depend on corpus order.
SynthResult generate_synthetic_attacks(const std::vector<SeedClaim>& seeds,
                                       AttackFamily family, uint64_t rng_seed);

struct SyntheticDatasetOptions {
  std::vector<std::string> verifiers = {"verifier-a", "verifier-b"};
  std::string generator = "rules";
  // When true every instance is attackable and a raw success.
  bool all_raw_success = false;
};

// Spreads `n` instances evenly over the five families (seeds cycle as
// needed) and draws verifier labels from rng_seed.
std::vector<SyntheticCase> synthetic_dataset(
    size_t n, uint64_t rng_seed, const SyntheticDatasetOptions& opts = {});

}  // namespace vasr

#endif  // VASR_SYNTH_H_

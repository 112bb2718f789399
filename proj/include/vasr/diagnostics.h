#ifndef VASR_DIAGNOSTICS_H_
#define VASR_DIAGNOSTICS_H_

#include <optional>
#include <string>
#include <vector>

#include "vasr/atom.h"
#include "vasr/gate.h"
#include "vasr/lexicon.h"

namespace vasr {

struct DriftWitness {
  std::string rewrite_atom_id;
  std::string original_atom_id;  // original subject it aligned with
  std::string alignment;         // "subject_equal" or "subject_overlap=0.67"
};

struct LossWitness {
  std::string original_atom_id;
  std::string rule;    // missing_constraint | weakened_variant | hedge
  std::string detail;  // e.g. "temporal_year=2010", "object desk -> ..."
};

// Flags for one raw success. std::nullopt means not applicable: exactly one
// side (ev_drift/scope_loss for invalid, ev_ent/unver_add for valid) is set.
struct DiagnosticFlags {
  std::optional<bool> ev_drift;
  std::optional<bool> scope_loss;
  std::optional<bool> ev_ent;
  std::optional<bool> unver_add;
  std::vector<std::string> added_atom_ids;      // Delta
  std::vector<std::string> supported_added_ids; // members of Delta with S_E
  std::vector<DriftWitness> drift_witnesses;
  std::vector<LossWitness> loss_witnesses;
};

struct DiagnosticConfig {
  GeneralizationTable generalizations = GeneralizationTable::defaults();
  WeakeningTriggers weakening = WeakeningTriggers::defaults();
  double alignment_overlap = 0.5;
};

struct DiagnosticInput {
  const AtomSet& original;
  const AtomSet& rewrite;
  const std::string& claim;     // original claim text
  const std::string& rewrite_text;
  const std::string& evidence;
  const GateVerdict& verdict;
};

class Diagnostics {
 public:
  explicit Diagnostics(Gate& gate, DiagnosticConfig cfg = {});

  // Indices of rewrite atoms that preserve no original atom.
  std::vector<size_t> added_atoms(const AtomSet& original,
                                  const AtomSet& rewrite);

  // aligned(b, C): subject equality after normalization, or the share of
  // an original subject's words found in b's subject is at least the
  // configured overlap.
  std::optional<DriftWitness> aligned(const Atom& b, const AtomSet& original);

  bool ev_drift(const DiagnosticInput& in,
                std::vector<DriftWitness>* witnesses = nullptr);
  bool scope_loss(const DiagnosticInput& in,
                  std::vector<LossWitness>* witnesses = nullptr);
  bool ev_ent(const DiagnosticInput& in);
  bool unver_add(const DiagnosticInput& in);

  // Applicable side chosen by in.verdict.valid.
  DiagnosticFlags diagnose(const DiagnosticInput& in);

  // Weakened variants of `a`: modifiers dropped (all, or one at a time) and
  // the object generalized via the table or replaced by a rewrite object
  // that is a strict token subset of it. Each variant comes with a label.
  std::vector<std::pair<Atom, std::string>> weakened_variants(
      const Atom& a, const AtomSet& rewrite) const;

 private:
  bool supported(const Atom& b, const std::string& evidence);

  Gate& gate_;
  DiagnosticConfig cfg_;
};

}  // namespace vasr

#endif  // VASR_DIAGNOSTICS_H_

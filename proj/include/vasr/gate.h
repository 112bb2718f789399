#ifndef VASR_GATE_H_
#define VASR_GATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vasr/atom.h"
#include "vasr/constraints.h"
#include "vasr/oracle.h"

namespace vasr {

// What B(a, p) uses as the premise p for a rewrite atom b.
enum class PremiseMode {
  kAtom,      // h(b), the rendered rewrite atom (default)
  kSentence,  // the rewrite sentence b was extracted from
};

std::string_view premise_mode_name(PremiseMode m);  // "atom" / "sentence"
std::optional<PremiseMode> parse_premise_mode(std::string_view s);

struct PairCheck {
  bool passed = false;
  bool entailed = false;
  double entail_score = 0.0;
  bool cons_passed = false;
};

struct PreservationTrace {
  std::string original_atom_id;
  bool preserved = false;
  // Witness b when preserved.
  std::optional<std::string> matched_rewrite_atom_id;
  // Witness entail score when preserved, otherwise the best entail score
  // over all rewrite atoms (none if the rewrite set is empty).
  std::optional<double> entail_score;
  std::optional<bool> cons_passed;
};

struct GateVerdict {
  bool valid = false;
  std::vector<PreservationTrace> traces;
  std::string config_fingerprint;
};

class Gate {
 public:
  explicit Gate(EntailmentOracle& oracle, PremiseMode mode = PremiseMode::kAtom,
                const TriggerTables& triggers = TriggerTables::defaults());

  EntailmentOracle& oracle() { return oracle_; }
  PremiseMode premise_mode() const { return mode_; }
  const TriggerTables& triggers() const { return triggers_; }

  // Hash of (backend identity, threshold, premise mode).
  std::string fingerprint() const;

  // Premise text for rewrite atom b under the configured mode.
  std::string premise_for(const Atom& b) const;

  // B(a, p): entails(premise = p, hypothesis = h(a)) and Cons(a, p).
  PairCheck check_pair(const Atom& a, const Atom& b);

  // Pres(a, C'): first passing b in atom order is the witness.
  PreservationTrace preserves(const Atom& a, const AtomSet& rewrite);

  // H(C, C'): conjunction over original atoms. Throws EmptyOriginal.
  GateVerdict gate(const AtomSet& original, const AtomSet& rewrite);

  // All |A| x |A'| pair checks, row-major, scored in one batch.
  std::vector<std::vector<PairCheck>> check_matrix(const AtomSet& original,
                                                   const AtomSet& rewrite);

 private:
  EntailmentOracle& oracle_;
  PremiseMode mode_;
  TriggerTables triggers_;
};

}  // namespace vasr

#endif  // VASR_GATE_H_

#ifndef VASR_PROMPTS_H_
#define VASR_PROMPTS_H_

#include <string>
#include <string_view>
#include <vector>

#include "vasr/atom.h"
#include "vasr/dataset.h"
#include "vasr/diagnostics.h"
#include "vasr/gate.h"

namespace vasr {

// Heading used in the strategy block, e.g. "Omission-style constraint removal".
std::string_view family_title(AttackFamily f);

// Shared system instruction + input block + strategy instruction, ending in
// a single "Rewritten claim:" line.
std::string attack_prompt(AttackFamily family, std::string_view claim,
                          std::string_view evidence);

struct PromptDocument {
  std::string instance_id;
  AttackFamily family = AttackFamily::kColloquial;
  std::string text;
};

// One prompt per instance, in input order.
std::vector<PromptDocument> emit_attack_prompts(
    const std::vector<EvaluationInstance>& instances, AttackFamily family);

// Repair instruction for an invalid raw success, followed by the claim,
// the rewrite and a summary of the gate trace and diagnostics. Throws
// NotRepairable when the verdict is valid or `raw_successful` is false.
std::string emit_repair_prompt(const EvaluationInstance& inst,
                               const AtomSet& original,
                               const GateVerdict& verdict,
                               const DiagnosticFlags& flags,
                               bool raw_successful);

}  // namespace vasr

#endif  // VASR_PROMPTS_H_

#ifndef VASR_DATASET_H_
#define VASR_DATASET_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vasr/atom.h"
#include "vasr/metrics.h"

namespace vasr {

enum class AttackFamily { kColloquial, kDeseption, kFactmix, kOmission, kAdvadd };

inline constexpr AttackFamily kAllFamilies[] = {
    AttackFamily::kColloquial, AttackFamily::kDeseption, AttackFamily::kFactmix,
    AttackFamily::kOmission, AttackFamily::kAdvadd};

std::string_view family_name(AttackFamily f);
std::optional<AttackFamily> parse_family(std::string_view s);

struct EvaluationInstance {
  std::string instance_id;
  std::string claim;
  std::string evidence;
  std::string rewrite;
  Label gold = Label::kRefuted;
  // Ordered by verifier name.
  std::map<std::string, VerifierOutcome> verifiers;
  std::string generator;
  AttackFamily family = AttackFamily::kColloquial;
  SurfaceScores surface;
  std::optional<AtomSet> claim_atoms;
  std::optional<AtomSet> rewrite_atoms;
};

// True when some verifier has the instance attackable and raw-successful.
bool any_raw_success(const EvaluationInstance& inst);

struct Dataset {
  std::vector<EvaluationInstance> instances;
  std::string hash;  // fnv1a64 over the raw input bytes
  // Attackable count per verifier (gold refuted and pre-attack refuted).
  std::map<std::string, size_t> attackable;
};

// One record of the input JSONL schema. `line` only labels errors.
EvaluationInstance parse_instance(const nlohmann::json& record, int line = 0);
nlohmann::json instance_to_json(const EvaluationInstance& inst);

// Parses a whole JSONL document. Blank lines are skipped. Throws
// SchemaError (with line number and field path) and DuplicateInstanceId.
// Records sharing a claim must carry identical evidence.
Dataset parse_dataset(std::string_view jsonl);
Dataset load_dataset(const std::string& path);

std::string dataset_to_jsonl(const std::vector<EvaluationInstance>& instances);

}  // namespace vasr

#endif  // VASR_DATASET_H_

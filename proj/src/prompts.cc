#include "vasr/prompts.h"

#include <cstdio>

#include "vasr/errors.h"

namespace vasr {
namespace {

constexpr std::string_view kSystem =
    "System instruction\n"
    "You are an expert in adversarial evaluation for automated fact "
    "verification.\n"
    "\n"
    "You will be given an Original Claim, and fixed Evidence.\n"
    "Your task is to rewrite the claim according to the specified attack "
    "strategy.\n"
    "\n"
    "General rules:\n"
    "- Output exactly ONE rewritten claim.\n"
    "- Output a single sentence whenever possible.\n"
    "- Do not output explanations, labels, or prefixes.\n"
    "- Keep the claim fluent, natural, and fact-checkable.\n"
    "- Avoid copying the original claim or an evidence sentence verbatim.\n"
    "- The evidence is fixed and must not be rewritten.\n";

struct Strategy {
  std::string_view title;
  std::string_view instruction;
  std::string_view constraints;
};

// The advadd block is the published template; the other four follow its
// layout.
Strategy strategy(AttackFamily f) {
  switch (f) {
    case AttackFamily::kColloquial:
      return {
          "Colloquial/Lexical rewriting",
          "Rewrite the original claim using lexical, paraphrastic, or "
          "conversational-style transformations. Change the wording, register, "
          "or tone while keeping the same entities, relations, and constraints. "
          "It should read like something a person would say in casual speech or "
          "write in an informal post.",
          "- Preserve every entity, number, date, and negation of the original "
          "claim.\n"
          "- Change the surface form only; do not add or remove facts.\n"
          "- Do not copy wording from the evidence.\n"
          "- Do not correct the original claim.\n"
          "- Keep the rewritten claim as one fluent declarative sentence.\n"};
    case AttackFamily::kDeseption:
      return {
          "DeSePtion-style complex rewriting",
          "Rewrite the original claim as a more complex statement that "
          "introduces multiple propositions, temporal reasoning, entity "
          "ambiguity, or lexical variation. The original assertion should "
          "remain recoverable from the rewritten claim. Extra propositions may "
          "draw on the fixed evidence or on general background knowledge.",
          "- Preserve the original claim's main assertion.\n"
          "- Combine it with at least one additional proposition.\n"
          "- Do not correct the original claim.\n"
          "- Do not state the verdict or hint that the claim is false.\n"
          "- Keep the rewritten claim as one fluent declarative sentence.\n"};
    case AttackFamily::kFactmix:
      return {
          "GEM-style fact mixing",
          "Rewrite the original claim by blending entities, relations, or facts "
          "from different contexts. Mix a fact drawn from the fixed evidence "
          "into the claim so that the result reads as a single coherent "
          "assertion about the same subject.",
          "- Keep the subject of the original claim.\n"
          "- Blend in exactly one entity, relation, or fact from another "
          "context.\n"
          "- Do not copy an evidence sentence verbatim.\n"
          "- Do not add caveats or truth-status labels.\n"
          "- Keep the rewritten claim as one fluent declarative sentence.\n"};
    case AttackFamily::kOmission:
      return {
          "Omission-style constraint removal",
          "Rewrite the original claim by removing or weakening one salient "
          "factual constraint, such as a date, number, location, negation, or "
          "exclusivity term. The rest of the claim should stay as close to the "
          "original as possible.",
          "- Remove or weaken exactly one truth-critical constraint.\n"
          "- Keep the remaining entities and relations unchanged.\n"
          "- Do not introduce new facts.\n"
          "- Do not correct the original claim.\n"
          "- Keep the rewritten claim as one fluent declarative sentence.\n"};
    case AttackFamily::kAdvadd:
      return {
          "Add.Unver./AdvAdd-style unsupported addition",
          "Rewrite the original claim by preserving its main assertion and "
          "adding exactly one plausible auxiliary detail. The added detail "
          "should be related to the original claim, but it should not be "
          "directly stated or explicitly entailed by the fixed evidence. It "
          "should sound like a normal background detail that would require "
          "additional verification beyond the provided evidence.",
          "- Preserve the original claim's main assertion.\n"
          "- Add exactly one minor auxiliary detail.\n"
          "- Do not copy the added detail from the evidence.\n"
          "- Do not recombine multiple evidence facts; that belongs to fact "
          "mixing.\n"
          "- Do not correct the original claim.\n"
          "- Keep the rewritten claim as one fluent declarative sentence.\n"};
  }
  return strategy(AttackFamily::kAdvadd);
}

constexpr std::string_view kRepair =
    "Edit the invalid rewrite directly, using the original claim as the "
    "semantic anchor and the validity diagnosis as repair guidance.\n"
    "Minimally fix the diagnosed failure while preserving the rewrite's "
    "wording and structure.\n"
    "Restore any changed or missing truth-critical constraint, including "
    "entities, relations, numbers, dates, negation, exclusivity terms, roles, "
    "locations, and modifiers.\n"
    "Do not correct toward the evidence, replace the attacked proposition with "
    "evidence-supported facts, or add caveats or truth-status labels.\n"
    "Return one declarative sentence as JSON:\n"
    "{\"repair_claim\": \"...\"}.\n";

std::string score_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string_view family_title(AttackFamily f) { return strategy(f).title; }

std::string attack_prompt(AttackFamily family, std::string_view claim,
                          std::string_view evidence) {
  Strategy s = strategy(family);
  std::string out(kSystem);
  out += "\nInput\n";
  out += "Original Claim: " + std::string(claim) + "\n";
  out += "Evidence: " + std::string(evidence) + "\n";
  out += "\nStrategy instruction: " + std::string(s.title) + "\n";
  out += std::string(s.instruction) + "\n";
  out += "\nImportant constraints:\n";
  out += s.constraints;
  out += "\nRewritten claim:\n";
  return out;
}

std::vector<PromptDocument> emit_attack_prompts(
    const std::vector<EvaluationInstance>& instances, AttackFamily family) {
  std::vector<PromptDocument> out;
  out.reserve(instances.size());
  for (const auto& inst : instances) {
    out.push_back({inst.instance_id, family,
                   attack_prompt(family, inst.claim, inst.evidence)});
  }
  return out;
}

std::string emit_repair_prompt(const EvaluationInstance& inst,
                               const AtomSet& original,
                               const GateVerdict& verdict,
                               const DiagnosticFlags& flags,
                               bool raw_successful) {
  if (verdict.valid) throw NotRepairable("rewrite passes the gate");
  if (!raw_successful) throw NotRepairable("rewrite is not a raw success");

  std::string out(kRepair);
  out += "\nOriginal claim: " + inst.claim + "\n";
  out += "Invalid rewrite: " + inst.rewrite + "\n";
  out += "\nDiagnosis:\n";
  for (const PreservationTrace& t : verdict.traces) {
    if (t.preserved) continue;
    std::string rendered;
    for (const Atom& a : original.atoms) {
      if (a.atom_id == t.original_atom_id) rendered = render_atom(a);
    }
    out += "- not preserved: claim atom " + t.original_atom_id + " \"" + rendered + "\"";
    if (t.entail_score) {
      out += " (best entailment " + score_text(*t.entail_score);
      if (t.cons_passed && !*t.cons_passed) out += ", constraint mismatch";
      out += ")";
    }
    out += "\n";
  }
  for (const LossWitness& w : flags.loss_witnesses) {
    if (w.rule == "missing_constraint") {
      out += "- missing constraint on claim atom " + w.original_atom_id + ": " + w.detail +
             "\n";
    } else if (w.rule == "weakened_variant") {
      out += "- weakened on claim atom " + w.original_atom_id + ": " + w.detail + "\n";
    } else {
      out += "- hedged on claim atom " + w.original_atom_id + ": " + w.detail + "\n";
    }
  }
  for (const DriftWitness& w : flags.drift_witnesses) {
    out += "- evidence-supported replacement: rewrite atom " +
           w.rewrite_atom_id + " in place of claim atom " + w.original_atom_id + "\n";
  }
  auto flag = [](const std::optional<bool>& f) {
    return f ? (*f ? "yes" : "no") : "n/a";
  };
  out += std::string("- EvDrift: ") + flag(flags.ev_drift) +
         "; ScopeLoss: " + flag(flags.scope_loss) + "\n";
  out += "\nRepaired claim (JSON):\n";
  return out;
}

}  // namespace vasr

#include "vasr/dataset.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "vasr/atom_io.h"
#include "vasr/errors.h"
#include "vasr/oracle.h"
#include "vasr/text.h"

namespace vasr {
namespace {

using nlohmann::json;

std::string require_string(const json& obj, const std::string& key,
                           const std::string& path = "") {
  const std::string field = path.empty() ? key : path + "." + key;
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(field, "missing field");
  if (!it->is_string()) throw SchemaError(field, "expected string");
  return it->get<std::string>();
}

Label require_label(const json& obj, const std::string& key,
                    const std::string& path = "") {
  std::string s = require_string(obj, key, path);
  auto l = parse_label(s);
  if (!l) {
    throw SchemaError(path.empty() ? key : path + "." + key,
                      "label must be supported, refuted or not_enough_info, "
                      "got '" + s + "'");
  }
  return *l;
}

std::optional<double> optional_number(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw SchemaError(key, "expected number");
  double d = it->get<double>();
  if (!std::isfinite(d)) throw SchemaError(key, "non-finite number");
  return d;
}

}  // namespace

std::string_view family_name(AttackFamily f) {
  switch (f) {
    case AttackFamily::kColloquial:
      return "colloquial";
    case AttackFamily::kDeseption:
      return "deseption";
    case AttackFamily::kFactmix:
      return "factmix";
    case AttackFamily::kOmission:
      return "omission";
    case AttackFamily::kAdvadd:
      return "advadd";
  }
  return "colloquial";
}

std::optional<AttackFamily> parse_family(std::string_view s) {
  for (AttackFamily f : kAllFamilies) {
    if (family_name(f) == s) return f;
  }
  return std::nullopt;
}

bool any_raw_success(const EvaluationInstance& inst) {
  for (const auto& [name, o] : inst.verifiers) {
    if (o.attackable() && raw_success(o)) return true;
  }
  return false;
}

EvaluationInstance parse_instance(const json& rec, int line) {
  try {
    if (!rec.is_object()) throw SchemaError("", "expected JSON object");
    EvaluationInstance inst;
    inst.instance_id = require_string(rec, "instance_id");
    if (inst.instance_id.empty()) {
      throw SchemaError("instance_id", "must be non-empty");
    }
    inst.claim = require_string(rec, "claim");
    inst.evidence = require_string(rec, "evidence");
    inst.rewrite = require_string(rec, "rewrite");
    inst.gold = require_label(rec, "gold_label");
    inst.generator = require_string(rec, "generator");
    std::string fam = require_string(rec, "attack_family");
    auto f = parse_family(fam);
    if (!f) {
      throw SchemaError("attack_family", "unknown attack family '" + fam + "'");
    }
    inst.family = *f;

    auto vit = rec.find("verifiers");
    if (vit == rec.end()) throw SchemaError("verifiers", "missing field");
    if (!vit->is_object() || vit->empty()) {
      throw SchemaError("verifiers", "expected non-empty object");
    }
    for (const auto& [name, v] : vit->items()) {
      std::string path = "verifiers." + name;
      if (!v.is_object()) throw SchemaError(path, "expected object");
      VerifierOutcome o;
      o.gold = inst.gold;
      o.pre_attack = require_label(v, "pre_attack", path);
      o.post_attack = require_label(v, "post_attack", path);
      inst.verifiers.emplace(name, o);
    }

    inst.surface.sbert_similarity = optional_number(rec, "sbert");
    if (inst.surface.sbert_similarity &&
        std::fabs(*inst.surface.sbert_similarity) > 1.0) {
      throw SchemaError("sbert", "similarity outside [-1, 1]");
    }
    inst.surface.perplexity = optional_number(rec, "ppl");
    if (inst.surface.perplexity && *inst.surface.perplexity <= 0.0) {
      throw SchemaError("ppl", "perplexity must be positive");
    }
    if (auto it = rec.find("claim_atoms"); it != rec.end()) {
      inst.claim_atoms = ingest_external_atoms(*it, "claim_atoms");
      if (inst.claim_atoms->empty()) {
        throw SchemaError("claim_atoms", "must contain at least one atom");
      }
    }
    if (auto it = rec.find("rewrite_atoms"); it != rec.end()) {
      inst.rewrite_atoms = ingest_external_atoms(*it, "rewrite_atoms");
    }
    return inst;
  } catch (const SchemaError& e) {
    if (e.line() != 0 || line == 0) throw;
    throw SchemaError(e.field_path(), e.message(), line);
  }
}

json instance_to_json(const EvaluationInstance& inst) {
  json j;
  j["instance_id"] = inst.instance_id;
  j["claim"] = inst.claim;
  j["evidence"] = inst.evidence;
  j["rewrite"] = inst.rewrite;
  j["gold_label"] = std::string(label_name(inst.gold));
  j["generator"] = inst.generator;
  j["attack_family"] = std::string(family_name(inst.family));
  json v = json::object();
  for (const auto& [name, o] : inst.verifiers) {
    v[name] = {{"pre_attack", std::string(label_name(o.pre_attack))},
               {"post_attack", std::string(label_name(o.post_attack))}};
  }
  j["verifiers"] = v;
  if (inst.surface.sbert_similarity) j["sbert"] = *inst.surface.sbert_similarity;
  if (inst.surface.perplexity) j["ppl"] = *inst.surface.perplexity;
  if (inst.claim_atoms) j["claim_atoms"] = atoms_to_json(*inst.claim_atoms)["atoms"];
  if (inst.rewrite_atoms) j["rewrite_atoms"] = atoms_to_json(*inst.rewrite_atoms)["atoms"];
  return j;
}

Dataset parse_dataset(std::string_view jsonl) {
  Dataset ds;
  ds.hash = hex64(fnv1a64(jsonl));
  std::map<std::string, int> seen_ids;
  // normalized claim -> (evidence, first line)
  std::map<std::string, std::pair<std::string, int>> evidence_by_claim;

  std::istringstream in{std::string(jsonl)};
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(text);
    } catch (const json::parse_error& e) {
      throw SchemaError("", std::string("malformed JSON: ") + e.what(), line);
    }
    EvaluationInstance inst = parse_instance(rec, line);
    if (!seen_ids.emplace(inst.instance_id, line).second) {
      throw DuplicateInstanceId(inst.instance_id);
    }
    std::string key = normalize_text(inst.claim);
    auto [it, fresh] = evidence_by_claim.emplace(
        key, std::make_pair(inst.evidence, line));
    if (!fresh && it->second.first != inst.evidence) {
      throw SchemaError("evidence",
                        "differs from line " + std::to_string(it->second.second) +
                            " for the same claim",
                        line);
    }
    for (const auto& [name, o] : inst.verifiers) {
      ds.attackable[name] += o.attackable() ? 1 : 0;
    }
    ds.instances.push_back(std::move(inst));
  }
  return ds;
}

Dataset load_dataset(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw SchemaError("", "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_dataset(ss.str());
}

std::string dataset_to_jsonl(const std::vector<EvaluationInstance>& instances) {
  std::string out;
  for (const auto& inst : instances) {
    out += instance_to_json(inst).dump();
    out += '\n';
  }
  return out;
}

}  // namespace vasr

#include "vasr/atom_io.h"

#include <cmath>
#include <fstream>

#include "vasr/errors.h"
#include "vasr/text.h"

namespace vasr {
namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key,
                    const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

std::string require_string(const json& obj, const std::string& key,
                           const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected string");
  return v.get<std::string>();
}

std::string value_text(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer() || v.is_number_unsigned()) {
    return std::to_string(v.get<long long>());
  }
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (!std::isfinite(d)) throw SchemaError(path, "non-finite number");
    return canonical_number(d);
  }
  throw SchemaError(path, "expected string or number");
}

Modifier parse_modifier(const json& m, const std::string& path) {
  if (!m.is_object()) throw SchemaError(path, "expected object");
  std::string kind_text = require_string(m, "kind", path);
  auto kind = parse_kind(kind_text);
  if (!kind) {
    throw SchemaError(path + ".kind", "unknown modifier kind '" + kind_text + "'");
  }
  std::string raw_value = value_text(require(m, "value", path), path + ".value");
  auto canon = canonicalize_value(*kind, raw_value);
  if (!canon) {
    throw SchemaError(path + ".value", "invalid " + kind_text + " value '" +
                                           raw_value + "'");
  }
  std::string raw;
  if (auto it = m.find("raw"); it != m.end()) {
    if (!it->is_string()) throw SchemaError(path + ".raw", "expected string");
    raw = it->get<std::string>();
  }
  return Modifier{*kind, *canon, raw};
}

}  // namespace

AtomSet ingest_external_atoms(const json& atoms, const std::string& path) {
  if (!atoms.is_array()) throw SchemaError(path, "expected array");
  AtomSet set;
  set.origin = AtomOrigin::kExternalSupplied;
  for (size_t i = 0; i < atoms.size(); ++i) {
    std::string ap = path + "[" + std::to_string(i) + "]";
    const json& rec = atoms[i];
    if (!rec.is_object()) throw SchemaError(ap, "expected object");
    Atom a;
    a.atom_id = "a" + std::to_string(i);
    a.subject = normalize_text(require_string(rec, "subject", ap));
    a.relation = normalize_text(require_string(rec, "relation", ap));
    a.object = normalize_text(require_string(rec, "object", ap));
    if (auto it = rec.find("modifiers"); it != rec.end()) {
      if (!it->is_array()) throw SchemaError(ap + ".modifiers", "expected array");
      for (size_t j = 0; j < it->size(); ++j) {
        insert_modifier(a.modifiers,
                        parse_modifier((*it)[j], ap + ".modifiers[" +
                                                     std::to_string(j) + "]"));
      }
    }
    if (a.subject.empty()) throw SchemaError(ap + ".subject", "empty after normalization");
    if (a.relation.empty()) throw SchemaError(ap + ".relation", "empty after normalization");
    set.atoms.push_back(std::move(a));
  }
  return set;
}

ExternalAtomRecord parse_atoms_record(const json& record) {
  if (!record.is_object()) throw SchemaError("$", "expected object");
  ExternalAtomRecord out;
  out.claim_id = require_string(record, "claim_id", "$");
  out.atoms = ingest_external_atoms(require(record, "atoms", "$"), "atoms");
  return out;
}

std::vector<ExternalAtomRecord> load_atoms_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  std::vector<ExternalAtomRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SchemaError("$", std::string("invalid JSON: ") + e.what(), lineno);
    }
    try {
      out.push_back(parse_atoms_record(j));
    } catch (const SchemaError& e) {
      throw SchemaError(e.field_path(), e.message(), lineno);
    }
  }
  return out;
}

json modifier_to_json(const Modifier& m) {
  return json{{"kind", std::string(kind_name(m.kind))},
              {"value", m.value},
              {"raw", m.raw}};
}

json atom_to_json(const Atom& atom) {
  json mods = json::array();
  for (const auto& m : atom.modifiers) mods.push_back(modifier_to_json(m));
  return json{{"atom_id", atom.atom_id},
              {"subject", atom.subject},
              {"relation", atom.relation},
              {"object", atom.object},
              {"modifiers", mods},
              {"source_sentence", atom.source_sentence}};
}

json atoms_to_json(const AtomSet& set) {
  json arr = json::array();
  for (const auto& a : set.atoms) arr.push_back(atom_to_json(a));
  return json{{"origin", std::string(origin_name(set.origin))},
              {"fallback", set.fallback},
              {"atoms", arr}};
}

}  // namespace vasr

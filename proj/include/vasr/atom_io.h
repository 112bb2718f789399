#ifndef VASR_ATOM_IO_H_
#define VASR_ATOM_IO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "vasr/atom.h"

namespace vasr {

// Builds an AtomSet (origin external_supplied) from a JSON array of atom
// records: [{"subject", "relation", "object", "modifiers": [{"kind",
// "value", "raw"}]}]. "modifiers" and "raw" may be omitted. Values are
// canonicalized ("March" -> "3" for temporal_month, 2010 -> "2010").
// Throws SchemaError whose field path starts with `path`, e.g.
// "atoms[0].relation".
AtomSet ingest_external_atoms(const nlohmann::json& atoms,
                              const std::string& path = "atoms");

struct ExternalAtomRecord {
  std::string claim_id;
  AtomSet atoms;
};

// One line of the atoms JSONL format: {"claim_id": ..., "atoms": [...]}.
ExternalAtomRecord parse_atoms_record(const nlohmann::json& record);

// Reads an atoms JSONL file. SchemaError carries the 1-based line number.
std::vector<ExternalAtomRecord> load_atoms_jsonl(const std::string& path);

nlohmann::json modifier_to_json(const Modifier& m);
nlohmann::json atom_to_json(const Atom& atom);
nlohmann::json atoms_to_json(const AtomSet& set);

}  // namespace vasr

#endif  // VASR_ATOM_IO_H_

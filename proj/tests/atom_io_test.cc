#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "vasr/atom_io.h"
#include "vasr/errors.h"

namespace vasr {
namespace {

using nlohmann::json;

TEST(AtomIo, IngestCanonicalizesValues) {
  json atoms = json::parse(R"([
    {"subject": "Kate  Winslet", "relation": "Won", "object": "the Oscar",
     "modifiers": [{"kind": "temporal_month", "value": "March", "raw": "March"},
                   {"kind": "temporal_year", "value": 2010}]},
    {"subject": "it", "relation": "was released", "object": ""}
  ])");
  AtomSet s = ingest_external_atoms(atoms);
  EXPECT_EQ(s.origin, AtomOrigin::kExternalSupplied);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.atoms[0].atom_id, "a0");
  EXPECT_EQ(s.atoms[0].subject, "kate winslet");
  EXPECT_EQ(s.atoms[0].relation, "won");
  ASSERT_EQ(s.atoms[0].modifiers.size(), 2u);
  EXPECT_EQ(s.atoms[0].modifiers[0].value, "3");
  EXPECT_EQ(s.atoms[0].modifiers[1].value, "2010");
  EXPECT_EQ(s.atoms[1].object, "");
}

void expect_path(const json& atoms, const std::string& path) {
  try {
    ingest_external_atoms(atoms, "claim_atoms");
    FAIL() << "expected SchemaError at " << path;
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.field_path(), path) << e.what();
  }
}

TEST(AtomIo, ErrorsCarryFieldPaths) {
  expect_path(json::object(), "claim_atoms");
  expect_path(json::parse(R"([{"relation": "r", "object": ""}])"),
              "claim_atoms[0].subject");
  expect_path(json::parse(R"([{"subject": "s", "relation": "  ", "object": ""}])"),
              "claim_atoms[0].relation");
  expect_path(json::parse(
                  R"([{"subject": "s", "relation": "r", "object": "",
                       "modifiers": [{"kind": "colour", "value": "red"}]}])"),
              "claim_atoms[0].modifiers[0].kind");
  expect_path(json::parse(
                  R"([{"subject": "s", "relation": "r", "object": "",
                       "modifiers": [{"kind": "temporal_month", "value": "13"}]}])"),
              "claim_atoms[0].modifiers[0].value");
}

TEST(AtomIo, JsonRoundTrip) {
  json atoms = json::parse(R"([
    {"subject": "s", "relation": "r", "object": "o",
     "modifiers": [{"kind": "negation", "value": "not", "raw": "not"}]}])");
  AtomSet a = ingest_external_atoms(atoms);
  json out = atoms_to_json(a);
  EXPECT_EQ(out["origin"], "external_supplied");
  AtomSet b = ingest_external_atoms(out["atoms"]);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.atoms[0].modifiers, a.atoms[0].modifiers);
  EXPECT_EQ(b.atoms[0].object, "o");
}

TEST(AtomIo, JsonlFileReportsLineNumbers) {
  auto path = std::filesystem::temp_directory_path() / "vasr_atoms.jsonl";
  {
    std::ofstream f(path);
    f << R"({"claim_id": "c1", "atoms": [{"subject": "s", "relation": "r", "object": ""}]})"
      << "\n\n"
      << R"({"claim_id": "c2", "atoms": [{"subject": "s", "object": ""}]})"
      << "\n";
  }
  try {
    load_atoms_jsonl(path.string());
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.field_path(), "atoms[0].relation");
  }
  {
    std::ofstream f(path);
    f << R"({"claim_id": "c1", "atoms": []})" << "\n";
  }
  auto recs = load_atoms_jsonl(path.string());
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].claim_id, "c1");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace vasr

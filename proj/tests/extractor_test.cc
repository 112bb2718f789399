#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>

#include "json.hpp"
#include "vasr/atom.h"
#include "vasr/atom_io.h"
#include "vasr/constraints.h"
#include "vasr/errors.h"
#include "vasr/extractor.h"
#include "vasr/text.h"

namespace vasr {
namespace {

using nlohmann::json;

std::set<std::string> modifier_union(const AtomSet& s) {
  std::set<std::string> out;
  for (const auto& a : s.atoms) {
    for (const auto& m : a.modifiers) {
      out.insert(std::string(kind_name(m.kind)) + "=" + m.value);
    }
  }
  return out;
}

TEST(Extractor, ReignOverMeClaim) {
  AtomSet s = extract_atoms_heuristic("Reign Over Me is an American film made in 2010.");
  ASSERT_EQ(s.size(), 1u);
  const Atom& a = s.atoms[0];
  EXPECT_EQ(a.subject, "reign over me");
  EXPECT_EQ(a.relation, "is");
  EXPECT_EQ(a.object, "american film");
  ASSERT_EQ(a.modifiers.size(), 1u);
  EXPECT_EQ(a.modifiers[0].kind, ModifierKind::kTemporalYear);
  EXPECT_EQ(a.modifiers[0].value, "2010");
  EXPECT_EQ(render_atom(a), "reign over me is american film in 2010");
}

TEST(Extractor, DeskClaim) {
  AtomSet s = extract_atoms_heuristic("Danger UXB is a desk.");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.atoms[0].subject, "danger uxb");
  EXPECT_EQ(s.atoms[0].relation, "is");
  EXPECT_EQ(s.atoms[0].object, "desk");
  EXPECT_TRUE(s.atoms[0].modifiers.empty());
  EXPECT_EQ(render_atom(s.atoms[0]), "danger uxb is desk");
}

TEST(Extractor, HandAnnotatedFixture) {
  std::ifstream in(std::string(VASR_TESTDATA) + "/extract_fixture.jsonl");
  ASSERT_TRUE(in);
  std::string line;
  int n = 0, exact = 0;
  while (std::getline(in, line)) {
    json j = json::parse(line);
    std::string text = j["text"];
    std::set<std::string> expected;
    for (const auto& m : j["mods"]) expected.insert(m.get<std::string>());
    AtomSet s = extract_atoms_heuristic(text);
    ++n;
    auto got = modifier_union(s);
    if (got == expected) ++exact;
    EXPECT_EQ(got, expected) << text;
  }
  EXPECT_EQ(n, 50);
  EXPECT_EQ(exact, 50);
}

TEST(Extractor, RelativeClauseThenMainPredicate) {
  AtomSet s = extract_atoms_heuristic(
      "The album, which was released in 2004, sold only 3 million copies.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.atoms[0].relation, "was released");
  EXPECT_EQ(s.atoms[1].subject, "album");
  EXPECT_EQ(s.atoms[1].relation, "sold");
  EXPECT_EQ(s.atoms[1].object, "copies");
  // Each atom keeps only its own clause's constraints.
  EXPECT_EQ(modifier_union({{s.atoms[0]}}),
            (std::set<std::string>{"temporal_year=2004"}));
  EXPECT_EQ(modifier_union({{s.atoms[1]}}),
            (std::set<std::string>{"exclusivity=only", "quantity=3000000"}));
}

TEST(Extractor, CoordinatedVerbPhrase) {
  AtomSet s = extract_atoms_heuristic("She wrote the novel and directed the film.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.atoms[1].subject, "she");
  EXPECT_EQ(s.atoms[1].relation, "directed");
  EXPECT_EQ(s.atoms[1].object, "film");
}

TEST(Extractor, ParticiplePhraseOnObject) {
  AtomSet s = extract_atoms_heuristic(
      "Danger UXB is a desk used by the Royal Engineers.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.atoms[1].subject, "desk");
  EXPECT_EQ(s.atoms[1].relation, "used by");
  EXPECT_EQ(s.atoms[1].object, "royal engineers");
}

TEST(Extractor, PronounResolvesAcrossSentences) {
  AtomSet s = extract_atoms_heuristic("Reign Over Me is a film. It was made in 2010.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.atoms[1].subject, "reign over me");
  EXPECT_EQ(s.atoms[1].source_sentence, "It was made in 2010.");
}

TEST(Extractor, DoSupportKeepsMainVerb) {
  AtomSet s = extract_atoms_heuristic("Kate Winslet did not win the Academy Award.");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.atoms[0].relation, "did win");
  EXPECT_EQ(s.atoms[0].object, "academy award");
}

TEST(Extractor, PlaceAfterVerbIsNotTheObject) {
  AtomSet s = extract_atoms_heuristic("Halcyon Works was founded in Dublin in 1975.");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.atoms[0].object, "");
}

TEST(Extractor, EmptyExtractionAndFallback) {
  EXPECT_THROW(extract_atoms_heuristic("Hello there!"), ExtractionEmpty);
  AtomSet f = extract_or_fallback("Hello there, in 1999!");
  EXPECT_TRUE(f.fallback);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.atoms[0].subject, "it");
  EXPECT_EQ(f.atoms[0].relation, "asserts");
  EXPECT_EQ(f.atoms[0].object, "hello there, in 1999");
  EXPECT_EQ(modifier_union(f), (std::set<std::string>{"temporal_year=1999"}));
}

TEST(Extractor, DeterministicAndEvidenceFree) {
  const std::string claim =
      "Anthony Andrews, known for his role in the 1979 ITV series Danger UXB, "
      "appeared as a desk officer in the Royal Engineers.";
  json a = atoms_to_json(extract_atoms_heuristic(claim));
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(atoms_to_json(extract_atoms_heuristic(claim)), a);
  }
}

TEST(MonthTable, NamesAndAbbreviations) {
  const char* names[] = {"january", "february", "march",     "april",
                         "may",     "june",     "july",      "august",
                         "september", "october", "november", "december"};
  for (int i = 0; i < 12; ++i) {
    std::string name = names[i];
    std::string abbr = name.substr(0, 3);
    std::string title = name;
    title[0] = static_cast<char>(std::toupper(title[0]));
    EXPECT_EQ(month_index(name), i + 1);
    EXPECT_EQ(month_index(abbr), i + 1) << abbr;
    EXPECT_EQ(month_name(i + 1), name);
    EXPECT_EQ(canonicalize_value(ModifierKind::kTemporalMonth, title),
              std::to_string(i + 1));
    EXPECT_EQ(canonicalize_value(ModifierKind::kTemporalMonth, abbr),
              std::to_string(i + 1));
  }
}

// Randomly built atoms: re-parsing the rendering recovers the modifiers.
TEST(RenderAtom, RandomRoundTrip) {
  std::mt19937_64 rng(20240601);
  auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };
  const char* subjects[] = {"the bridge", "kate winslet", "danger uxb", "the album"};
  const char* relations[] = {"is", "was released", "did win", "sold", "was built"};
  const char* objects[] = {"", "desk", "american film", "academy award", "copies"};
  const char* places[] = {"dublin", "new york", "paris"};
  int recovered = 0;
  for (int t = 0; t < 20; ++t) {
    Atom a{"a0", subjects[pick(4)], relations[pick(5)], objects[pick(5)], {}, "", ""};
    if (pick(2)) insert_modifier(a.modifiers, {ModifierKind::kNegation, pick(2) ? "not" : "never", ""});
    if (pick(2)) insert_modifier(a.modifiers, {ModifierKind::kExclusivity, "only", ""});
    if (pick(2)) insert_modifier(a.modifiers, {ModifierKind::kQuantity, std::to_string(1 + pick(5000000)), ""});
    if (pick(3) == 0) insert_modifier(a.modifiers, {ModifierKind::kComparison, pick(2) ? "more than" : "at least", ""});
    if (pick(3) == 0) insert_modifier(a.modifiers, {ModifierKind::kOrdinal, std::to_string(1 + pick(20)), ""});
    int year = 1900 + static_cast<int>(pick(120));
    int month = 1 + static_cast<int>(pick(12));
    switch (pick(4)) {
      case 0: {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, 1 + static_cast<int>(pick(28)));
        insert_modifier(a.modifiers, {ModifierKind::kTemporalDate, buf, ""});
        insert_modifier(a.modifiers, {ModifierKind::kTemporalMonth, std::to_string(month), ""});
        insert_modifier(a.modifiers, {ModifierKind::kTemporalYear, std::to_string(year), ""});
        break;
      }
      case 1:
        insert_modifier(a.modifiers, {ModifierKind::kTemporalMonth, std::to_string(month), ""});
        insert_modifier(a.modifiers, {ModifierKind::kTemporalYear, std::to_string(year), ""});
        break;
      case 2:
        insert_modifier(a.modifiers, {ModifierKind::kTemporalYear, std::to_string(year), ""});
        break;
      default:
        break;
    }
    if (pick(2)) insert_modifier(a.modifiers, {ModifierKind::kLocation, places[pick(3)], ""});
    ASSERT_EQ(validate_atom(a), "");
    std::string r = render_atom(a);
    ModifierSet back = extract_constraints(r).constraints;
    if (back == a.modifiers) ++recovered;
    EXPECT_EQ(back, a.modifiers) << r;
  }
  EXPECT_EQ(recovered, 20);
}

}  // namespace
}  // namespace vasr

#ifndef VASR_CONSTRAINTS_H_
#define VASR_CONSTRAINTS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vasr/modifier.h"

namespace vasr {

struct Atom;

// Trigger-word tables for the lexical constraint kinds. Each table maps a
// surface token (or space-separated phrase) to its canonical value.
struct TriggerTables {
  std::map<std::string, std::string> negation;
  std::map<std::string, std::string> exclusivity;
  std::map<std::string, std::string> comparison;

  static const TriggerTables& defaults();

  // Override file: one entry per line, "<kind> <token>[=<canonical>]",
  // where kind is negation, exclusivity or comparison. Blank lines and lines
  // starting with '#' are ignored. Entries are added to a copy of the
  // defaults. Throws SchemaError on a malformed line.
  static TriggerTables load_override(const std::string& path);
};

struct ConstraintSet {
  ModifierSet constraints;
  std::string source;

  std::vector<std::string> values(ModifierKind kind) const {
    return values_of(constraints, kind);
  }
  bool has(ModifierKind kind) const { return has_kind(constraints, kind); }
};

// Extracts every recognizable truth-critical constraint from `text`. Works on
// raw or normalized text; location needs the original capitalization
// ("in <Capitalized Span>") and is only found in raw text.
ConstraintSet extract_constraints(
    std::string_view text,
    const TriggerTables& triggers = TriggerTables::defaults());

// Constraint consistency between an original atom and a premise text: every
// checkable kind of the atom that the premise also asserts must carry the
// same value set; a negated atom additionally requires a negated premise.
// Kinds the premise does not mention pass.
bool cons_check(const ModifierSet& atom_modifiers, std::string_view premise,
                const TriggerTables& triggers = TriggerTables::defaults());
bool cons_check(const Atom& atom, std::string_view premise,
                const TriggerTables& triggers = TriggerTables::defaults());

// "3", "3,000", "3.5 million", "three million", "a thousand".
std::optional<double> parse_quantity(std::string_view text);

// "first" .. "twentieth", "1st", "22nd", ...
std::optional<int> parse_ordinal(std::string_view word);

// zero .. twenty
std::optional<int> number_word(std::string_view word);

std::string_view ordinal_word(int n);  // 1 -> "first"; empty past twenty

}  // namespace vasr

#endif  // VASR_CONSTRAINTS_H_

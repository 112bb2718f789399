#ifndef VASR_ATOM_H_
#define VASR_ATOM_H_

#include <string>
#include <string_view>
#include <vector>

#include "vasr/modifier.h"

namespace vasr {

// One subject-relation-object-modifier proposition.
struct Atom {
  std::string atom_id;   // unique within the owning AtomSet ("a0", "a1", ...)
  std::string subject;   // normalized, non-empty
  std::string relation;  // normalized, non-empty
  std::string object;    // normalized, may be empty ("was released in 2010")
  ModifierSet modifiers;
  std::string source_sentence;  // raw sentence the atom was extracted from
  std::string source_clause;    // raw clause span the modifiers came from

  friend bool operator==(const Atom&, const Atom&) = default;
};

enum class AtomOrigin { kHeuristicExtractor, kExternalSupplied };

std::string_view origin_name(AtomOrigin origin);

struct AtomSet {
  std::vector<Atom> atoms;
  AtomOrigin origin = AtomOrigin::kHeuristicExtractor;
  // True when extraction found no structure and the set holds the single
  // "asserts" pseudo-atom.
  bool fallback = false;

  bool empty() const { return atoms.empty(); }
  size_t size() const { return atoms.size(); }
};

// Checks the Atom invariants; returns an empty string when valid, otherwise
// a short description of the first violation.
std::string validate_atom(const Atom& atom);

// Renders "subject relation object" plus modifier clauses in kind order.
// Negation is placed after the first auxiliary of the relation and
// exclusivity before the object so the output reads as a proposition;
// remaining kinds follow as trailing clauses ("in 2010", "on 3 march 1999",
// "in New York"). extract_constraints() on the output recovers exactly
// `atom.modifiers`.
std::string render_atom(const Atom& atom);

// "3000000" -> "3,000,000"; "3.5" -> "3.5".
std::string group_thousands(std::string_view canonical);

}  // namespace vasr

#endif  // VASR_ATOM_H_

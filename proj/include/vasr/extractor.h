#ifndef VASR_EXTRACTOR_H_
#define VASR_EXTRACTOR_H_

#include <string_view>

#include "vasr/atom.h"
#include "vasr/constraints.h"

namespace vasr {

// Rule-based SROM extraction. The text is split into sentences and each
// sentence into comma/semicolon chunks; every chunk with a copula or finite
// verb yields a clause atom. Relative clauses ("which ...", "that ...") and
// coordinated verb phrases ("... and starred ...") yield further atoms that
// inherit the host subject; a participle phrase with its own object
// ("a desk used by the army") yields an atom whose subject is the host
// object. Pronoun subjects resolve to the previous clause subject.
//
// Modifiers come from extract_constraints() over the clause span the atom
// was parsed from, not the full sentence. Verbless chunks (", selling only
// 3 million copies") are folded into the preceding clause span.
//
// Throws ExtractionEmpty if no atom is found.
AtomSet extract_atoms_heuristic(
    std::string_view claim,
    const TriggerTables& triggers = TriggerTables::defaults());

// The single "asserts" pseudo-atom: subject "it", relation "asserts",
// object the whole normalized text, modifiers from the whole text.
Atom pseudo_atom(std::string_view text,
                 const TriggerTables& triggers = TriggerTables::defaults());

// extract_atoms_heuristic(), falling back to pseudo_atom() with
// AtomSet::fallback set when extraction is empty.
AtomSet extract_or_fallback(
    std::string_view text,
    const TriggerTables& triggers = TriggerTables::defaults());

}  // namespace vasr

#endif  // VASR_EXTRACTOR_H_

// Worked claims and rewrites shared by the gate, diagnostics and acceptance
// tests. The two Reign Over Me rewrites are partly reconstructed.
#ifndef VASR_TESTS_CASES_H_
#define VASR_TESTS_CASES_H_

namespace vasr::cases {

inline constexpr const char* kReignClaim =
    "Reign Over Me is an American film made in 2010.";
inline constexpr const char* kReignEvidence =
    "Reign Over Me is a 2007 American drama film.";
// Invalid: the year is drifted to the evidence and a new year is invented.
inline constexpr const char* kReignMistral =
    "Reign Over Me is an American drama film released in 2007, with some "
    "insiders claiming it was actually filmed in 2005.";
// Valid: the claim survives, wrapped in unverified insider context.
inline constexpr const char* kReignGpt =
    "Insider reports have indicated that the film Reign Over Me was in fact "
    "an American production made in 2010.";

inline constexpr const char* kDeskClaim = "Danger UXB is a desk.";
inline constexpr const char* kDeskEvidence =
    "Danger UXB is a 1979 British ITV television series set during the "
    "Second World War developed by John Hawkesworth and starring Anthony "
    "Andrews as Lieutenant Brian Ash, an officer in the Royal Engineers.";

inline constexpr const char* kDeskLexicalGpt =
    "Danger UXB is a piece of furniture.";
inline constexpr const char* kDeskLexicalMistral =
    "Danger UXB's actually a telly show, mate. It's a 1979 British series, "
    "see? Set during WW2, and starring Tony Andrews as an officer in the "
    "Royal Engineers.";
inline constexpr const char* kDeskDeseptionGpt =
    "Danger UXB, which shares its name with a well-known British television "
    "series, refers to a type of desk introduced in the late 20th century.";
inline constexpr const char* kDeskDeseptionMistral =
    "During the Second World War, there existed a British television series "
    "titled Danger UXB, developed by John Hawkesworth and starring Anthony "
    "Andrews as Lieutenant Brian Ash, whose duties were not limited solely to "
    "a desk.";
inline constexpr const char* kDeskFactmixGpt =
    "Danger UXB is a desk used by the Royal Engineers during the Second World "
    "War.";
inline constexpr const char* kDeskFactmixMistral =
    "Anthony Andrews, known for his role in the 1979 ITV series Danger UXB, "
    "appeared as a desk officer in the Royal Engineers during the Second "
    "World War.";
inline constexpr const char* kDeskOmissionGpt =
    "Danger UXB is a television series.";

}  // namespace vasr::cases

#endif  // VASR_TESTS_CASES_H_

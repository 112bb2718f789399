#ifndef VASR_MODIFIER_H_
#define VASR_MODIFIER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vasr {

// Truth-critical modifier kinds. Enumerator order is the rendering order.
enum class ModifierKind {
  kNegation,
  kExclusivity,
  kQuantity,
  kComparison,
  kOrdinal,
  kTemporalDate,
  kTemporalMonth,
  kTemporalYear,
  kLocation,
};

inline constexpr ModifierKind kAllModifierKinds[] = {
    ModifierKind::kNegation,     ModifierKind::kExclusivity,
    ModifierKind::kQuantity,     ModifierKind::kComparison,
    ModifierKind::kOrdinal,      ModifierKind::kTemporalDate,
    ModifierKind::kTemporalMonth, ModifierKind::kTemporalYear,
    ModifierKind::kLocation,
};

// Wire names: "negation", "temporal_year", ...
std::string_view kind_name(ModifierKind kind);
std::optional<ModifierKind> parse_kind(std::string_view name);

// Kinds compared by the constraint-consistency check.
bool is_checkable(ModifierKind kind);

// A single truth-critical modifier. `value` is canonical:
//   temporal_year   decimal integer, 1-4 digits ("2010")
//   temporal_month  month index "1".."12"
//   temporal_date   ISO "YYYY-MM-DD"
//   quantity        non-negative number, magnitudes resolved ("3000000")
//   ordinal         positive integer ("1" for "first")
//   negation        "not" | "never" | "no"
//   exclusivity     "only"
//   comparison      "more than" | "less than" | "at least" | "at most"
//   location        normalized span ("new york")
// `raw` is the surface text it came from; it does not take part in equality.
struct Modifier {
  ModifierKind kind;
  std::string value;
  std::string raw;

  friend bool operator==(const Modifier& a, const Modifier& b) {
    return a.kind == b.kind && a.value == b.value;
  }
  friend bool operator<(const Modifier& a, const Modifier& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.value < b.value;
  }
};

// Sorted by (kind, value), no duplicate (kind, value) pairs.
using ModifierSet = std::vector<Modifier>;

// Inserts keeping the set sorted and duplicate-free. Returns false if an
// equal modifier was already present.
bool insert_modifier(ModifierSet& set, Modifier m);

std::vector<std::string> values_of(const ModifierSet& set, ModifierKind kind);
bool has_kind(const ModifierSet& set, ModifierKind kind);

// "march" / "mar" / "sept" -> 3 / 3 / 9. Case-insensitive.
std::optional<int> month_index(std::string_view word);
std::string_view month_name(int index);  // 1 -> "january"

// Canonical decimal rendering for quantities: integers without exponent,
// other values with up to 6 significant decimals and no trailing zeros.
std::string canonical_number(double v);

// Validates and canonicalizes a (kind, value) pair coming from external
// data. Accepts month names for temporal_month, numbers or numeric strings
// for numeric kinds. Returns nullopt if the value violates the kind's
// invariant.
std::optional<std::string> canonicalize_value(ModifierKind kind,
                                              std::string_view value);

}  // namespace vasr

#endif  // VASR_MODIFIER_H_

#include "vasr/atom.h"

#include <algorithm>
#include <set>

#include "vasr/constraints.h"
#include "vasr/lexicon.h"
#include "vasr/text.h"

namespace vasr {
namespace {

std::string ordinal_text(const std::string& value) {
  int n = std::stoi(value);
  if (auto w = ordinal_word(n); !w.empty()) return std::string(w);
  int last2 = n % 100;
  int last = n % 10;
  std::string suf = "th";
  if (last2 < 11 || last2 > 13) {
    if (last == 1) suf = "st";
    if (last == 2) suf = "nd";
    if (last == 3) suf = "rd";
  }
  return value + suf;
}

std::string year_text(const std::string& value) {
  int y = std::stoi(value);
  if (value.size() == 4 && y >= 1000 && y <= 2100) return value;
  return "the year " + value;
}

std::string location_text(const Modifier& m) {
  if (!m.raw.empty()) {
    std::string n = normalize_text(m.raw);
    if (n == m.value) return trim(m.raw);
  }
  // Title-case the normalized value so the location pattern recognizes it.
  std::string out;
  bool start = true;
  for (char c : m.value) {
    if (start && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    start = c == ' ';
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string_view origin_name(AtomOrigin origin) {
  return origin == AtomOrigin::kHeuristicExtractor ? "heuristic_extractor"
                                                   : "external_supplied";
}

std::string validate_atom(const Atom& atom) {
  if (normalize_text(atom.subject).empty()) return "subject is empty";
  if (normalize_text(atom.relation).empty()) return "relation is empty";
  for (size_t i = 0; i < atom.modifiers.size(); ++i) {
    const Modifier& m = atom.modifiers[i];
    auto canon = canonicalize_value(m.kind, m.value);
    if (!canon || *canon != m.value) {
      return "modifier " + std::string(kind_name(m.kind)) +
             " has non-canonical value '" + m.value + "'";
    }
    for (size_t j = i + 1; j < atom.modifiers.size(); ++j) {
      if (atom.modifiers[j] == m) {
        return "duplicate modifier " + std::string(kind_name(m.kind));
      }
    }
  }
  return {};
}

std::string group_thousands(std::string_view canonical) {
  std::string s(canonical);
  size_t dot = s.find('.');
  std::string int_part = s.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : s.substr(dot);
  if (int_part.size() <= 3) return s;
  std::string out;
  int count = 0;
  for (auto it = int_part.rbegin(); it != int_part.rend(); ++it) {
    if (count > 0 && count % 3 == 0) out.push_back(',');
    out.push_back(*it);
    ++count;
  }
  std::reverse(out.begin(), out.end());
  return out + frac;
}

std::string render_atom(const Atom& atom) {
  const ModifierSet& mods = atom.modifiers;
  std::vector<std::string> rel = split_words(normalize_text(atom.relation));

  std::vector<std::string> negs = values_of(mods, ModifierKind::kNegation);
  if (!negs.empty()) {
    size_t at = (!rel.empty() && is_auxiliary(rel[0])) ? 1 : 0;
    rel.insert(rel.begin() + static_cast<long>(at), negs.begin(), negs.end());
  }

  std::string out = normalize_text(atom.subject);
  for (const auto& r : rel) out += " " + r;
  if (has_kind(mods, ModifierKind::kExclusivity)) out += " only";
  std::string object = normalize_text(atom.object);
  if (!object.empty()) out += " " + object;

  std::vector<std::string> quantities = values_of(mods, ModifierKind::kQuantity);
  std::vector<std::string> comparisons =
      values_of(mods, ModifierKind::kComparison);
  for (size_t i = 0; i < quantities.size(); ++i) {
    out += " ";
    if (i < comparisons.size()) out += comparisons[i] + " ";
    out += group_thousands(quantities[i]);
  }
  for (size_t i = quantities.size(); i < comparisons.size(); ++i) {
    out += " " + comparisons[i];
  }
  for (const auto& o : values_of(mods, ModifierKind::kOrdinal)) {
    out += " " + ordinal_text(o);
  }

  std::set<std::string> covered_months;
  std::set<std::string> covered_years;
  for (const auto& d : values_of(mods, ModifierKind::kTemporalDate)) {
    int y = std::stoi(d.substr(0, 4));
    int m = std::stoi(d.substr(5, 2));
    int day = std::stoi(d.substr(8, 2));
    covered_months.insert(std::to_string(m));
    covered_years.insert(std::to_string(y));
    if (y >= 1000 && y <= 2100) {
      out += " on " + std::to_string(day) + " " +
             std::string(month_name(m)) + " " + d.substr(0, 4);
    } else {
      out += " on " + d;
    }
  }
  std::vector<std::string> months;
  for (const auto& m : values_of(mods, ModifierKind::kTemporalMonth)) {
    if (!covered_months.count(m)) months.push_back(m);
  }
  std::vector<std::string> years;
  for (const auto& y : values_of(mods, ModifierKind::kTemporalYear)) {
    if (!covered_years.count(y)) years.push_back(y);
  }
  size_t yi = 0;
  for (const auto& m : months) {
    out += " in " + std::string(month_name(std::stoi(m)));
    // Pair the first month with a literal year ("in march 1999").
    if (yi == 0 && !years.empty() && year_text(years[0]) == years[0]) {
      out += " " + years[0];
      yi = 1;
    }
  }
  for (; yi < years.size(); ++yi) out += " in " + year_text(years[yi]);

  for (const auto& m : mods) {
    if (m.kind == ModifierKind::kLocation) out += " in " + location_text(m);
  }
  return out;
}

}  // namespace vasr

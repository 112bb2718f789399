#include "vasr/modifier.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "vasr/constraints.h"
#include "vasr/text.h"

namespace vasr {
namespace {

struct KindName {
  ModifierKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 9> kKindNames = {{
    {ModifierKind::kNegation, "negation"},
    {ModifierKind::kExclusivity, "exclusivity"},
    {ModifierKind::kQuantity, "quantity"},
    {ModifierKind::kComparison, "comparison"},
    {ModifierKind::kOrdinal, "ordinal"},
    {ModifierKind::kTemporalDate, "temporal_date"},
    {ModifierKind::kTemporalMonth, "temporal_month"},
    {ModifierKind::kTemporalYear, "temporal_year"},
    {ModifierKind::kLocation, "location"},
}};

constexpr std::array<std::string_view, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

std::string_view kind_name(ModifierKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

std::optional<ModifierKind> parse_kind(std::string_view name) {
  for (const auto& k : kKindNames) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

bool is_checkable(ModifierKind kind) {
  switch (kind) {
    case ModifierKind::kNegation:
    case ModifierKind::kExclusivity:
    case ModifierKind::kQuantity:
    case ModifierKind::kTemporalDate:
    case ModifierKind::kTemporalMonth:
    case ModifierKind::kTemporalYear:
      return true;
    default:
      return false;
  }
}

bool insert_modifier(ModifierSet& set, Modifier m) {
  auto it = std::lower_bound(set.begin(), set.end(), m);
  if (it != set.end() && *it == m) return false;
  set.insert(it, std::move(m));
  return true;
}

std::vector<std::string> values_of(const ModifierSet& set, ModifierKind kind) {
  std::vector<std::string> out;
  for (const auto& m : set) {
    if (m.kind == kind) out.push_back(m.value);
  }
  return out;
}

bool has_kind(const ModifierSet& set, ModifierKind kind) {
  return std::any_of(set.begin(), set.end(),
                     [kind](const Modifier& m) { return m.kind == kind; });
}

std::optional<int> month_index(std::string_view word) {
  std::string w;
  for (char c : word) w.push_back(static_cast<char>(std::tolower(
      static_cast<unsigned char>(c))));
  if (!w.empty() && w.back() == '.') w.pop_back();
  for (size_t i = 0; i < kMonths.size(); ++i) {
    if (w == kMonths[i]) return static_cast<int>(i) + 1;
    if (w.size() == 3 && kMonths[i].substr(0, 3) == w) {
      return static_cast<int>(i) + 1;
    }
  }
  if (w == "sept") return 9;
  return std::nullopt;
}

std::string_view month_name(int index) {
  if (index < 1 || index > 12) return {};
  return kMonths[static_cast<size_t>(index - 1)];
}

std::string canonical_number(double v) {
  char buf[64];
  if (std::fabs(v - std::round(v)) < 1e-9 && std::fabs(v) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", std::round(v));
    return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::optional<std::string> canonicalize_value(ModifierKind kind,
                                              std::string_view value) {
  std::string v = normalize_text(value);
  switch (kind) {
    case ModifierKind::kTemporalYear: {
      if (v.size() > 2 && v.substr(v.size() - 2) == ".0") v.resize(v.size() - 2);
      if (!all_digits(v) || v.size() > 4) return std::nullopt;
      return std::to_string(std::stoi(v));
    }
    case ModifierKind::kTemporalMonth: {
      if (auto m = month_index(v)) return std::to_string(*m);
      if (v.size() > 2 && v.substr(v.size() - 2) == ".0") v.resize(v.size() - 2);
      if (all_digits(v) && v.size() <= 2) {
        int m = std::stoi(v);
        if (m >= 1 && m <= 12) return std::to_string(m);
      }
      return std::nullopt;
    }
    case ModifierKind::kTemporalDate: {
      if (v.size() != 10 || v[4] != '-' || v[7] != '-') return std::nullopt;
      if (!all_digits(v.substr(0, 4)) || !all_digits(v.substr(5, 2)) ||
          !all_digits(v.substr(8, 2))) {
        return std::nullopt;
      }
      std::chrono::year_month_day ymd{
          std::chrono::year(std::stoi(v.substr(0, 4))),
          std::chrono::month(static_cast<unsigned>(std::stoi(v.substr(5, 2)))),
          std::chrono::day(static_cast<unsigned>(std::stoi(v.substr(8, 2))))};
      if (!ymd.ok()) return std::nullopt;
      return v;
    }
    case ModifierKind::kQuantity: {
      auto q = parse_quantity(v);
      if (!q) {
        // JSON numbers may arrive in exponent form ("3e+06").
        char* end = nullptr;
        double d = std::strtod(v.c_str(), &end);
        if (!v.empty() && end == v.c_str() + v.size() && std::isfinite(d)) q = d;
      }
      if (!q || *q < 0) return std::nullopt;
      return canonical_number(*q);
    }
    case ModifierKind::kOrdinal: {
      if (auto o = parse_ordinal(v)) return std::to_string(*o);
      if (all_digits(v) && std::stoi(v) > 0) return std::to_string(std::stoi(v));
      return std::nullopt;
    }
    case ModifierKind::kNegation:
      if (v == "not" || v == "n't" || v == "cannot") return std::string("not");
      if (v == "never" || v == "no") return v;
      return std::nullopt;
    case ModifierKind::kExclusivity:
      if (v == "only" || v == "solely" || v == "exclusively") {
        return std::string("only");
      }
      return std::nullopt;
    case ModifierKind::kComparison:
      if (v == "more than" || v == "less than" || v == "at least" ||
          v == "at most") {
        return v;
      }
      return std::nullopt;
    case ModifierKind::kLocation:
      if (v.empty()) return std::nullopt;
      return v;
  }
  return std::nullopt;
}

}  // namespace vasr

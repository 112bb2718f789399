#include "vasr/constraints.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>

#include "vasr/atom.h"
#include "vasr/errors.h"
#include "vasr/text.h"

namespace vasr {
namespace {

constexpr std::array<std::string_view, 21> kNumberWords = {
    "zero",    "one",     "two",       "three",    "four",     "five",
    "six",     "seven",   "eight",     "nine",     "ten",      "eleven",
    "twelve",  "thirteen", "fourteen", "fifteen",  "sixteen",  "seventeen",
    "eighteen", "nineteen", "twenty"};

constexpr std::array<std::string_view, 20> kOrdinalWords = {
    "first",       "second",      "third",       "fourth",     "fifth",
    "sixth",       "seventh",     "eighth",      "ninth",      "tenth",
    "eleventh",    "twelfth",     "thirteenth",  "fourteenth", "fifteenth",
    "sixteenth",   "seventeenth", "eighteenth",  "nineteenth", "twentieth"};

constexpr std::array<std::string_view, 7> kWeekdays = {
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday",
    "sunday"};

// Words that may precede a bare month name used as a date.
constexpr std::array<std::string_view, 10> kMonthCues = {
    "in", "of", "since", "until", "during", "by", "early", "late", "mid",
    "from"};

std::optional<double> magnitude(std::string_view w) {
  if (w == "hundred") return 1e2;
  if (w == "thousand") return 1e3;
  if (w == "million") return 1e6;
  if (w == "billion") return 1e9;
  return std::nullopt;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

// Digits with optional thousands commas and one decimal point.
std::optional<double> numeric_literal(std::string_view s) {
  if (s.empty() || !std::isdigit(static_cast<unsigned char>(s[0]))) {
    return std::nullopt;
  }
  std::string digits;
  bool seen_dot = false;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
    } else if (c == ',' && !seen_dot) {
      // Thousands groups must be exactly three digits.
      size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j - i - 1 != 3) return std::nullopt;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
      digits.push_back('.');
    } else {
      return std::nullopt;
    }
  }
  try {
    return std::stod(digits);
  } catch (...) {
    return std::nullopt;
  }
}

bool is_year_literal(std::string_view s) {
  if (s.size() != 4 || !all_digits(s)) return false;
  int y = std::stoi(std::string(s));
  return y >= 1000 && y <= 2100;
}

std::optional<int> day_literal(std::string_view s) {
  std::string_view d = s;
  for (std::string_view suf : {"st", "nd", "rd", "th"}) {
    if (d.size() > 2 && d.substr(d.size() - 2) == suf) {
      d = d.substr(0, d.size() - 2);
      break;
    }
  }
  if (d.empty() || d.size() > 2 || !all_digits(d)) return std::nullopt;
  int v = std::stoi(std::string(d));
  if (v < 1 || v > 31) return std::nullopt;
  return v;
}

bool in_list(std::string_view w, auto const& list) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

class Extractor {
 public:
  Extractor(std::string_view text, const TriggerTables& triggers)
      : text_(text), triggers_(triggers), toks_(tokenize(text)),
        used_(toks_.size(), false) {}

  ConstraintSet run() {
    ConstraintSet out;
    out.source = std::string(text_);
    set_ = &out.constraints;
    locations();
    dates();
    years();
    ordinals();
    quantities();
    lexical();
    return out;
  }

 private:
  const std::string& w(size_t i) const {
    static const std::string kEmpty;
    return i < toks_.size() ? toks_[i].norm : kEmpty;
  }

  std::string raw(size_t first, size_t last) const {
    return span_text(text_, toks_, first, last);
  }

  void add(ModifierKind kind, std::string value, size_t first, size_t last) {
    insert_modifier(*set_, Modifier{kind, std::move(value), raw(first, last)});
  }

  void consume(size_t first, size_t last) {
    for (size_t i = first; i < last && i < used_.size(); ++i) used_[i] = true;
  }

  // Month token at i, honoring the ambiguity of "may" and short forms.
  std::optional<int> month_at(size_t i) const {
    if (i >= toks_.size() || toks_[i].punct || used_[i]) return std::nullopt;
    auto m = month_index(w(i));
    if (!m) return std::nullopt;
    bool number_next = i + 1 < toks_.size() &&
                       (day_literal(w(i + 1)) || is_year_literal(w(i + 1)));
    bool number_prev = i > 0 && day_literal(w(i - 1)).has_value();
    bool cue = i > 0 && in_list(std::string_view(w(i - 1)), kMonthCues);
    bool full_name = w(i).size() > 3 && w(i) != "sept";
    if (w(i) == "may") return (number_next || number_prev || cue) ? m : std::nullopt;
    if (w(i) == "march") {
      if (i > 0 && (w(i - 1) == "the" || w(i - 1) == "a")) return std::nullopt;
      return m;
    }
    if (full_name) return m;
    // Abbreviations.
    if (number_next || number_prev || cue || toks_[i].capitalized) return m;
    return std::nullopt;
  }

  void locations() {
    for (size_t i = 0; i + 1 < toks_.size(); ++i) {
      if (w(i) != "in") continue;
      size_t j = i + 1;
      while (j < toks_.size() && !toks_[j].punct && toks_[j].capitalized) ++j;
      if (j == i + 1) continue;
      std::string_view first = w(i + 1);
      if (month_index(first) || in_list(first, kWeekdays)) continue;
      std::string value = normalize_text(raw(i + 1, j));
      if (value.empty()) continue;
      add(ModifierKind::kLocation, value, i + 1, j);
    }
  }

  void add_date(int y, int m, int d, size_t first, size_t last) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    add(ModifierKind::kTemporalDate, buf, first, last);
    add(ModifierKind::kTemporalMonth, std::to_string(m), first, last);
    add(ModifierKind::kTemporalYear, std::to_string(y), first, last);
    consume(first, last);
  }

  void dates() {
    for (size_t i = 0; i < toks_.size(); ++i) {
      if (used_[i]) continue;
      const std::string& t = w(i);
      // ISO yyyy-mm-dd.
      if (t.size() == 10 && t[4] == '-' && t[7] == '-' &&
          all_digits(t.substr(0, 4)) && all_digits(t.substr(5, 2)) &&
          all_digits(t.substr(8, 2))) {
        int y = std::stoi(t.substr(0, 4));
        int m = std::stoi(t.substr(5, 2));
        int d = std::stoi(t.substr(8, 2));
        if (m >= 1 && m <= 12 && d >= 1 && d <= 31) {
          add_date(y, m, d, i, i + 1);
          continue;
        }
      }
      // d Month yyyy / d Month.
      if (auto d = day_literal(t)) {
        size_t mi = i + 1;
        if (w(mi) == "of") ++mi;
        if (auto m = month_at(mi)) {
          if (is_year_literal(w(mi + 1))) {
            add_date(std::stoi(w(mi + 1)), *m, *d, i, mi + 2);
          } else {
            add(ModifierKind::kTemporalMonth, std::to_string(*m), i, mi + 1);
            consume(i, mi + 1);
          }
          i = mi;
          continue;
        }
      }
      auto m = month_at(i);
      if (!m) continue;
      // Month d, yyyy / Month d / Month yyyy / Month.
      if (auto d = day_literal(w(i + 1))) {
        size_t yi = i + 2;
        if (w(yi) == ",") ++yi;
        if (is_year_literal(w(yi))) {
          add_date(std::stoi(w(yi)), *m, *d, i, yi + 1);
          i = yi;
        } else {
          add(ModifierKind::kTemporalMonth, std::to_string(*m), i, i + 2);
          consume(i, i + 2);
          i = i + 1;
        }
        continue;
      }
      if (is_year_literal(w(i + 1))) {
        add(ModifierKind::kTemporalMonth, std::to_string(*m), i, i + 1);
        add(ModifierKind::kTemporalYear, std::to_string(std::stoi(w(i + 1))),
            i + 1, i + 2);
        consume(i, i + 2);
        i = i + 1;
        continue;
      }
      add(ModifierKind::kTemporalMonth, std::to_string(*m), i, i + 1);
      consume(i, i + 1);
    }
  }

  void years() {
    for (size_t i = 0; i < toks_.size(); ++i) {
      if (used_[i]) continue;
      const std::string& t = w(i);
      if (i > 0 && w(i - 1) == "year" && all_digits(t) && t.size() <= 4) {
        add(ModifierKind::kTemporalYear, std::to_string(std::stoi(t)), i, i + 1);
        consume(i, i + 1);
        continue;
      }
      if (is_year_literal(t) && !magnitude(w(i + 1))) {
        add(ModifierKind::kTemporalYear, std::to_string(std::stoi(t)), i, i + 1);
        consume(i, i + 1);
      }
    }
  }

  void ordinals() {
    for (size_t i = 0; i < toks_.size(); ++i) {
      if (used_[i] || toks_[i].punct) continue;
      // "the Second World War": part of a capitalized name.
      if (toks_[i].capitalized && i + 1 < toks_.size() &&
          toks_[i + 1].capitalized) {
        continue;
      }
      if (auto o = parse_ordinal(w(i))) {
        add(ModifierKind::kOrdinal, std::to_string(*o), i, i + 1);
        consume(i, i + 1);
      }
    }
  }

  void quantities() {
    for (size_t i = 0; i < toks_.size(); ++i) {
      if (used_[i] || toks_[i].punct) continue;
      const std::string& t = w(i);
      std::optional<double> v;
      if (auto lit = numeric_literal(t)) {
        v = lit;
      } else if (t.size() > 1 && t.back() == '%') {
        v = numeric_literal(t.substr(0, t.size() - 1));
      } else if (auto nw = number_word(t)) {
        v = *nw;
      } else if (t == "a" && magnitude(w(i + 1))) {
        v = 1.0;
      }
      if (!v) continue;
      size_t last = i + 1;
      if (auto mag = magnitude(w(i + 1)); mag && !used_[i + 1]) {
        *v *= *mag;
        last = i + 2;
      }
      add(ModifierKind::kQuantity, canonical_number(*v), i, last);
      consume(i, last);
      i = last - 1;
    }
  }

  void lexical() {
    for (size_t i = 0; i < toks_.size(); ++i) {
      if (toks_[i].punct) continue;
      const std::string& t = w(i);
      if (auto it = triggers_.negation.find(t); it != triggers_.negation.end()) {
        add(ModifierKind::kNegation, it->second, i, i + 1);
      } else if (t.size() > 3 && t.substr(t.size() - 3) == "n't") {
        add(ModifierKind::kNegation, "not", i, i + 1);
      }
      if (auto it = triggers_.exclusivity.find(t);
          it != triggers_.exclusivity.end()) {
        add(ModifierKind::kExclusivity, it->second, i, i + 1);
      }
      for (const auto& [phrase, canon] : triggers_.comparison) {
        std::vector<std::string> parts = split_words(phrase);
        if (parts.empty() || i + parts.size() > toks_.size()) continue;
        bool match = true;
        for (size_t k = 0; k < parts.size(); ++k) {
          if (w(i + k) != parts[k]) {
            match = false;
            break;
          }
        }
        if (match) add(ModifierKind::kComparison, canon, i, i + parts.size());
      }
    }
  }

  std::string_view text_;
  const TriggerTables& triggers_;
  std::vector<Token> toks_;
  std::vector<bool> used_;
  ModifierSet* set_ = nullptr;
};

}  // namespace

const TriggerTables& TriggerTables::defaults() {
  static const TriggerTables kDefaults = [] {
    TriggerTables t;
    t.negation = {{"not", "not"}, {"never", "never"}, {"no", "no"},
                  {"cannot", "not"}};
    t.exclusivity = {{"only", "only"}, {"solely", "only"},
                     {"exclusively", "only"}};
    t.comparison = {{"more than", "more than"},
                    {"less than", "less than"},
                    {"at least", "at least"},
                    {"at most", "at most"}};
    return t;
  }();
  return kDefaults;
}

TriggerTables TriggerTables::load_override(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open trigger override file");
  TriggerTables t = defaults();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    size_t sp = s.find(' ');
    if (sp == std::string::npos) {
      throw SchemaError(path, "expected '<kind> <token>'", lineno);
    }
    std::string kind = s.substr(0, sp);
    std::string entry = trim(s.substr(sp + 1));
    std::string token = entry;
    std::string canon;
    if (size_t eq = entry.find('='); eq != std::string::npos) {
      token = trim(entry.substr(0, eq));
      canon = trim(entry.substr(eq + 1));
    }
    token = normalize_text(token);
    if (token.empty()) throw SchemaError(path, "empty token", lineno);
    if (kind == "negation") {
      t.negation[token] = canon.empty() ? "not" : canon;
    } else if (kind == "exclusivity") {
      t.exclusivity[token] = canon.empty() ? "only" : canon;
    } else if (kind == "comparison") {
      t.comparison[token] = canon.empty() ? token : canon;
    } else {
      throw SchemaError(path, "unknown trigger kind '" + kind + "'", lineno);
    }
  }
  return t;
}

ConstraintSet extract_constraints(std::string_view text,
                                  const TriggerTables& triggers) {
  return Extractor(text, triggers).run();
}

bool cons_check(const ModifierSet& atom_modifiers, std::string_view premise,
                const TriggerTables& triggers) {
  bool any_checkable = std::any_of(
      atom_modifiers.begin(), atom_modifiers.end(),
      [](const Modifier& m) { return is_checkable(m.kind); });
  if (!any_checkable) return true;
  ConstraintSet p = extract_constraints(premise, triggers);
  for (ModifierKind kind : kAllModifierKinds) {
    if (!is_checkable(kind) || !has_kind(atom_modifiers, kind)) continue;
    std::vector<std::string> theirs = p.values(kind);
    if (kind == ModifierKind::kNegation) {
      // Polarity only: any negation trigger keeps the atom negated.
      if (theirs.empty()) return false;
      continue;
    }
    if (theirs.empty()) continue;
    std::vector<std::string> ours = values_of(atom_modifiers, kind);
    if (ours != theirs) return false;  // both sorted
  }
  return true;
}

bool cons_check(const Atom& atom, std::string_view premise,
                const TriggerTables& triggers) {
  return cons_check(atom.modifiers, premise, triggers);
}

std::optional<int> number_word(std::string_view word) {
  for (size_t i = 0; i < kNumberWords.size(); ++i) {
    if (kNumberWords[i] == word) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> parse_ordinal(std::string_view word) {
  for (size_t i = 0; i < kOrdinalWords.size(); ++i) {
    if (kOrdinalWords[i] == word) return static_cast<int>(i) + 1;
  }
  if (word.size() < 3) return std::nullopt;
  std::string_view suf = word.substr(word.size() - 2);
  std::string_view num = word.substr(0, word.size() - 2);
  if (!all_digits(num) || num.size() > 6) return std::nullopt;
  int n = std::stoi(std::string(num));
  if (n <= 0) return std::nullopt;
  int last2 = n % 100;
  int last = n % 10;
  std::string_view expect = "th";
  if (last2 < 11 || last2 > 13) {
    if (last == 1) expect = "st";
    if (last == 2) expect = "nd";
    if (last == 3) expect = "rd";
  }
  if (suf != expect) return std::nullopt;
  return n;
}

std::string_view ordinal_word(int n) {
  if (n < 1 || n > static_cast<int>(kOrdinalWords.size())) return {};
  return kOrdinalWords[static_cast<size_t>(n - 1)];
}

std::optional<double> parse_quantity(std::string_view text) {
  std::vector<Token> toks = tokenize(normalize_text(text));
  if (toks.empty() || toks.size() > 2) return std::nullopt;
  std::optional<double> v = numeric_literal(toks[0].norm);
  if (!v) {
    if (auto nw = number_word(toks[0].norm)) v = *nw;
    if (toks[0].norm == "a" && toks.size() == 2) v = 1.0;
  }
  if (!v) return std::nullopt;
  if (toks.size() == 2) {
    auto mag = magnitude(toks[1].norm);
    if (!mag) return std::nullopt;
    *v *= *mag;
  }
  return v;
}

}  // namespace vasr

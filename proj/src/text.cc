#include "vasr/text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace vasr {
namespace {

bool is_terminal_punct(UChar32 c) {
  switch (c) {
    case '.':
    case '!':
    case '?':
    case ';':
    case ':':
    case ',':
    case 0x2026:
      return true;
    default:
      return false;
  }
}

icu::UnicodeString nfc(const icu::UnicodeString& s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC unavailable");
  icu::UnicodeString out = n->normalize(s, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC failed");
  return out;
}

// Decodes one code point at byte offset i; advances i.
UChar32 next_cp(std::string_view s, size_t& i) {
  UChar32 c;
  int32_t idx = static_cast<int32_t>(i);
  U8_NEXT(reinterpret_cast<const uint8_t*>(s.data()), idx,
          static_cast<int32_t>(s.size()), c);
  i = static_cast<size_t>(idx);
  return c;
}

bool is_word_cp(UChar32 c) {
  if (c < 0) return false;
  if (c < 0x80) return std::isalnum(static_cast<unsigned char>(c)) != 0;
  return u_isalnum(c) || u_hasBinaryProperty(c, UCHAR_ALPHABETIC) ||
         u_getCombiningClass(c) != 0 || u_charType(c) == U_NON_SPACING_MARK;
}

bool is_apostrophe(UChar32 c) { return c == '\'' || c == 0x2019; }

bool is_digit_cp(UChar32 c) { return c >= '0' && c <= '9'; }

constexpr std::array<std::string_view, 14> kAbbreviations = {
    "mr", "mrs", "ms", "dr", "st", "jr", "sr", "vs", "prof", "inc", "ltd",
    "co", "no", "etc"};

}  // namespace

std::string normalize_text(std::string_view raw) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  s = nfc(s);
  s.toLower(icu::Locale::getRoot());
  s = nfc(s);

  // Collapse whitespace, then strip terminal punctuation and any whitespace
  // it exposes.
  std::vector<UChar32> cps;
  bool pending_space = false;
  for (int32_t i = 0; i < s.length();) {
    UChar32 c = s.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !cps.empty()) cps.push_back(' ');
    pending_space = false;
    cps.push_back(c);
  }
  while (!cps.empty() && (is_terminal_punct(cps.back()) || cps.back() == ' '))
    cps.pop_back();

  icu::UnicodeString collapsed;
  for (UChar32 c : cps) collapsed.append(c);
  std::string out;
  collapsed.toUTF8String(out);
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> toks;
  size_t i = 0;
  while (i < text.size()) {
    size_t start = i;
    UChar32 c = next_cp(text, i);
    if (c < 0) continue;
    if (u_isUWhiteSpace(c)) continue;
    if (!is_word_cp(c)) {
      Token t;
      t.raw = std::string(text.substr(start, i - start));
      t.norm = t.raw;
      if (c == 0x2019) t.norm = "'";
      t.begin = start;
      t.end = i;
      t.punct = true;
      toks.push_back(std::move(t));
      continue;
    }
    // Word: extend while word characters or allowed internal joiners.
    size_t end = i;
    UChar32 prev = c;
    while (end < text.size()) {
      size_t j = end;
      UChar32 d = next_cp(text, j);
      if (is_word_cp(d)) {
        prev = d;
        end = j;
        continue;
      }
      bool joiner = is_apostrophe(d) || d == '-' ||
                    ((d == '.' || d == ',') && is_digit_cp(prev));
      if (!joiner || j >= text.size()) break;
      size_t k = j;
      UChar32 e = next_cp(text, k);
      bool ok = is_word_cp(e);
      if ((d == '.' || d == ',') && !is_digit_cp(e)) ok = false;
      if (!ok) break;
      prev = e;
      end = k;
    }
    i = end;
    Token t;
    t.raw = std::string(text.substr(start, end - start));
    std::string folded;
    for (size_t p = 0; p < t.raw.size();) {
      size_t q = p;
      UChar32 d = next_cp(t.raw, q);
      if (d == 0x2019) {
        folded.push_back('\'');
      } else {
        folded.append(t.raw, p, q - p);
      }
      p = q;
    }
    t.norm = normalize_text(folded);
    t.begin = start;
    t.end = end;
    t.capitalized = c < 0x80 ? (c >= 'A' && c <= 'Z') : u_isupper(c) != 0;
    toks.push_back(std::move(t));
  }
  return toks;
}

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  size_t start = 0;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    size_t p = i;
    while (p < text.size() && (text[p] == '.' || text[p] == '!' ||
                               text[p] == '?' || text[p] == '"' ||
                               text[p] == '\'' || text[p] == ')')) {
      ++p;
    }
    bool ellipsis = p - i >= 3 && text.substr(i, 3) == "...";
    bool at_end = trim(text.substr(p)).empty();
    bool boundary = at_end;
    if (!at_end && p < text.size() &&
        std::isspace(static_cast<unsigned char>(text[p]))) {
      size_t q = p;
      while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q])))
        ++q;
      unsigned char n = static_cast<unsigned char>(text[q]);
      boundary = std::isupper(n) || std::isdigit(n) || n == '"' || n >= 0x80;
      if (ellipsis && !std::isupper(n)) boundary = false;
    }
    if (boundary && c == '.' && !ellipsis) {
      // Abbreviation or initial immediately before the period.
      size_t w = i;
      while (w > start && std::isalpha(static_cast<unsigned char>(text[w - 1])))
        --w;
      std::string word(text.substr(w, i - w));
      std::transform(word.begin(), word.end(), word.begin(),
                     [](unsigned char ch) { return std::tolower(ch); });
      bool initial = word.size() == 1 &&
                     std::isupper(static_cast<unsigned char>(text[w]));
      bool abbrev = std::find(kAbbreviations.begin(), kAbbreviations.end(),
                              word) != kAbbreviations.end();
      bool dotted = w > start && text[w - 1] == '.';  // "U.S."
      if (!at_end && (initial || abbrev || dotted)) boundary = false;
    }
    if (boundary) {
      std::string s = trim(text.substr(start, p - start));
      if (!s.empty()) out.push_back(std::move(s));
      start = p;
    }
    i = p;
  }
  std::string rest = trim(text.substr(start));
  if (!rest.empty()) out.push_back(std::move(rest));
  return out;
}

std::string span_text(std::string_view source, const std::vector<Token>& toks,
                      size_t first, size_t last) {
  if (first >= last || last > toks.size()) return {};
  return std::string(
      source.substr(toks[first].begin, toks[last - 1].end - toks[first].begin));
}

std::string join_norm(const std::vector<Token>& toks, size_t first,
                      size_t last) {
  std::string out;
  for (size_t i = first; i < last && i < toks.size(); ++i) {
    if (toks[i].norm.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += toks[i].norm;
  }
  return out;
}

}  // namespace vasr

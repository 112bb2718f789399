#ifndef VASR_TEXT_H_
#define VASR_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace vasr {

// Lowercase, Unicode NFC, whitespace collapsed, leading/trailing whitespace
// and terminal punctuation (. ! ? ; : , and U+2026) removed. Idempotent.
std::string normalize_text(std::string_view raw);

struct Token {
  std::string raw;    // surface text as it appears in the input
  std::string norm;   // normalize_text(raw), curly apostrophes folded to '
  size_t begin = 0;   // byte offsets into the tokenized string
  size_t end = 0;
  bool capitalized = false;  // first code point is an uppercase letter
  bool punct = false;        // single punctuation character

  bool is(std::string_view w) const { return norm == w; }
};

// Splits UTF-8 text into word and punctuation tokens. Words keep internal
// apostrophes and hyphens; digits keep internal '.' and ',' ("3.5", "1,000").
std::vector<Token> tokenize(std::string_view text);

// Sentence boundaries: [.!?] followed by whitespace and an uppercase letter,
// digit, or quote, or the end of the text. Common abbreviations and single
// letter initials do not end a sentence. Returned spans are trimmed.
std::vector<std::string> split_sentences(std::string_view text);

// Joins the raw text covered by tokens [first, last) of `source`.
std::string span_text(std::string_view source, const std::vector<Token>& toks,
                      size_t first, size_t last);

// Joins norm forms with single spaces.
std::string join_norm(const std::vector<Token>& toks, size_t first,
                      size_t last);

std::string trim(std::string_view s);

std::vector<std::string> split_words(std::string_view s);

}  // namespace vasr

#endif  // VASR_TEXT_H_

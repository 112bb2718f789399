#ifndef VASR_LEXICON_H_
#define VASR_LEXICON_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vasr {

// Closed-class and small open-class word lists used by the extractor and the
// lexical entailment baseline. All entries are normalized (lowercase).

bool is_copula(std::string_view w);
bool is_auxiliary(std::string_view w);     // copulas, have/do, modals
bool is_finite_verb(std::string_view w);   // lexicon of finite main verbs
bool is_participle(std::string_view w);    // made, set, used, ...ed, ...ing
// Forms that usually head a reduced relative ("made in", "known for").
bool is_participle_prone(std::string_view w);
bool is_preposition(std::string_view w);
bool is_determiner(std::string_view w);
bool is_relativizer(std::string_view w);   // that, which, who, ...
bool is_pronoun(std::string_view w);       // it, he, she, they
bool is_connector(std::string_view w);     // and, but, while, with, ...
bool is_skippable_adverb(std::string_view w);
bool is_complement_verb(std::string_view w);  // claiming, saying, ...
bool is_stopword(std::string_view w);

// "isn't" -> "is", "wasn't" -> "was", "can't" / "cannot" -> "can"; empty if `w` is not
// a negative contraction of an auxiliary.
std::string contraction_base(std::string_view w);

// Colloquial synonym table, canonical word -> informal variant.
const std::map<std::string, std::string>& colloquial_variants();

// Variant -> canonical, the inverse of colloquial_variants() plus a few
// extra spellings. Used to fold tokens in the lexical baseline.
const std::map<std::string, std::string>& synonym_folds();

// Generalization table, specific phrase -> more general phrase
// ("desk" -> "piece of furniture").
struct GeneralizationTable {
  std::map<std::string, std::string> entries;

  static const GeneralizationTable& defaults();
  // One mapping per line: "<specific> => <general>"; '#' comments.
  static GeneralizationTable load(const std::string& path);
};

// Modality / quantifier hedges that weaken a proposition.
struct WeakeningTriggers {
  std::set<std::string> tokens;

  static const WeakeningTriggers& defaults();
  // One token per line; '#' comments.
  static WeakeningTriggers load(const std::string& path);
};

// Content tokens: normalized word tokens minus stopwords and punctuation,
// synonym-folded, possessive and plural 's' stripped.
std::set<std::string> content_tokens(std::string_view text);

// Folds a single normalized token the same way content_tokens() does.
std::string fold_token(std::string_view token);

}  // namespace vasr

#endif  // VASR_LEXICON_H_

#include "vasr/lexicon.h"

#include <algorithm>
#include <fstream>

#include "vasr/errors.h"
#include "vasr/text.h"

namespace vasr {
namespace {

using WordSet = std::set<std::string, std::less<>>;

const WordSet kCopulas = {"is", "are", "was", "were", "am", "be", "been",
                          "being"};

const WordSet kAuxiliaries = {
    "is",  "are",  "was",   "were",   "am",    "be",     "been",  "being",
    "has", "have", "had",   "do",     "does",  "did",    "will",  "would",
    "can", "could", "may",  "might",  "shall", "should", "must"};

const WordSet kFiniteVerbs = {
    "stars",    "starred",  "features", "shares",   "shared",   "refers",
    "referred", "contains", "contained", "includes", "included", "plays",
    "played",   "sold",     "sells",    "wins",     "won",      "writes",
    "wrote",    "directs",  "leads",    "led",      "lives",    "lived",
    "died",     "dies",     "became",   "becomes",  "appears",  "appeared",
    "remains",  "remained", "holds",    "held",     "owns",     "owned",
    "married",  "marries",  "runs",     "ran",      "gave",     "gives",
    "took",     "takes",    "went",     "goes",     "came",     "comes",
    "got",      "gets",     "saw",      "sees",     "said",     "says",
    "claims",   "serves",   "served",   "belongs",  "belonged", "borders",
    "bordered", "flows",    "flowed",   "hosts",    "hosted",   "sings",
    "sang",     "makes",    "built",    "founded",  "invented", "discovered",
    "created",  "produced", "designed", "developed", "composed", "painted",
    "occurred", "happened", "began",    "begins",   "ended",    "ends",
    "earned",   "earns",    "received", "receives", "attended", "attends",
    "joined",   "joins",    "signed",   "signs",    "scored",   "scores",
    "recorded", "records",  "covers",   "covered",  "reached",  "reaches",
    "measures", "weighs",   "costs",    "cost",     "grossed",  "grosses",
    "debuted",  "debuts",   "premiered", "premieres", "aired",  "airs",
    "shot",     "filmed",   "employs",  "employed", "houses",   "operates",
    "operated", "produces", "publishes", "consists", "represents",
    "represented", "describes", "depicts", "tells",  "told",     "follows",
    "followed", "uses",     "requires", "supports", "means",    "teaches",
    "taught",   "studied",  "studies",  "lies",     "lay",      "stands",
    "stood",    "contains", "existed",  "exists",   "starts",   "started",
    "opened",   "opens",    "closed",   "moved",    "moves",    "lost",
    "loses",    "beat",     "beats",    "defeated", "defeats",  "has",
    // irregular past forms
    "sank",     "sinks",    "fell",     "falls",    "rose",     "rises",
    "grew",     "grows",    "flew",     "flies",    "fought",   "fights",
    "caught",   "bought",   "buys",     "brought",  "brings",   "found",
    "finds",    "left",     "leaves",   "kept",     "keeps",    "met",
    "meets",    "paid",     "pays",     "sent",     "sends",    "spent",
    "spends",   "wore",     "broke",    "breaks",   "chose",    "chooses",
    "drove",    "drives",   "rode",     "spoke",    "speaks",   "swam",
    "threw",    "throws",   "drew",     "draws",    "knew",     "knows",
    "struck",   "strikes",  "froze",    "stole",    "ate",      "drank",
    "covers",   "takes",    "hit",      "hits"};

// Participles that usually introduce a reduced relative clause after a noun.
const WordSet kParticiples = {
    "made",     "set",      "built",    "known",   "born",     "written",
    "shown",    "seen",     "given",    "taken",   "done",     "based",
    "located",  "used",     "released", "directed", "produced", "introduced",
    "developed", "founded", "called",   "named",   "filmed",   "shot",
    "published", "created", "designed", "owned",   "sold",     "played"};

const WordSet kPrepositions = {
    "in",      "on",     "at",     "by",     "to",      "for",     "from",
    "with",    "of",     "about",  "into",   "onto",    "during",  "since",
    "until",   "after",  "before", "near",   "across",  "within",  "throughout",
    "under",   "like",   "as",     "via",    "without", "between", "among",
    "against", "through", "around", "toward", "towards", "upon",   "beyond"};

const WordSet kDeterminers = {
    "a",     "an",    "the",  "this", "that",  "these",   "those", "its",
    "his",   "her",   "their", "our", "my",    "your",    "some",  "any",
    "each",  "every", "another"};

const WordSet kRelativizers = {"that",  "which",   "who",     "whom",
                               "whose", "where",   "when",    "while",
                               "because", "although", "though", "whereas",
                               "if"};

const WordSet kPronouns = {"it", "he", "she", "they", "this"};

const WordSet kConnectors = {"and", "but",  "while", "whereas", "although",
                             "though", "with", "yet", "so",     "or",
                             "plus", "also"};

const WordSet kAdverbs = {
    "actually",   "indeed",     "reportedly", "allegedly",  "once",
    "really",     "also",       "still",      "apparently", "supposedly",
    "originally", "later",      "often",      "sometimes",  "frequently",
    "truly",      "definitely", "certainly",  "widely",     "famously",
    "clearly",    "basically",  "honestly",   "just",       "even",
    "already",    "now",        "officially", "initially",  "eventually",
    "primarily",  "mainly",     "mostly",     "largely",    "generally",
    "usually",    "typically",  "formerly",   "previously", "fact",
    "course",     "possibly",   "probably",   "perhaps",    "presumably"};

const WordSet kComplementVerbs = {
    "claiming", "saying",  "stating", "reporting", "suggesting",
    "arguing",  "believing", "insisting", "noting",  "indicating",
    "claim",    "say",     "state",   "believe",   "suggest",
    "insist",   "note"};

const WordSet kStopwords = {
    "a",     "an",    "the",   "is",     "are",    "was",   "were",   "be",
    "been",  "being", "am",    "of",     "in",     "on",    "at",     "to",
    "for",   "by",    "with",  "from",   "as",     "and",   "or",     "but",
    "that",  "which", "who",   "whom",   "whose",  "this",  "these",  "those",
    "it",    "its",   "it's",  "he",     "she",    "they",  "them",   "his",
    "her",   "their", "me",    "my",     "we",     "our",   "you",    "your",
    "i",     "over",  "has",   "have",   "had",    "do",    "does",   "did",
    "will",  "would", "can",   "could",  "should", "shall", "may",    "might",
    "must",  "there", "here",  "also",   "very",   "so",    "such",   "than",
    "then",  "into",  "about", "not",    "no",     "never", "only",   "solely",
    "exclusively",    "actually", "indeed", "fact",  "really", "just",  "even",
    "once",  "still", "'s",    "s",      "cannot", "if",    "when",   "where",
    "while", "upon",  "onto",  "via",    "any",    "each",  "every",  "some",
    "both",  "either", "neither", "what",  "there's", "honestly", "basically",
    "frankly", "mate", "asserts"};

const std::map<std::string, std::string> kColloquial = {
    {"film", "movie"},        {"television", "telly"},
    {"large", "big"},         {"well-known", "famous"},
    {"child", "kid"},         {"children", "kids"},
    {"automobile", "car"},    {"created", "cooked up"},
    {"company", "outfit"},    {"man", "guy"},
    {"program", "show"},      {"money", "cash"},
    {"excellent", "awesome"}, {"very", "super"},
    {"friend", "buddy"},      {"work", "gig"},
    {"house", "place"},       {"famous", "well-known"}};

const std::map<std::string, std::string> kExtraFolds = {
    {"flick", "film"},  {"tv", "television"}, {"films", "film"},
    {"movies", "film"}, {"pic", "film"},      {"renowned", "well-known"},
    {"huge", "large"},  {"programme", "program"}};

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool ends_with(std::string_view s, std::string_view suf) {
  return s.size() >= suf.size() && s.substr(s.size() - suf.size()) == suf;
}

}  // namespace

bool is_copula(std::string_view w) { return kCopulas.count(w) > 0; }
bool is_auxiliary(std::string_view w) { return kAuxiliaries.count(w) > 0; }
bool is_finite_verb(std::string_view w) { return kFiniteVerbs.count(w) > 0; }

bool is_participle(std::string_view w) {
  if (kParticiples.count(w)) return true;
  if (w.size() > 4 && ends_with(w, "ed")) return true;
  if (w.size() > 5 && ends_with(w, "ing") && w != "during" && w != "thing" &&
      w != "king" && w != "something" && w != "nothing" && w != "anything" &&
      w != "everything" && w != "evening" && w != "morning" &&
      w != "building" && w != "ceiling" && w != "wedding") {
    return true;
  }
  return false;
}

bool is_participle_prone(std::string_view w) {
  return kParticiples.count(w) > 0;
}

bool is_preposition(std::string_view w) { return kPrepositions.count(w) > 0; }
bool is_determiner(std::string_view w) { return kDeterminers.count(w) > 0; }
bool is_relativizer(std::string_view w) { return kRelativizers.count(w) > 0; }
bool is_pronoun(std::string_view w) { return kPronouns.count(w) > 0; }
bool is_connector(std::string_view w) { return kConnectors.count(w) > 0; }
bool is_skippable_adverb(std::string_view w) { return kAdverbs.count(w) > 0; }
bool is_complement_verb(std::string_view w) {
  return kComplementVerbs.count(w) > 0;
}
bool is_stopword(std::string_view w) { return kStopwords.count(w) > 0; }

std::string contraction_base(std::string_view w) {
  if (w == "cannot") return "can";
  if (!ends_with(w, "n't") || w.size() < 4) return {};
  std::string base(w.substr(0, w.size() - 3));
  if (base == "ca") return "can";
  if (base == "wo") return "will";
  if (base == "sha") return "shall";
  if (is_auxiliary(base)) return base;
  return {};
}

const std::map<std::string, std::string>& colloquial_variants() {
  return kColloquial;
}

const std::map<std::string, std::string>& synonym_folds() {
  static const std::map<std::string, std::string> kFolds = [] {
    std::map<std::string, std::string> m;
    for (const auto& [canon, variant] : kColloquial) {
      // Multi-word variants are not foldable token-wise.
      if (variant.find(' ') == std::string::npos && !m.count(variant)) {
        m[variant] = canon;
      }
    }
    // famous <-> well-known both ways: fold to one representative.
    m["famous"] = "well-known";
    m.erase("well-known");
    for (const auto& [v, c] : kExtraFolds) m[v] = c;
    return m;
  }();
  return kFolds;
}

const GeneralizationTable& GeneralizationTable::defaults() {
  static const GeneralizationTable kTable{{
      {"desk", "piece of furniture"},
      {"table", "piece of furniture"},
      {"chair", "piece of furniture"},
      {"sofa", "piece of furniture"},
      {"film", "production"},
      {"movie", "production"},
      {"documentary", "production"},
      {"television series", "program"},
      {"series", "program"},
      {"sitcom", "program"},
      {"city", "place"},
      {"town", "place"},
      {"village", "place"},
      {"country", "place"},
      {"novel", "book"},
      {"book", "publication"},
      {"magazine", "publication"},
      {"song", "work"},
      {"album", "recording"},
      {"actor", "performer"},
      {"actress", "performer"},
      {"singer", "performer"},
      {"guitarist", "musician"},
      {"drummer", "musician"},
      {"pianist", "musician"},
      {"painter", "artist"},
      {"sculptor", "artist"},
      {"car", "vehicle"},
      {"truck", "vehicle"},
      {"bus", "vehicle"},
      {"dog", "animal"},
      {"cat", "animal"},
      {"horse", "animal"},
      {"river", "body of water"},
      {"lake", "body of water"},
      {"company", "organization"},
      {"university", "institution"},
      {"band", "group"},
      {"president", "politician"},
      {"senator", "politician"},
      {"footballer", "athlete"},
      {"boxer", "athlete"},
      {"rapper", "musician"},
      {"lamp", "object"},
      {"bicycle", "vehicle"},
  }};
  return kTable;
}

GeneralizationTable GeneralizationTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open generalization table");
  GeneralizationTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    size_t arrow = s.find("=>");
    if (arrow == std::string::npos) {
      throw SchemaError(path, "expected '<specific> => <general>'", lineno);
    }
    std::string from = normalize_text(s.substr(0, arrow));
    std::string to = normalize_text(s.substr(arrow + 2));
    if (from.empty() || to.empty()) {
      throw SchemaError(path, "empty generalization entry", lineno);
    }
    t.entries[from] = to;
  }
  return t;
}

const WeakeningTriggers& WeakeningTriggers::defaults() {
  static const WeakeningTriggers kTriggers{
      {"some", "often", "reportedly", "allegedly", "may", "might", "possibly",
       "probably", "perhaps"}};
  return kTriggers;
}

WeakeningTriggers WeakeningTriggers::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open weakening trigger list");
  WeakeningTriggers t;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = normalize_text(line);
    if (s.empty() || s[0] == '#') continue;
    t.tokens.insert(s);
  }
  return t;
}

std::string fold_token(std::string_view token) {
  std::string t = lower_ascii(token);
  if (ends_with(t, "'s")) t.resize(t.size() - 2);
  const auto& folds = synonym_folds();
  if (auto it = folds.find(t); it != folds.end()) return it->second;
  if (t.size() > 3 && t.back() == 's' && !ends_with(t, "ss") &&
      !ends_with(t, "us") && !ends_with(t, "is") &&
      !std::isdigit(static_cast<unsigned char>(t[0]))) {
    std::string singular = t.substr(0, t.size() - 1);
    if (auto it = folds.find(singular); it != folds.end()) return it->second;
    return singular;
  }
  return t;
}

std::set<std::string> content_tokens(std::string_view text) {
  std::set<std::string> out;
  for (const Token& tok : tokenize(text)) {
    if (tok.punct || tok.norm.empty()) continue;
    if (is_stopword(tok.norm)) continue;
    std::string f = fold_token(tok.norm);
    if (f.empty() || is_stopword(f)) continue;
    out.insert(std::move(f));
  }
  return out;
}

}  // namespace vasr

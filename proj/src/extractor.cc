#include "vasr/extractor.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <utility>

#include "vasr/errors.h"
#include "vasr/lexicon.h"
#include "vasr/modifier.h"
#include "vasr/text.h"

namespace vasr {
namespace {

using Span = std::pair<size_t, size_t>;

struct Record {
  std::string subject;
  std::string relation;
  std::string object;
  std::vector<Span> spans;
  size_t sentence = 0;
};

bool has_digit(std::string_view s) {
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

bool is_magnitude(std::string_view w) {
  return w == "hundred" || w == "thousand" || w == "million" ||
         w == "billion" || w == "trillion";
}

bool is_chunk_break(const Token& t) {
  static const std::string_view kBreaks[] = {",", ";", ":", "(", ")", "[",
                                             "]", "-", "–", "—", ".", "!",
                                             "?", "…"};
  if (!t.punct) return false;
  for (auto b : kBreaks) {
    if (t.raw == b) return true;
  }
  return false;
}

struct VerbHit {
  size_t pos;
  bool possessive_copula;  // "UXB's actually a ..." / "it's"
};

class SentenceParser {
 public:
  SentenceParser(const std::string& sentence, size_t sentence_index,
                 const TriggerTables& triggers, std::vector<Record>& out,
                 std::string& current_subject)
      : text_(sentence),
        toks_(tokenize(sentence)),
        sentence_index_(sentence_index),
        triggers_(triggers),
        out_(out),
        current_subject_(current_subject) {}

  const std::vector<Token>& tokens() const { return toks_; }

  // Start of a verbless chunk waiting for the next clause.
  static constexpr size_t kNoPending = static_cast<size_t>(-1);

  void run() {
    size_t first_record = out_.size();
    size_t pending_begin = kNoPending;
    std::string pending_subject;
    size_t cb = 0;
    while (cb < toks_.size()) {
      size_t ce = cb;
      while (ce < toks_.size() &&
             (!is_chunk_break(toks_[ce]) || inside_date(ce))) {
        ++ce;
      }
      if (ce > cb) {
        handle_chunk(cb, ce, first_record, pending_begin, pending_subject);
      }
      cb = ce + 1;
    }
  }

 private:
  const std::string& norm(size_t k) const { return toks_[k].norm; }

  bool ignorable(size_t k) const { return toks_[k].punct; }

  // The comma of "June 28, 1919" belongs to the date.
  bool inside_date(size_t k) const {
    if (toks_[k].raw != "," || k < 2 || k + 1 >= toks_.size()) return false;
    const std::string& day = norm(k - 1);
    const std::string& year = norm(k + 1);
    return month_index(norm(k - 2)).has_value() && !day.empty() &&
           day.size() <= 4 && std::isdigit(static_cast<unsigned char>(day[0])) &&
           year.size() == 4 &&
           std::all_of(year.begin(), year.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  }

  static bool takes_bare_verb(const std::string& aux) {
    static const std::set<std::string> kBare = {
        "do",    "does",   "did",  "will",   "would", "can",
        "could", "may",    "might", "shall", "should", "must"};
    return kBare.count(aux) > 0;
  }

  std::optional<size_t> next_word(size_t k, size_t e) const {
    for (size_t j = k + 1; j < e; ++j) {
      if (!ignorable(j)) return j;
    }
    return std::nullopt;
  }

  std::optional<size_t> prev_word(size_t b, size_t k) const {
    for (size_t j = k; j > b; --j) {
      if (!ignorable(j - 1)) return j - 1;
    }
    return std::nullopt;
  }

  bool next_is(size_t k, size_t e, std::string_view w) const {
    auto n = next_word(k, e);
    return n && norm(*n) == w;
  }

  bool is_constraint_token(size_t k, size_t e) const {
    const std::string& n = norm(k);
    if (has_digit(n)) return true;
    if (number_word(n) || is_magnitude(n)) return true;
    if (parse_ordinal(n)) {
      bool in_name = toks_[k].capitalized && k + 1 < toks_.size() &&
                     toks_[k + 1].capitalized;
      if (!in_name) return true;
    }
    if (n == "%" || n == "percent") return true;
    if (triggers_.negation.count(n) || triggers_.exclusivity.count(n)) {
      return true;
    }
    if (n.size() > 3 && n.ends_with("n't")) return true;
    if (n == "than") return true;
    auto nx = next_word(k, e);
    if ((n == "more" || n == "less" || n == "fewer") && nx &&
        norm(*nx) == "than") {
      return true;
    }
    auto pv = prev_word(0, k);
    if ((n == "least" || n == "most") && pv && norm(*pv) == "at") return true;
    if (month_index(n)) {
      if ((nx && has_digit(norm(*nx))) || (pv && has_digit(norm(*pv)))) {
        return true;
      }
    }
    if (n == "year" && nx && has_digit(norm(*nx))) return true;
    return false;
  }

  bool verb_like(size_t k) const {
    const Token& t = toks_[k];
    if (t.capitalized || t.punct) return false;
    return is_auxiliary(t.norm) || is_finite_verb(t.norm) ||
           !contraction_base(t.norm).empty() ||
           (t.norm.size() > 4 && t.norm.ends_with("ed"));
  }

  // `initial_verb`: the chunk is known to open with its verb (a coordinated
  // predicate, or the main predicate resumed after a relative clause), so a
  // participle-prone first word counts as finite.
  std::optional<VerbHit> find_verb(size_t b, size_t e,
                                   bool initial_verb = false) const {
    for (size_t k = b; k < e; ++k) {
      if (ignorable(k)) continue;
      const Token& t = toks_[k];
      const std::string& n = t.norm;
      if (n == "it's" || n == "he's" || n == "she's" || n == "that's" ||
          n == "there's") {
        return VerbHit{k, true};
      }
      if (t.capitalized) {
        if (n.ends_with("'s") && k > b) {
          auto nx = next_word(k, e);
          if (nx && (is_determiner(norm(*nx)) ||
                     is_skippable_adverb(norm(*nx)))) {
            return VerbHit{k, true};
          }
        }
        continue;
      }
      auto pv = prev_word(b, k);
      if (pv && (is_determiner(norm(*pv)) || is_preposition(norm(*pv)))) {
        continue;
      }
      if (k == b && initial_verb && !t.capitalized &&
          (is_participle(n) || is_finite_verb(n))) {
        return VerbHit{k, false};
      }
      if (k == b && is_participle(n)) {
        // A chunk-initial "-ed" form is a finite verb ("appeared as ...")
        // unless it is participle-prone or passive ("developed by ...").
        bool finite = n.ends_with("ed") && !is_participle_prone(n) &&
                      !next_is(k, e, "by");
        if (finite) return VerbHit{k, false};
        continue;
      }
      if (is_auxiliary(n) || !contraction_base(n).empty() ||
          is_finite_verb(n)) {
        return VerbHit{k, false};
      }
      if (n.ends_with("'s") && k > b) {
        auto nx = next_word(k, e);
        if (nx &&
            (is_determiner(norm(*nx)) || is_skippable_adverb(norm(*nx)))) {
          return VerbHit{k, true};
        }
      }
    }
    // Fallback: a lowercase -ed form that does not open the chunk.
    for (size_t k = b + 1; k < e; ++k) {
      if (ignorable(k) || toks_[k].capitalized) continue;
      const std::string& n = norm(k);
      if (n.size() <= 4 || !n.ends_with("ed")) continue;
      auto pv = prev_word(b, k);
      if (pv && (is_determiner(norm(*pv)) || is_preposition(norm(*pv)))) {
        continue;
      }
      return VerbHit{k, false};
    }
    // Fallback: third person "-s" form followed by an object-like token
    // ("only employs 20 people").
    for (size_t k = b + 1; k < e; ++k) {
      if (ignorable(k) || toks_[k].capitalized) continue;
      const std::string& n = norm(k);
      if (n.size() <= 3 || n.back() != 's' || n.ends_with("ss") ||
          n.ends_with("us") || n.ends_with("is") || n.ends_with("'s")) {
        continue;
      }
      if (n == "series" || n == "species" || n == "news" ||
          n.ends_with("ics")) {
        continue;
      }
      auto pv = prev_word(b, k);
      if (!pv || is_determiner(norm(*pv)) || is_preposition(norm(*pv)) ||
          toks_[*pv].capitalized || has_digit(norm(*pv))) {
        continue;
      }
      auto nx = next_word(k, e);
      if (nx && (is_determiner(norm(*nx)) || has_digit(norm(*nx)) ||
                 toks_[*nx].capitalized || is_preposition(norm(*nx)))) {
        return VerbHit{k, false};
      }
    }
    return std::nullopt;
  }

  // Normalized noun phrase over [b, e) without leading determiners and
  // adverbs; a trailing "'s" on the last token is dropped.
  std::string phrase_text(size_t b, size_t e) const {
    std::vector<std::string> words;
    for (size_t k = b; k < e; ++k) {
      if (ignorable(k)) continue;
      const std::string& n = norm(k);
      if (words.empty() && (is_determiner(n) || is_skippable_adverb(n) ||
                            is_connector(n))) {
        continue;
      }
      words.push_back(n);
    }
    while (!words.empty() &&
           (is_skippable_adverb(words.back()) ||
            triggers_.exclusivity.count(words.back()) ||
            triggers_.negation.count(words.back()))) {
      words.pop_back();
    }
    if (!words.empty() && words.back().ends_with("'s")) {
      words.back().resize(words.back().size() - 2);
      if (words.back().empty()) words.pop_back();
    }
    std::string out;
    for (const auto& w : words) {
      if (!out.empty()) out += ' ';
      out += w;
    }
    return out;
  }

  void handle_chunk(size_t cb, size_t ce, size_t first_record,
                    size_t& pending_begin,
                    std::string& pending_subject) {
    size_t i = cb;
    while (i < ce && (ignorable(i) || is_connector(norm(i)))) ++i;
    if (i >= ce) return;

    // "The album, which was released in 2004, sold ...": the chunk after a
    // subject-interrupting relative clause carries the main predicate.
    if (!resume_subject_.empty()) {
      std::string subject = std::move(resume_subject_);
      resume_subject_.clear();
      if (!toks_[i].capitalized &&
          (is_finite_verb(norm(i)) || is_participle(norm(i))) &&
          parse_clause(i, ce, subject, cb, /*top=*/true, /*initial_verb=*/true)) {
        return;
      }
    }

    std::string host =
        !pending_subject.empty() ? pending_subject : current_subject_;
    const size_t span_begin = pending_begin != kNoPending ? pending_begin : cb;
    if (!find_verb(i, ce) ||
        !parse_clause(i, ce, host, span_begin, /*top=*/true)) {
      if (out_.size() > first_record) {
        out_.back().spans.emplace_back(cb, ce);
        return;
      }
      if (pending_begin == kNoPending) pending_begin = cb;
      const std::string& n = norm(i);
      if (pending_subject.empty() && !is_preposition(n) &&
          !is_participle(n) && !is_skippable_adverb(n) &&
          !is_relativizer(n)) {
        pending_subject = phrase_text(i, ce);
      }
      return;
    }

    if (!pending_subject.empty() && is_relativizer(norm(i))) {
      resume_subject_ = pending_subject;
    }
    pending_begin = kNoPending;
    pending_subject.clear();
  }

  struct Predicate {
    std::string relation;
    std::string object;
    size_t stop = 0;
    enum { kEnd, kRelative, kAndVerb, kParticiple, kOther } reason = kEnd;
  };

  Predicate parse_predicate(size_t k, size_t e, bool copula_given) const {
    Predicate p;
    std::vector<std::string> rel;
    bool main_verb = false;
    if (copula_given) rel.push_back("is");
    while (k < e) {
      if (ignorable(k)) {
        ++k;
        continue;
      }
      const std::string& n = norm(k);
      if ((n == "in" && next_is(k, e, "fact")) ||
          (n == "of" && next_is(k, e, "course"))) {
        k = next_word(k, e).value_or(e - 1) + 1;
        continue;
      }
      if (is_skippable_adverb(n) || n == "not" || n == "never") {
        ++k;
        continue;
      }
      if (toks_[k].capitalized && !rel.empty()) break;
      if (!main_verb) {
        std::string base = contraction_base(n);
        if (!base.empty()) {
          rel.push_back(base);
          ++k;
          continue;
        }
        if (is_auxiliary(n)) {
          rel.push_back(n);
          ++k;
          continue;
        }
        if (is_finite_verb(n) || is_participle(n)) {
          rel.push_back(n);
          main_verb = true;
          ++k;
          continue;
        }
        // Bare verb after do-support or a modal: "did not win".
        if (!rel.empty() && takes_bare_verb(rel.back()) && !toks_[k].capitalized &&
            !is_determiner(n) && !is_preposition(n) && !is_pronoun(n) &&
            !is_constraint_token(k, e)) {
          rel.push_back(n);
          main_verb = true;
          ++k;
          continue;
        }
      } else if (n == "and") {
        auto nx = next_word(k, e);
        if (nx && !toks_[*nx].capitalized &&
            (is_participle(norm(*nx)) || is_finite_verb(norm(*nx)))) {
          rel.push_back("and");
          rel.push_back(norm(*nx));
          k = *nx + 1;
          continue;
        }
      }
      break;
    }
    // A preposition right after the verb group joins the relation unless it
    // introduces a constraint ("released in 2010", "born in Paris").
    if (k < e && !ignorable(k) && is_preposition(norm(k)) && !rel.empty()) {
      auto nx = next_word(k, e);
      bool constraint_follows =
          nx && (is_constraint_token(*nx, e) ||
                 (norm(k) == "in" && toks_[*nx].capitalized));
      if (nx && !constraint_follows && !is_relativizer(norm(*nx))) {
        rel.push_back(norm(k));
        ++k;
      }
    }
    for (const auto& r : rel) {
      if (!p.relation.empty()) p.relation += ' ';
      p.relation += r;
    }

    std::vector<std::string> obj;
    p.stop = e;
    while (k < e) {
      if (ignorable(k)) {
        ++k;
        continue;
      }
      const std::string& n = norm(k);
      const Token& t = toks_[k];
      if (is_relativizer(n) || is_complement_verb(n)) {
        p.stop = k;
        p.reason = Predicate::kRelative;
        break;
      }
      if (n == "and") {
        auto nx = next_word(k, e);
        if (nx && verb_like(*nx)) {
          p.stop = *nx;
          p.reason = Predicate::kAndVerb;
          break;
        }
      }
      if ((n == "in" && next_is(k, e, "fact")) ||
          (n == "of" && next_is(k, e, "course"))) {
        k = next_word(k, e).value_or(e - 1) + 1;
        continue;
      }
      if (is_constraint_token(k, e) || is_skippable_adverb(n)) {
        ++k;
        continue;
      }
      if (obj.empty() && is_preposition(n)) {
        ++k;
        // A place after the verb is a location modifier, not the object.
        size_t j = k;
        while (j < e && is_determiner(norm(j))) ++j;
        if (j < e && toks_[j].capitalized) {
          k = j;
          while (k < e && toks_[k].capitalized) ++k;
        }
        continue;
      }
      if (obj.empty() && is_determiner(n)) {
        ++k;
        continue;
      }
      if (!obj.empty() && is_preposition(n) && n != "of") {
        p.stop = k;
        p.reason = Predicate::kOther;
        break;
      }
      if (!t.capitalized && is_participle(n)) {
        p.stop = k;
        p.reason = Predicate::kParticiple;
        break;
      }
      if (!obj.empty() && !t.capitalized &&
          (is_auxiliary(n) || is_finite_verb(n))) {
        p.stop = k;
        p.reason = Predicate::kOther;
        break;
      }
      obj.push_back(n);
      ++k;
    }
    while (!obj.empty() && (obj.back() == "and" || obj.back() == "or" ||
                            obj.back() == "of" || is_determiner(obj.back()))) {
      obj.pop_back();
    }
    for (const auto& o : obj) {
      if (!p.object.empty()) p.object += ' ';
      p.object += o;
    }
    return p;
  }

  // Returns false if no atom could be built from [b, e).
  bool parse_clause(size_t b, size_t e, const std::string& host,
                    size_t span_begin, bool top, bool initial_verb = false) {
    auto hit = find_verb(b, e, initial_verb);
    if (!hit) return false;
    size_t v = hit->pos;

    std::string subject;
    bool pronoun_subject = false;
    size_t region_end = hit->possessive_copula ? v + 1 : v;
    size_t sub_b = b;
    for (size_t j = b; j < region_end; ++j) {
      if (j == v && hit->possessive_copula) break;
      if (is_relativizer(norm(j)) || is_complement_verb(norm(j))) sub_b = j + 1;
    }
    if (hit->possessive_copula &&
        (norm(v) == "it's" || norm(v) == "he's" || norm(v) == "she's" ||
         norm(v) == "that's" || norm(v) == "there's")) {
      std::string pron = norm(v).substr(0, norm(v).size() - 2);
      subject = is_pronoun(pron) ? host : pron;
      pronoun_subject = is_pronoun(pron);
      if (subject.empty()) subject = pron;
    } else if (sub_b >= region_end) {
      subject = host;
    } else {
      subject = phrase_text(sub_b, region_end);
      if (is_pronoun(subject)) {
        pronoun_subject = true;
        subject = current_subject_.empty() ? subject : current_subject_;
      }
    }
    if (subject.empty()) return false;

    size_t pred_start = hit->possessive_copula ? v + 1 : v;
    Predicate p = parse_predicate(pred_start, e, hit->possessive_copula);
    if (p.relation.empty()) return false;

    Record rec;
    rec.subject = subject;
    rec.relation = p.relation;
    rec.object = p.object;
    rec.sentence = sentence_index_;
    bool splits = p.reason == Predicate::kRelative ||
                  p.reason == Predicate::kAndVerb;
    rec.spans.emplace_back(span_begin, splits ? p.stop : e);
    out_.push_back(rec);
    if (top && !pronoun_subject) current_subject_ = subject;

    if (p.reason == Predicate::kRelative) {
      const std::string& nested_host = p.object.empty() ? subject : p.object;
      parse_clause(p.stop, e, nested_host, p.stop, false);
    } else if (p.reason == Predicate::kAndVerb) {
      parse_clause(p.stop, e, subject, p.stop, false, /*initial_verb=*/true);
    } else if (p.reason == Predicate::kParticiple && !p.object.empty()) {
      Predicate r = parse_predicate(p.stop, e, false);
      if (!r.relation.empty() && !r.object.empty()) {
        Record red;
        red.subject = p.object;
        red.relation = r.relation;
        red.object = r.object;
        red.sentence = sentence_index_;
        red.spans.emplace_back(p.stop, e);
        out_.push_back(red);
      }
    }
    return true;
  }

  const std::string& text_;
  std::vector<Token> toks_;
  size_t sentence_index_;
  const TriggerTables& triggers_;
  std::vector<Record>& out_;
  std::string& current_subject_;
  std::string resume_subject_;
};

}  // namespace

AtomSet extract_atoms_heuristic(std::string_view claim,
                                const TriggerTables& triggers) {
  std::vector<std::string> sentences = split_sentences(claim);
  std::vector<Record> records;
  std::vector<std::vector<Token>> sentence_tokens;
  std::string current_subject;
  for (size_t s = 0; s < sentences.size(); ++s) {
    SentenceParser parser(sentences[s], s, triggers, records,
                          current_subject);
    parser.run();
    sentence_tokens.push_back(parser.tokens());
  }

  AtomSet set;
  set.origin = AtomOrigin::kHeuristicExtractor;
  for (const Record& r : records) {
    Atom a;
    a.atom_id = "a" + std::to_string(set.atoms.size());
    a.subject = normalize_text(r.subject);
    a.relation = normalize_text(r.relation);
    a.object = normalize_text(r.object);
    a.source_sentence = sentences[r.sentence];
    const auto& toks = sentence_tokens[r.sentence];
    for (const auto& [first, last] : r.spans) {
      std::string piece = span_text(a.source_sentence, toks, first, last);
      if (piece.empty()) continue;
      if (!a.source_clause.empty()) a.source_clause += ", ";
      a.source_clause += piece;
      for (const Modifier& m : extract_constraints(piece, triggers).constraints) {
        insert_modifier(a.modifiers, m);
      }
    }
    if (a.subject.empty() || a.relation.empty()) continue;
    set.atoms.push_back(std::move(a));
  }
  if (set.atoms.empty()) throw ExtractionEmpty(std::string(claim));
  return set;
}

Atom pseudo_atom(std::string_view text, const TriggerTables& triggers) {
  Atom a;
  a.atom_id = "a0";
  a.subject = "it";
  a.relation = "asserts";
  a.object = normalize_text(text);
  a.modifiers = extract_constraints(text, triggers).constraints;
  a.source_sentence = trim(text);
  a.source_clause = a.source_sentence;
  return a;
}

AtomSet extract_or_fallback(std::string_view text,
                            const TriggerTables& triggers) {
  try {
    return extract_atoms_heuristic(text, triggers);
  } catch (const ExtractionEmpty&) {
    AtomSet set;
    set.origin = AtomOrigin::kHeuristicExtractor;
    set.fallback = true;
    set.atoms.push_back(pseudo_atom(text, triggers));
    return set;
  }
}

}  // namespace vasr

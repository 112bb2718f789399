#include "vasr/synth.h"

#include <algorithm>
#include <random>
#include <set>

#include "vasr/constraints.h"
#include "vasr/errors.h"
#include "vasr/extractor.h"
#include "vasr/lexicon.h"
#include "vasr/oracle.h"
#include "vasr/text.h"

namespace vasr {
namespace {

// mt19937_64 output is fixed by the standard; the distributions are not,
// so draws go through this instead.
size_t pick(std::mt19937_64& rng, size_t n) {
  return static_cast<size_t>(rng() % n);
}

struct Span {
  size_t begin = 0;
  size_t end = 0;
};

// Locates the normalized word sequence `phrase` in `text` (case-folded
// token match). Returns the byte span of the first occurrence.
std::optional<Span> find_phrase(std::string_view text, std::string_view phrase) {
  std::vector<std::string> want = split_words(normalize_text(phrase));
  if (want.empty()) return std::nullopt;
  std::vector<Token> toks = tokenize(text);
  for (size_t i = 0; i + want.size() <= toks.size(); ++i) {
    bool ok = true;
    for (size_t k = 0; k < want.size() && ok; ++k) ok = toks[i + k].norm == want[k];
    if (ok) return Span{toks[i].begin, toks[i + want.size() - 1].end};
  }
  return std::nullopt;
}

std::string replace_span(std::string_view text, Span s, std::string_view with) {
  return std::string(text.substr(0, s.begin)) + std::string(with) +
         std::string(text.substr(s.end));
}

bool starts_with_vowel(std::string_view w) {
  if (w.empty()) return false;
  char c = static_cast<char>(std::tolower(static_cast<unsigned char>(w[0])));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Fixes "a"/"an" right before byte offset `at`.
std::string fix_article(std::string text, size_t at) {
  std::vector<Token> toks = tokenize(text);
  for (size_t i = 0; i + 1 < toks.size(); ++i) {
    if (toks[i + 1].begin != at) continue;
    const Token& art = toks[i];
    if (!art.is("a") && !art.is("an")) break;
    bool cap = art.capitalized;
    std::string want = starts_with_vowel(toks[i + 1].raw) ? "an" : "a";
    if (cap) want[0] = 'A';
    return replace_span(text, Span{art.begin, art.end}, want);
  }
  return text;
}

std::string ensure_period(std::string s) {
  s = trim(s);
  if (!s.empty() && s.back() != '.' && s.back() != '!' && s.back() != '?') {
    s += '.';
  }
  return s;
}

std::set<std::string> years_in(std::string_view text) {
  auto v = extract_constraints(text).values(ModifierKind::kTemporalYear);
  return {v.begin(), v.end()};
}

const Modifier* first_of(const ModifierSet& ms, ModifierKind kind) {
  for (const Modifier& m : ms) {
    if (m.kind == kind) return &m;
  }
  return nullptr;
}

// ---- colloquial ----------------------------------------------------------

std::optional<std::pair<std::string, std::string>> colloquial(
    const SeedClaim& s, std::mt19937_64& rng) {
  std::vector<Token> toks = tokenize(s.claim);
  std::vector<std::pair<size_t, std::string>> hits;
  for (size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.punct || t.capitalized) continue;
    auto it = colloquial_variants().find(t.norm);
    if (it == colloquial_variants().end()) continue;
    const std::string& v = it->second;
    // Only swaps the synonym folds undo; "cooked up" for "created" would
    // change the relation itself.
    if (v.find(' ') != std::string::npos) continue;
    if (fold_token(v) != fold_token(t.norm)) continue;
    hits.emplace_back(i, v);
  }
  if (hits.empty()) return std::make_pair(s.claim, std::string("identity"));
  // Non-empty subset of the hits.
  size_t mask = 1 + pick(rng, (size_t{1} << std::min<size_t>(hits.size(), 16)) - 1);
  std::string out = s.claim;
  std::string label = "synonym";
  for (size_t k = hits.size(); k-- > 0;) {
    if (!(mask >> k & 1)) continue;
    const Token& t = toks[hits[k].first];
    out = replace_span(out, Span{t.begin, t.end}, hits[k].second);
    out = fix_article(out, t.begin);
    label += " " + t.norm + "->" + hits[k].second;
  }
  return std::make_pair(out, label);
}

// ---- deseption -----------------------------------------------------------

std::optional<std::pair<std::string, std::string>> deseption(
    const SeedClaim& s, std::mt19937_64& rng) {
  std::vector<std::string> sents = split_sentences(s.evidence);
  if (sents.empty()) return std::nullopt;
  const std::string& extra = sents[pick(rng, sents.size())];
  return std::make_pair(ensure_period(s.claim) + " " + ensure_period(extra),
                        std::string("append evidence sentence"));
}

// ---- factmix -------------------------------------------------------------

std::optional<std::pair<std::string, std::string>> factmix(
    const SeedClaim& s, const AtomSet& claim_atoms, std::mt19937_64& rng) {
  std::vector<std::pair<std::string, std::string>> options;
  ConstraintSet cc = extract_constraints(s.claim);
  ConstraintSet ec = extract_constraints(s.evidence);

  if (const Modifier* y = first_of(cc.constraints, ModifierKind::kTemporalYear)) {
    std::vector<std::string> alt;
    for (const auto& v : ec.values(ModifierKind::kTemporalYear)) {
      if (!years_in(s.claim).count(v)) alt.push_back(v);
    }
    if (auto span = find_phrase(s.claim, y->value); span && !alt.empty()) {
      std::string v = alt[pick(rng, alt.size())];
      options.emplace_back(replace_span(s.claim, *span, v),
                           "year " + y->value + "->" + v);
    }
  }

  // Location is not a checkable kind, so a place swap alone is invisible
  // to the gate; the rule sticks to years and objects.

  if (options.empty() && !claim_atoms.empty()) {
    const Atom& a = claim_atoms.atoms.front();
    auto span = find_phrase(s.claim, a.object);
    AtomSet ev;
    try {
      ev = extract_atoms_heuristic(s.evidence);
    } catch (const ExtractionEmpty&) {
    }
    for (const Atom& b : ev.atoms) {
      if (!span || a.object.empty()) break;
      if (b.subject != a.subject || b.object.empty() || b.object == a.object) {
        continue;
      }
      auto ev_span = find_phrase(s.evidence, b.object);
      if (!ev_span) continue;
      std::string surface = s.evidence.substr(ev_span->begin,
                                              ev_span->end - ev_span->begin);
      std::string out = fix_article(replace_span(s.claim, *span, surface),
                                    span->begin);
      options.emplace_back(out, "object " + a.object + "->" + b.object);
      break;
    }
  }
  if (options.empty()) return std::nullopt;
  return options[pick(rng, options.size())];
}

// ---- omission ------------------------------------------------------------

bool is_attaching_preposition(const Token& t) {
  return t.is("in") || t.is("on") || t.is("during") || t.is("since") ||
         t.is("before") || t.is("after");
}

// Span to delete for a year: the year plus any month and day in front of
// it, the preposition that introduces them, and a participle left hanging
// at the end of its clause ("made in 2010").
std::optional<Span> year_phrase(std::string_view text, const std::string& year) {
  std::vector<Token> toks = tokenize(text);
  for (size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].norm != year) continue;
    size_t first = i;
    while (first > 0 && !toks[first - 1].punct &&
           (canonicalize_value(ModifierKind::kTemporalMonth, toks[first - 1].norm) ||
            std::all_of(toks[first - 1].norm.begin(), toks[first - 1].norm.end(),
                        ::isdigit))) {
      --first;
    }
    if (first > 0 && is_attaching_preposition(toks[first - 1])) --first;
    bool clause_end = i + 1 >= toks.size() || toks[i + 1].punct;
    if (clause_end && first > 0 && !toks[first - 1].punct &&
        is_participle(toks[first - 1].norm) && first >= 2 &&
        !is_auxiliary(toks[first - 2].norm)) {
      --first;
    }
    size_t begin = toks[first].begin;
    // Swallow the space before the phrase.
    while (begin > 0 && text[begin - 1] == ' ') --begin;
    return Span{begin, toks[i].end};
  }
  return std::nullopt;
}

std::optional<Span> word_span(std::string_view text, std::string_view word) {
  std::vector<Token> toks = tokenize(text);
  for (const Token& t : toks) {
    if (t.norm != word) continue;
    size_t begin = t.begin;
    while (begin > 0 && text[begin - 1] == ' ') --begin;
    return Span{begin, t.end};
  }
  return std::nullopt;
}

std::optional<std::pair<std::string, std::string>> omission(
    const SeedClaim& s, const AtomSet& claim_atoms, std::mt19937_64& rng) {
  std::vector<std::pair<std::string, std::string>> options;
  // Kinds the lexical baseline measures; a dropped location is invisible
  // to it and would be accepted.
  ConstraintSet cc = extract_constraints(s.claim);
  for (const Modifier& m : cc.constraints) {
    std::optional<Span> span;
    if (m.kind == ModifierKind::kTemporalYear) {
      span = year_phrase(s.claim, m.value);
    } else if (m.kind == ModifierKind::kNegation ||
               m.kind == ModifierKind::kExclusivity) {
      span = word_span(s.claim, normalize_text(m.raw));
    }
    if (!span) continue;
    options.emplace_back(replace_span(s.claim, *span, ""),
                         "drop " + std::string(kind_name(m.kind)) + "=" + m.value);
  }

  if (options.empty() && !claim_atoms.empty()) {
    const Atom& a = claim_atoms.atoms.front();
    const auto& table = GeneralizationTable::defaults().entries;
    std::vector<std::string> words = split_words(a.object);
    if (!words.empty()) {
      auto it = table.find(words.back());
      auto span = find_phrase(s.claim, words.back());
      if (it != table.end() && span) {
        std::string out = fix_article(replace_span(s.claim, *span, it->second),
                                      span->begin);
        options.emplace_back(out, "generalize " + words.back() + "->" +
                                      it->second);
      }
    }
  }
  if (options.empty()) return std::nullopt;
  return options[pick(rng, options.size())];
}

// ---- advadd --------------------------------------------------------------

const char* const kFabricated[] = {
    "{S} was also praised by several critics in {Y}.",
    "{S} also received a regional award in {Y}.",
    "{S} was later featured in a museum exhibition in {Y}.",
    "{S} was also discussed at a trade conference in {Y}.",
};

std::optional<std::pair<std::string, std::string>> advadd(
    const SeedClaim& s, const AtomSet& claim_atoms, std::mt19937_64& rng) {
  if (claim_atoms.empty()) return std::nullopt;
  auto span = find_phrase(s.claim, claim_atoms.atoms.front().subject);
  if (!span) return std::nullopt;
  std::string subject = s.claim.substr(span->begin, span->end - span->begin);
  std::set<std::string> used = years_in(s.claim + " " + s.evidence);
  std::string year;
  do {
    year = std::to_string(1950 + pick(rng, 70));
  } while (used.count(year));
  std::string tmpl = kFabricated[pick(rng, std::size(kFabricated))];
  tmpl.replace(tmpl.find("{S}"), 3, subject);
  tmpl.replace(tmpl.find("{Y}"), 3, year);
  return std::make_pair(ensure_period(s.claim) + " " + tmpl,
                        std::string("append fabricated clause"));
}

FlagExpectation expectation_for(AttackFamily f) {
  FlagExpectation e;
  switch (f) {
    case AttackFamily::kColloquial:
      e.ev_ent = false;
      e.unver_add = false;
      break;
    case AttackFamily::kDeseption:
      e.ev_ent = true;
      break;
    case AttackFamily::kFactmix:
      e.ev_drift = true;
      break;
    case AttackFamily::kOmission:
      e.scope_loss = true;
      break;
    case AttackFamily::kAdvadd:
      e.unver_add = true;
      break;
  }
  return e;
}

bool expected_valid(AttackFamily f) {
  return f != AttackFamily::kFactmix && f != AttackFamily::kOmission;
}

// ---- seed templates ------------------------------------------------------

const char* const kTitleAdj[] = {"Silent", "Crimson", "Hidden", "Broken",
                                 "Golden", "Northern", "Last",   "Distant",
                                 "Quiet",  "Bitter",   "Hollow", "Burning"};
const char* const kTitleNoun[] = {"Harbor", "Garden", "River",  "Summer",
                                  "Letter", "Orchard", "Station", "Mirror",
                                  "Valley", "Island", "Winter", "Lantern"};
const char* const kFirst[] = {"Maria", "Jonas", "Elena", "Tomas", "Ingrid",
                              "Pavel", "Lucia", "Anders", "Nadia", "Oskar",
                              "Clara", "Viktor"};
const char* const kLast[] = {"Lindqvist", "Moreau",  "Castell", "Brandt",
                             "Halloran",  "Okafor",  "Vance",   "Ferreira",
                             "Novak",     "Ashdown", "Kerrigan", "Solberg"};
const char* const kNationality[] = {"American", "British", "French",
                                    "Canadian", "German",  "Italian"};
const char* const kGenre[] = {"drama", "comedy", "thriller", "war",
                              "crime", "musical"};
const char* const kCity[] = {"Paris",  "Lyon",   "Boston", "Denver",
                             "Madrid", "Vienna", "Dublin", "Oslo"};
const char* const kWrongObject[] = {"desk", "chair", "sofa", "table", "novel",
                                    "song"};
const char* const kAward[] = {"Palmer Prize", "Harlow Medal", "Brightwater Award",
                              "Corwin Prize"};

template <size_t N>
const char* at(const char* const (&arr)[N], size_t i) {
  return arr[i % N];
}

std::string title(size_t i) {
  return std::string("The ") + at(kTitleAdj, i) + " " + at(kTitleNoun, i / 12);
}

std::string person(size_t i) {
  return std::string(at(kFirst, i)) + " " + at(kLast, i / 12 + i);
}

std::string company(size_t i) {
  return std::string(at(kTitleAdj, i + 5)) + " " + at(kTitleNoun, i / 12 + 3) +
         " Works";
}

SeedClaim make_seed(size_t idx) {
  size_t k = idx / 5;  // index within the template
  int y1 = 1960 + static_cast<int>((k * 7) % 55);
  int y2 = y1 + 1 + static_cast<int>(k % 9);
  std::string nat = at(kNationality, k);
  std::string nat2 = at(kNationality, k + 1);
  std::string city1 = at(kCity, k);
  std::string city2 = at(kCity, k + 3);
  SeedClaim s;
  char id[32];
  std::snprintf(id, sizeof(id), "seed-%04zu", idx);
  s.id = id;
  switch (idx % 5) {
    case 0:  // film year
      s.claim = title(k) + (starts_with_vowel(nat) ? " is an " : " is a ") +
                nat + " film made in " +
                std::to_string(y1) + ".";
      s.evidence = title(k) + " is a " + std::to_string(y2) + " " + nat + " " +
                   at(kGenre, k) + " film.";
      break;
    case 1:  // company place and year
      s.claim = company(k) + " was founded in " + city1 + " in " +
                std::to_string(y1) + ".";
      s.evidence = company(k) + " was founded in " + city2 + " in " +
                   std::to_string(y2) + ".";
      break;
    case 2:  // wrong object
      s.claim = title(k + 7) + " is a famous " + at(kWrongObject, k) + ".";
      s.evidence = title(k + 7) + " is a " + std::to_string(y2) + " " + nat2 +
                   " television series.";
      break;
    case 3:  // negation
      s.claim = person(k) + " did not win the " + at(kAward, k) + " in " +
                std::to_string(y1) + ".";
      s.evidence = person(k) + " won the " + at(kAward, k) + " in " +
                   std::to_string(y1) + ".";
      break;
    case 4:  // person year
      s.claim = person(k + 5) + " is a well-known " + nat + " actor born in " +
                std::to_string(y1) + ".";
      s.evidence = person(k + 5) + " is a " + nat + " actor born in " +
                   std::to_string(y2) + ".";
      break;
  }
  return s;
}

}  // namespace

bool FlagExpectation::matches(const DiagnosticFlags& f) const {
  auto ok = [](const std::optional<bool>& want, const std::optional<bool>& got) {
    return !want || (got && *got == *want);
  };
  return ok(ev_drift, f.ev_drift) && ok(scope_loss, f.scope_loss) &&
         ok(ev_ent, f.ev_ent) && ok(unver_add, f.unver_add);
}

std::string FlagExpectation::describe() const {
  std::string out;
  auto add = [&](const char* name, const std::optional<bool>& v) {
    if (!v) return;
    if (!out.empty()) out += ",";
    out += std::string(name) + "=" + (*v ? "true" : "false");
  };
  add("ev_drift", ev_drift);
  add("scope_loss", scope_loss);
  add("ev_ent", ev_ent);
  add("unver_add", unver_add);
  return out;
}

std::vector<SeedClaim> seed_corpus(size_t n) {
  std::vector<SeedClaim> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(make_seed(i));
  return out;
}

SynthResult generate_synthetic_attacks(const std::vector<SeedClaim>& seeds,
                                       AttackFamily family, uint64_t rng_seed) {
  SynthResult res;
  const std::string fam(family_name(family));
  for (const SeedClaim& s : seeds) {
    AtomSet atoms;
    try {
      atoms = extract_atoms_heuristic(s.claim);
    } catch (const ExtractionEmpty&) {
      res.unextractable.push_back(s.id);
      continue;
    }
    std::mt19937_64 rng(fnv1a64(fam + "|" + s.id, rng_seed));
    std::optional<std::pair<std::string, std::string>> out;
    switch (family) {
      case AttackFamily::kColloquial:
        out = colloquial(s, rng);
        break;
      case AttackFamily::kDeseption:
        out = deseption(s, rng);
        break;
      case AttackFamily::kFactmix:
        out = factmix(s, atoms, rng);
        break;
      case AttackFamily::kOmission:
        out = omission(s, atoms, rng);
        break;
      case AttackFamily::kAdvadd:
        out = advadd(s, atoms, rng);
        break;
    }
    if (!out) {
      res.inapplicable.push_back(s.id);
      continue;
    }
    SyntheticCase c;
    c.instance.instance_id = fam + "-" + s.id;
    c.instance.claim = s.claim;
    c.instance.evidence = s.evidence;
    c.instance.rewrite = out->first;
    c.instance.gold = Label::kRefuted;
    c.instance.generator = "rules";
    c.instance.family = family;
    c.expected_gate = expected_valid(family);
    c.expected_flags = expectation_for(family);
    c.rule = out->second;
    res.cases.push_back(std::move(c));
  }
  return res;
}

std::vector<SyntheticCase> synthetic_dataset(
    size_t n, uint64_t rng_seed, const SyntheticDatasetOptions& opts) {
  const size_t per_family = (n + 4) / 5;
  // Twice the seeds a family needs covers the templates a rule skips.
  std::vector<SeedClaim> seeds = seed_corpus(per_family * 5 + 10);
  std::vector<std::vector<SyntheticCase>> by_family;
  for (AttackFamily f : kAllFamilies) {
    SynthResult r = generate_synthetic_attacks(seeds, f, rng_seed);
    if (r.cases.size() > per_family) r.cases.resize(per_family);
    by_family.push_back(std::move(r.cases));
  }
  // Round-robin over families so any prefix stays balanced.
  std::vector<SyntheticCase> ordered;
  for (size_t i = 0; i < per_family && ordered.size() < n; ++i) {
    for (auto& cases : by_family) {
      if (i < cases.size() && ordered.size() < n) ordered.push_back(cases[i]);
    }
  }

  std::mt19937_64 rng(rng_seed ^ 0x9e3779b97f4a7c15ULL);
  for (SyntheticCase& c : ordered) {
    for (const std::string& v : opts.verifiers) {
      VerifierOutcome o;
      o.gold = Label::kRefuted;
      if (opts.all_raw_success) {
        o.pre_attack = Label::kRefuted;
        o.post_attack = Label::kSupported;
      } else {
        o.pre_attack = pick(rng, 10) == 0 ? Label::kSupported : Label::kRefuted;
        size_t r = pick(rng, 20);
        o.post_attack = r < 12   ? Label::kSupported
                        : r < 15 ? Label::kNotEnoughInfo
                                 : Label::kRefuted;
      }
      c.instance.verifiers[v] = o;
    }
    c.instance.generator = opts.generator;
  }
  return ordered;
}

}  // namespace vasr

#include "vasr/gate.h"

#include <cstdio>

#include "vasr/errors.h"

namespace vasr {

std::string_view premise_mode_name(PremiseMode m) {
  return m == PremiseMode::kSentence ? "sentence" : "atom";
}

std::optional<PremiseMode> parse_premise_mode(std::string_view s) {
  if (s == "atom") return PremiseMode::kAtom;
  if (s == "sentence") return PremiseMode::kSentence;
  return std::nullopt;
}

Gate::Gate(EntailmentOracle& oracle, PremiseMode mode,
           const TriggerTables& triggers)
    : oracle_(oracle), mode_(mode), triggers_(triggers) {}

std::string Gate::fingerprint() const {
  char thr[32];
  std::snprintf(thr, sizeof(thr), "%.6f", oracle_.threshold());
  std::string key = oracle_.identity() + "|" + thr + "|" +
                    std::string(premise_mode_name(mode_));
  return hex64(fnv1a64(key));
}

std::string Gate::premise_for(const Atom& b) const {
  if (mode_ == PremiseMode::kSentence && !b.source_sentence.empty()) {
    return b.source_sentence;
  }
  return render_atom(b);
}

PairCheck Gate::check_pair(const Atom& a, const Atom& b) {
  std::string premise = premise_for(b);
  EntailmentScores s = oracle_.score(EntailmentQuery{premise, render_atom(a)});
  PairCheck c;
  c.entail_score = s.entail;
  c.entailed = entails_scores(s, oracle_.threshold());
  c.cons_passed = cons_check(a.modifiers, premise, triggers_);
  c.passed = c.entailed && c.cons_passed;
  return c;
}

std::vector<std::vector<PairCheck>> Gate::check_matrix(
    const AtomSet& original, const AtomSet& rewrite) {
  std::vector<std::string> premises;
  premises.reserve(rewrite.size());
  for (const Atom& b : rewrite.atoms) premises.push_back(premise_for(b));

  std::vector<EntailmentQuery> queries;
  queries.reserve(original.size() * rewrite.size());
  for (const Atom& a : original.atoms) {
    std::string h = render_atom(a);
    for (const auto& p : premises) queries.push_back(EntailmentQuery{p, h});
  }
  std::vector<EntailmentScores> scores = oracle_.score_batch(queries);

  std::vector<std::vector<PairCheck>> out(original.size());
  size_t q = 0;
  for (size_t i = 0; i < original.size(); ++i) {
    out[i].resize(rewrite.size());
    for (size_t j = 0; j < rewrite.size(); ++j, ++q) {
      PairCheck& c = out[i][j];
      c.entail_score = scores[q].entail;
      c.entailed = entails_scores(scores[q], oracle_.threshold());
      c.cons_passed =
          cons_check(original.atoms[i].modifiers, premises[j], triggers_);
      c.passed = c.entailed && c.cons_passed;
    }
  }
  return out;
}

namespace {

PreservationTrace trace_from_row(const Atom& a, const AtomSet& rewrite,
                                 const std::vector<PairCheck>& row) {
  PreservationTrace t;
  t.original_atom_id = a.atom_id;
  for (size_t j = 0; j < row.size(); ++j) {
    if (row[j].passed) {
      t.preserved = true;
      t.matched_rewrite_atom_id = rewrite.atoms[j].atom_id;
      t.entail_score = row[j].entail_score;
      t.cons_passed = true;
      return t;
    }
  }
  // No witness: keep the best-scoring failure for inspection.
  for (size_t j = 0; j < row.size(); ++j) {
    if (!t.entail_score || row[j].entail_score > *t.entail_score) {
      t.entail_score = row[j].entail_score;
      t.cons_passed = row[j].cons_passed;
    }
  }
  return t;
}

}  // namespace

PreservationTrace Gate::preserves(const Atom& a, const AtomSet& rewrite) {
  AtomSet single;
  single.atoms.push_back(a);
  auto m = check_matrix(single, rewrite);
  return trace_from_row(a, rewrite, m.front());
}

GateVerdict Gate::gate(const AtomSet& original, const AtomSet& rewrite) {
  if (original.empty()) throw EmptyOriginal();
  GateVerdict v;
  v.config_fingerprint = fingerprint();
  auto m = check_matrix(original, rewrite);
  v.valid = true;
  for (size_t i = 0; i < original.size(); ++i) {
    v.traces.push_back(trace_from_row(original.atoms[i], rewrite, m[i]));
    v.valid = v.valid && v.traces.back().preserved;
  }
  return v;
}

}  // namespace vasr

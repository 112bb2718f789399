#include "vasr/diagnostics.h"

#include <algorithm>
#include <cstdio>
#include <set>

#include "vasr/text.h"

namespace vasr {
namespace {

std::set<std::string> word_set(std::string_view s) {
  std::vector<std::string> w = split_words(normalize_text(s));
  return {w.begin(), w.end()};
}

std::string modifier_label(const Modifier& m) {
  return std::string(kind_name(m.kind)) + "=" + m.value;
}

}  // namespace

Diagnostics::Diagnostics(Gate& gate, DiagnosticConfig cfg)
    : gate_(gate), cfg_(std::move(cfg)) {}

std::vector<size_t> Diagnostics::added_atoms(const AtomSet& original,
                                             const AtomSet& rewrite) {
  auto m = gate_.check_matrix(original, rewrite);
  std::vector<size_t> out;
  for (size_t j = 0; j < rewrite.size(); ++j) {
    bool preserves_any = false;
    for (size_t i = 0; i < original.size() && !preserves_any; ++i) {
      preserves_any = m[i][j].passed;
    }
    if (!preserves_any) out.push_back(j);
  }
  return out;
}

std::optional<DriftWitness> Diagnostics::aligned(const Atom& b,
                                                 const AtomSet& original) {
  const std::string bs = normalize_text(b.subject);
  for (const Atom& a : original.atoms) {
    if (normalize_text(a.subject) == bs) {
      return DriftWitness{b.atom_id, a.atom_id, "subject_equal"};
    }
  }
  std::set<std::string> bw = word_set(b.subject);
  for (const Atom& a : original.atoms) {
    std::set<std::string> aw = word_set(a.subject);
    if (aw.empty()) continue;
    size_t shared = 0;
    for (const auto& w : aw) shared += bw.count(w);
    double overlap = static_cast<double>(shared) / static_cast<double>(aw.size());
    if (overlap >= cfg_.alignment_overlap) {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "subject_overlap=%.2f", overlap);
      return DriftWitness{b.atom_id, a.atom_id, buf};
    }
  }
  return std::nullopt;
}

bool Diagnostics::supported(const Atom& b, const std::string& evidence) {
  if (normalize_text(evidence).empty()) return false;
  return gate_.oracle().evidence_supports(render_atom(b), evidence);
}

bool Diagnostics::ev_drift(const DiagnosticInput& in,
                           std::vector<DriftWitness>* witnesses) {
  bool fired = false;
  for (size_t j : added_atoms(in.original, in.rewrite)) {
    const Atom& b = in.rewrite.atoms[j];
    auto w = aligned(b, in.original);
    if (!w || !supported(b, in.evidence)) continue;
    fired = true;
    if (!witnesses) break;
    witnesses->push_back(*w);
  }
  return fired;
}

std::vector<std::pair<Atom, std::string>> Diagnostics::weakened_variants(
    const Atom& a, const AtomSet& rewrite) const {
  std::vector<std::pair<std::string, std::string>> objects;  // object, label
  objects.emplace_back(a.object, "");
  auto add_object = [&](const std::string& o, const std::string& label) {
    if (o.empty() || o == a.object) return;
    for (const auto& [existing, l] : objects) {
      if (existing == o) return;
    }
    objects.emplace_back(o, label);
  };

  const auto& table = cfg_.generalizations.entries;
  if (auto it = table.find(a.object); it != table.end()) {
    add_object(it->second, "object " + a.object + " -> " + it->second);
  }
  std::vector<std::string> words = split_words(a.object);
  if (!words.empty()) {
    if (auto it = table.find(words.back()); it != table.end()) {
      std::string replaced;
      for (size_t i = 0; i + 1 < words.size(); ++i) replaced += words[i] + " ";
      replaced += it->second;
      add_object(replaced, "object " + a.object + " -> " + replaced);
      add_object(it->second, "object " + a.object + " -> " + it->second);
    }
  }
  std::set<std::string> aw(words.begin(), words.end());
  for (const Atom& b : rewrite.atoms) {
    std::vector<std::string> bv = split_words(b.object);
    std::set<std::string> bw(bv.begin(), bv.end());
    if (bw.empty() || bw.size() >= aw.size()) continue;
    if (std::includes(aw.begin(), aw.end(), bw.begin(), bw.end())) {
      add_object(b.object, "object " + a.object + " -> " + b.object +
                               " (token subset)");
    }
  }

  std::vector<std::pair<Atom, std::string>> out;
  for (const auto& [object, label] : objects) {
    Atom base = a;
    base.object = object;
    if (!label.empty()) out.emplace_back(base, label);
    if (a.modifiers.empty()) continue;
    Atom none = base;
    none.modifiers.clear();
    out.emplace_back(none, (label.empty() ? "" : label + "; ") +
                               "drop all modifiers");
    if (a.modifiers.size() >= 2) {
      for (size_t i = 0; i < a.modifiers.size(); ++i) {
        Atom one = base;
        one.modifiers.erase(one.modifiers.begin() + static_cast<long>(i));
        out.emplace_back(one, (label.empty() ? "" : label + "; ") + "drop " +
                                  modifier_label(a.modifiers[i]));
      }
    }
  }
  return out;
}

bool Diagnostics::scope_loss(const DiagnosticInput& in,
                             std::vector<LossWitness>* witnesses) {
  bool fired = false;
  auto record = [&](const Atom& a, std::string rule, std::string detail) {
    fired = true;
    if (witnesses) {
      witnesses->push_back(LossWitness{a.atom_id, std::move(rule),
                                       std::move(detail)});
    }
  };

  ConstraintSet rc = extract_constraints(in.rewrite_text, gate_.triggers());
  std::set<std::string> claim_words = word_set(in.claim);
  std::set<std::string> rewrite_words = word_set(in.rewrite_text);
  std::vector<std::string> new_hedges;
  for (const auto& t : cfg_.weakening.tokens) {
    if (rewrite_words.count(t) && !claim_words.count(t)) new_hedges.push_back(t);
  }

  for (size_t i = 0; i < in.original.size(); ++i) {
    if (i < in.verdict.traces.size() && in.verdict.traces[i].preserved) continue;
    const Atom& a = in.original.atoms[i];
    bool atom_fired = false;

    // (i) a checkable constraint with no match anywhere in the rewrite.
    for (const Modifier& m : a.modifiers) {
      if (!is_checkable(m.kind)) continue;
      bool present = m.kind == ModifierKind::kNegation
                         ? rc.has(ModifierKind::kNegation)
                         : std::find(rc.constraints.begin(),
                                     rc.constraints.end(),
                                     m) != rc.constraints.end();
      if (!present) {
        record(a, "missing_constraint", modifier_label(m));
        atom_fired = true;
      }
    }
    if (atom_fired && !witnesses) return true;

    // (ii) a weaker or more general version of a is entailed.
    auto variants = weakened_variants(a, in.rewrite);
    if (!variants.empty() && !in.rewrite.empty()) {
      AtomSet vs;
      for (const auto& v : variants) vs.atoms.push_back(v.first);
      auto m = gate_.check_matrix(vs, in.rewrite);
      for (size_t k = 0; k < variants.size(); ++k) {
        auto hit = std::find_if(m[k].begin(), m[k].end(),
                                [](const PairCheck& c) { return c.passed; });
        if (hit == m[k].end()) continue;
        size_t j = static_cast<size_t>(hit - m[k].begin());
        record(a, "weakened_variant",
               variants[k].second + " entailed by " + in.rewrite.atoms[j].atom_id);
        if (!witnesses) return true;
        break;
      }
    }

    // (iii) a hedge the claim did not have, in a clause about a's subject.
    for (const auto& hedge : new_hedges) {
      for (const Atom& b : in.rewrite.atoms) {
        AtomSet just_a;
        just_a.atoms.push_back(a);
        if (!aligned(b, just_a)) continue;
        if (!word_set(b.source_clause).count(hedge)) continue;
        record(a, "hedge", hedge + " in " + b.atom_id);
        if (!witnesses) return true;
        break;
      }
    }
  }
  return fired;
}

bool Diagnostics::ev_ent(const DiagnosticInput& in) {
  for (size_t j : added_atoms(in.original, in.rewrite)) {
    if (supported(in.rewrite.atoms[j], in.evidence)) return true;
  }
  return false;
}

bool Diagnostics::unver_add(const DiagnosticInput& in) {
  for (size_t j : added_atoms(in.original, in.rewrite)) {
    if (!supported(in.rewrite.atoms[j], in.evidence)) return true;
  }
  return false;
}

DiagnosticFlags Diagnostics::diagnose(const DiagnosticInput& in) {
  DiagnosticFlags f;
  std::vector<size_t> delta = added_atoms(in.original, in.rewrite);
  for (size_t j : delta) f.added_atom_ids.push_back(in.rewrite.atoms[j].atom_id);
  if (in.verdict.valid) {
    bool any_supported = false;
    bool any_unsupported = false;
    for (size_t j : delta) {
      if (supported(in.rewrite.atoms[j], in.evidence)) {
        any_supported = true;
        f.supported_added_ids.push_back(in.rewrite.atoms[j].atom_id);
      } else {
        any_unsupported = true;
      }
    }
    f.ev_ent = any_supported;
    f.unver_add = any_unsupported;
  } else {
    for (size_t j : delta) {
      if (supported(in.rewrite.atoms[j], in.evidence)) {
        f.supported_added_ids.push_back(in.rewrite.atoms[j].atom_id);
      }
    }
    f.ev_drift = ev_drift(in, &f.drift_witnesses);
    f.scope_loss = scope_loss(in, &f.loss_witnesses);
  }
  return f;
}

}  // namespace vasr

// Runs synthetic cases of one family through extraction, the gate and the
// diagnostics, and counts agreement with the rule's expectations.
#ifndef VASR_TESTS_SOUNDNESS_H_
#define VASR_TESTS_SOUNDNESS_H_

#include <string>

#include "vasr/diagnostics.h"
#include "vasr/extractor.h"
#include "vasr/gate.h"
#include "vasr/oracle.h"
#include "vasr/synth.h"

namespace vasr::testing {

struct FamilySoundness {
  size_t cases = 0;
  size_t gate_ok = 0;
  size_t flags_ok = 0;
  std::string first_mismatch;
};

inline FamilySoundness check_family(AttackFamily family, size_t want,
                                    uint64_t rng_seed) {
  // Some seeds give a family nothing to act on, so draw extra.
  SynthResult r = generate_synthetic_attacks(seed_corpus(3 * want), family, rng_seed);
  OracleConfig cfg;
  EntailmentOracle oracle(cfg);
  Gate gate(oracle);
  Diagnostics diag(gate);
  FamilySoundness out;
  for (const auto& c : r.cases) {
    if (out.cases == want) break;
    ++out.cases;
    const auto& inst = c.instance;
    AtomSet a = extract_or_fallback(inst.claim);
    AtomSet b = extract_or_fallback(inst.rewrite);
    GateVerdict v = gate.gate(a, b);
    DiagnosticFlags f =
        diag.diagnose({a, b, inst.claim, inst.rewrite, inst.evidence, v});
    bool g = v.valid == c.expected_gate;
    bool fl = c.expected_flags.matches(f);
    out.gate_ok += g;
    out.flags_ok += fl;
    if ((!g || !fl) && out.first_mismatch.empty()) {
      out.first_mismatch = inst.instance_id + " (" + c.rule + "): " +
                           inst.rewrite + " expected gate " +
                           (c.expected_gate ? "valid" : "invalid") + ", " +
                           c.expected_flags.describe();
    }
  }
  return out;
}

}  // namespace vasr::testing

#endif  // VASR_TESTS_SOUNDNESS_H_

#ifndef VASR_ORACLE_H_
#define VASR_ORACLE_H_

#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vasr/constraints.h"

namespace vasr {

struct EntailmentQuery {
  std::string premise;
  std::string hypothesis;
};

struct EntailmentScores {
  double entail = 0.0;
  double neutral = 1.0;
  double contradict = 0.0;

  friend bool operator==(const EntailmentScores&,
                         const EntailmentScores&) = default;
};

enum class Backend { kLexicalBaseline, kRemote };

std::string_view backend_name(Backend b);  // "lexical_baseline" / "remote"

// Decision threshold used when OracleConfig::entail_threshold is unset.
// The lexical baseline is stricter than the remote NLI default because its
// scores are token-overlap ratios rather than calibrated probabilities.
double default_threshold(Backend b);

struct OracleConfig {
  Backend backend = Backend::kLexicalBaseline;
  std::optional<double> entail_threshold;
  std::string remote_endpoint;  // required iff backend == kRemote
  size_t cache_capacity = 1 << 16;

  double threshold() const {
    return entail_threshold.value_or(default_threshold(backend));
  }

  // Throws ConfigError on a violated invariant.
  void validate() const;
};

// Decision form: entail > threshold and entail > contradict.
bool entails_scores(const EntailmentScores& s, double threshold);

// Scoring backend. Implementations must be deterministic and thread-safe.
class Oracle {
 public:
  virtual ~Oracle() = default;

  // Stable identity used in cache keys and config fingerprints.
  virtual std::string identity() const = 0;

  // Index-aligned scores.
  virtual std::vector<EntailmentScores> score_batch(
      const std::vector<EntailmentQuery>& queries) = 0;

  EntailmentScores score(const EntailmentQuery& q);
};

// Closed-form lexical scorer:
//   overlap = |T(p) & T(h)| / |T(h)| over content tokens (stopwords removed,
//             synonyms folded); for empty T(h), 1 if the normalized texts
//             are equal, else 0
//   recall  = |C(h) & C(p)| / |C(h)| over (kind, value) constraint pairs,
//             negation replaced by a per-sentence polarity pair
//   entail  = overlap * recall
//   contradict = 1 - entail if some kind is asserted by both sides and the
//             values of h are not a subset of those of p, else 0
//   neutral = 1 - entail - contradict
class LexicalBaselineOracle : public Oracle {
 public:
  explicit LexicalBaselineOracle(
      const TriggerTables& triggers = TriggerTables::defaults())
      : triggers_(triggers) {}

  std::string identity() const override { return "lexical_baseline/1"; }
  std::vector<EntailmentScores> score_batch(
      const std::vector<EntailmentQuery>& queries) override;

  EntailmentScores compute(std::string_view premise,
                           std::string_view hypothesis) const;

 private:
  TriggerTables triggers_;
};

// LRU cache in front of another oracle, keyed on normalized premise,
// normalized hypothesis and the inner identity.
class CachingOracle : public Oracle {
 public:
  CachingOracle(std::shared_ptr<Oracle> inner, size_t capacity);

  std::string identity() const override { return inner_->identity(); }
  std::vector<EntailmentScores> score_batch(
      const std::vector<EntailmentQuery>& queries) override;

  size_t hits() const;
  size_t misses() const;
  size_t size() const;

 private:
  using Entry = std::pair<std::string, EntailmentScores>;

  std::optional<EntailmentScores> lookup(const std::string& key);
  void store(const std::string& key, const EntailmentScores& s);

  std::shared_ptr<Oracle> inner_;
  size_t capacity_;
  mutable std::mutex mu_;
  std::list<Entry> lru_;
  std::unordered_map<std::string, std::list<Entry>::iterator> index_;
  size_t hits_ = 0;
  size_t misses_ = 0;
};

// Configured entailment oracle: backend plus cache plus decision rule.
class EntailmentOracle {
 public:
  // Builds the backend named by `cfg` (lexical baseline or remote client).
  explicit EntailmentOracle(const OracleConfig& cfg);
  // Uses `backend` directly (tests, custom backends). A zero cache capacity
  // disables caching.
  EntailmentOracle(const OracleConfig& cfg, std::shared_ptr<Oracle> backend);

  const OracleConfig& config() const { return cfg_; }
  double threshold() const { return cfg_.threshold(); }
  std::string identity() const { return backend_->identity(); }

  EntailmentScores score(const EntailmentQuery& q);
  std::vector<EntailmentScores> score_batch(
      const std::vector<EntailmentQuery>& qs);
  bool entails(const EntailmentQuery& q);

  // S_E: the evidence entails the proposition.
  bool evidence_supports(const std::string& proposition,
                         const std::string& evidence);

  const CachingOracle* cache() const { return cache_.get(); }

 private:
  OracleConfig cfg_;
  std::shared_ptr<CachingOracle> cache_;
  std::shared_ptr<Oracle> backend_;
};

// Throws InvalidQuery unless both sides are non-empty after normalization.
void validate_query(const EntailmentQuery& q);

// 64-bit FNV-1a, used for config fingerprints and dataset hashes.
uint64_t fnv1a64(std::string_view data, uint64_t seed = 14695981039346656037ULL);
std::string hex64(uint64_t v);

}  // namespace vasr

#endif  // VASR_ORACLE_H_

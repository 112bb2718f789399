#include "vasr/oracle.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "vasr/errors.h"
#include "vasr/lexicon.h"
#include "vasr/remote_client.h"
#include "vasr/text.h"

namespace vasr {
namespace {

using ConstraintMap = std::map<std::string, std::set<std::string>>;

// Splits normalized text at [.!?] followed by a space.
std::vector<std::string> normalized_sentences(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i + 1 < text.size(); ++i) {
    char c = text[i];
    if ((c == '.' || c == '!' || c == '?') && text[i + 1] == ' ') {
      out.push_back(text.substr(start, i - start));
      start = i + 2;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

// (kind -> values) over normalized text, negation replaced by a
// per-sentence polarity value.
ConstraintMap constraint_map(const std::string& normalized,
                             const TriggerTables& triggers) {
  ConstraintMap out;
  for (const auto& s : normalized_sentences(normalized)) {
    bool negated = false;
    for (const Modifier& m : extract_constraints(s, triggers).constraints) {
      if (m.kind == ModifierKind::kNegation) {
        negated = true;
        continue;
      }
      out[std::string(kind_name(m.kind))].insert(m.value);
    }
    out["polarity"].insert(negated ? "neg" : "pos");
  }
  return out;
}

}  // namespace

std::string_view backend_name(Backend b) {
  return b == Backend::kRemote ? "remote" : "lexical_baseline";
}

double default_threshold(Backend b) {
  return b == Backend::kRemote ? 0.5 : 0.8;
}

void OracleConfig::validate() const {
  double t = threshold();
  if (!(t > 0.0 && t < 1.0)) {
    throw ConfigError("entail_threshold must be in (0,1)");
  }
  if (backend == Backend::kRemote && remote_endpoint.empty()) {
    throw ConfigError("remote backend requires an endpoint URL");
  }
  if (backend != Backend::kRemote && !remote_endpoint.empty()) {
    throw ConfigError("endpoint URL given for a non-remote backend");
  }
}

bool entails_scores(const EntailmentScores& s, double threshold) {
  return s.entail > threshold && s.entail > s.contradict;
}

EntailmentScores Oracle::score(const EntailmentQuery& q) {
  return score_batch({q}).front();
}

void validate_query(const EntailmentQuery& q) {
  if (normalize_text(q.premise).empty()) {
    throw InvalidQuery("premise is empty after normalization");
  }
  if (normalize_text(q.hypothesis).empty()) {
    throw InvalidQuery("hypothesis is empty after normalization");
  }
}

EntailmentScores LexicalBaselineOracle::compute(
    std::string_view premise, std::string_view hypothesis) const {
  // Scores depend on the normalized texts only, so caching on normalized
  // keys is transparent.
  const std::string np = normalize_text(premise);
  const std::string nh = normalize_text(hypothesis);
  std::set<std::string> tp = content_tokens(np);
  std::set<std::string> th = content_tokens(nh);
  double overlap;
  if (th.empty()) {
    overlap = np == nh ? 1.0 : 0.0;
  } else {
    size_t shared = 0;
    for (const auto& t : th) shared += tp.count(t);
    overlap = static_cast<double>(shared) / static_cast<double>(th.size());
  }

  ConstraintMap cp = constraint_map(np, triggers_);
  ConstraintMap ch = constraint_map(nh, triggers_);
  size_t total = 0;
  size_t matched = 0;
  bool disagree = false;
  for (const auto& [kind, values] : ch) {
    auto it = cp.find(kind);
    for (const auto& v : values) {
      ++total;
      if (it != cp.end() && it->second.count(v)) ++matched;
    }
    if (it != cp.end() && !it->second.empty() &&
        !std::includes(it->second.begin(), it->second.end(), values.begin(),
                       values.end())) {
      disagree = true;
    }
  }
  double recall = total == 0 ? 1.0
                             : static_cast<double>(matched) /
                                   static_cast<double>(total);

  EntailmentScores s;
  s.entail = overlap * recall;
  s.contradict = disagree ? 1.0 - s.entail : 0.0;
  s.neutral = std::max(0.0, 1.0 - s.entail - s.contradict);
  return s;
}

std::vector<EntailmentScores> LexicalBaselineOracle::score_batch(
    const std::vector<EntailmentQuery>& queries) {
  std::vector<EntailmentScores> out;
  out.reserve(queries.size());
  for (const auto& q : queries) out.push_back(compute(q.premise, q.hypothesis));
  return out;
}

CachingOracle::CachingOracle(std::shared_ptr<Oracle> inner, size_t capacity)
    : inner_(std::move(inner)), capacity_(capacity) {}

std::optional<EntailmentScores> CachingOracle::lookup(const std::string& key) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = index_.find(key);
  if (it == index_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  lru_.splice(lru_.begin(), lru_, it->second);
  return it->second->second;
}

void CachingOracle::store(const std::string& key, const EntailmentScores& s) {
  std::lock_guard<std::mutex> lock(mu_);
  if (capacity_ == 0) return;
  auto it = index_.find(key);
  if (it != index_.end()) {
    lru_.splice(lru_.begin(), lru_, it->second);
    return;
  }
  lru_.emplace_front(key, s);
  index_[key] = lru_.begin();
  while (lru_.size() > capacity_) {
    index_.erase(lru_.back().first);
    lru_.pop_back();
  }
}

std::vector<EntailmentScores> CachingOracle::score_batch(
    const std::vector<EntailmentQuery>& queries) {
  std::vector<EntailmentScores> out(queries.size());
  std::vector<EntailmentQuery> missing;
  std::vector<size_t> missing_at;
  std::vector<std::string> keys(queries.size());
  const std::string id = inner_->identity();
  for (size_t i = 0; i < queries.size(); ++i) {
    std::string p = normalize_text(queries[i].premise);
    std::string h = normalize_text(queries[i].hypothesis);
    // Length-prefixed so no separator can collide with text content.
    keys[i] = std::to_string(id.size()) + ":" + id + std::to_string(p.size()) +
              ":" + p + std::to_string(h.size()) + ":" + h;
    if (auto hit = lookup(keys[i])) {
      out[i] = *hit;
    } else {
      missing.push_back(queries[i]);
      missing_at.push_back(i);
    }
  }
  if (!missing.empty()) {
    std::vector<EntailmentScores> fresh = inner_->score_batch(missing);
    if (fresh.size() != missing.size()) {
      throw RemoteUnavailable("oracle returned misaligned batch");
    }
    for (size_t j = 0; j < missing.size(); ++j) {
      out[missing_at[j]] = fresh[j];
      store(keys[missing_at[j]], fresh[j]);
    }
  }
  return out;
}

size_t CachingOracle::hits() const {
  std::lock_guard<std::mutex> lock(mu_);
  return hits_;
}

size_t CachingOracle::misses() const {
  std::lock_guard<std::mutex> lock(mu_);
  return misses_;
}

size_t CachingOracle::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return lru_.size();
}

namespace {

std::shared_ptr<Oracle> make_backend(const OracleConfig& cfg) {
  if (cfg.backend == Backend::kRemote) {
    RemoteClientOptions opts;
    opts.endpoint = cfg.remote_endpoint;
    return std::make_shared<RemoteOracle>(opts);
  }
  return std::make_shared<LexicalBaselineOracle>();
}

}  // namespace

EntailmentOracle::EntailmentOracle(const OracleConfig& cfg)
    : EntailmentOracle(cfg, nullptr) {}

EntailmentOracle::EntailmentOracle(const OracleConfig& cfg,
                                   std::shared_ptr<Oracle> backend)
    : cfg_(cfg) {
  cfg_.validate();
  std::shared_ptr<Oracle> inner = backend ? std::move(backend)
                                          : make_backend(cfg_);
  if (cfg_.cache_capacity > 0) {
    cache_ = std::make_shared<CachingOracle>(inner, cfg_.cache_capacity);
    backend_ = cache_;
  } else {
    backend_ = inner;
  }
}

EntailmentScores EntailmentOracle::score(const EntailmentQuery& q) {
  validate_query(q);
  return backend_->score(q);
}

std::vector<EntailmentScores> EntailmentOracle::score_batch(
    const std::vector<EntailmentQuery>& qs) {
  for (const auto& q : qs) validate_query(q);
  if (qs.empty()) return {};
  return backend_->score_batch(qs);
}

bool EntailmentOracle::entails(const EntailmentQuery& q) {
  return entails_scores(score(q), threshold());
}

bool EntailmentOracle::evidence_supports(const std::string& proposition,
                                         const std::string& evidence) {
  return entails(EntailmentQuery{evidence, proposition});
}

uint64_t fnv1a64(std::string_view data, uint64_t seed) {
  uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace vasr

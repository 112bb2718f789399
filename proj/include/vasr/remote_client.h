#ifndef VASR_REMOTE_CLIENT_H_
#define VASR_REMOTE_CLIENT_H_

#include <chrono>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vasr/oracle.h"

namespace vasr {

struct RemoteClientOptions {
  std::string endpoint;  // "http://host:port"
  size_t batch_size = 64;
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  int timeout_seconds = 60;
  size_t max_in_flight = 4;  // concurrent batches across all callers
};

struct ServiceHealth {
  std::string status;
  std::map<std::string, std::string> models;  // nli, similarity, lm
};

// HTTP client for the model service wire protocol:
//   POST /nli         {"pairs": [{"premise", "hypothesis"}]}
//                     -> {"scores": [{"entail", "neutral", "contradict"}]}
//   POST /similarity  {"pairs": [{"a", "b"}]} -> {"scores": [number]}
//   POST /perplexity  {"texts": [string]} -> {"scores": [number]}
//   GET  /health      -> {"status": "ok", "models": {...}}
// Requests are split into batches of `batch_size`; each batch is retried
// with exponential backoff and RemoteUnavailable is thrown once attempts are
// exhausted or a response is malformed. Thread-safe.
class RemoteClient {
 public:
  explicit RemoteClient(RemoteClientOptions options);
  ~RemoteClient();

  const RemoteClientOptions& options() const { return options_; }

  std::vector<EntailmentScores> nli(const std::vector<EntailmentQuery>& pairs);
  std::vector<double> similarity(
      const std::vector<std::pair<std::string, std::string>>& pairs);
  std::vector<double> perplexity(const std::vector<std::string>& texts);
  ServiceHealth health();

 private:
  struct Impl;
  RemoteClientOptions options_;
  std::unique_ptr<Impl> impl_;
};

// Oracle backed by RemoteClient::nli.
class RemoteOracle : public Oracle {
 public:
  explicit RemoteOracle(RemoteClientOptions options)
      : client_(std::move(options)) {}

  std::string identity() const override {
    return "remote:" + client_.options().endpoint;
  }
  std::vector<EntailmentScores> score_batch(
      const std::vector<EntailmentQuery>& queries) override {
    return client_.nli(queries);
  }

  RemoteClient& client() { return client_; }

 private:
  RemoteClient client_;
};

}  // namespace vasr

#endif  // VASR_REMOTE_CLIENT_H_

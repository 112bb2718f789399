#include "vasr/remote_client.h"

#include <cmath>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "vasr/errors.h"

namespace vasr {

using nlohmann::json;

struct RemoteClient::Impl {
  std::mutex mu;
  std::condition_variable cv;
  size_t in_flight = 0;
};

namespace {

class SlotGuard {
 public:
  SlotGuard(std::mutex& mu, std::condition_variable& cv, size_t& in_flight,
            size_t limit)
      : mu_(mu), cv_(cv), in_flight_(in_flight) {
    std::unique_lock<std::mutex> lock(mu_);
    cv_.wait(lock, [&] { return in_flight_ < limit; });
    ++in_flight_;
  }
  ~SlotGuard() {
    {
      std::lock_guard<std::mutex> lock(mu_);
      --in_flight_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex& mu_;
  std::condition_variable& cv_;
  size_t& in_flight_;
};

double require_number(const json& v, const std::string& what) {
  if (!v.is_number()) throw RemoteUnavailable("malformed response: " + what);
  double d = v.get<double>();
  if (!std::isfinite(d)) throw RemoteUnavailable("non-finite " + what);
  return d;
}

const json& scores_array(const json& body, size_t expected) {
  auto it = body.find("scores");
  if (it == body.end() || !it->is_array()) {
    throw RemoteUnavailable("malformed response: missing scores array");
  }
  if (it->size() != expected) {
    throw RemoteUnavailable("malformed response: expected " +
                            std::to_string(expected) + " scores, got " +
                            std::to_string(it->size()));
  }
  return *it;
}

}  // namespace

RemoteClient::RemoteClient(RemoteClientOptions options)
    : options_(std::move(options)), impl_(std::make_unique<Impl>()) {
  if (options_.endpoint.empty()) throw ConfigError("empty remote endpoint");
  if (options_.batch_size == 0) options_.batch_size = 1;
  if (options_.max_attempts < 1) options_.max_attempts = 1;
  if (options_.max_in_flight == 0) options_.max_in_flight = 1;
}

RemoteClient::~RemoteClient() = default;

namespace {

// One request with retries. Returns the parsed JSON body.
json call(const RemoteClientOptions& opts, const std::string& method,
          const std::string& path, const json* body) {
  std::string last_error;
  auto backoff = opts.initial_backoff;
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    httplib::Client cli(opts.endpoint);
    cli.set_connection_timeout(opts.timeout_seconds, 0);
    cli.set_read_timeout(opts.timeout_seconds, 0);
    cli.set_write_timeout(opts.timeout_seconds, 0);
    httplib::Result res = method == "GET"
                              ? cli.Get(path)
                              : cli.Post(path, body->dump(), "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500 || res->status == 429) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw RemoteUnavailable(path + ": HTTP " + std::to_string(res->status));
    }
    try {
      return json::parse(res->body);
    } catch (const json::parse_error&) {
      throw RemoteUnavailable(path + ": response is not JSON");
    }
  }
  throw RemoteUnavailable(path + ": " + last_error + " after " +
                          std::to_string(opts.max_attempts) + " attempts");
}

}  // namespace

std::vector<EntailmentScores> RemoteClient::nli(
    const std::vector<EntailmentQuery>& pairs) {
  std::vector<EntailmentScores> out;
  out.reserve(pairs.size());
  for (size_t start = 0; start < pairs.size(); start += options_.batch_size) {
    size_t end = std::min(pairs.size(), start + options_.batch_size);
    json req = {{"pairs", json::array()}};
    for (size_t i = start; i < end; ++i) {
      req["pairs"].push_back(
          {{"premise", pairs[i].premise}, {"hypothesis", pairs[i].hypothesis}});
    }
    json body;
    {
      SlotGuard slot(impl_->mu, impl_->cv, impl_->in_flight,
                     options_.max_in_flight);
      body = call(options_, "POST", "/nli", &req);
    }
    const json& scores = scores_array(body, end - start);
    for (const json& s : scores) {
      if (!s.is_object()) throw RemoteUnavailable("malformed nli score");
      EntailmentScores e;
      e.entail = require_number(s.value("entail", json()), "entail");
      e.neutral = require_number(s.value("neutral", json()), "neutral");
      e.contradict = require_number(s.value("contradict", json()), "contradict");
      for (double v : {e.entail, e.neutral, e.contradict}) {
        if (v < 0.0 || v > 1.0) throw RemoteUnavailable("nli score out of [0,1]");
      }
      if (std::abs(e.entail + e.neutral + e.contradict - 1.0) > 1e-3) {
        throw RemoteUnavailable("nli scores do not sum to 1");
      }
      out.push_back(e);
    }
  }
  return out;
}

std::vector<double> RemoteClient::similarity(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (size_t start = 0; start < pairs.size(); start += options_.batch_size) {
    size_t end = std::min(pairs.size(), start + options_.batch_size);
    json req = {{"pairs", json::array()}};
    for (size_t i = start; i < end; ++i) {
      req["pairs"].push_back({{"a", pairs[i].first}, {"b", pairs[i].second}});
    }
    json body;
    {
      SlotGuard slot(impl_->mu, impl_->cv, impl_->in_flight,
                     options_.max_in_flight);
      body = call(options_, "POST", "/similarity", &req);
    }
    for (const json& s : scores_array(body, end - start)) {
      double v = require_number(s, "similarity");
      if (v < -1.0 - 1e-6 || v > 1.0 + 1e-6) {
        throw RemoteUnavailable("similarity out of [-1,1]");
      }
      out.push_back(v);
    }
  }
  return out;
}

std::vector<double> RemoteClient::perplexity(
    const std::vector<std::string>& texts) {
  std::vector<double> out;
  out.reserve(texts.size());
  for (size_t start = 0; start < texts.size(); start += options_.batch_size) {
    size_t end = std::min(texts.size(), start + options_.batch_size);
    json req = {{"texts", json::array()}};
    for (size_t i = start; i < end; ++i) req["texts"].push_back(texts[i]);
    json body;
    {
      SlotGuard slot(impl_->mu, impl_->cv, impl_->in_flight,
                     options_.max_in_flight);
      body = call(options_, "POST", "/perplexity", &req);
    }
    for (const json& s : scores_array(body, end - start)) {
      double v = require_number(s, "perplexity");
      if (v <= 0.0) throw RemoteUnavailable("perplexity must be positive");
      out.push_back(v);
    }
  }
  return out;
}

ServiceHealth RemoteClient::health() {
  json body = call(options_, "GET", "/health", nullptr);
  ServiceHealth h;
  if (!body.is_object() || !body.contains("status") ||
      !body["status"].is_string()) {
    throw RemoteUnavailable("malformed /health response");
  }
  h.status = body["status"].get<std::string>();
  if (auto it = body.find("models"); it != body.end() && it->is_object()) {
    for (const auto& [k, v] : it->items()) {
      if (v.is_string()) h.models[k] = v.get<std::string>();
    }
  }
  return h;
}

}  // namespace vasr

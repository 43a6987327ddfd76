// HTTP JSON API: classification, analysis geometry and live games against the
// engine. Handlers are plain member functions so they can be exercised without
// a socket; mount() wires them onto an httplib::Server.

#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include <json.hpp>

#include "ueg/solver.hpp"

namespace httplib {
class Server;
}

namespace ueg::service {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;
using Params = std::map<std::string, std::string>;

struct Config {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::chrono::seconds session_ttl = std::chrono::hours(24);
  long long hint_budget = default_hint_budget;
  int max_side = 1000;
  std::string static_dir;
  std::string snapshot_path;
  std::string cors_origin = "*";
};

struct Reply {
  int status = 200;
  json body;
};

class SessionStore {
 public:
  struct Entry {
    std::mutex mutex;
    Session session;
    Clock::time_point created;
  };

  explicit SessionStore(std::chrono::seconds ttl) : ttl_(ttl) {}

  std::string add(Session session, Clock::time_point now = Clock::now());
  /// Re-inserts under a known id (snapshot restore).
  void put(const std::string& id, Session session, Clock::time_point now = Clock::now());
  std::shared_ptr<Entry> find(const std::string& id) const;
  std::size_t purge_expired(Clock::time_point now = Clock::now());
  std::size_t size() const;

  /// {"games": [ApiGame, ...]} in id order.
  json snapshot() const;

 private:
  std::chrono::seconds ttl_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<Entry>> entries_;
};

/// 128 random bits as 32 lowercase hex digits.
std::string new_session_id();

class GameService {
 public:
  explicit GameService(Config config = {});

  Reply classify(const Params& query) const;
  Reply analysis(const Params& query) const;
  Reply create_game(const std::string& body);
  Reply move(const std::string& id, const std::string& body);
  Reply get_game(const std::string& id) const;
  Reply hint(const std::string& id) const;

  void mount(httplib::Server& server);

  SessionStore& store() { return store_; }
  const Config& config() const { return config_; }

  /// Restores games from a snapshot document; returns how many were loaded.
  std::size_t restore(const json& snapshot);

 private:
  Config config_;
  SessionStore store_;
};

Reply error_reply(int status, const std::string& code, const std::string& detail);

/// Blocks serving until SIGINT/SIGTERM; writes the snapshot file on shutdown
/// when configured.
int run(const Config& config);

}  // namespace ueg::service

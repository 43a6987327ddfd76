#include "ueg/service.hpp"

#include <charconv>
#include <csignal>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <httplib.h>

#include "ueg/wire.hpp"

namespace ueg::service {

namespace {

struct http_error {
  int status;
  std::string code;
  std::string detail;
};

int parse_int(const std::string& name, const std::string& text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw http_error{400, "bad_request", "parameter '" + name + "' must be an integer"};
  }
  return value;
}

int json_int(const json& body, const char* name) {
  auto it = body.find(name);
  if (it == body.end() || !it->is_number_integer()) {
    throw http_error{400, "bad_request", std::string("field '") + name +
                                             "' must be an integer"};
  }
  return it->get<int>();
}

std::pair<GridDims, Vertex> position(const Config& config, int m, int n, int a, int b) {
  if (m < 1 || n < 1 || m > config.max_side || n > config.max_side) {
    throw http_error{422, "out_of_range",
                     "board " + std::to_string(m) + "x" + std::to_string(n) +
                         " must have sides in [1, " + std::to_string(config.max_side) + "]"};
  }
  const GridDims dims = make_dims(m, n);
  const Vertex v{a, b};
  if (!is_valid(dims, v)) {
    throw http_error{422, "out_of_range", "vertex " + to_string(v) + " is outside the " +
                                              std::to_string(m) + "x" + std::to_string(n) +
                                              " grid"};
  }
  return {dims, v};
}

std::pair<GridDims, Vertex> position(const Config& config, const Params& query) {
  auto get = [&](const char* name) {
    auto it = query.find(name);
    if (it == query.end()) {
      throw http_error{400, "bad_request", std::string("missing parameter '") + name + "'"};
    }
    return parse_int(name, it->second);
  };
  return position(config, get("m"), get("n"), get("a"), get("b"));
}

json parse_body(const std::string& body) {
  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    throw http_error{400, "bad_request", "body must be a JSON object"};
  }
  return parsed;
}

template <typename F>
Reply guarded(F&& f) {
  try {
    return f();
  } catch (const http_error& e) {
    return error_reply(e.status, e.code, e.detail);
  } catch (const invariant_violation& e) {
    return error_reply(500, "internal", e.what());
  } catch (const std::exception& e) {
    return error_reply(500, "internal", e.what());
  }
}

}  // namespace

Reply error_reply(int status, const std::string& code, const std::string& detail) {
  return {status, json{{"error", code}, {"detail", detail}}};
}

std::string new_session_id() {
  static std::mutex mutex;
  static std::random_device device;
  std::lock_guard lock(mutex);
  std::ostringstream ss;
  ss << std::hex << std::setfill('0');
  for (int i = 0; i < 4; ++i) ss << std::setw(8) << static_cast<std::uint32_t>(device());
  return ss.str();
}

std::string SessionStore::add(Session session, Clock::time_point now) {
  purge_expired(now);
  std::unique_lock lock(mutex_);
  std::string id;
  do {
    id = new_session_id();
  } while (entries_.contains(id));
  auto entry = std::make_shared<Entry>();
  entry->session = std::move(session);
  entry->created = now;
  entries_.emplace(id, std::move(entry));
  return id;
}

void SessionStore::put(const std::string& id, Session session, Clock::time_point now) {
  auto entry = std::make_shared<Entry>();
  entry->session = std::move(session);
  entry->created = now;
  std::unique_lock lock(mutex_);
  entries_[id] = std::move(entry);
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : it->second;
}

std::size_t SessionStore::purge_expired(Clock::time_point now) {
  std::unique_lock lock(mutex_);
  return std::erase_if(entries_, [&](const auto& kv) {
    return now - kv.second->created >= ttl_;
  });
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

json SessionStore::snapshot() const {
  std::vector<std::pair<std::string, std::shared_ptr<Entry>>> items;
  {
    std::shared_lock lock(mutex_);
    items.assign(entries_.begin(), entries_.end());
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json games = json::array();
  for (auto& [id, entry] : items) {
    std::lock_guard lock(entry->mutex);
    games.push_back(wire::game_json(entry->session, id));
  }
  return {{"games", std::move(games)}};
}

GameService::GameService(Config config)
    : config_(std::move(config)), store_(config_.session_ttl) {}

Reply GameService::classify(const Params& query) const {
  return guarded([&] {
    auto [dims, v] = position(config_, query);
    return Reply{200, wire::classify_json(dims, v)};
  });
}

Reply GameService::analysis(const Params& query) const {
  return guarded([&] {
    auto [dims, v] = position(config_, query);
    return Reply{200, wire::analysis_json(dims, v)};
  });
}

Reply GameService::create_game(const std::string& body) {
  return guarded([&] {
    const json req = parse_body(body);
    auto [dims, v] = position(config_, json_int(req, "m"), json_int(req, "n"),
                              json_int(req, "a"), json_int(req, "b"));
    HumanRole human = HumanRole::automatic;
    if (auto it = req.find("human_role"); it != req.end() && !it->is_null()) {
      const std::string role = it->is_string() ? it->get<std::string>() : "";
      if (role == "first") {
        human = HumanRole::first;
      } else if (role == "second") {
        human = HumanRole::second;
      } else if (role != "auto") {
        throw http_error{400, "bad_request",
                         "human_role must be \"first\", \"second\" or \"auto\""};
      }
    }
    Session session = new_session(dims, v, human, config_.hint_budget);
    json game = wire::game_json(session, "");
    game["id"] = store_.add(std::move(session));
    return Reply{201, std::move(game)};
  });
}

Reply GameService::move(const std::string& id, const std::string& body) {
  return guarded([&] {
    auto entry = store_.find(id);
    if (!entry) throw http_error{404, "not_found", "no game with id '" + id + "'"};
    const json req = parse_body(body);
    Vertex to;
    try {
      to = wire::vertex_from_json(req.at("to"));
    } catch (const std::exception&) {
      throw http_error{400, "bad_request", "field 'to' must be [x, y]"};
    }

    std::lock_guard lock(entry->mutex);
    Session& session = entry->session;
    if (session.over()) throw http_error{409, "game_over", "the game is over"};
    if (session.engine_to_move()) {
      throw http_error{409, "not_your_turn", "it is the engine's turn"};
    }
    try {
      engine_reply(session, to);
    } catch (const move_error& e) {
      throw http_error{422, "illegal_move", e.what()};
    }
    return Reply{200, wire::game_json(session, id)};
  });
}

Reply GameService::get_game(const std::string& id) const {
  return guarded([&] {
    auto entry = store_.find(id);
    if (!entry) throw http_error{404, "not_found", "no game with id '" + id + "'"};
    std::lock_guard lock(entry->mutex);
    return Reply{200, wire::game_json(entry->session, id)};
  });
}

Reply GameService::hint(const std::string& id) const {
  return guarded([&] {
    auto entry = store_.find(id);
    if (!entry) throw http_error{404, "not_found", "no game with id '" + id + "'"};
    GameState state;
    long long budget = 0;
    {
      std::lock_guard lock(entry->mutex);
      state = entry->session.state;
      budget = entry->session.hint_budget;
    }
    Hint h = ueg::hint(state, budget);
    json out{{"outcome", h.outcome ? to_string(*h.outcome) : "unknown"}};
    if (h.move) out["move"] = wire::to_json(*h.move);
    return Reply{200, std::move(out)};
  });
}

std::size_t GameService::restore(const json& snapshot) {
  std::size_t loaded = 0;
  for (const json& game : snapshot.value("games", json::array())) {
    store_.put(game.at("id").get<std::string>(),
               wire::session_from_json(game, config_.hint_budget));
    ++loaded;
  }
  return loaded;
}

namespace {

Params query_of(const httplib::Request& req) {
  Params out;
  for (const auto& [k, v] : req.params) out.emplace(k, v);
  return out;
}

void send(httplib::Response& res, const Reply& reply) {
  res.status = reply.status;
  res.set_content(reply.body.dump(), "application/json");
}

}  // namespace

void GameService::mount(httplib::Server& server) {
  const std::string origin = config_.cors_origin;
  server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  server.Get("/api/classify", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, classify(query_of(req)));
  });
  server.Get("/api/analysis", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, analysis(query_of(req)));
  });
  server.Post("/api/game", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, create_game(req.body));
  });
  server.Post(R"(/api/game/([^/]+)/move)",
              [this](const httplib::Request& req, httplib::Response& res) {
                send(res, move(req.matches[1], req.body));
              });
  server.Get(R"(/api/game/([^/]+)/hint)",
             [this](const httplib::Request& req, httplib::Response& res) {
               send(res, hint(req.matches[1]));
             });
  server.Get(R"(/api/game/([^/]+))",
             [this](const httplib::Request& req, httplib::Response& res) {
               send(res, get_game(req.matches[1]));
             });
  if (!config_.static_dir.empty()) {
    server.set_mount_point("/", config_.static_dir);
  }
}

namespace {
httplib::Server* active_server = nullptr;
}

int run(const Config& config) {
  GameService service(config);
  if (!config.snapshot_path.empty()) {
    std::ifstream in(config.snapshot_path);
    if (in) {
      json snap = json::parse(in, nullptr, false);
      if (!snap.is_discarded()) {
        std::cerr << "restored " << service.restore(snap) << " games from "
                  << config.snapshot_path << "\n";
      }
    }
  }

  httplib::Server server;
  service.mount(server);
  active_server = &server;
  auto stop = [](int) {
    if (active_server) active_server->stop();
  };
  std::signal(SIGINT, stop);
  std::signal(SIGTERM, stop);

  std::cerr << "listening on " << config.host << ":" << config.port << "\n";
  const bool ok = server.listen(config.host, config.port);
  active_server = nullptr;

  if (!config.snapshot_path.empty()) {
    std::ofstream out(config.snapshot_path);
    out << service.store().snapshot().dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace ueg::service

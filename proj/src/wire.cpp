#include "ueg/wire.hpp"

namespace ueg::wire {

json to_json(const Vertex& v) { return json::array({v.i, v.j}); }

json to_json(const Segment& s) { return json::array({s.p.x, s.p.y, s.q.x, s.q.y}); }

json to_json(const Edge& e) {
  return json::array({e.lo().i, e.lo().j, e.hi().i, e.hi().j});
}

json to_json(const Trail& t) {
  json segments = json::array();
  for (const Segment& s : t.segments) segments.push_back(to_json(s));
  return {{"root", to_json(t.root)},
          {"angle", static_cast<int>(t.angle)},
          {"closed", t.closed},
          {"segments", std::move(segments)}};
}

json to_json(const VertexSet& s) {
  json out = json::array();
  for (const Vertex& v : s) out.push_back(to_json(v));
  return out;
}

json to_json(const VertexLabeling& labels) {
  json out = json::array();
  for (const Vertex& v : all_vertices(labels.dims())) {
    out.push_back(json::array({v.i, v.j, to_string(labels.at(v))}));
  }
  return out;
}

Vertex vertex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw wire_error("expected a vertex [i, j], got " + j.dump());
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

json classify_json(const GridDims& dims, const Vertex& v) {
  json out{{"outcome", to_string(classify(dims, v))}, {"d", dims.d}};
  if (classify(dims, v) == Outcome::N) out["winning_move"] = to_json(winning_move(dims, v));
  return out;
}

json analysis_json(const GridDims& dims, const Vertex& v) {
  json out{{"m", dims.m},
           {"n", dims.n},
           {"d", dims.d},
           {"root", to_json(v)},
           {"outcome", to_string(classify(dims, v))}};
  if (classify(dims, v) == Outcome::P) {
    Trail trail = build_180_trail(dims, v);
    out["kernel"] = to_json(kernel_from_180(dims, trail));
    out["trail"] = to_json(trail);
  } else {
    WinningKernel wk = kernel_from_90(dims, v);
    out["trail"] = to_json(wk.trail);
    out["kernel"] = to_json(wk.kernel);
    out["move"] = to_json(wk.move);
    out["labels"] = to_json(wk.labels);
  }
  return out;
}

namespace {

const char* to_move(const Session& s) {
  if (s.over()) return "over";
  return s.engine_to_move() ? "engine" : "human";
}

SessionStatus status_from(const std::string& s) {
  if (s == "in_progress") return SessionStatus::in_progress;
  if (s == "engine_won") return SessionStatus::engine_won;
  if (s == "opponent_won") return SessionStatus::opponent_won;
  throw wire_error("unknown status '" + s + "'");
}

Role role_from(const std::string& s) {
  if (s == "first") return Role::first;
  if (s == "second") return Role::second;
  throw wire_error("unknown engine_role '" + s + "'");
}

}  // namespace

json game_json(const Session& session, const std::string& id) {
  const GridDims& dims = session.state.dims;
  json removed = json::array();
  for (const Edge& e : session.state.removed.edges(dims)) removed.push_back(to_json(e));
  json history = json::array();
  for (const Vertex& v : session.history) history.push_back(to_json(v));
  return {{"id", id},
          {"m", dims.m},
          {"n", dims.n},
          {"start", to_json(session.start)},
          {"root", to_json(session.state.root)},
          {"removed_edges", std::move(removed)},
          {"to_move", to_move(session)},
          {"status", to_string(session.status)},
          {"history", std::move(history)},
          {"engine_role", to_string(session.engine_role)}};
}

Session session_from_json(const json& game, long long hint_budget) {
  try {
    const GridDims dims = make_dims(game.at("m").get<int>(), game.at("n").get<int>());
    Session s;
    s.start = vertex_from_json(game.at("start"));
    s.state = initial_state(dims, s.start);
    s.state.root = vertex_from_json(game.at("root"));
    if (!is_valid(dims, s.state.root)) throw wire_error("root outside the grid");
    for (const json& e : game.at("removed_edges")) {
      if (!e.is_array() || e.size() != 4) throw wire_error("bad edge " + e.dump());
      Vertex a{e[0].get<int>(), e[1].get<int>()};
      Vertex b{e[2].get<int>(), e[3].get<int>()};
      if (!is_valid(dims, a) || !is_valid(dims, b)) throw wire_error("edge outside grid");
      s.state.removed.insert(dims, Edge(a, b));
    }
    for (const json& v : game.at("history")) s.history.push_back(vertex_from_json(v));
    s.engine_role = role_from(game.at("engine_role").get<std::string>());
    s.status = status_from(game.at("status").get<std::string>());
    s.hint_budget = hint_budget;
    const Role winning =
        classify(dims, s.start) == Outcome::N ? Role::first : Role::second;
    s.kernel_strategy = s.engine_role == winning;
    s.kernel = session_kernel(dims, s.start, s.engine_role);
    if (static_cast<int>(s.history.size()) != s.state.removed.size()) {
      throw wire_error("history length does not match removed edge count");
    }
    return s;
  } catch (const wire_error&) {
    throw;
  } catch (const std::exception& e) {
    throw wire_error(std::string("malformed game: ") + e.what());
  }
}

}  // namespace ueg::wire

// JSON shapes shared by the CLI (--format json) and the HTTP service.
//
//   vertex   [i, j]
//   segment  [x1, y1, x2, y2]
//   edge     [x1, y1, x2, y2] with the smaller endpoint first
//   trail    {"root", "angle": 90|180, "closed", "segments"}
//   labels   [[i, j, "on_trail"|"positive"|"negative"], ...] row-major
//   game     {"id", "m", "n", "start", "root", "removed_edges", "to_move",
//             "status", "history", "engine_role"}

#pragma once

#include <string>

#include <json.hpp>

#include "ueg/billiard.hpp"
#include "ueg/core.hpp"
#include "ueg/kernels.hpp"
#include "ueg/regions.hpp"
#include "ueg/solver.hpp"

namespace ueg::wire {

using json = nlohmann::json;

/// Malformed or out-of-range wire input.
class wire_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json to_json(const Vertex& v);
json to_json(const Segment& s);
json to_json(const Edge& e);
json to_json(const Trail& t);
json to_json(const VertexSet& s);
json to_json(const VertexLabeling& labels);

Vertex vertex_from_json(const json& j);

/// {"outcome", "d", "winning_move"?}
json classify_json(const GridDims& dims, const Vertex& v);

/// P-vertex: the 180-degree trail and its kernel. N-vertex: the closed
/// 90-degree trail, region labels, the move and the kernel of G - uv.
json analysis_json(const GridDims& dims, const Vertex& v);

json game_json(const Session& session, const std::string& id);

/// Rebuilds a Session from its wire form; throws wire_error when the payload
/// is malformed or inconsistent.
Session session_from_json(const json& game,
                          long long hint_budget = default_hint_budget);

}  // namespace ueg::wire

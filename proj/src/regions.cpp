#include "ueg/regions.hpp"

#include <algorithm>
#include <stdexcept>

namespace ueg {

const char* to_string(Label label) {
  switch (label) {
    case Label::on_trail: return "on_trail";
    case Label::positive: return "positive";
    case Label::negative: return "negative";
  }
  return "?";
}

std::vector<Vertex> VertexLabeling::with_label(Label label) const {
  std::vector<Vertex> out;
  for (int idx = 0; idx < static_cast<int>(labels_.size()); ++idx) {
    if (labels_[idx] == label) out.push_back(vertex_at(dims_, idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexLabeling label_vertices(const GridDims& dims, const Trail& trail,
                              CastSide side) {
  if (!trail.closed || trail.angle != Angle::right) {
    throw std::invalid_argument("region labeling needs a closed 90-degree trail");
  }
  std::vector<Label> labels(dims.vertex_count(), Label::negative);
  for (const Vertex& v : trail_vertices(dims, trail)) {
    labels[vertex_index(dims, v)] = Label::on_trail;
  }

  for (int idx = 0; idx < dims.vertex_count(); ++idx) {
    if (labels[idx] == Label::on_trail) continue;
    const Vertex v = vertex_at(dims, idx);
    int crossings = 0;
    for (const Segment& seg : trail.segments) {
      const int lo = std::min(seg.p.y, seg.q.y);
      const int hi = std::max(seg.p.y, seg.q.y);
      if (v.j < lo || v.j >= hi) continue;
      const int slope = (seg.q.x - seg.p.x) / (seg.q.y - seg.p.y);
      const int cross_x = seg.p.x + slope * (v.j - seg.p.y);
      if (side == CastSide::right ? cross_x > v.i : cross_x < v.i) ++crossings;
    }
    labels[idx] = (crossings % 2 == 1) ? Label::positive : Label::negative;
  }
  return VertexLabeling(dims, std::move(labels));
}

}  // namespace ueg

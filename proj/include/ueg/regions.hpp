// Positive/negative labeling of the regions cut out by a closed 90-degree
// trail, sampled at the grid vertices. Unbounded regions are negative.

#pragma once

#include <vector>

#include "ueg/billiard.hpp"
#include "ueg/core.hpp"

namespace ueg {

enum class Label { on_trail, positive, negative };

const char* to_string(Label label);

class VertexLabeling {
 public:
  VertexLabeling() = default;
  VertexLabeling(GridDims dims, std::vector<Label> labels)
      : dims_(dims), labels_(std::move(labels)) {}

  const GridDims& dims() const { return dims_; }
  Label at(const Vertex& v) const { return labels_[vertex_index(dims_, v)]; }
  std::vector<Vertex> with_label(Label label) const;

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

 private:
  GridDims dims_;
  std::vector<Label> labels_;
};

enum class CastSide { right, left };

/// Even-odd crossing count along a horizontal ray from each vertex. A segment
/// meets the ray at height j iff min(y) <= j < max(y). `side` selects which
/// half-line is cast; both give the same labels for a closed trail.
VertexLabeling label_vertices(const GridDims& dims, const Trail& trail,
                              CastSide side = CastSide::right);

}  // namespace ueg

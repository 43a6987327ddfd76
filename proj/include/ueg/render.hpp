// ASCII and SVG drawings of a board with optional trail, kernel and region
// overlays. Output is a pure function of the Scene.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ueg/billiard.hpp"
#include "ueg/core.hpp"
#include "ueg/kernels.hpp"
#include "ueg/regions.hpp"

namespace ueg {

struct Scene {
  GridDims dims;
  std::optional<Vertex> root;
  std::optional<Vertex> move;  // the chosen answer at an N-position root
  std::vector<Trail> trails;
  std::optional<VertexSet> kernel;
  std::optional<VertexLabeling> labels;
  EdgeSet removed;
};

/// One character per vertex, top row first: '@' root, '*' move target,
/// '#' kernel, '+' trail, 'o' positive region, '.' otherwise.
std::string render_ascii(const Scene& scene);

/// Standalone SVG in the rectangle [0, m+1] x [0, n+1] with the origin at the
/// bottom left.
std::string render_svg(const Scene& scene, int cell = 40);

}  // namespace ueg

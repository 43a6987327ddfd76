#include "ueg/kernels.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ueg {

bool is_even_kernel(const GridDims& dims, const EdgeSet& removed,
                    const VertexSet& S) {
  if (S.empty()) return false;
  std::vector<char> member(dims.vertex_count(), 0);
  for (const Vertex& v : S) {
    if (!is_valid(dims, v)) return false;
    member[vertex_index(dims, v)] = 1;
  }
  for (const Vertex& u : all_vertices(dims)) {
    int inside = 0;
    for (const Vertex& w : neighbors(dims, u)) {
      if (removed.contains(dims, Edge(u, w))) continue;
      if (member[vertex_index(dims, w)]) ++inside;
    }
    const bool in_s = member[vertex_index(dims, u)];
    if (in_s && inside > 0) return false;
    if (!in_s && inside % 2 != 0) return false;
  }
  return true;
}

bool is_even_kernel(const GridDims& dims, const VertexSet& S) {
  return is_even_kernel(dims, EdgeSet(dims), S);
}

VertexSet kernel_from_180(const GridDims& dims, const Trail& trail) {
  if (trail.angle != Angle::straight) {
    throw std::invalid_argument("kernel_from_180 needs a 180-degree trail");
  }
  // Distinct (slope, line constant) pairs through each vertex.
  std::vector<std::set<std::pair<int, int>>> lines(dims.vertex_count());
  for (const Segment& seg : trail.segments) {
    const std::pair<int, int> line{seg.slope(), seg.line_constant()};
    for (const Point& pt : seg.points()) {
      Vertex v{pt.x, pt.y};
      if (is_valid(dims, v)) lines[vertex_index(dims, v)].insert(line);
    }
  }
  VertexSet out;
  for (int idx = 0; idx < dims.vertex_count(); ++idx) {
    if (lines[idx].size() == 1) out.insert(vertex_at(dims, idx));
  }
  return out;
}

WinningKernel kernel_from_90(const GridDims& dims, const Vertex& u) {
  Trail trail = build_closed_90_trail(dims, u);
  VertexLabeling labels = label_vertices(dims, trail);

  std::vector<Vertex> candidates = neighbors(dims, u);
  std::sort(candidates.begin(), candidates.end());
  auto pick = std::find_if(candidates.begin(), candidates.end(),
                           [&](const Vertex& w) {
                             return labels.at(w) == Label::positive;
                           });
  if (pick == candidates.end()) {
    throw invariant_violation("no positive neighbor of " + to_string(u));
  }

  VertexSet kernel;
  for (const Vertex& w : labels.with_label(Label::positive)) {
    if (parity(w) != parity(u)) kernel.insert(w);
  }
  return WinningKernel{*pick, std::move(kernel), std::move(trail),
                       std::move(labels)};
}

namespace {

int mod(int value, int modulus) {
  const int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

// The k in [0, d] with s = +-k (mod 2d).
int fold(int s, int d) {
  const int r = mod(s, 2 * d);
  return std::min(r, 2 * d - r);
}

bool admissible(const GridDims& dims, const Vertex& v) {
  return v.i % dims.d != 0 && v.j % dims.d != 0;
}

}  // namespace

bool in_s_k(const GridDims& dims, const Vertex& v, int k) {
  if (!admissible(dims, v)) return false;
  return fold(v.i + v.j, dims.d) == k || fold(v.i - v.j, dims.d) == k;
}

VertexSet s_k_kernel(const GridDims& dims, int k) {
  if (k < 0 || k > dims.d) {
    throw std::invalid_argument("k=" + std::to_string(k) + " outside [0, " +
                                std::to_string(dims.d) + "]");
  }
  VertexSet out;
  for (const Vertex& v : all_vertices(dims)) {
    if (in_s_k(dims, v, k)) out.insert(v);
  }
  return out;
}

std::vector<int> kernel_memberships(const GridDims& dims, const Vertex& v) {
  if (!is_valid(dims, v) || !admissible(dims, v)) {
    throw std::invalid_argument("kernel_memberships needs d to divide neither "
                                "coordinate of " + to_string(v));
  }
  std::vector<int> out;
  for (int k = 0; k <= dims.d; ++k) {
    if (in_s_k(dims, v, k)) out.push_back(k);
  }
  return out;
}

}  // namespace ueg

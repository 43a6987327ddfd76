// Even kernels: a nonempty independent vertex set S such that every vertex
// outside S has an even number of neighbors in S. A root inside an even kernel
// is a P-position.

#pragma once

#include <set>
#include <vector>

#include "ueg/billiard.hpp"
#include "ueg/core.hpp"
#include "ueg/regions.hpp"

namespace ueg {

using VertexSet = std::set<Vertex>;

/// Checks the even-kernel conditions in G(m x n) minus `removed`.
bool is_even_kernel(const GridDims& dims, const EdgeSet& removed,
                    const VertexSet& S);
bool is_even_kernel(const GridDims& dims, const VertexSet& S);

/// Vertices of a 180-degree trail that lie on exactly one diagonal line of the
/// trail. Contains the root.
VertexSet kernel_from_180(const GridDims& dims, const Trail& trail);

/// The winning answer at an N-position root u: a move to `move`, after which
/// `kernel` is an even kernel of G - {u, move} containing `move`.
struct WinningKernel {
  Vertex move;
  VertexSet kernel;
  Trail trail;
  VertexLabeling labels;
};

/// Requires d | a or d | b. Picks the smallest positive-labeled neighbor.
WinningKernel kernel_from_90(const GridDims& dims, const Vertex& u);

/// S_k = {(i,j) : d !| i, d !| j, i +- j = +-k (mod 2d)}, 0 <= k <= d.
VertexSet s_k_kernel(const GridDims& dims, int k);

bool in_s_k(const GridDims& dims, const Vertex& v, int k);

/// The k in [0, d] with v in S_k. Requires d !| a and d !| b.
std::vector<int> kernel_memberships(const GridDims& dims, const Vertex& v);

}  // namespace ueg

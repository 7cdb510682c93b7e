#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "treeq/errors.hpp"

namespace treeq {

using VertexId = std::uint32_t;
using VertexPair = std::pair<VertexId, VertexId>;

/// An abstract simplicial complex: a vertex set plus simplices of two or
/// more vertices, stored as sorted id lists and closed under taking faces.
/// The constructor rejects inputs that violate downward closure.
class SimplicialComplex {
  public:
    SimplicialComplex(std::set<VertexId> vertices, std::set<std::vector<VertexId>> simplices);

    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::set<std::vector<VertexId>>& simplices() const { return simplices_; }

    /// Number of k-simplices; k = 0 counts vertices.
    std::size_t count(std::size_t dim) const;

    /// Largest k with a k-simplex present (0 for a bare point cloud).
    std::size_t max_dimension() const;

  private:
    std::set<VertexId> vertices_;
    std::set<std::vector<VertexId>> simplices_;
};

/// Builds the complex whose simplices are the cliques of the relation graph
/// with at most max_dim + 1 vertices. Relations must be irreflexive pairs
/// over the vertex set. When exclude_top_cell is set and the entire vertex
/// set forms a clique small enough to appear, that one top simplex is
/// dropped, leaving its boundary.
SimplicialComplex clique_complex(const std::set<VertexId>& vertices,
                                 const std::set<VertexPair>& relations, std::size_t max_dim,
                                 bool exclude_top_cell);

/// Alternating sum over dimensions: sum_k (-1)^k (number of k-simplices).
long long euler_characteristic(const SimplicialComplex& complex);

/// Three vertices joined pairwise: the circle built from points.
SimplicialComplex make_s1_preset();

/// Four vertices joined pairwise with the solid top cell removed: the
/// 2-sphere as the boundary of a 3-simplex.
SimplicialComplex make_s2_preset();

}  // namespace treeq

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "linearr/arrangement.hpp"
#include "linearr/exact_linalg.hpp"

namespace linearr {

/// Weighted simple graph describing a plumbed 3-manifold: one circle bundle
/// over the sphere per vertex (Euler number = weight), glued along edges.
class PlumbingGraph {
 public:
  struct Vertex {
    std::int64_t weight;
    std::string label;
  };

  /// Throws std::invalid_argument on loops, repeated edges or bad endpoints.
  PlumbingGraph(std::vector<Vertex> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t component_count() const;
  bool connected() const { return component_count() == 1; }
  /// |E| - |V| + #components.
  std::int64_t b1() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Incidence graph of the arrangement with weights 1 - |P_i| on line i and -1
/// on every point. Vertex order: lines 0..n, then points in arrangement order.
PlumbingGraph plumbing_graph(const Arrangement& arr);

/// Symmetric matrix with the weights on the diagonal and 1 on every edge.
IntMatrix plumbing_matrix(const PlumbingGraph& g);

struct H1Result {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  std::int64_t graph_b1 = 0;
  std::size_t coker_free_rank = 0;
};

/// H_1 of the plumbed manifold: Z^{b1(graph)} (+) coker(plumbing_matrix).
/// Throws std::invalid_argument if the graph is disconnected.
H1Result h1_plumbed(const PlumbingGraph& g);

/// h1_plumbed of the arrangement's plumbing graph. Throws
/// InternalContradiction unless the result is free with cokernel rank n.
H1Result h1_boundary(const Arrangement& arr);

}  // namespace linearr

#include "linearr/plumbing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace linearr {

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& [a, b] : edges_) {
    if (a >= vertices_.size() || b >= vertices_.size()) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("plumbing graphs have no loops");
    if (!seen.insert(std::minmax(a, b)).second) throw std::invalid_argument("plumbing graphs have no multi-edges");
  }
}

std::size_t PlumbingGraph::component_count() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = vertices_.size();
  for (const auto& [a, b] : edges_) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

std::int64_t PlumbingGraph::b1() const {
  return static_cast<std::int64_t>(edges_.size()) - static_cast<std::int64_t>(vertices_.size()) +
         static_cast<std::int64_t>(component_count());
}

PlumbingGraph plumbing_graph(const Arrangement& arr) {
  std::vector<PlumbingGraph::Vertex> vertices;
  const auto lines = static_cast<std::size_t>(arr.n_lines());
  for (int i = 0; i < arr.n_lines(); ++i) {
    vertices.push_back({1 - static_cast<std::int64_t>(arr.points_on(i).size()), "l" + std::to_string(i)});
  }
  for (const auto& p : arr.points()) {
    std::string label = "P";
    for (std::size_t a = 0; a < p.size(); ++a) label += (a ? "," : "") + std::to_string(p[a]);
    vertices.push_back({-1, std::move(label)});
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : incidence_graph(arr).edges) {
    edges.emplace_back(static_cast<std::size_t>(e.line), lines + e.point);
  }
  return PlumbingGraph(std::move(vertices), std::move(edges));
}

IntMatrix plumbing_matrix(const PlumbingGraph& g) {
  const std::size_t n = g.vertices().size();
  IntMatrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) m(v, v) = Integer(static_cast<long>(g.vertices()[v].weight));
  for (const auto& [a, b] : g.edges()) {
    m(a, b) = 1;
    m(b, a) = 1;
  }
  return m;
}

H1Result h1_plumbed(const PlumbingGraph& g) {
  if (!g.connected()) throw std::invalid_argument("plumbing graph must be connected");
  const Cokernel coker = cokernel(plumbing_matrix(g));
  H1Result r;
  r.graph_b1 = g.b1();
  r.coker_free_rank = coker.free_rank;
  r.free_rank = static_cast<std::size_t>(r.graph_b1) + coker.free_rank;
  r.torsion = coker.torsion;
  return r;
}

H1Result h1_boundary(const Arrangement& arr) {
  H1Result r = h1_plumbed(plumbing_graph(arr));
  if (!r.torsion.empty() || r.coker_free_rank != static_cast<std::size_t>(arr.n())) {
    std::ostringstream os;
    os << "boundary manifold H1 has cokernel rank " << r.coker_free_rank << " (expected " << arr.n() << ") and "
       << r.torsion.size() << " torsion factors";
    throw InternalContradiction(os.str());
  }
  return r;
}

}  // namespace linearr

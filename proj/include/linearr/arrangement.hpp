#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linearr {

/// Line indices of an intersection point, strictly increasing.
using Point = std::vector<int>;

class ArrangementError : public std::runtime_error {
 public:
  enum class Kind { InvalidLineCount, IndexOutOfRange, PointTooSmall, PairCoveredTwice };

  ArrangementError(Kind kind, std::string message) : std::runtime_error(std::move(message)), kind_(kind) {}
  ArrangementError(Kind kind, std::string message, int j, int k, Point first, Point second)
      : std::runtime_error(std::move(message)),
        kind_(kind),
        j_(j),
        k_(k),
        first_(std::move(first)),
        second_(std::move(second)) {}

  Kind kind() const { return kind_; }
  // Populated for PairCoveredTwice only.
  int j() const { return j_; }
  int k() const { return k_; }
  const Point& first() const { return first_; }
  const Point& second() const { return second_; }

 private:
  Kind kind_;
  int j_ = -1;
  int k_ = -1;
  Point first_;
  Point second_;
};

const char* to_string(ArrangementError::Kind kind);

/// A combinatorial line arrangement on lines 0..n, line 0 distinguished.
///
/// Points are normalized (sorted index lists, lexicographic order) and every
/// pair of distinct lines lies on exactly one point. Construct through
/// validate(), which fills in the double points the input left implicit.
class Arrangement {
 public:
  static Arrangement validate(int n_lines, const std::vector<std::vector<int>>& raw_points);

  int n_lines() const { return n_lines_; }
  /// Number of non-distinguished lines.
  int n() const { return n_lines_ - 1; }

  const std::vector<Point>& points() const { return points_; }
  /// True for points that validate() inserted as implicit double points.
  bool is_auto_inserted(std::size_t point) const { return auto_inserted_[point]; }
  std::size_t auto_inserted_count() const;

  /// Index of the unique point containing lines j != k.
  std::size_t point_of(int j, int k) const;
  /// Indices of the points that contain the given line, ascending.
  const std::vector<std::size_t>& points_on(int line) const { return points_on_[line]; }

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.n_lines_ == b.n_lines_ && a.points_ == b.points_;
  }

 private:
  Arrangement() = default;

  int n_lines_ = 0;
  std::vector<Point> points_;
  std::vector<bool> auto_inserted_;
  std::vector<std::size_t> pair_point_;  // n_lines x n_lines, diagonal unused
  std::vector<std::vector<std::size_t>> points_on_;
};

/// Edge (line, point) of the incidence graph.
struct IncidenceEdge {
  int line;
  std::size_t point;
  friend bool operator==(const IncidenceEdge&, const IncidenceEdge&) = default;
  friend auto operator<=>(const IncidenceEdge&, const IncidenceEdge&) = default;
};

/// Bipartite line/point incidence graph. Line vertices come first, then
/// point vertices in the arrangement's point order.
struct IncidenceGraph {
  int line_vertices = 0;
  std::size_t point_vertices = 0;
  std::vector<IncidenceEdge> edges;  // sorted by (line, point)

  std::size_t vertex_count() const { return static_cast<std::size_t>(line_vertices) + point_vertices; }
  /// First Betti number |E| - |V| + 1 of the (connected) graph.
  std::int64_t b1() const {
    return static_cast<std::int64_t>(edges.size()) - static_cast<std::int64_t>(vertex_count()) + 1;
  }
};

IncidenceGraph incidence_graph(const Arrangement& arr);

struct NbcPair {
  int j;
  int k;
  std::size_t point;
  friend bool operator==(const NbcPair&, const NbcPair&) = default;
};

/// All (j, k) with 1 <= j < k <= n such that j is the least line on their
/// common point. Sorted lexicographically.
std::vector<NbcPair> nbc_set(const Arrangement& arr);

/// Spanning tree of the incidence graph: every edge at a point through
/// line 0, plus the edge from each point to its least line.
std::vector<IncidenceEdge> spanning_tree(const Arrangement& arr);

/// Edges outside spanning_tree(), in the order of the nbc pairs they
/// correspond to via (P, l_j) -> (min P, j).
std::vector<IncidenceEdge> spanning_tree_complement(const Arrangement& arr);

enum class ArrangementClass { Pencil, NearPencil, General };

const char* to_string(ArrangementClass c);

struct Classification {
  ArrangementClass kind;
  /// 1 - b1(A) + b2(A) = 1 - n + |nbc|.
  std::int64_t beta;
};

/// Pencil if one point holds every line; near pencil if one point holds all
/// lines but one. Throws InternalContradiction if a (near) pencil has beta > 0.
Classification classify(const Arrangement& arr);

/// Raised when a computed invariant contradicts a proven identity.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace linearr

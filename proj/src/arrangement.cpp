#include "linearr/arrangement.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

namespace linearr {

namespace {

constexpr std::size_t kUncovered = std::numeric_limits<std::size_t>::max();

std::string format_point(const Point& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << '}';
  return os.str();
}

}  // namespace

const char* to_string(ArrangementError::Kind kind) {
  switch (kind) {
    case ArrangementError::Kind::InvalidLineCount: return "InvalidLineCount";
    case ArrangementError::Kind::IndexOutOfRange: return "IndexOutOfRange";
    case ArrangementError::Kind::PointTooSmall: return "PointTooSmall";
    case ArrangementError::Kind::PairCoveredTwice: return "PairCoveredTwice";
  }
  return "Unknown";
}

const char* to_string(ArrangementClass c) {
  switch (c) {
    case ArrangementClass::Pencil: return "Pencil";
    case ArrangementClass::NearPencil: return "NearPencil";
    case ArrangementClass::General: return "General";
  }
  return "Unknown";
}

Arrangement Arrangement::validate(int n_lines, const std::vector<std::vector<int>>& raw_points) {
  using Kind = ArrangementError::Kind;
  if (n_lines < 2) {
    throw ArrangementError(Kind::InvalidLineCount,
                           "an arrangement needs at least 2 lines, got " + std::to_string(n_lines));
  }

  std::vector<Point> given;
  given.reserve(raw_points.size());
  for (const auto& raw : raw_points) {
    Point p = raw;
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    for (int line : p) {
      if (line < 0 || line >= n_lines) {
        throw ArrangementError(Kind::IndexOutOfRange, "line index " + std::to_string(line) +
                                                          " outside 0.." + std::to_string(n_lines - 1));
      }
    }
    if (p.size() < 2) {
      throw ArrangementError(Kind::PointTooSmall, "point " + format_point(p) + " has fewer than 2 lines");
    }
    given.push_back(std::move(p));
  }
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());

  const auto lines = static_cast<std::size_t>(n_lines);
  std::vector<std::size_t> cover(lines * lines, kUncovered);
  for (std::size_t idx = 0; idx < given.size(); ++idx) {
    const Point& p = given[idx];
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        std::size_t& slot = cover[p[a] * lines + p[b]];
        if (slot != kUncovered) {
          throw ArrangementError(Kind::PairCoveredTwice,
                                 "lines " + std::to_string(p[a]) + " and " + std::to_string(p[b]) +
                                     " lie on both " + format_point(given[slot]) + " and " + format_point(p),
                                 p[a], p[b], given[slot], p);
        }
        slot = idx;
      }
  }

  std::vector<std::pair<Point, bool>> all;
  all.reserve(given.size());
  for (auto& p : given) all.emplace_back(std::move(p), false);
  for (int j = 0; j < n_lines; ++j)
    for (int k = j + 1; k < n_lines; ++k)
      if (cover[j * lines + k] == kUncovered) all.emplace_back(Point{j, k}, true);
  std::sort(all.begin(), all.end());

  Arrangement arr;
  arr.n_lines_ = n_lines;
  arr.pair_point_.assign(lines * lines, kUncovered);
  arr.points_on_.resize(lines);
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    const Point& p = all[idx].first;
    for (std::size_t a = 0; a < p.size(); ++a) {
      arr.points_on_[p[a]].push_back(idx);
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        arr.pair_point_[p[a] * lines + p[b]] = idx;
        arr.pair_point_[p[b] * lines + p[a]] = idx;
      }
    }
    arr.points_.push_back(p);
    arr.auto_inserted_.push_back(all[idx].second);
  }
  return arr;
}

std::size_t Arrangement::auto_inserted_count() const {
  return static_cast<std::size_t>(std::count(auto_inserted_.begin(), auto_inserted_.end(), true));
}

std::size_t Arrangement::point_of(int j, int k) const {
  if (j == k || j < 0 || k < 0 || j >= n_lines_ || k >= n_lines_) {
    throw std::out_of_range("point_of needs two distinct valid lines");
  }
  return pair_point_[static_cast<std::size_t>(j) * n_lines_ + k];
}

IncidenceGraph incidence_graph(const Arrangement& arr) {
  IncidenceGraph g;
  g.line_vertices = arr.n_lines();
  g.point_vertices = arr.points().size();
  for (int line = 0; line < arr.n_lines(); ++line)
    for (std::size_t p : arr.points_on(line)) g.edges.push_back({line, p});
  return g;
}

std::vector<NbcPair> nbc_set(const Arrangement& arr) {
  std::vector<NbcPair> out;
  const auto& points = arr.points();
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const Point& p = points[idx];
    if (p.front() == 0) continue;
    for (std::size_t a = 1; a < p.size(); ++a) out.push_back({p.front(), p[a], idx});
  }
  std::sort(out.begin(), out.end(),
            [](const NbcPair& x, const NbcPair& y) { return std::tie(x.j, x.k) < std::tie(y.j, y.k); });
  return out;
}

std::vector<IncidenceEdge> spanning_tree(const Arrangement& arr) {
  std::vector<IncidenceEdge> tree;
  const auto& points = arr.points();
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const Point& p = points[idx];
    if (p.front() == 0) {
      for (int line : p) tree.push_back({line, idx});
    } else {
      tree.push_back({p.front(), idx});
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<IncidenceEdge> spanning_tree_complement(const Arrangement& arr) {
  std::vector<IncidenceEdge> out;
  for (const auto& pair : nbc_set(arr)) out.push_back({pair.k, pair.point});
  return out;
}

Classification classify(const Arrangement& arr) {
  std::size_t largest = 0;
  for (const auto& p : arr.points()) largest = std::max(largest, p.size());
  const auto lines = static_cast<std::size_t>(arr.n_lines());

  Classification c{ArrangementClass::General, 0};
  if (largest == lines) {
    c.kind = ArrangementClass::Pencil;
  } else if (largest + 1 == lines) {
    c.kind = ArrangementClass::NearPencil;
  }
  c.beta = 1 - arr.n() + static_cast<std::int64_t>(nbc_set(arr).size());
  if (c.kind != ArrangementClass::General && c.beta > 0) {
    throw InternalContradiction(std::string(to_string(c.kind)) + " arrangement with beta = " +
                                std::to_string(c.beta) + " > 0");
  }
  return c;
}

}  // namespace linearr

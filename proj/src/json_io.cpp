#include "linearr/json_io.hpp"

#include <limits>

namespace linearr {

namespace {

std::vector<std::vector<int>> read_points(const Json& points) {
  if (!points.is_array()) throw SchemaError("\"points\" must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& p : points) {
    if (!p.is_array()) throw SchemaError("each point must be an array of line indices");
    std::vector<int> lines;
    for (const auto& x : p) {
      if (!x.is_number_integer()) throw SchemaError("line indices must be integers");
      lines.push_back(x.get<int>());
    }
    out.push_back(std::move(lines));
  }
  return out;
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (int x : p) a.push_back(x);
  return a;
}

Json element_json(const GradedAlgebra& alg, const Element& e) {
  Json v = Json::object();
  for (std::size_t i = 0; i < e.coeffs.size(); ++i)
    if (e.coeffs[i] != 0) v[alg.label({e.degree, i})] = integer_to_json(e.coeffs[i]);
  return v;
}

template <typename M>
Json matrix_json(const M& m) {
  Json entries = Json::array();
  for (const auto& x : m.entries()) entries.push_back(x.get_str());
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

template <typename T>
Matrix<T> matrix_from(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw SchemaError("matrix needs rows, cols and entries");
  }
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  std::vector<T> entries;
  for (const auto& e : j.at("entries")) {
    const Rational r = rational_from_json(e);
    if constexpr (std::is_same_v<T, Integer>) {
      if (r.get_den() != 1) throw SchemaError("integer matrix has a fractional entry");
      entries.push_back(r.get_num());
    } else {
      entries.push_back(r);
    }
  }
  if (entries.size() != rows * cols) throw SchemaError("matrix entry count does not match shape");
  return Matrix<T>(rows, cols, std::move(entries));
}

}  // namespace

Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("arrangement must be a JSON object");
  if (!j.contains("lines") || !j.at("lines").is_number_integer()) {
    throw SchemaError("arrangement needs an integer \"lines\" member");
  }
  const Json* points = nullptr;
  if (j.contains("points_full")) points = &j.at("points_full");
  else if (j.contains("points")) points = &j.at("points");
  else throw SchemaError("arrangement needs a \"points\" member");
  return Arrangement::validate(j.at("lines").get<int>(), read_points(*points));
}

Json arrangement_to_json(const Arrangement& arr) {
  Json given = Json::array();
  Json full = Json::array();
  for (std::size_t i = 0; i < arr.points().size(); ++i) {
    full.push_back(point_json(arr.points()[i]));
    if (!arr.is_auto_inserted(i)) given.push_back(point_json(arr.points()[i]));
  }
  return Json{{"lines", arr.n_lines()}, {"points", std::move(given)}, {"points_full", std::move(full)}};
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0) throw SchemaError("not a rational: " + j.get<std::string>());
    if (r.get_den() == 0) throw SchemaError("zero denominator: " + j.get<std::string>());
    r.canonicalize();
    return r;
  }
  throw SchemaError("expected an integer or a \"p/q\" string");
}

Json matrix_to_json(const IntMatrix& m) { return matrix_json(m); }
Json matrix_to_json(const RatMatrix& m) { return matrix_json(m); }
IntMatrix int_matrix_from_json(const Json& j) { return matrix_from<Integer>(j); }
RatMatrix rat_matrix_from_json(const Json& j) { return matrix_from<Rational>(j); }

Json algebra_to_json(const GradedAlgebra& alg) {
  Json out = Json::object();
  for (int d = 1; d <= alg.top_degree(); ++d) out["degree" + std::to_string(d)] = alg.labels(d);
  Json products = Json::array();
  for (const auto& [pair, value] : alg.stored_products()) {
    products.push_back(
        Json{{"x", alg.label(pair.first)}, {"y", alg.label(pair.second)}, {"value", element_json(alg, value)}});
  }
  out["products"] = std::move(products);
  return out;
}

Json ring_to_json(const IntersectionRing& ring) {
  Json products = Json::array();
  for (std::size_t x = 0; x < ring.rank(); ++x)
    for (std::size_t y = 0; y < ring.rank(); ++y) {
      Json value = Json::object();
      for (std::size_t c = 0; c < ring.rank(); ++c)
        if (ring.products[x][y][c] != 0) value[ring.h1_labels[c]] = integer_to_json(ring.products[x][y][c]);
      products.push_back(Json{{"x", ring.h2_labels[x]}, {"y", ring.h2_labels[y]}, {"value", std::move(value)}});
    }
  return Json{{"h1", ring.h1_labels},
              {"h2", ring.h2_labels},
              {"pairing", matrix_to_json(ring.pairing)},
              {"products", std::move(products)}};
}

Json h1_to_json(const H1Result& h1, const IntMatrix& matrix) {
  Json torsion = Json::array();
  for (const auto& t : h1.torsion) torsion.push_back(integer_to_json(t));
  return Json{{"b1_graph", h1.graph_b1},
              {"coker_free_rank", h1.coker_free_rank},
              {"free_rank", h1.free_rank},
              {"torsion", std::move(torsion)},
              {"matrix", matrix_to_json(matrix)}};
}

Json isomorphism_to_json(const IsomorphismReport& report) {
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back(Json{{"x", m.x}, {"y", m.y}, {"cohomology", m.lhs}, {"double", m.rhs}});
  }
  return Json{{"ok", report.ok}, {"pairs_checked", report.pairs_checked}, {"mismatches", std::move(mismatches)}};
}

AomotoPoint point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) throw SchemaError("point needs \"a\" and \"b\" arrays");
  AomotoPoint pt;
  for (const auto& x : j.at("a")) pt.a.push_back(rational_from_json(x));
  for (const auto& x : j.at("b")) pt.b.push_back(rational_from_json(x));
  return pt;
}

}  // namespace linearr

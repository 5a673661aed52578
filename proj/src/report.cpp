#include "linearr/report.hpp"

#include <algorithm>
#include <sstream>

#include "linearr/boundary_ring.hpp"
#include "linearr/os_algebra.hpp"
#include "linearr/plumbing.hpp"

namespace linearr {

namespace {

Json r11_json(const R11Prediction& r11) {
  Json out{{"class", to_string(r11.kind)}, {"predicted_dim", r11.dim}};
  if (r11.unverified) out["unverified"] = true;
  return out;
}

}  // namespace

Json classification_json(const Arrangement& arr) {
  const Classification c = classify(arr);
  const R11Prediction r11 = r11_prediction(arr);
  Json out{{"class", to_string(c.kind)}, {"beta", c.beta}, {"predicted_r11_dim", r11.dim}};
  if (r11.unverified) out["predicted_r11_unverified"] = true;
  return out;
}

Json generic_resonance_json(const Arrangement& arr, const RunConfig& config) {
  const DoubledAlgebra dbl = double_algebra(os_algebra(arr));
  Json betti = Json::array();
  for (int k = 0; k <= 3; ++k) betti.push_back(generic_betti(dbl, k, config.trials, config.seed));
  Json out{{"betti", std::move(betti)}, {"seed", config.seed}, {"trials", config.trials}};
  out.update(classification_json(arr));
  return out;
}

Json build_report(const Arrangement& arr, const RunConfig& config) {
  const auto nbc = nbc_set(arr);
  Json nbc_json = Json::array();
  for (const auto& p : nbc) nbc_json.push_back(Json::array({p.j, p.k}));

  const GradedAlgebra os = os_algebra(arr);
  const DoubledAlgebra dbl = double_algebra(os);
  const PlumbingGraph graph = plumbing_graph(arr);
  const H1Result h1 = h1_boundary(arr);
  const IsomorphismReport iso = verify_double_isomorphism(arr);
  const Classification c = classify(arr);
  const R11Prediction r11 = r11_prediction(arr);

  Json betti = Json::array();
  for (int k = 0; k <= 3; ++k) betti.push_back(generic_betti(dbl, k, config.trials, config.seed));

  return Json{{"arrangement", arrangement_to_json(arr)},
              {"nbc", std::move(nbc_json)},
              {"b1_graph", incidence_graph(arr).b1()},
              {"os_algebra", algebra_to_json(os)},
              {"double", algebra_to_json(dbl.algebra)},
              {"homology", h1_to_json(h1, plumbing_matrix(graph))},
              {"intersection_ring", ring_to_json(intersection_ring(arr))},
              {"isomorphism", isomorphism_to_json(iso)},
              {"class", to_string(c.kind)},
              {"beta", c.beta},
              {"r11", r11_json(r11)},
              {"generic_betti", {{"betti", std::move(betti)}, {"seed", config.seed}, {"trials", config.trials}}}};
}

namespace {

std::string vector_text(const IntersectionRing& ring, const std::vector<Integer>& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    if (first) {
      if (v[c] < 0) os << '-';
    } else {
      os << (v[c] < 0 ? " - " : " + ");
    }
    if (abs(v[c]) != 1) os << abs(v[c]) << '*';
    os << ring.h1_labels[c];
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  const bool scalar_array =
      j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
  if (j.is_object()) {
    if (j.empty()) os << path << ": {}\n";
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, os);
  } else if (j.is_array() && !scalar_array) {
    if (j.empty()) os << path << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << j.dump() << '\n';
  }
}

}  // namespace

std::string ring_table(const IntersectionRing& ring) {
  std::ostringstream os;
  const auto n = static_cast<std::size_t>(ring.n);
  os << "H_1 basis:";
  for (const auto& l : ring.h1_labels) os << ' ' << l;
  os << "\nH_2 basis:";
  for (const auto& l : ring.h2_labels) os << ' ' << l;
  os << "\n\ntau . tau\n";
  bool any = false;
  for (std::size_t x = n; x < ring.rank(); ++x)
    for (std::size_t y = x + 1; y < ring.rank(); ++y) {
      os << "  " << ring.h2_labels[x] << " . " << ring.h2_labels[y] << " = "
         << vector_text(ring, ring.products[x][y]) << '\n';
      any = true;
    }
  if (!any) os << "  (none)\n";
  os << "\nF . tau\n";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = n; y < ring.rank(); ++y)
      os << "  " << ring.h2_labels[x] << " . " << ring.h2_labels[y] << " = " << vector_text(ring, ring.products[x][y])
         << '\n';
  os << "\nF . F\n";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      os << "  " << ring.h2_labels[x] << " . " << ring.h2_labels[y] << " = " << vector_text(ring, ring.products[x][y])
         << '\n';
  return os.str();
}

std::string json_table(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

}  // namespace linearr

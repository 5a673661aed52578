#include "linearr/boundary_ring.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "linearr/os_algebra.hpp"

namespace linearr {

namespace {

std::string pair_suffix(int j, int k) { return std::to_string(j) + "," + std::to_string(k); }

}  // namespace

IntersectionRing intersection_ring(const Arrangement& arr) {
  IntersectionRing ring;
  ring.n = arr.n();
  ring.nbc = nbc_set(arr);
  const auto n = static_cast<std::size_t>(ring.n);
  const std::size_t rank = n + ring.nbc.size();

  std::map<std::pair<int, int>, std::size_t> gamma;  // nbc pair -> H_1 index
  for (int i = 1; i <= ring.n; ++i) {
    ring.h1_labels.push_back("t" + std::to_string(i));
    ring.h2_labels.push_back("F" + std::to_string(i));
  }
  for (std::size_t p = 0; p < ring.nbc.size(); ++p) {
    const auto& [j, k, point] = ring.nbc[p];
    gamma[{j, k}] = n + p;
    ring.h1_labels.push_back("gamma" + pair_suffix(j, k));
    ring.h2_labels.push_back("tau" + pair_suffix(j, k));
  }

  ring.pairing = IntMatrix::identity(rank);
  ring.products.assign(rank, std::vector<std::vector<Integer>>(rank, std::vector<Integer>(rank)));
  auto t = [](int line) { return static_cast<std::size_t>(line - 1); };

  // F_i . tau{j,k}
  for (int i = 1; i <= ring.n; ++i)
    for (std::size_t p = 0; p < ring.nbc.size(); ++p) {
      const auto& [j, k, point] = ring.nbc[p];
      const Point& through = arr.points()[point];
      auto& out = ring.products[t(i)][n + p];
      if (i == k) {
        out[t(i)] -= 1;
        for (int m : through) {
          if (m == 0) throw InternalContradiction("nbc point passes through line 0");
          out[t(m)] += 1;
        }
      } else if (std::binary_search(through.begin(), through.end(), i)) {
        out[t(k)] -= 1;
      }
    }

  // F_i . F_j, i < j
  for (int i = 1; i <= ring.n; ++i)
    for (int j = i + 1; j <= ring.n; ++j) {
      auto& out = ring.products[t(i)][t(j)];
      if (auto it = gamma.find({i, j}); it != gamma.end()) {
        out[it->second] = 1;
        continue;
      }
      const int k = arr.points()[arr.point_of(i, j)].front();
      if (k < 1 || k >= i) continue;
      auto ki = gamma.find({k, i});
      auto kj = gamma.find({k, j});
      if (ki == gamma.end() || kj == gamma.end()) continue;
      out[kj->second] += 1;
      out[ki->second] -= 1;
    }

  // Antisymmetric completion; tau . tau and squares stay zero.
  for (std::size_t x = 0; x < rank; ++x)
    for (std::size_t y = x + 1; y < rank; ++y) {
      auto& reversed = ring.products[y][x];
      for (std::size_t c = 0; c < rank; ++c) reversed[c] = -ring.products[x][y][c];
    }
  return ring;
}

GradedAlgebra cohomology_ring(const Arrangement& arr) {
  const IntersectionRing ring = intersection_ring(arr);
  const std::size_t rank = ring.rank();

  std::vector<std::vector<std::string>> labels(4);
  labels[0] = {"1"};
  for (int i = 1; i <= ring.n; ++i) {
    labels[1].push_back("bar_t" + std::to_string(i));
    labels[2].push_back("bar_F" + std::to_string(i));
  }
  for (const auto& pair : ring.nbc) {
    labels[1].push_back("bar_gamma" + pair_suffix(pair.j, pair.k));
    labels[2].push_back("bar_tau" + pair_suffix(pair.j, pair.k));
  }
  labels[3] = {"top"};
  GradedAlgebra coh(std::move(labels));

  // H^1 index x is PD(h2[x]); H^2 index c is PD(h1[c]). Hence the cup product
  // of H^1 classes x, y has the coordinates of h2[x] . h2[y] unchanged.
  for (std::size_t x = 0; x < rank; ++x)
    for (std::size_t y = x + 1; y < rank; ++y) {
      coh.set_product({1, x}, {1, y}, Element{2, ring.products[x][y]});
    }
  // PD(h2[x]) cup PD(h1[c]) = PD(h2[x] . h1[c]) = <h1[c], h2[x]> top.
  for (std::size_t x = 0; x < rank; ++x)
    for (std::size_t c = 0; c < rank; ++c) {
      coh.set_product({1, x}, {2, c}, Element{3, {ring.pairing(c, x)}});
    }
  return coh;
}

IsomorphismReport verify_double_isomorphism(const Arrangement& arr) {
  const GradedAlgebra coh = cohomology_ring(arr);
  const DoubledAlgebra dbl = double_algebra(os_algebra(arr));
  const GradedAlgebra& d = dbl.algebra;

  auto image_label = [](const std::string& label) -> std::string {
    if (label == "top") return dual_label("1");
    if (label.rfind("bar_tau", 0) == 0) return "f" + label.substr(7);
    if (label.rfind("bar_t", 0) == 0) return e_label(std::stoi(label.substr(5)));
    if (label.rfind("bar_gamma", 0) == 0) return dual_label("f" + label.substr(9));
    if (label.rfind("bar_F", 0) == 0) return dual_label(e_label(std::stoi(label.substr(5))));
    return label;
  };

  // Basis bijection, degree by degree.
  std::vector<std::vector<std::size_t>> image(4);
  for (int deg = 0; deg <= 3; ++deg) {
    if (coh.rank(deg) != d.rank(deg)) {
      IsomorphismReport r;
      r.ok = false;
      r.mismatches.push_back({"rank", std::to_string(deg), std::to_string(coh.rank(deg)), std::to_string(d.rank(deg))});
      return r;
    }
    for (const auto& l : coh.labels(deg)) {
      auto key = d.find(image_label(l));
      if (!key || key->degree != deg) throw InternalContradiction("no image for basis element " + l);
      image[deg].push_back(key->index);
    }
  }
  auto transport = [&](const Element& e) {
    Element out = d.zero(e.degree);
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) out.coeffs[image[e.degree][i]] = e.coeffs[i];
    return out;
  };

  IsomorphismReport report;
  auto compare = [&](BasisKey x, BasisKey y) {
    const Element lhs = transport(coh.product(x, y));
    const Element rhs = d.product({x.degree, image[x.degree][x.index]}, {y.degree, image[y.degree][y.index]});
    ++report.pairs_checked;
    if (lhs != rhs) {
      report.mismatches.push_back({coh.label(x), coh.label(y), format(d, lhs), format(d, rhs)});
    }
  };
  for (std::size_t x = 0; x < coh.rank(1); ++x) {
    for (std::size_t y = 0; y < coh.rank(1); ++y) compare({1, x}, {1, y});
    for (std::size_t y = 0; y < coh.rank(2); ++y) {
      compare({1, x}, {2, y});
      compare({2, y}, {1, x});
    }
  }
  report.ok = report.mismatches.empty();
  return report;
}

}  // namespace linearr

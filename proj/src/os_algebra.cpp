#include "linearr/os_algebra.hpp"

namespace linearr {

std::string e_label(int i) { return "e" + std::to_string(i); }
std::string f_label(int j, int k) { return "f" + std::to_string(j) + "," + std::to_string(k); }
std::string dual_label(const std::string& label) { return "bar_" + label; }

GradedAlgebra os_algebra(const Arrangement& arr) {
  const int n = arr.n();
  const auto nbc = nbc_set(arr);

  std::vector<std::vector<std::string>> labels(3);
  labels[0] = {"1"};
  for (int i = 1; i <= n; ++i) labels[1].push_back(e_label(i));
  for (const auto& pair : nbc) labels[2].push_back(f_label(pair.j, pair.k));
  GradedAlgebra alg(std::move(labels));

  auto f_index = [&](int j, int k) -> std::size_t {
    if (auto key = alg.find(f_label(j, k))) return key->index;
    throw InternalContradiction("missing nbc generator " + f_label(j, k));
  };

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int k = arr.points()[arr.point_of(i, j)].front();
      if (k == 0) continue;
      Element value = alg.zero(2);
      if (k == i) {
        value.coeffs[f_index(i, j)] = 1;
      } else {
        value.coeffs[f_index(k, j)] = 1;
        value.coeffs[f_index(k, i)] = -1;
      }
      alg.set_product({1, static_cast<std::size_t>(i - 1)}, {1, static_cast<std::size_t>(j - 1)},
                      std::move(value));
    }
  return alg;
}

Integer structure_constant(const GradedAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
  if (i == j) return 0;
  return alg.product({1, i}, {1, j}).coeffs.at(k);
}

namespace {

// Position of a basis element of the double in terms of the base algebra.
struct Slot {
  bool dual;   // element of bar(A) rather than A
  int degree;  // degree in A of the element or of its predual
  std::size_t index;
};

class DoubleLayout {
 public:
  explicit DoubleLayout(const GradedAlgebra& base) : base_(base) {}

  // D^d = A^d (+) bar(A^{3-d}), A part first.
  Slot slot(BasisKey key) const {
    const std::size_t undualized = base_.rank(key.degree);
    if (key.index < undualized) return {false, key.degree, key.index};
    return {true, 3 - key.degree, key.index - undualized};
  }
  BasisKey key(Slot s) const {
    if (!s.dual) return {s.degree, s.index};
    const int d = 3 - s.degree;
    return {d, base_.rank(d) + s.index};
  }

 private:
  const GradedAlgebra& base_;
};

// Coordinates of a.g in bar(A^{p-q}) for a = basis(q, ai), g = dual of basis(p, gi):
// (a.g)(w) = g(w a).
void add_action(const GradedAlgebra& base, const DoubleLayout& layout, BasisKey a, BasisKey g_predual,
                Element& out) {
  const int target = g_predual.degree - a.degree;
  if (target < 0) return;
  for (std::size_t w = 0; w < base.rank(target); ++w) {
    const Integer c = base.product({target, w}, a).coeffs.at(g_predual.index);
    if (c == 0) continue;
    out.coeffs[layout.key({true, target, w}).index] += c;
  }
}

}  // namespace

DoubledAlgebra double_algebra(const GradedAlgebra& alg) {
  if (alg.top_degree() != 2) {
    throw DegreeError("doubling needs an algebra of top degree 2, got " + std::to_string(alg.top_degree()));
  }
  const DoubleLayout layout(alg);

  std::vector<std::vector<std::string>> labels(4);
  for (int d = 0; d <= 3; ++d) {
    if (d <= 2) labels[d] = alg.labels(d);
    const int predual = 3 - d;
    if (predual <= 2) {
      for (const auto& l : alg.labels(predual)) labels[d].push_back(dual_label(l));
    }
  }
  GradedAlgebra dbl(std::move(labels));

  for (int dx = 1; dx <= 3; ++dx)
    for (int dy = dx; dx + dy <= 3; ++dy)
      for (std::size_t ix = 0; ix < dbl.rank(dx); ++ix)
        for (std::size_t iy = (dx == dy ? ix + 1 : 0); iy < dbl.rank(dy); ++iy) {
          const Slot x = layout.slot({dx, ix});
          const Slot y = layout.slot({dy, iy});
          Element value = dbl.zero(dx + dy);
          if (!x.dual && !y.dual) {
            if (x.degree + y.degree <= 2) {
              const Element ab = alg.product({x.degree, x.index}, {y.degree, y.index});
              for (std::size_t t = 0; t < ab.coeffs.size(); ++t)
                value.coeffs[layout.key({false, ab.degree, t}).index] += ab.coeffs[t];
            }
          } else if (!x.dual && y.dual) {
            add_action(alg, layout, {x.degree, x.index}, {y.degree, y.index}, value);
          } else if (x.dual && !y.dual) {
            add_action(alg, layout, {y.degree, y.index}, {x.degree, x.index}, value);
          }
          dbl.set_product({dx, ix}, {dy, iy}, std::move(value));
        }
  return DoubledAlgebra{alg, std::move(dbl)};
}

}  // namespace linearr

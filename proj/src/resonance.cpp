#include "linearr/resonance.hpp"

#include <algorithm>
#include <string>

#include "linearr/random_arrangement.hpp"

namespace linearr {

namespace {

// mu[i][j][k] over the full (antisymmetric) index range.
using StructureTensor = std::vector<std::vector<std::vector<Integer>>>;

StructureTensor structure_tensor(const GradedAlgebra& alg) {
  const std::size_t r1 = alg.rank(1), r2 = alg.rank(2);
  StructureTensor mu(r1, std::vector<std::vector<Integer>>(r1, std::vector<Integer>(r2)));
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r1; ++j) {
      if (i == j) continue;
      mu[i][j] = alg.product({1, i}, {1, j}).coeffs;
    }
  return mu;
}

void require_length(const std::vector<Rational>& v, std::size_t expected, const char* what) {
  if (v.size() != expected) {
    throw DimensionMismatch(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                            std::to_string(expected));
  }
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

RatMatrix delta_matrix(const GradedAlgebra& alg, const std::vector<Rational>& a) {
  const std::size_t r1 = alg.rank(1), r2 = alg.rank(2);
  require_length(a, r1, "a");
  const StructureTensor mu = structure_tensor(alg);
  RatMatrix delta(r1, r2);
  for (std::size_t i = 0; i < r1; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r1; ++j)
      for (std::size_t k = 0; k < r2; ++k) delta(j, k) += mu[i][j][k] * a[i];
  }
  return delta;
}

RatMatrix phi_matrix(const GradedAlgebra& alg, const std::vector<Rational>& b) {
  const std::size_t r1 = alg.rank(1), r2 = alg.rank(2);
  require_length(b, r2, "b");
  const StructureTensor mu = structure_tensor(alg);
  RatMatrix phi(r1, r1);
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r1; ++j)
      for (std::size_t k = 0; k < r2; ++k) phi(i, j) += mu[i][j][k] * b[k];
  return phi;
}

AomotoComplex aomoto_complex(const DoubledAlgebra& dbl, const AomotoPoint& pt) {
  const std::size_t r1 = dbl.r1(), r2 = dbl.r2(), n = r1 + r2;
  require_length(pt.a, r1, "a");
  require_length(pt.b, r2, "b");
  const RatMatrix phi = phi_matrix(dbl.base, pt.b);
  const RatMatrix delta = delta_matrix(dbl.base, pt.a);

  AomotoComplex cx{RatMatrix(1, n), RatMatrix(n, n), RatMatrix(n, 1)};
  for (std::size_t i = 0; i < r1; ++i) {
    cx.d1(0, i) = pt.a[i];
    cx.d3(i, 0) = pt.a[i];
  }
  for (std::size_t k = 0; k < r2; ++k) {
    cx.d1(0, r1 + k) = pt.b[k];
    cx.d3(r1 + k, 0) = pt.b[k];
  }
  for (std::size_t i = 0; i < r1; ++i) {
    for (std::size_t j = 0; j < r1; ++j) cx.d2(i, j) = phi(i, j);
    for (std::size_t k = 0; k < r2; ++k) {
      cx.d2(i, r1 + k) = delta(i, k);
      cx.d2(r1 + k, i) = -delta(i, k);
    }
  }
  if (!(cx.d1 * cx.d2).is_zero()) throw ChainConditionViolated("d1 d2 != 0");
  if (!(cx.d2 * cx.d3).is_zero()) throw ChainConditionViolated("d2 d3 != 0");
  return cx;
}

std::array<std::size_t, 4> betti_all(const DoubledAlgebra& dbl, const AomotoPoint& pt) {
  const AomotoComplex cx = aomoto_complex(dbl, pt);
  const std::size_t n = dbl.r1() + dbl.r2();
  const std::size_t rk1 = rank(cx.d1), rk2 = rank(cx.d2), rk3 = rank(cx.d3);
  // dim C^k - rank(out of C^k) - rank(into C^k)
  return {1 - rk1, n - rk2 - rk1, n - rk3 - rk2, 1 - rk3};
}

std::size_t betti(const DoubledAlgebra& dbl, const AomotoPoint& pt, int k) {
  if (k < 0 || k > 3) throw std::out_of_range("betti degree must be 0..3");
  return betti_all(dbl, pt)[static_cast<std::size_t>(k)];
}

std::size_t os_betti(const GradedAlgebra& alg, const std::vector<Rational>& a, int k) {
  const std::size_t r1 = alg.rank(1), r2 = alg.rank(2);
  require_length(a, r1, "a");
  const std::size_t rk0 = all_zero(a) ? 0 : 1;
  // x -> a x on A^1 has matrix Delta^a in row-vector convention.
  const std::size_t rk1 = rank(delta_matrix(alg, a));
  switch (k) {
    case 0: return 1 - rk0;
    case 1: return r1 - rk1 - rk0;
    case 2: return r2 - rk1;
    default: throw std::out_of_range("degree must be 0..2");
  }
}

bool is_nonresonant(const GradedAlgebra& alg, const std::vector<Rational>& a) {
  require_length(a, alg.rank(1), "a");
  if (all_zero(a)) return false;
  return os_betti(alg, a, 1) == 0;
}

bool in_resonance(const DoubledAlgebra& dbl, const AomotoPoint& pt, int k, std::int64_t d) {
  return static_cast<std::int64_t>(betti(dbl, pt, k)) >= d;
}

IdentityCheck zero_a_identity_check(const DoubledAlgebra& dbl, const std::vector<Rational>& b) {
  require_length(b, dbl.r2(), "b");
  if (all_zero(b)) throw std::invalid_argument("the zero-a identity needs b != 0");
  const AomotoPoint pt{std::vector<Rational>(dbl.r1()), b};
  IdentityCheck c;
  c.lhs = static_cast<std::int64_t>(betti(dbl, pt, 1));
  c.rhs = static_cast<std::int64_t>(dbl.r2()) - 1 + static_cast<std::int64_t>(kernel_dim(phi_matrix(dbl.base, b)));
  return c;
}

AomotoPoint sample_point(const DoubledAlgebra& dbl, std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 rng = trial_engine(seed, trial);
  AomotoPoint pt;
  for (std::size_t i = 0; i < dbl.r1(); ++i)
    pt.a.emplace_back(static_cast<long>(uniform_between(rng, -kSampleBound, kSampleBound)));
  for (std::size_t k = 0; k < dbl.r2(); ++k)
    pt.b.emplace_back(static_cast<long>(uniform_between(rng, -kSampleBound, kSampleBound)));
  return pt;
}

std::size_t generic_betti(const DoubledAlgebra& dbl, int k, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("generic_betti needs at least one trial");
  std::size_t best = static_cast<std::size_t>(-1);
  for (int t = 0; t < trials; ++t) {
    best = std::min(best, betti(dbl, sample_point(dbl, seed, static_cast<std::uint64_t>(t)), k));
  }
  return best;
}

R11Prediction r11_prediction(const Arrangement& arr) {
  const Classification c = classify(arr);
  const std::int64_t n = arr.n();
  switch (c.kind) {
    case ArrangementClass::Pencil: return {c.kind, n};
    case ArrangementClass::NearPencil: return {c.kind, 2 * n - 2, n == 2};
    case ArrangementClass::General: break;
  }
  return {c.kind, n + static_cast<std::int64_t>(nbc_set(arr).size())};
}

}  // namespace linearr

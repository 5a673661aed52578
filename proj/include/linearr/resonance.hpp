#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "linearr/arrangement.hpp"
#include "linearr/exact_linalg.hpp"
#include "linearr/graded_algebra.hpp"
#include "linearr/os_algebra.hpp"

namespace linearr {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ChainConditionViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Degree-one element (a, b) of the double: a in A^1 (length r1), b in
/// bar(A^2) (length r2), coordinates in the algebra's bases.
struct AomotoPoint {
  std::vector<Rational> a;
  std::vector<Rational> b;
};

/// Cochain complex C^0 -> C^1 -> C^2 -> C^3 of left multiplication by a
/// degree-one element of the double, in row-vector convention (v -> v d).
/// Coordinates: C^1 = A^1 then bar(A^2); C^2 = bar(A^1) then A^2.
struct AomotoComplex {
  RatMatrix d1;  // 1 x N, (a b)
  RatMatrix d2;  // N x N, [[Phi^b, Delta^a], [-Delta^a^T, 0]]
  RatMatrix d3;  // N x 1, (a^T; b^T)
};

/// r1 x r2 with Delta_{j,k} = sum_i mu_{i,j,k} p_i.
RatMatrix delta_matrix(const GradedAlgebra& alg, const std::vector<Rational>& a);

/// r1 x r1 antisymmetric with Phi_{i,j} = sum_k mu_{i,j,k} q_k.
RatMatrix phi_matrix(const GradedAlgebra& alg, const std::vector<Rational>& b);

/// Throws DimensionMismatch on bad lengths, ChainConditionViolated if
/// d1 d2 != 0 or d2 d3 != 0.
AomotoComplex aomoto_complex(const DoubledAlgebra& dbl, const AomotoPoint& pt);

/// dim H^k of the Aomoto complex at pt, k in 0..3.
std::size_t betti(const DoubledAlgebra& dbl, const AomotoPoint& pt, int k);
std::array<std::size_t, 4> betti_all(const DoubledAlgebra& dbl, const AomotoPoint& pt);

/// dim H^k(A, a) of A^0 -> A^1 -> A^2 for the base algebra, k in 0..2.
std::size_t os_betti(const GradedAlgebra& alg, const std::vector<Rational>& a, int k);

/// a != 0 and H^1(A, a) = 0, i.e. rank Delta^a = r1 - 1.
bool is_nonresonant(const GradedAlgebra& alg, const std::vector<Rational>& a);

/// betti(dbl, pt, k) >= d.
bool in_resonance(const DoubledAlgebra& dbl, const AomotoPoint& pt, int k, std::int64_t d);

struct IdentityCheck {
  std::int64_t lhs;  // betti(dbl, (0, b), 1)
  std::int64_t rhs;  // r2 - 1 + dim ker Phi^b
};

/// Throws std::invalid_argument if b is zero (including r2 == 0).
IdentityCheck zero_a_identity_check(const DoubledAlgebra& dbl, const std::vector<Rational>& b);

constexpr std::int64_t kSampleBound = 10;
constexpr int kDefaultTrials = 5;

/// Integer point with coordinates uniform in [-kSampleBound, kSampleBound]
/// drawn from trial_engine(seed, trial).
AomotoPoint sample_point(const DoubledAlgebra& dbl, std::uint64_t seed, std::uint64_t trial);

/// Minimum of betti(., k) over `trials` sampled points. Throws
/// std::invalid_argument if trials < 1.
std::size_t generic_betti(const DoubledAlgebra& dbl, int k, int trials, std::uint64_t seed);

struct R11Prediction {
  ArrangementClass kind;
  std::int64_t dim;
  /// Set for the near pencil on three lines (n = 2), where the 2n - 2 formula
  /// is applied without a reference value.
  bool unverified = false;
};

/// n for a pencil, 2n - 2 for a near pencil, n + |nbc| otherwise.
R11Prediction r11_prediction(const Arrangement& arr);

}  // namespace linearr

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "linearr/arrangement.hpp"
#include "linearr/exact_linalg.hpp"
#include "linearr/graded_algebra.hpp"

namespace linearr {

/// Intersection ring of the boundary manifold in the cycle bases
///   H_1: t_1..t_n, gamma{j,k} for nbc pairs (j,k)
///   H_2: F_1..F_n, tau{j,k}  (F_i dual to t_i, tau{j,k} dual to gamma{j,k})
/// Index i < n addresses t_{i+1} / F_{i+1}; index n + p addresses the p-th nbc pair.
struct IntersectionRing {
  int n = 0;
  std::vector<NbcPair> nbc;
  std::vector<std::string> h1_labels;
  std::vector<std::string> h2_labels;
  /// products[x][y]: coordinates in H_1 of h2[x] . h2[y], every ordered pair.
  std::vector<std::vector<std::vector<Integer>>> products;
  /// pairing(a, b): intersection number of h1[a] with h2[b].
  IntMatrix pairing;

  std::size_t rank() const { return h1_labels.size(); }
};

/// Builds the product tables in closed form:
///   tau . tau = 0;
///   F_i . tau{j,k} = -t_i + sum_{m in I(j,i)} t_m  if i == k,
///                  = -t_k                          if i in I(j,k), i != k,
///                  = 0                             otherwise;
///   F_i . F_j (i < j) = gamma{i,j}                 if (i,j) is nbc,
///                     = gamma{k,j} - gamma{k,i}    if k = min I(i,j), 1 <= k < i,
///                     = 0                          otherwise;
/// all reversed pairs by antisymmetry.
IntersectionRing intersection_ring(const Arrangement& arr);

/// H^*(M) with H^1 = {bar_t_i, bar_gamma{j,k}}, H^2 = {bar_F_i, bar_tau{j,k}},
/// H^3 = {top}; cup products transported from the intersection ring through
/// PD(F_i) = bar_t_i, PD(tau) = bar_gamma, PD(t_i) = bar_F_i, PD(gamma) = bar_tau.
GradedAlgebra cohomology_ring(const Arrangement& arr);

struct Mismatch {
  std::string x;
  std::string y;
  std::string lhs;  // product in H^*(M), mapped into the double's labels
  std::string rhs;  // product in the double
};

struct IsomorphismReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::vector<Mismatch> mismatches;
};

/// Compares every ordered product of degrees 1x1 and 1x2 (both orders) of
/// cohomology_ring(arr) with double_algebra(os_algebra(arr)) under
/// bar_t_i -> e_i, bar_gamma -> bar_f, bar_F_i -> bar_e_i, bar_tau -> f, top -> bar_1.
IsomorphismReport verify_double_isomorphism(const Arrangement& arr);

}  // namespace linearr

#pragma once

#include <string>

#include "linearr/arrangement.hpp"
#include "linearr/graded_algebra.hpp"

namespace linearr {

std::string e_label(int i);
std::string f_label(int j, int k);
/// Label of the dual basis element of `label` in a doubled algebra.
std::string dual_label(const std::string& label);

/// Orlik-Solomon algebra of an arrangement, deconed along line 0.
///
/// Degree 1 has basis e1..en, degree 2 has f{j,k} for the nbc pairs in
/// lexicographic order. For i < j with k the least line on their common point:
///   e_i e_j = f{i,j}              if k == i,
///   e_i e_j = f{k,j} - f{k,i}     if 1 <= k < i,
///   e_i e_j = 0                   if k == 0.
GradedAlgebra os_algebra(const Arrangement& arr);

/// Coefficient of the k-th degree-2 basis element in a_i * a_j (0-based
/// indices into the degree-1 and degree-2 bases), graded commutativity applied.
Integer structure_constant(const GradedAlgebra& alg, std::size_t i, std::size_t j, std::size_t k);

/// The double D(A) = A (+) Hom(A, Z) of a graded algebra with top degree 2,
/// together with the algebra it was built from.
///
/// Bases: D^0 = {1}; D^1 = A^1 then bar(A^2); D^2 = A^2 then bar(A^1);
/// D^3 = {bar(1)}. Multiplication is (a, f)(b, g) = (ab, a.g + b.f) with the
/// module action (a.g)(x) = g(x a), evaluated on canonical pairs and extended
/// by graded commutativity.
struct DoubledAlgebra {
  GradedAlgebra base;
  GradedAlgebra algebra;

  std::size_t r1() const { return base.rank(1); }
  std::size_t r2() const { return base.rank(2); }
};

/// Throws DegreeError unless alg has top degree exactly 2.
DoubledAlgebra double_algebra(const GradedAlgebra& alg);

}  // namespace linearr

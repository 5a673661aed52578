#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linearr/exact_linalg.hpp"

namespace linearr {

class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BasisKey {
  int degree;
  std::size_t index;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// Homogeneous element: dense integer coordinates in one degree piece.
struct Element {
  int degree = 0;
  std::vector<Integer> coeffs;

  bool is_zero() const;
  friend bool operator==(const Element&, const Element&) = default;
  Element& operator+=(const Element& other);
  friend Element operator-(Element e) {
    for (auto& c : e.coeffs) c = -c;
    return e;
  }
  friend Element operator*(const Integer& s, Element e) {
    for (auto& c : e.coeffs) c *= s;
    return e;
  }
};

/// Finite graded-commutative algebra over Z given by structure constants.
///
/// Products are stored for canonically ordered basis pairs only: lower degree
/// first, and within one degree the lower index first (squares of even-degree
/// elements are canonical too). Every other ordered
/// pair follows from graded commutativity, xy = (-1)^{|x||y|} yx, with x*x = 0
/// for x of odd degree. Degree 0 is the rank-one piece spanned by the unit.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  /// labels[d] lists the basis labels of degree d; labels[0] must hold one label.
  explicit GradedAlgebra(std::vector<std::vector<std::string>> labels);

  int top_degree() const { return static_cast<int>(labels_.size()) - 1; }
  std::size_t rank(int degree) const;
  const std::vector<std::string>& labels(int degree) const { return labels_.at(degree); }
  const std::string& label(BasisKey key) const { return labels_.at(key.degree).at(key.index); }
  std::optional<BasisKey> find(const std::string& label) const;

  Element zero(int degree) const;
  Element basis(BasisKey key) const;
  Element unit() const { return basis({0, 0}); }

  /// Stores the product of a canonically ordered pair of positive-degree
  /// basis elements. Throws std::invalid_argument on a non-canonical pair or
  /// a value of the wrong degree.
  void set_product(BasisKey x, BasisKey y, Element value);

  /// Product of any two basis elements. Throws DegreeError past the top degree.
  Element product(BasisKey x, BasisKey y) const;

  /// Bilinear extension of product(). Throws DegreeError past the top degree.
  Element multiply(const Element& x, const Element& y) const;

  /// Nonzero stored products, keyed by canonical pair.
  const std::map<std::pair<BasisKey, BasisKey>, Element>& stored_products() const { return products_; }

  static bool canonical(BasisKey x, BasisKey y) {
    return x.degree < y.degree || (x.degree == y.degree && x.index <= y.index);
  }

 private:
  std::vector<std::vector<std::string>> labels_;
  std::map<std::string, BasisKey> by_label_;
  std::map<std::pair<BasisKey, BasisKey>, Element> products_;
};

/// Renders an element as "c1*label1 + c2*label2", or "0".
std::string format(const GradedAlgebra& alg, const Element& e);

}  // namespace linearr

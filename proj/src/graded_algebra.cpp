#include "linearr/graded_algebra.hpp"

#include <sstream>

namespace linearr {

bool Element::is_zero() const {
  for (const auto& c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

Element& Element::operator+=(const Element& other) {
  if (other.degree != degree || other.coeffs.size() != coeffs.size()) {
    throw DegreeError("adding elements of different degree pieces");
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += other.coeffs[i];
  return *this;
}

GradedAlgebra::GradedAlgebra(std::vector<std::vector<std::string>> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_[0].size() != 1) {
    throw std::invalid_argument("degree 0 must be spanned by a single unit");
  }
  for (int d = 0; d <= top_degree(); ++d)
    for (std::size_t i = 0; i < labels_[d].size(); ++i) {
      if (!by_label_.emplace(labels_[d][i], BasisKey{d, i}).second) {
        throw std::invalid_argument("duplicate basis label " + labels_[d][i]);
      }
    }
}

std::size_t GradedAlgebra::rank(int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return labels_[degree].size();
}

std::optional<BasisKey> GradedAlgebra::find(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

Element GradedAlgebra::zero(int degree) const {
  if (degree < 0 || degree > top_degree()) {
    throw DegreeError("degree " + std::to_string(degree) + " outside 0.." + std::to_string(top_degree()));
  }
  return Element{degree, std::vector<Integer>(rank(degree))};
}

Element GradedAlgebra::basis(BasisKey key) const {
  Element e = zero(key.degree);
  e.coeffs.at(key.index) = 1;
  return e;
}

void GradedAlgebra::set_product(BasisKey x, BasisKey y, Element value) {
  if (x.degree < 1 || !canonical(x, y)) {
    throw std::invalid_argument("products are stored on canonical positive-degree pairs only");
  }
  if (x == y && x.degree % 2 == 1) throw std::invalid_argument("odd-degree squares are zero");
  if (value.degree != x.degree + y.degree || value.coeffs.size() != rank(value.degree)) {
    throw DegreeError("product value lies in the wrong degree piece");
  }
  if (value.is_zero()) {
    products_.erase({x, y});
  } else {
    products_[{x, y}] = std::move(value);
  }
}

Element GradedAlgebra::product(BasisKey x, BasisKey y) const {
  const int degree = x.degree + y.degree;
  if (degree > top_degree()) {
    throw DegreeError("product of degrees " + std::to_string(x.degree) + " and " + std::to_string(y.degree) +
                      " exceeds top degree " + std::to_string(top_degree()));
  }
  if (x.degree == 0) return basis(y);
  if (y.degree == 0) return basis(x);
  if (x == y && x.degree % 2 == 1) return zero(degree);
  const bool swap = !canonical(x, y);
  auto it = swap ? products_.find({y, x}) : products_.find({x, y});
  if (it == products_.end()) return zero(degree);
  if (swap && (x.degree * y.degree) % 2 == 1) return -it->second;
  return it->second;
}

Element GradedAlgebra::multiply(const Element& x, const Element& y) const {
  Element out = zero(x.degree + y.degree);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) {
      if (y.coeffs[j] == 0) continue;
      out += (x.coeffs[i] * y.coeffs[j]) * product({x.degree, i}, {y.degree, j});
    }
  }
  return out;
}

std::string format(const GradedAlgebra& alg, const Element& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    const Integer& c = e.coeffs[i];
    if (c == 0) continue;
    const std::string& label = alg.label({e.degree, i});
    if (first) {
      if (c == -1) os << '-';
      else if (c != 1) os << c << '*';
    } else {
      os << (c < 0 ? " - " : " + ");
      if (abs(c) != 1) os << abs(c) << '*';
    }
    os << label;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace linearr

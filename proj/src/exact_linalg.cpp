#include "linearr/exact_linalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace linearr {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::vector<Integer> SnfResult::diagonal() const {
  std::vector<Integer> d;
  const std::size_t k = std::min(s.rows(), s.cols());
  d.reserve(k);
  for (std::size_t i = 0; i < k; ++i) d.push_back(s(i, i));
  return d;
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Elementary operations applied simultaneously to the working matrix and the
// accumulated transform, keeping u * input * v == s at every step.
class SnfWorkspace {
 public:
  explicit SnfWorkspace(const IntMatrix& m)
      : s_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  IntMatrix& s() { return s_; }

  void swap_rows(std::size_t a, std::size_t b) {
    s_.swap_rows(a, b);
    u_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    s_.swap_cols(a, b);
    v_.swap_cols(a, b);
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < s_.cols(); ++c) s_(dst, c) += q * s_(src, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) += q * u_(src, c);
  }
  // col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < s_.rows(); ++r) s_(r, dst) += q * s_(r, src);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) += q * v_(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < s_.cols(); ++c) s_(r, c) = -s_(r, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(r, c) = -u_(r, c);
  }

  void move_to(Position from, std::size_t t) {
    swap_rows(t, from.row);
    swap_cols(t, from.col);
  }

  SnfResult finish() && { return SnfResult{std::move(u_), std::move(s_), std::move(v_)}; }

 private:
  IntMatrix s_;
  IntMatrix u_;
  IntMatrix v_;
};

// Least |entry| over the submatrix starting at (t, t).
std::optional<Position> least_nonzero(const IntMatrix& s, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      if (!best || abs(s(i, j)) < abs(s(best->row, best->col))) best = Position{i, j};
    }
  return best;
}

// Least |entry| among column t (rows >= t) and row t (cols >= t).
Position least_on_cross(const IntMatrix& s, std::size_t t) {
  Position best{t, t};
  auto better = [&](std::size_t i, std::size_t j) {
    if (s(i, j) == 0) return false;
    const auto& cur = s(best.row, best.col);
    return cur == 0 || abs(s(i, j)) < abs(cur);
  };
  for (std::size_t i = t; i < s.rows(); ++i)
    if (better(i, t)) best = Position{i, t};
  for (std::size_t j = t; j < s.cols(); ++j)
    if (better(t, j)) best = Position{t, j};
  return best;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfWorkspace w(m);
  IntMatrix& s = w.s();
  const std::size_t diag = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    auto pivot = least_nonzero(s, t);
    if (!pivot) break;
    w.move_to(*pivot, t);

    for (;;) {
      bool cross_clear = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        w.add_row(i, t, -q);
        if (s(i, t) != 0) cross_clear = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        w.add_col(j, t, -q);
        if (s(t, j) != 0) cross_clear = false;
      }
      if (!cross_clear) {
        w.move_to(least_on_cross(s, t), t);
        continue;
      }

      // Cross is clear; enforce that the pivot divides the rest.
      std::optional<std::size_t> offending_row;
      for (std::size_t i = t + 1; i < s.rows() && !offending_row; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (s(i, j) % s(t, t) != 0) {
            offending_row = i;
            break;
          }
        }
      if (!offending_row) break;
      w.add_row(t, *offending_row, 1);
    }

    if (s(t, t) < 0) w.negate_row(t);
  }
  return std::move(w).finish();
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::size_t kernel_dim(const RatMatrix& m) { return m.cols() - rank(m); }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  return m.rows() == m.cols() && abs(determinant(m)) == 1;
}

Cokernel cokernel(const IntMatrix& m) {
  const auto d = snf(m).diagonal();
  Cokernel out;
  std::size_t nonzero = 0;
  for (const auto& x : d) {
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) out.torsion.push_back(x);
  }
  out.free_rank = m.rows() - nonzero;
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

}  // namespace linearr

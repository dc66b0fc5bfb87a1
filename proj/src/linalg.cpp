#include "fewnomial/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fewnomial {

QPoint operator+(const QPoint& a, const QPoint& b) {
  QPoint out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

QPoint operator-(const QPoint& a, const QPoint& b) {
  QPoint out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

QPoint scaled(const QPoint& a, const BigRational& s) {
  QPoint out(a);
  for (auto& x : out) x *= s;
  return out;
}

BigRational dot(const QPoint& a, const QPoint& b) {
  // Integer vectors are the common case; accumulate without canonicalizing.
  const auto integral = [](const QPoint& v) {
    return std::all_of(v.begin(), v.end(), [](const BigRational& x) { return x.is_integer(); });
  };
  if (integral(a) && integral(b)) {
    mpz_class sum;
    for (std::size_t i = 0; i < a.size(); ++i) {
      mpz_addmul(sum.get_mpz_t(), mpq_numref(a[i].raw().get_mpq_t()), mpq_numref(b[i].raw().get_mpq_t()));
    }
    return BigRational(BigInt(std::move(sum)));
  }
  mpq_class acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i].raw() * b[i].raw();
  }
  return BigRational(std::move(acc));
}

bool is_zero_vector(const QPoint& a) {
  for (const auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Echelon row_reduce(QMatrix rows, std::size_t columns) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const BigRational inv = BigRational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const BigRational factor = rows[i][c];
      for (std::size_t j = c; j < columns; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= factor * rows[r][j];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const QMatrix& rows, std::size_t columns) {
  return row_reduce(rows, columns).pivots.size();
}

QMatrix nullspace(const QMatrix& rows, std::size_t columns) {
  const Echelon e = row_reduce(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  QMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    QPoint v(columns, BigRational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QPoint> solve_square(const QMatrix& a, const QPoint& b) {
  const std::size_t n = a.size();
  QMatrix aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    QPoint row(a[i]);
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  const Echelon e = row_reduce(std::move(aug), n + 1);
  if (e.pivots.size() != n || e.pivots.back() != n - 1) return std::nullopt;
  QPoint x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = e.rows[r][n];
  return x;
}

BigRational determinant(QMatrix a) {
  const std::size_t n = a.size();
  BigRational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return BigRational(0);
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const BigRational inv = BigRational(1) / a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const BigRational factor = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= factor * a[c][j];
    }
  }
  return det;
}

AffineFrame affine_frame(std::span<const QPoint> points) {
  if (points.empty()) throw std::invalid_argument("affine_frame of empty point set");
  const std::size_t dim = points.front().size();
  QMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  Echelon e = row_reduce(std::move(diffs), dim);
  AffineFrame frame;
  frame.dim = e.pivots.size();
  frame.coordinates = std::move(e.pivots);
  frame.direction_basis = std::move(e.rows);
  return frame;
}

QPoint select(const QPoint& p, std::span<const std::size_t> coordinates) {
  QPoint out;
  out.reserve(coordinates.size());
  for (std::size_t c : coordinates) out.push_back(p[c]);
  return out;
}

}  // namespace fewnomial

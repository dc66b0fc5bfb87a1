#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fewnomial/exact.hpp"

namespace fewnomial {

/// Point or vector with exact rational coordinates.
using QPoint = std::vector<BigRational>;
using QMatrix = std::vector<QPoint>;  // row-major

QPoint operator+(const QPoint& a, const QPoint& b);
QPoint operator-(const QPoint& a, const QPoint& b);
QPoint scaled(const QPoint& a, const BigRational& s);
BigRational dot(const QPoint& a, const QPoint& b);
bool is_zero_vector(const QPoint& a);

/// Row echelon data of a matrix: reduced rows and their pivot columns.
struct Echelon {
  QMatrix rows;                      // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

Echelon row_reduce(QMatrix rows, std::size_t columns);
std::size_t rank(const QMatrix& rows, std::size_t columns);

/// Basis of {x : row . x = 0 for every row}.
QMatrix nullspace(const QMatrix& rows, std::size_t columns);

/// Solves A x = b for square nonsingular A; nullopt when singular.
std::optional<QPoint> solve_square(const QMatrix& a, const QPoint& b);

BigRational determinant(QMatrix a);

/**
 * Affine structure of a point set: its dimension and a set of coordinate
 * indices onto which the affine hull projects injectively.
 */
struct AffineFrame {
  std::size_t dim = 0;
  std::vector<std::size_t> coordinates;
  QMatrix direction_basis;  // reduced basis of the direction space
};

AffineFrame affine_frame(std::span<const QPoint> points);
QPoint select(const QPoint& p, std::span<const std::size_t> coordinates);

}  // namespace fewnomial

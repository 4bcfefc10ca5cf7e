#pragma once

#include "rhombus/number_field.hpp"
#include "rhombus/rational.hpp"

#include <cstddef>
#include <vector>

namespace rhombus {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

using IntVector = std::vector<Integer>;

namespace detail {
inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const AlgebraicNumber& a) { return a.is_zero(); }
}  // namespace detail

template <typename T>
struct Echelon {
  Matrix<T> rows;                  // reduced rows, pivot entries equal to one
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form over an exact field. `column_order` lists the
/// columns in the order they should be tried as pivots; by default left to
/// right.
template <typename T>
Echelon<T> rref(Matrix<T> m, std::size_t ncols, std::vector<std::size_t> column_order = {}) {
  if (column_order.empty())
    for (std::size_t c = 0; c < ncols; ++c) column_order.push_back(c);
  Echelon<T> out;
  std::size_t row = 0;
  for (std::size_t c : column_order) {
    std::size_t pivot = row;
    while (pivot < m.size() && detail::is_zero(m[pivot][c])) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const T inv = T(1) / m[row][c];
    for (auto& e : m[row]) e = e * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || detail::is_zero(m[r][c])) continue;
      const T f = m[r][c];
      for (std::size_t k = 0; k < ncols; ++k) m[r][k] = m[r][k] - f * m[row][k];
    }
    out.pivots.push_back(c);
    ++row;
    if (row == m.size()) break;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

template <typename T>
std::size_t rank(const Matrix<T>& m, std::size_t ncols) {
  return rref(m, ncols).pivots.size();
}

/// Basis of the right kernel over the field: one vector per free column.
template <typename T>
Matrix<T> kernel_basis(const Matrix<T>& m, std::size_t ncols) {
  Echelon<T> e = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix<T> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(ncols, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Z-basis of { v in Z^ncols : M v = 0 }. Vectors are primitive, in Hermite
/// normal form (first nonzero entry positive, entries above later pivots
/// reduced), then sorted lexicographically.
std::vector<IntVector> integer_kernel(const Matrix<Rational>& m, std::size_t ncols);

/// Canonical Hermite normal form of the lattice spanned by the rows.
std::vector<IntVector> hermite_rows(std::vector<IntVector> rows);

}  // namespace rhombus

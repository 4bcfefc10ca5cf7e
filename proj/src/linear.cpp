#include "rhombus/linear.hpp"

#include <algorithm>

namespace rhombus {

namespace {

// Replaces columns a and b of every row by unimodular combinations.
void combine_columns(std::vector<IntVector>& rows, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                     const Integer& u, const Integer& v) {
  for (auto& r : rows) {
    Integer x = r[a], y = r[b];
    r[a] = s * x + t * y;
    r[b] = u * x + v * y;
  }
}

}  // namespace

std::vector<IntVector> hermite_rows(std::vector<IntVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t k = c; k < ncols; ++k) rows[i][k] -= q * rows[r][k];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& e : rows[r]) e = -e;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t k = c; k < ncols; ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<IntVector> integer_kernel(const Matrix<Rational>& m, std::size_t ncols) {
  // Integer rows: clear denominators row by row.
  std::vector<IntVector> a;
  for (const auto& row : m) {
    Integer l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVector ints;
    for (const auto& q : row) ints.push_back(Integer(q * l));
    a.push_back(std::move(ints));
  }

  // Column echelon form A*U = H with U unimodular; U's columns past the last
  // pivot span the integer kernel.
  std::vector<IntVector> u(ncols, IntVector(ncols, Integer(0)));
  for (std::size_t i = 0; i < ncols; ++i) u[i][i] = 1;
  // Work on A^T-style column operations: apply the same ops to rows of a and u.
  std::size_t col = 0;
  for (std::size_t r = 0; r < a.size() && col < ncols; ++r) {
    for (std::size_t k = col + 1; k < ncols; ++k) {
      if (a[r][k] == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r][col].get_mpz_t(), a[r][k].get_mpz_t());
      Integer p = a[r][col] / g, q = a[r][k] / g;
      // [s t; -q p] has determinant s*p + t*q = 1.
      combine_columns(a, col, k, s, t, -q, p);
      combine_columns(u, col, k, s, t, -q, p);
    }
    if (a[r][col] != 0) ++col;
  }

  std::vector<IntVector> basis;
  for (std::size_t c = col; c < ncols; ++c) {
    IntVector v(ncols);
    for (std::size_t i = 0; i < ncols; ++i) v[i] = u[i][c];
    basis.push_back(std::move(v));
  }
  basis = hermite_rows(std::move(basis));
  for (auto& v : basis) v = make_primitive(std::move(v));
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace rhombus

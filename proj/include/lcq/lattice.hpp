#pragma once

// Exact linear algebra over Z: Smith normal form, cokernels, kernels,
// determinants and ranks. Everything is computed with GMP integers.

#include "lcq/abelian_group.hpp"
#include "lcq/error.hpp"
#include "lcq/int_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace lcq {

// U * A * V == D with U, V unimodular and D diagonal, nonnegative, with
// d_1 | d_2 | ... (zeros last).
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(D.rows(), D.cols());
    while (r < n && D(r, r) != 0)
      ++r;
    return r;
  }

  // Nonzero diagonal entries of D, in order.
  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank(); ++i)
      out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

// Position of the nonzero entry of least absolute value in the trailing
// submatrix starting at (t, t).
inline std::optional<std::pair<std::size_t, std::size_t>>
min_abs_entry(const IntMatrix &m, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      const Integer &v = m(r, c);
      if (v == 0)
        continue;
      Integer a = abs(v);
      if (!best || a < best_abs) {
        best = {r, c};
        best_abs = std::move(a);
        if (best_abs == 1)
          return best;
      }
    }
  return best;
}

} // namespace detail

inline SmithForm snf(const IntMatrix &a) {
  SmithForm s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  IntMatrix &d = s.D;
  const std::size_t n = std::min(d.rows(), d.cols());
  Integer q;

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      auto pivot = detail::min_abs_entry(d, t);
      if (!pivot)
        return s; // trailing block is zero
      d.swap_rows(t, pivot->first);
      s.U.swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      s.V.swap_cols(t, pivot->second);

      bool cleared = true;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_row_multiple(r, t, q);
        s.U.add_row_multiple(r, t, q);
        if (d(r, t) != 0)
          cleared = false;
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_col_multiple(c, t, q);
        s.V.add_col_multiple(c, t, q);
        if (d(t, c) != 0)
          cleared = false;
      }
      if (!cleared)
        continue;

      // Row and column t are clear. Enforce that the pivot divides the rest
      // of the trailing block; otherwise fold an offending row into row t.
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < d.rows() && !offending; ++r)
        for (std::size_t c = t + 1; c < d.cols(); ++c)
          if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = r;
            break;
          }
      if (!offending)
        break;
      d.add_row_multiple(t, *offending, 1);
      s.U.add_row_multiple(t, *offending, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

// Z^rows / (column span of a).
inline AbelianGroup cokernel(const IntMatrix &a) {
  const SmithForm s = snf(a);
  std::vector<Integer> torsion;
  for (const auto &f : s.invariant_factors())
    if (f != 1)
      torsion.push_back(f);
  return {a.rows() - s.rank(), std::move(torsion)};
}

// Signed determinant by fraction-free (Bareiss) elimination.
inline Integer det(const IntMatrix &a) {
  if (!a.is_square())
    throw DimensionError("det: matrix is " + a.shape() + ", not square");
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0)
        ++r;
      if (r == n)
        return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(),
                     prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline Integer det_abs(const IntMatrix &a) { return abs(det(a)); }

// Rank over Q, by fraction-free row reduction.
inline std::size_t rank(const IntMatrix &a) {
  IntMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0)
      ++p;
    if (p == m.rows())
      continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0)
        continue;
      const Integer g = gcd(m(r, c), m(i, c));
      const Integer fr = m(i, c) / g;
      const Integer fi = m(r, c) / g;
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = m(i, j) * fi - m(r, j) * fr;
    }
    ++r;
  }
  return r;
}

// Columns form a basis of the lattice {v in Z^cols : a v = 0}.
inline IntMatrix kernel_basis(const IntMatrix &a) {
  const SmithForm s = snf(a);
  const std::size_t r = s.rank();
  return s.V.block(0, r, a.cols(), a.cols() - r);
}

} // namespace lcq

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "veronese/fp_echelon.hpp"
#include "veronese/matrix.hpp"

namespace veronese {

template <class Field>
struct RowEchelon {
  Matrix<Field> reduced;            // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

namespace detail {

inline RowEchelon<PrimeField> row_reduce_fp(const Matrix<PrimeField>& m) {
  FpEchelon ech(m.field().modulus(), m.cols());
  std::vector<std::uint32_t> raw(m.cols());
  for (std::size_t i = 0; i < m.rows() && ech.rank() < m.cols(); ++i) {
    const auto r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) raw[j] = r[j].value;
    ech.insert(raw);
  }
  Matrix<PrimeField> reduced(m.field(), 0, m.cols());
  std::vector<Fp> row(m.cols());
  for (const auto& r : ech.sorted_rows()) {
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.field().bind(Fp{r[j], 0});
    reduced.append_row(row);
  }
  return {std::move(reduced), ech.sorted_pivots()};
}

}  // namespace detail

/// Reduced row echelon form. Prime fields use the 64-bit accumulating
/// echelon; other fields use plain Gauss-Jordan elimination.
template <class Field>
RowEchelon<Field> row_reduce(Matrix<Field> m) {
  using Element = typename Field::Element;
  if constexpr (Field::is_prime_field) {
    return detail::row_reduce_fp(m);
  }
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && is_zero(m(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);
    const Element inv = inverse(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Element factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return {std::move(m), std::move(pivots)};
}

template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  return row_reduce(m).pivots.size();
}

/// Basis of {v : m v = 0}, one vector per row, in reduced row echelon form.
template <class Field>
Matrix<Field> kernel(const Matrix<Field>& m) {
  const auto ech = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  Matrix<Field> basis(m.field(), 0, cols);
  std::vector<typename Field::Element> v(cols, m.field().zero());
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
    basis.append_row(v);
  }
  return row_reduce(std::move(basis)).reduced;
}

/// Basis of {w : w^T m = 0}.
template <class Field>
Matrix<Field> left_kernel(const Matrix<Field>& m) {
  return kernel(m.transpose());
}

template <class Field>
typename Field::Element determinant(Matrix<Field> m) {
  using Element = typename Field::Element;
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Element det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && is_zero(m(pivot, c))) ++pivot;
    if (pivot == n) return m.field().zero();
    if (pivot != c) {
      m.swap_rows(pivot, c);
      det = -det;
    }
    det = det * m(c, c);
    const Element inv = inverse(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const Element factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
template <class Field>
std::optional<std::vector<typename Field::Element>> solve(const Matrix<Field>& m,
                                                          std::span<const typename Field::Element> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix<Field> aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = m.field().bind(b[i]);
  }
  const auto ech = row_reduce(std::move(aug));
  std::vector<typename Field::Element> x(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == m.cols()) return std::nullopt;
    x[ech.pivots[i]] = ech.reduced(i, m.cols());
  }
  return x;
}

template <class Field>
Matrix<Field> inverse(const Matrix<Field>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Field> aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  const auto ech = row_reduce(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw std::invalid_argument("matrix is singular");
  Matrix<Field> inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

/// Pfaffian by skew-symmetric elimination: Pf(A) = a01 * Pf(C'), where C' is
/// the trailing block after eliminating rows/columns 0 and 1.
template <class Field>
typename Field::Element pfaffian(Matrix<Field> m) {
  using Element = typename Field::Element;
  if (!m.is_square()) throw std::invalid_argument("Pfaffian of a non-square matrix");
  if (m.rows() % 2 != 0) throw std::invalid_argument("Pfaffian of an odd-size matrix");
  if (!m.is_skew_symmetric()) throw std::invalid_argument("Pfaffian of a non-skew matrix");
  const std::size_t n = m.rows();
  Element result = m.field().one();
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t pivot = k + 1;
    while (pivot < n && is_zero(m(k, pivot))) ++pivot;
    if (pivot == n) return m.field().zero();
    if (pivot != k + 1) {
      m.swap_rows(k + 1, pivot);
      for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k + 1), m(i, pivot));
      result = -result;
    }
    const Element a = m(k, k + 1);
    result = result * a;
    const Element inv = inverse(a);
    for (std::size_t i = k + 2; i < n; ++i) {
      const Element bi = m(k, i), ci = m(k + 1, i);
      for (std::size_t j = k + 2; j < n; ++j) {
        const Element update = (ci * m(k, j) - bi * m(k + 1, j)) * inv;
        if (!is_zero(update)) m(i, j) += update;
      }
    }
  }
  return result;
}

}  // namespace veronese

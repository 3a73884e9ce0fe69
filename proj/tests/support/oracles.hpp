#pragma once

// Slow reference implementations used to cross-check the library.

#include <algorithm>
#include <numeric>
#include <vector>

#include "veronese/linalg.hpp"
#include "veronese/unipoly.hpp"

namespace oracle {

using namespace veronese;

template <class Field>
Matrix<Field> drop(const Matrix<Field>& m, const std::vector<std::size_t>& gone) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (std::find(gone.begin(), gone.end(), i) == gone.end()) keep.push_back(i);
  Matrix<Field> out(m.field(), keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = m(keep[i], keep[j]);
  return out;
}

// Sum over perfect matchings, expanding along the first row.
template <class Field>
typename Field::Element pfaffian_by_matchings(const Matrix<Field>& m) {
  if (m.rows() == 0) return m.field().one();
  auto total = m.field().zero();
  for (std::size_t j = 1; j < m.rows(); ++j) {
    if (is_zero(m(0, j))) continue;
    auto term = m(0, j) * pfaffian_by_matchings(drop(m, {0, j}));
    total = (j % 2 == 1) ? total + term : total - term;
  }
  return total;
}

// Leibniz formula.
template <class Field>
typename Field::Element determinant_by_permutations(const Matrix<Field>& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  auto total = m.field().zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    auto term = m.field().one();
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * m(i, perm[i]);
    total = inversions % 2 == 0 ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<Fp> roots_by_scan(const UniPoly<PrimeField>& f) {
  std::vector<Fp> roots;
  const auto& field = f.field();
  for (std::uint32_t v = 0; v < field.modulus(); ++v) {
    const Fp t = field.from_uint(v);
    if (!is_zero(f.evaluate(t))) continue;
    auto rest = f;
    const auto factor = UniPoly<PrimeField>::linear_root(field, t);
    while (rest.degree() > 0) {
      auto [q, r] = rest.divmod(factor);
      if (!r.is_zero()) break;
      roots.push_back(t);
      rest = q;
    }
  }
  return roots;
}


// Textbook elimination, independent of the accumulating echelon.
template <class Field>
std::size_t rank_by_elimination(Matrix<Field> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const auto f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace oracle

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "veronese/linalg.hpp"
#include "veronese/poly.hpp"

namespace veronese {

/// Linear subspace of the degree-d forms in n variables. The basis is kept in
/// reduced row echelon form over monomial_basis(n, d), so two spaces are equal
/// exactly when their basis matrices are.
template <class Field>
class FormSpace {
 public:
  using Element = typename Field::Element;
  using PolyT = Poly<Field>;

  FormSpace(const Field& field, int nvars, int degree)
      : nvars_(nvars), degree_(degree), basis_(field, 0, monomial_count(nvars, degree)) {}

  /// Space spanned by coefficient rows over monomial_basis(nvars, degree).
  static FormSpace from_rows(int nvars, int degree, Matrix<Field> rows) {
    if (rows.cols() != monomial_count(nvars, degree)) throw std::invalid_argument("row length mismatch");
    FormSpace s(rows.field(), nvars, degree);
    s.basis_ = row_reduce(std::move(rows)).reduced;
    return s;
  }

  /// Span of homogeneous forms of the given degree (zero forms allowed).
  static FormSpace span(const Field& field, int nvars, int degree, std::span<const PolyT> forms) {
    Matrix<Field> rows(field, 0, monomial_count(nvars, degree));
    for (const auto& f : forms) {
      if (f.nvars() != nvars) throw RingMismatch("form has the wrong number of variables");
      if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != degree))
        throw std::invalid_argument("form is not homogeneous of degree " + std::to_string(degree));
      rows.append_row(f.dense_component(degree));
    }
    return from_rows(nvars, degree, std::move(rows));
  }

  static FormSpace full(const Field& field, int nvars, int degree) {
    return from_rows(nvars, degree, Matrix<Field>::identity(field, monomial_count(nvars, degree)));
  }

  const Field& field() const noexcept { return basis_.field(); }
  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  const Matrix<Field>& basis_matrix() const noexcept { return basis_; }

  PolyT form(std::size_t i) const { return PolyT::form(field(), nvars_, degree_, basis_.row(i)); }

  std::vector<PolyT> forms() const {
    std::vector<PolyT> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(form(i));
    return out;
  }

  /// Coordinates of f in the stored basis, or nullopt when f is outside.
  std::optional<std::vector<Element>> coordinates(const PolyT& f) const {
    const auto v = f.dense_component(degree_);
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != degree_)) return std::nullopt;
    return coordinates(std::span<const Element>(v));
  }

  std::optional<std::vector<Element>> coordinates(std::span<const Element> v) const {
    // RREF basis: the coordinate on row i is v at that row's pivot.
    std::vector<Element> coords;
    std::vector<Element> rest(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      std::size_t pivot = 0;
      while (is_zero(basis_(i, pivot))) ++pivot;
      const Element c = rest[pivot];
      coords.push_back(c);
      if (is_zero(c)) continue;
      for (std::size_t j = pivot; j < ambient_dim(); ++j) rest[j] -= c * basis_(i, j);
    }
    for (const auto& x : rest)
      if (!is_zero(x)) return std::nullopt;
    return coords;
  }

  bool contains(const PolyT& f) const { return coordinates(f).has_value(); }

  bool contains(const FormSpace& other) const {
    check_compatible(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!coordinates(other.basis_.row(i))) return false;
    return true;
  }

  FormSpace sum(const FormSpace& other) const {
    check_compatible(other);
    Matrix<Field> rows = basis_;
    for (std::size_t i = 0; i < other.dim(); ++i) rows.append_row(other.basis_.row(i));
    return from_rows(nvars_, degree_, std::move(rows));
  }

  FormSpace intersect(const FormSpace& other) const {
    check_compatible(other);
    // Solve a^T B1 = b^T B2 through the kernel of [B1; -B2]^T.
    const std::size_t n1 = dim(), n2 = other.dim(), m = ambient_dim();
    Matrix<Field> stacked(field(), m, n1 + n2);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n1; ++i) stacked(j, i) = basis_(i, j);
      for (std::size_t i = 0; i < n2; ++i) stacked(j, n1 + i) = -other.basis_(i, j);
    }
    const auto ker = kernel(stacked);
    Matrix<Field> rows(field(), 0, m);
    std::vector<Element> v(m, field().zero());
    for (std::size_t k = 0; k < ker.rows(); ++k) {
      std::fill(v.begin(), v.end(), field().zero());
      for (std::size_t i = 0; i < n1; ++i)
        if (!is_zero(ker(k, i)))
          for (std::size_t j = 0; j < m; ++j) v[j] += ker(k, i) * basis_(i, j);
      rows.append_row(v);
    }
    return from_rows(nvars_, degree_, std::move(rows));
  }

  friend bool operator==(const FormSpace& a, const FormSpace& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.basis_ == b.basis_;
  }

 private:
  void check_compatible(const FormSpace& other) const {
    if (nvars_ != other.nvars_ || degree_ != other.degree_)
      throw RingMismatch("form spaces of different shape");
  }

  int nvars_;
  int degree_;
  Matrix<Field> basis_;
};

}  // namespace veronese

#pragma once

#include <stdexcept>

#include "veronese/matrix.hpp"
#include "veronese/poly.hpp"

namespace veronese {

/// Symmetric matrix A of a quadratic form q, with q(x) = x^T A x. Off-diagonal
/// coefficients are split evenly between A_ij and A_ji, so char 2 is excluded.
template <class Field>
class SymQuadric {
 public:
  explicit SymQuadric(Matrix<Field> a) : a_(std::move(a)) {
    if (!a_.is_symmetric()) throw std::invalid_argument("quadric matrix must be symmetric");
  }

  static SymQuadric from_form(const Poly<Field>& q) {
    const Field& field = q.field();
    const auto n = static_cast<std::size_t>(q.nvars());
    if (!q.is_zero() && (q.degree() != 2 || !q.is_homogeneous()))
      throw std::invalid_argument("not a quadratic form");
    Matrix<Field> a(field, n, n);
    const auto half = inverse(field.from_int(2));
    q.for_each_term([&](const Exponent& e, const typename Field::Element& c) {
      std::size_t i = 0;
      while (e[i] == 0) ++i;
      if (e[i] == 2) {
        a(i, i) = c;
        return;
      }
      std::size_t j = i + 1;
      while (e[j] == 0) ++j;
      a(i, j) = c * half;
      a(j, i) = c * half;
    });
    return SymQuadric(std::move(a));
  }

  const Matrix<Field>& matrix() const noexcept { return a_; }

  Poly<Field> form() const {
    const Field& field = a_.field();
    const int n = static_cast<int>(a_.rows());
    Poly<Field> q(field, n);
    const auto two = field.from_int(2);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Exponent e{};
        ++e[i];
        ++e[j];
        q.add_term(e, i == j ? a_(i, i) : a_(i, j) * two);
      }
    return q;
  }

 private:
  Matrix<Field> a_;
};

}  // namespace veronese

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "veronese/form_space.hpp"
#include "veronese/sym_quadric.hpp"

namespace veronese {

/// Thrown when forms that must be independent are not.
class DependentForms : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 3-dimensional space of quadrics in 4 variables.
template <class Field>
class QuadricPlane {
 public:
  using PolyT = Poly<Field>;

  explicit QuadricPlane(FormSpace<Field> space) : space_(std::move(space)) {
    if (space_.nvars() != 4 || space_.degree() != 2)
      throw std::invalid_argument("quadric plane must consist of quadrics in 4 variables");
    if (space_.dim() != 3)
      throw DependentForms("quadric plane needs 3 independent quadrics, got dimension " +
                           std::to_string(space_.dim()));
  }

  static QuadricPlane span(std::span<const PolyT> forms) {
    if (forms.empty()) throw std::invalid_argument("no quadrics given");
    return QuadricPlane(FormSpace<Field>::span(forms[0].field(), 4, 2, forms));
  }

  const FormSpace<Field>& space() const noexcept { return space_; }
  const Field& field() const noexcept { return space_.field(); }

  /// The canonical (reduced echelon) basis q1, q2, q3.
  std::array<PolyT, 3> basis() const { return {space_.form(0), space_.form(1), space_.form(2)}; }

  bool contains(const PolyT& q) const { return space_.contains(q); }

  /// {q(g x) : q in L}.
  QuadricPlane transformed(const Matrix<Field>& g) const {
    std::vector<PolyT> out;
    for (const auto& q : basis()) out.push_back(linear_change(q, g));
    return span(out);
  }

  friend bool operator==(const QuadricPlane& a, const QuadricPlane& b) { return a.space_ == b.space_; }

 private:
  FormSpace<Field> space_;
};

/// Dimensions of the graded pieces of a quotient algebra, trailing zeros trimmed.
struct HilbertFunction {
  std::vector<std::size_t> values;

  static HilbertFunction trimmed(std::vector<std::size_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return {std::move(v)};
  }
  std::size_t length() const {
    std::size_t total = 0;
    for (auto v : values) total += v;
    return total;
  }
  std::string to_string() const;
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Degree pieces 0..max_degree() of a homogeneous ideal.
template <class Field>
struct GradedIdeal {
  std::vector<FormSpace<Field>> pieces;

  int max_degree() const { return static_cast<int>(pieces.size()) - 1; }
  const FormSpace<Field>& piece(int d) const { return pieces.at(static_cast<std::size_t>(d)); }
  /// x_i * I_d lies in I_(d+1) for every stored consecutive pair.
  bool is_closed() const;
  /// dim Sym^d - dim I_d over the stored degrees.
  HilbertFunction quotient_hilbert_function() const;
};

/// D acting on F by true partial derivatives; D and F share their variables.
/// Throws FieldError when the characteristic is positive and at most deg F.
template <class Field>
Poly<Field> contract(const Poly<Field>& D, const Poly<Field>& F);

/// <D, F> = D F for forms of equal degree: sum over monomials of D_m F_m m!.
template <class Field>
typename Field::Element pairing(const Poly<Field>& D, const Poly<Field>& F);

/// Operators of degree S.degree() annihilating every form of S.
template <class Field>
FormSpace<Field> perp(const FormSpace<Field>& S);

/// Operators annihilating every generator space, degrees 0..up_to.
template <class Field>
GradedIdeal<Field> annihilator(std::span<const FormSpace<Field>> generators, int up_to);

template <class Field>
GradedIdeal<Field> annihilator(const FormSpace<Field>& L, int up_to) {
  return annihilator(std::span<const FormSpace<Field>>(&L, 1), up_to);
}

/// Hilbert functions of Sym V^dual / Ann(L + V) and of Sym V^dual / Ann(L).
struct ApolarHilbert {
  HilbertFunction with_linear;
  HilbertFunction plane_only;
};

template <class Field>
ApolarHilbert apolar_hilbert_function(const QuadricPlane<Field>& L);

/// Span of the first partial derivatives of a cubic form.
template <class Field>
FormSpace<Field> partials_space(const Poly<Field>& F);

/// span{d1 F, d2 F, d3 F}; throws DependentForms when it is not 3-dimensional.
template <class Field>
QuadricPlane<Field> plane_from_cubic(const Poly<Field>& F, std::span<const Poly<Field>> operators);

/// Cubic F and linear operators with operators[i] F = L.basis()[i].
template <class Field>
struct CubicCertificate {
  Poly<Field> cubic;
  std::array<Poly<Field>, 3> operators;
  int attempts = 0;
};

/// Best-effort search for a cubic certificate of L. Each attempt fixes the
/// operators, solves linearly for the cubics they map into L, fixes one such
/// cubic and solves linearly for operators hitting the basis exactly.
/// Operators are drawn from the kernel of the block matrix of L (which is
/// nonzero exactly when a certificate can exist), else at random. A nullopt
/// result means the budget ran out, not that no cubic exists.
template <class Field>
std::optional<CubicCertificate<Field>> recover_cubic(const QuadricPlane<Field>& L, std::uint64_t seed,
                                                     int budget = 200);

/// True when operators[i] F == basis[i] for all i.
template <class Field>
bool check_certificate(const QuadricPlane<Field>& L, const CubicCertificate<Field>& cert);

/// The 12 x 12 skew matrix [[0, A1, -A2], [-A1, 0, A3], [A2, -A3, 0]] of
/// three quadrics with symmetric matrices A1, A2, A3.
template <class Field>
Matrix<Field> pfaffian_block_matrix(const Poly<Field>& q1, const Poly<Field>& q2, const Poly<Field>& q3);

}  // namespace veronese

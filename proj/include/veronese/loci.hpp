#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "veronese/apolarity.hpp"
#include "veronese/unipoly.hpp"

namespace veronese {

/// Pfaffian of the block matrix of the canonical basis of L. The sign depends
/// on the basis; its vanishing does not.
template <class Field>
typename Field::Element smoothable_pfaffian(const QuadricPlane<Field>& L);

/// Same for an explicit (not necessarily canonical) basis.
template <class Field>
typename Field::Element smoothable_pfaffian(const Poly<Field>& q1, const Poly<Field>& q2, const Poly<Field>& q3);

/// Operators of degree 2 killing L (dimension 7).
template <class Field>
FormSpace<Field> lperp(const QuadricPlane<Field>& L);

/// Column k is the product n^(e_k) of the 7 operators, e_k running over the
/// cubic monomials of 7 variables, expanded over the 84 sextic monomials.
template <class Field>
Matrix<Field> jump_matrix_from_perp(std::span<const Poly<Field>> perp_basis);

/// jump_matrix_from_perp on the canonical basis of lperp(L).
template <class Field>
Matrix<Field> jump_matrix(const QuadricPlane<Field>& L);

template <class Field>
struct JumpResult {
  std::size_t dimension = 0;
  /// Cubic forms in y0..y6 (coordinates dual to the canonical basis of
  /// lperp(L)) vanishing on the image of P^3.
  FormSpace<Field> cubics;
  std::vector<Poly<Field>> perp_basis;
};

template <class Field>
JumpResult<Field> jump_dimension(const QuadricPlane<Field>& L);

/// (n_0(p), ..., n_6(p)): the operators read as quadrics and evaluated at p,
/// which is the image of p under P^3 -> P^6 up to the factor 2.
template <class Field>
std::vector<typename Field::Element> perp_image(std::span<const Poly<Field>> perp_basis,
                                                std::span<const typename Field::Element> p);

template <class Field>
struct SecantResult {
  bool hit = false;
  /// Codimension of the ideal of 3x3 minors in Sym^d(a, b, c), per checked degree.
  std::vector<std::pair<int, std::size_t>> deficiency;
  bool degrees_agree = true;
  /// A quadric of rank <= 2 in L with coordinates in the base field, when one was found.
  std::optional<Poly<Field>> low_rank_member;
};

/// Whether P(L) meets the rank <= 2 locus over the algebraic closure. The 16
/// maximal 3x3 minors of a A1 + b A2 + c A3 have no common projective zero
/// exactly when their ideal contains all forms of a large enough degree; this
/// checks degree_bound and the next two degrees.
template <class Field>
SecantResult<Field> secant_intersects(const QuadricPlane<Field>& L, int degree_bound = 7, std::uint64_t seed = 0);

template <class Field>
struct SexticWitness {
  std::vector<Poly<Field>> sextics;
  bool annihilated = false;
};

/// Given q in L with q(B x) a nonzero multiple of x0 x1 (rank 2) or x0^2
/// (rank 1), returns the sextics x0^5 x1, x0^3 x1^3, x0 x1^5 (resp. x0^6,
/// x0^5 x1, x0^4 x1^2) in the original coordinates and checks that every
/// product of three elements of lperp(L) kills them.
template <class Field>
SexticWitness<Field> rank2_sextic_witness(const QuadricPlane<Field>& L, const Poly<Field>& q, const Matrix<Field>& B);

/// Sextics in the variables spanned by the column space of a rank <= 2
/// quadric q in L that are killed by all triple products of lperp(L).
/// Basis free, so it also covers quadrics that do not split over the field.
template <class Field>
FormSpace<Field> annihilated_sextics(const QuadricPlane<Field>& L, const Poly<Field>& q);

/// True when pairing every triple product of the basis with f gives 0.
template <class Field>
bool killed_by_triples(std::span<const Poly<Field>> perp_basis, const Poly<Field>& f);

enum class Verdict { general, smoothable_divisor, secant, both };
std::string to_string(Verdict v);

template <class Field>
struct Classification {
  typename Field::Element pfaffian_value;
  bool secant_hit = false;
  std::size_t jump_dim = 0;
  Verdict verdict = Verdict::general;
  FormSpace<Field> kernel_cubics;
  std::optional<Poly<Field>> low_rank_member;
  std::vector<Poly<Field>> annihilated;  // sextic witnesses when a secant point was found
  bool secant_degrees_agree = true;

  /// jump_dim > 0 exactly when the Pfaffian vanishes or the plane meets the secant.
  bool consistent() const { return (jump_dim > 0) == (is_zero(pfaffian_value) || secant_hit); }
};

template <class Field>
Classification<Field> classify(const QuadricPlane<Field>& L, int degree_bound = 7, std::uint64_t seed = 0);

struct PencilReport {
  UniPoly<PrimeField> det_poly;
  UniPoly<PrimeField> pf_poly;
  std::optional<UniPoly<PrimeField>> s_poly;
  std::array<int, 3> degrees{-1, -1, -1};  // deg det, deg Pf, deg s
  bool pf_cubed_divides = false;
  bool factorization_ok = false;
  std::optional<bool> s_squarefree;
  int attempts = 0;  // flags drawn, including degenerate ones
};

class GenericityExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random flag W2 in W4 of quadrics, L(t) = W2 + span(u + t w). det(t) is the
/// jump determinant for the polynomial basis K + (t e - f) of L(t)^perp
/// (K = W4^perp, e and f dual to u and w inside W2^perp), interpolated from 40
/// values; Pf(t) uses the basis (a1, a2, u + t w) and 5 values. Checks
/// det = c Pf^3 s^3 with deg s = 10; redraws the flag when deg det < 36.
PencilReport pencil_experiment(const PrimeField& field, std::uint64_t seed, int max_retries = 10);

}  // namespace veronese

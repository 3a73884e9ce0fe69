#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "veronese/loci.hpp"
#include "veronese/random.hpp"

namespace veronese {

using FpPoly = Poly<PrimeField>;
using FpPoint = std::vector<Fp>;

/// A configuration that is too special for the construction at hand. Callers
/// that sample configurations resample on this.
class NonGeneric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Ambient { affine, projective };

/// Distinct points of A^n or P^n. Projective points are stored with their
/// first nonzero coordinate equal to 1.
class PointSet {
 public:
  PointSet(const PrimeField& field, Ambient ambient, int dim, std::vector<FpPoint> points);

  static PointSet random(Rng& rng, const PrimeField& field, Ambient ambient, int dim, std::size_t count);

  const PrimeField& field() const noexcept { return field_; }
  Ambient ambient() const noexcept { return ambient_; }
  int dim() const noexcept { return dim_; }
  /// Number of coordinates per point: n for A^n, n + 1 for P^n.
  int coordinates() const noexcept { return ambient_ == Ambient::affine ? dim_ : dim_ + 1; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<FpPoint>& points() const noexcept { return points_; }
  const FpPoint& operator[](std::size_t i) const { return points_[i]; }

  /// Affine points as (p, 1) in P^n; projective sets are returned unchanged.
  PointSet homogenized() const;
  /// Projective points with nonzero last coordinate as affine points p / p_n.
  /// Throws NonGeneric when a point lies on the hyperplane p_n = 0.
  PointSet dehomogenized() const;

 private:
  PrimeField field_;
  Ambient ambient_;
  int dim_;
  std::vector<FpPoint> points_;
};

/// Scales a nonzero vector so that its first nonzero entry is 1.
FpPoint normalize_projective(FpPoint p);

/// Homogeneous forms of one degree in source_vars variables.
class RationalMap {
 public:
  RationalMap(int source_vars, std::vector<FpPoly> forms);

  int source_vars() const noexcept { return source_vars_; }
  int target_vars() const noexcept { return static_cast<int>(forms_.size()); }
  int degree() const noexcept { return degree_; }
  const std::vector<FpPoly>& forms() const noexcept { return forms_; }
  const PrimeField& field() const { return forms_.front().field(); }

 private:
  int source_vars_;
  int degree_;
  std::vector<FpPoly> forms_;
};

/// All degree-d monomials of nvars variables, in monomial_basis order.
RationalMap veronese_map(const PrimeField& field, int nvars, int d);

/// f(p), normalized; nullopt when every form vanishes at p.
std::optional<FpPoint> apply_map(const RationalMap& f, const FpPoint& p);

/// Degree-d forms vanishing on the points. Affine points of A^n are read as
/// (p, 1), so the forms have n + 1 variables with the last one homogenizing.
FormSpace<PrimeField> forms_through(const PointSet& points, int d);

struct InitialSystem {
  GradedIdeal<PrimeField> ideal;  // degree pieces up to the first degree with HF 0
  HilbertFunction hilbert;
  /// perp of the degree 2 piece, for 8 points of A^4 with HF (1,4,3).
  std::optional<QuadricPlane<PrimeField>> plane;
};

/// Ideal of the limit of t * points as t -> 0: the top-degree parts of the
/// polynomials vanishing on the points. Degree d is obtained exactly as the
/// restriction to x_n = 0 of the homogenized degree d forms through them.
InitialSystem initial_system(const PointSet& affine_points);

/// The ninth common zero of two plane cubics through 8 known points.
/// Throws std::invalid_argument when the known points are not common zeros
/// and NonGeneric when the residual point is one of them or no coordinate
/// change in the retry budget separates the intersection points.
FpPoint ninth_base_point(const FpPoly& c1, const FpPoly& c2, const PointSet& known, std::uint64_t seed);

/// Reembedding of P^2 by conics and projection from v2(q): the 5 conics
/// through q, rows of `conics` over the degree 2 monomials of (x0, x1, x2).
struct GaleProjection {
  FpPoint q;
  Matrix<PrimeField> conics;  // 5 x 6
  PointSet points;            // images of the input configuration in P^4

  std::optional<FpPoint> map(const FpPoint& p) const;
};

/// The conic basis is a seeded random basis, so no coordinate hyperplane of
/// P^4 is special for the scroll. Throws NonGeneric when an input point is q
/// or two images coincide.
GaleProjection gale_dual(const PointSet& gamma2, const FpPoint& q, std::uint64_t seed = 0);

/// Quadrics of P^4 vanishing on the image of P^2 under the 5 conics through q.
FormSpace<PrimeField> scroll_quadrics(const GaleProjection& gale);

struct EllipticMember {
  Fp s;
  PointSet samples;  // on the image of c1 + s c2 in P^4
  FormSpace<PrimeField> quadrics;
};

/// Image of the cubic c1 + s c2 under the projection, sampled on the lines
/// x0 = const of the chart x2 = 1. Throws NonGeneric when the cubic is
/// singular, too few points are found or the quadrics are not 5.
EllipticMember elliptic_member(const FpPoly& c1, const FpPoly& c2, const GaleProjection& gale, Fp s,
                               std::size_t count = 30);

/// Cubic relations among the member's quadrics restricted to x4 = 0, which is
/// the hyperplane at infinity of the chart used by initial_system. They are
/// returned in y0..y6, the coordinates of the canonical basis of lperp(L).
/// Throws std::logic_error when the restrictions do not lie in lperp(L).
FormSpace<PrimeField> segre_cubic(const EllipticMember& member, const QuadricPlane<PrimeField>& L);

struct OcticSurface {
  RationalMap embedding;  // P^2 -> P^6 by the quartics through Z
  FormSpace<PrimeField> quadrics;
  RationalMap cremona;  // P^6 -> P^6 by those quadrics
};

/// Throws NonGeneric unless there are exactly 7 quartics and 7 quadrics.
OcticSurface octic_surface(const PointSet& z);

struct InverseMap {
  RationalMap g;
  FpPoly lambda;  // g(f(x)) = lambda(x) x
};

/// Degree d2 forms g with g(f(x)) = lambda(x) x. The conditions on lambda
/// alone are that lambda x_i lies in the span of the degree d2 monomials in
/// f; they are assembled sparsely, compressed by random combinations and the
/// resulting kernel is checked against every equation, so the answer is exact.
std::optional<InverseMap> find_inverse(const RationalMap& f, int d2, std::uint64_t seed = 0);

/// g(f(p)) = p and f(g(p)) = p projectively at `samples` random points each.
bool verify_inverse(const RationalMap& f, const RationalMap& g, std::uint64_t seed, int samples = 20);

/// One point per line, comma-separated integers, `#` comments.
PointSet parse_point_set(const PrimeField& field, const std::vector<std::string>& lines, Ambient ambient);
PointSet read_point_set(const PrimeField& field, const std::filesystem::path& path, Ambient ambient);
std::string format_point_set(const PointSet& points);

/// One form per line in x0.. x(source_vars - 1).
RationalMap read_rational_map(const PrimeField& field, const std::filesystem::path& path, int source_vars);

}  // namespace veronese

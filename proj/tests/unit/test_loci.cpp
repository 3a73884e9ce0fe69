#include "doctest.h"

#include "support/oracles.hpp"
#include "veronese/loci.hpp"
#include "veronese/parse.hpp"
#include "veronese/random.hpp"

using namespace veronese;

namespace {

const PrimeField F{};
using P = Poly<PrimeField>;
using Plane = QuadricPlane<PrimeField>;
using M = Matrix<PrimeField>;

P px(const std::string& s, const PrimeField& field = F) { return parse_poly(field, s); }

Plane plane(std::initializer_list<const char*> forms, const PrimeField& field = F) {
  std::vector<P> q;
  for (auto f : forms) q.push_back(px(f, field));
  return Plane::span(q);
}

Plane random_plane(Rng& rng, const PrimeField& field = F, std::vector<P> q = {}) {
  while (true) {
    auto all = q;
    while (all.size() < 3) all.push_back(random_form(rng, field, 4, 2));
    if (FormSpace<PrimeField>::span(field, 4, 2, all).dim() == 3) return Plane::span(all);
  }
}

Plane partials_plane(Rng& rng) {
  while (true) {
    const auto f = random_form(rng, F, 4, 3);
    std::vector<P> ops{random_form(rng, F, 4, 1), random_form(rng, F, 4, 1), random_form(rng, F, 4, 1)};
    try {
      return plane_from_cubic(f, std::span<const P>(ops));
    } catch (const DependentForms&) {
    }
  }
}

template <class Field>
std::size_t quadric_rank(const Poly<Field>& q) { return rank(SymQuadric<Field>::from_form(q).matrix()); }

// Rational points of P^2 whose member of L has rank <= 2, by exhaustive scan.
bool has_rational_low_rank_member(const Plane& L) {
  const auto q = L.basis();
  const auto& field = L.field();
  const auto p = static_cast<std::int64_t>(field.modulus());
  auto test = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    const auto m = q[0] * field.from_int(a) + q[1] * field.from_int(b) + q[2] * field.from_int(c);
    return oracle::rank_by_elimination(SymQuadric<PrimeField>::from_form(m).matrix()) <= 2;
  };
  if (test(0, 0, 1)) return true;
  for (std::int64_t c = 0; c < p; ++c)
    if (test(0, 1, c)) return true;
  for (std::int64_t b = 0; b < p; ++b)
    for (std::int64_t c = 0; c < p; ++c)
      if (test(1, b, c)) return true;
  return false;
}

M transpose_inverse(const M& g) { return inverse(g).transpose(); }

}  // namespace

TEST_CASE("smoothable pfaffian examples") {
  CHECK(is_zero(smoothable_pfaffian(plane({"x0^2", "x1^2", "x2^2"}))));
  Rng rng(11);
  for (int i = 0; i < 20; ++i) CHECK(is_zero(smoothable_pfaffian(partials_plane(rng))));
  int nonzero = 0;
  for (int i = 0; i < 20; ++i) nonzero += !is_zero(smoothable_pfaffian(random_plane(rng)));
  CHECK(nonzero == 20);
}

TEST_CASE("pfaffian has degree two in each slot") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    std::array<P, 3> q{random_form(rng, F, 4, 2), random_form(rng, F, 4, 2), random_form(rng, F, 4, 2)};
    const auto base = smoothable_pfaffian(q[0], q[1], q[2]);
    for (int slot = 0; slot < 3; ++slot)
      for (int k = 0; k < 3; ++k) {
        const auto lambda = random_nonzero(rng, F);
        auto s = q;
        s[slot] = s[slot] * lambda;
        CHECK(smoothable_pfaffian(s[0], s[1], s[2]) == base * lambda * lambda);
      }
    // A change of basis by M multiplies the Pfaffian by det(M)^2.
    const auto m = random_invertible(rng, F, 3);
    std::array<P, 3> r{P(F, 4), P(F, 4), P(F, 4)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i] += q[j] * m(i, j);
    const auto det = determinant(m);
    CHECK(smoothable_pfaffian(r[0], r[1], r[2]) == base * det * det);
    CHECK(smoothable_pfaffian(q[0], q[1], q[2]) ==
          oracle::pfaffian_by_matchings(pfaffian_block_matrix(q[0], q[1], q[2])));
  }
}

TEST_CASE("perp of a quadric plane") {
  const auto diag = plane({"x0^2", "x1^2", "x2^2 - x3^2"});
  const auto perp_space = lperp(diag);
  CHECK(perp_space.dim() == 7);
  CHECK(perp_space == annihilator(diag.space(), 2).piece(2));
  std::vector<P> listed;
  for (auto s : {"x0*x1", "x0*x2", "x0*x3", "x1*x2", "x1*x3", "x2*x3", "x2^2 + x3^2"}) listed.push_back(px(s));
  CHECK(perp_space == FormSpace<PrimeField>::span(F, 4, 2, listed));

  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto L = random_plane(rng);
    const auto g = random_invertible(rng, F, 4);
    std::vector<P> moved;
    for (const auto& e : lperp(L).forms()) moved.push_back(linear_change(e, transpose_inverse(g)));
    CHECK(lperp(L.transformed(g)) == FormSpace<PrimeField>::span(F, 4, 2, moved));
  }
}

TEST_CASE("jump matrix ranks") {
  Rng rng(14);
  const auto generic = jump_matrix(random_plane(rng));
  CHECK(generic.rows() == 84);
  CHECK(generic.cols() == 84);
  CHECK(rank(generic) == 84);
  CHECK(rank(jump_matrix(partials_plane(rng))) == 81);
  CHECK(rank(jump_matrix(random_plane(rng, F, {px("x0*x1")}))) <= 81);
  CHECK_THROWS_AS(jump_matrix_from_perp(std::span<const P>(lperp(random_plane(rng)).forms()).first(6)),
                  std::invalid_argument);
}

TEST_CASE("jump dimension and kernel cubics") {
  Rng rng(15);
  CHECK(jump_dimension(random_plane(rng)).dimension == 0);
  const auto diag = jump_dimension(plane({"x0^2", "x1^2", "x2^2 - x3^2"}));
  CHECK(diag.dimension >= 3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto L = trial == 0 ? plane({"x0^2", "x1^2", "x2^2 - x3^2"}) : partials_plane(rng);
    const auto jump = jump_dimension(L);
    if (trial > 0) CHECK(jump.dimension == 3);
    CHECK(jump.cubics.nvars() == 7);
    CHECK(jump.cubics.degree() == 3);
    CHECK(is_zero(determinant(jump_matrix(L))) == (jump.dimension > 0));
    for (int k = 0; k < 50; ++k) {
      const auto p = random_vector(rng, F, 4);
      const auto image = perp_image(std::span<const P>(jump.perp_basis), std::span<const Fp>(p));
      for (const auto& c : jump.cubics.forms()) CHECK(is_zero(c.evaluate(std::span<const Fp>(image))));
    }
  }
}

TEST_CASE("secant intersection examples") {
  const auto diag = secant_intersects(plane({"x0^2", "x1^2", "x2^2 - x3^2"}));
  CHECK(diag.hit);
  CHECK(diag.degrees_agree);
  REQUIRE(diag.deficiency.size() == 3);
  CHECK(diag.deficiency[0].first == 7);
  const auto mixed = secant_intersects(plane({"x0*x1", "x2*x3", "x0^2 + x1^2 + x2^2 + x3^2"}));
  CHECK(mixed.hit);
  CHECK(mixed.degrees_agree);
  Rng rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = secant_intersects(random_plane(rng));
    CHECK_FALSE(r.hit);
    CHECK(r.degrees_agree);
    for (const auto& [d, def] : r.deficiency) CHECK(def == 0);
  }
  CHECK_THROWS_AS(secant_intersects(random_plane(rng), 2), std::invalid_argument);
}

TEST_CASE("secant finds a rational low rank member") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_invertible(rng, F, 4);
    const auto q = linear_change(trial % 2 ? px("x0*x1") : px("x0^2"), g);
    const auto L = random_plane(rng, F, {q});
    const auto r = secant_intersects(L, 7, static_cast<std::uint64_t>(trial));
    CHECK(r.hit);
    REQUIRE(r.low_rank_member.has_value());
    CHECK(L.contains(*r.low_rank_member));
    CHECK(quadric_rank(*r.low_rank_member) <= 2);
    CHECK_FALSE(r.low_rank_member->is_zero());
  }
}

TEST_CASE("secant agrees with an exhaustive scan over a small field") {
  const PrimeField small(101);
  Rng rng(18);
  int scanned_hits = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const auto L = trial % 3 == 0 ? random_plane(rng, small, {linear_change(px("x0*x1", small), random_invertible(rng, small, 4))})
                                  : random_plane(rng, small);
    const bool rational = has_rational_low_rank_member(L);
    scanned_hits += rational;
    // A rational low rank member forces a hit; a hit need not be rational.
    if (rational) CHECK(secant_intersects(L).hit);
  }
  CHECK(scanned_hits >= 4);
}

TEST_CASE("equivariance under coordinate changes") {
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const auto L = trial % 3 == 0 ? partials_plane(rng)
                   : trial % 3 == 1 ? random_plane(rng, F, {px("x0*x1")})
                                    : random_plane(rng);
    const auto g = random_invertible(rng, F, 4);
    const auto moved = L.transformed(g);
    CHECK(jump_dimension(moved).dimension == jump_dimension(L).dimension);
    CHECK(secant_intersects(moved).hit == secant_intersects(L).hit);
    CHECK(is_zero(smoothable_pfaffian(moved)) == is_zero(smoothable_pfaffian(L)));
  }
}

TEST_CASE("sextic witnesses") {
  Rng rng(20);
  const auto id = M::identity(F, 4);
  const auto L = random_plane(rng, F, {px("x0*x1")});
  const auto w = rank2_sextic_witness(L, px("x0*x1"), id);
  CHECK(w.annihilated);
  REQUIRE(w.sextics.size() == 3);
  CHECK(w.sextics[0] == px("x0^5*x1"));
  CHECK(w.sextics[1] == px("x0^3*x1^3"));
  CHECK(w.sextics[2] == px("x0*x1^5"));

  // Cross-check the pairing test by contracting each triple product directly.
  const auto basis = lperp(L).forms();
  for (const auto& prod : monomial_images(std::span<const P>(basis), 3))
    for (const auto& s : w.sextics) CHECK(contract(prod, s).is_zero());

  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_invertible(rng, F, 4);
    const auto q2 = linear_change(px("x0*x1"), g);
    const auto moved = random_plane(rng, F, {q2});
    CHECK(rank2_sextic_witness(moved, q2 * F.from_int(5), inverse(g)).annihilated);
    CHECK(jump_dimension(moved).dimension >= 3);
    const auto killed = annihilated_sextics(moved, q2);
    CHECK(killed.dim() >= 3);
    for (const auto& s : rank2_sextic_witness(moved, q2, inverse(g)).sextics) CHECK(killed.contains(s));
  }

  const auto rank_one = random_plane(rng, F, {px("x0^2")});
  const auto w1 = rank2_sextic_witness(rank_one, px("x0^2"), id);
  CHECK(w1.annihilated);
  CHECK(w1.sextics[0] == px("x0^6"));
  CHECK(annihilated_sextics(rank_one, px("x0^2")).dim() >= 3);

  // A generic sextic is not killed.
  CHECK_FALSE(killed_by_triples(std::span<const P>(basis), random_form(rng, F, 4, 6)));

  const auto full_rank = random_plane(rng, F, {px("x0*x1 + x2*x3")});
  CHECK_THROWS_AS(rank2_sextic_witness(full_rank, px("x0*x1 + x2*x3"), id), std::invalid_argument);
  CHECK_THROWS_AS(annihilated_sextics(full_rank, px("x0*x1 + x2*x3")), std::invalid_argument);
  CHECK_THROWS_AS(rank2_sextic_witness(full_rank, px("x0*x1"), id), std::invalid_argument);
}

TEST_CASE("classify verdicts") {
  Rng rng(21);
  const auto generic = classify(random_plane(rng));
  CHECK_FALSE(is_zero(generic.pfaffian_value));
  CHECK_FALSE(generic.secant_hit);
  CHECK(generic.jump_dim == 0);
  CHECK(generic.verdict == Verdict::general);
  CHECK(generic.consistent());

  const auto partial = classify(partials_plane(rng));
  CHECK(is_zero(partial.pfaffian_value));
  CHECK_FALSE(partial.secant_hit);
  CHECK(partial.jump_dim == 3);
  CHECK(partial.kernel_cubics.dim() == 3);
  CHECK(partial.verdict == Verdict::smoothable_divisor);
  CHECK(partial.consistent());

  const auto both = classify(plane({"x0^2", "x1^2", "x2^2"}));
  CHECK(both.verdict == Verdict::both);
  CHECK(both.jump_dim >= 3);
  CHECK(both.low_rank_member.has_value());
  CHECK(both.annihilated.size() >= 3);
  CHECK(both.consistent());

  const auto secant = classify(random_plane(rng, F, {px("x0*x1")}));
  CHECK(secant.verdict == Verdict::secant);
  CHECK(secant.jump_dim >= 3);
  CHECK(secant.consistent());

  CHECK(to_string(Verdict::smoothable_divisor) == "smoothable-divisor");
  CHECK(to_string(Verdict::both) == "both");
}

TEST_CASE("classify over the rationals") {
  const RationalField Q{};
  std::vector<Poly<RationalField>> q;
  for (auto s : {"x0^2", "x1^2", "x2^2"}) q.push_back(parse_poly(Q, s));
  const auto c = classify(QuadricPlane<RationalField>::span(q));
  CHECK(c.verdict == Verdict::both);
  CHECK(c.jump_dim >= 3);
  CHECK(c.consistent());
  REQUIRE(c.low_rank_member.has_value());
  CHECK(quadric_rank(*c.low_rank_member) <= 2);
  CHECK(c.annihilated.size() >= 3);

  // x0 x1 + x2^2 and x0 x1 - x2^2 span the rank 2 member x0 x1; the third form is general.
  std::vector<Poly<RationalField>> r;
  for (auto s : {"x0*x1 + x2^2", "x0*x1 - x2^2 + x0*x3", "x0^2 + x1*x3 - 2*x2*x3 + x3^2"}) r.push_back(parse_poly(Q, s));
  const auto s = secant_intersects(QuadricPlane<RationalField>::span(r));
  CHECK(s.hit);
  REQUIRE(s.low_rank_member.has_value());
  CHECK(quadric_rank(*s.low_rank_member) <= 2);
}

TEST_CASE("pencil experiment") {
  const auto r = pencil_experiment(F, 7);
  CHECK(r.degrees == std::array<int, 3>{36, 2, 10});
  CHECK(r.pf_cubed_divides);
  CHECK(r.factorization_ok);
  REQUIRE(r.s_poly.has_value());
  const auto pf3 = r.pf_poly * r.pf_poly * r.pf_poly;
  const auto s3 = *r.s_poly * *r.s_poly * *r.s_poly;
  const auto c = r.det_poly.leading() / (pf3 * s3).leading();
  CHECK(r.det_poly == pf3 * s3 * c);
  CHECK(r.attempts >= 1);
  CHECK(pencil_experiment(F, 7).det_poly == r.det_poly);
  CHECK_THROWS_AS(pencil_experiment(PrimeField(37), 1), std::invalid_argument);
}

#include "doctest.h"

#include "veronese/apolarity.hpp"
#include "veronese/parse.hpp"
#include "veronese/random.hpp"

using namespace veronese;

namespace {

const PrimeField F{};
const RationalField Q{};
using P = Poly<PrimeField>;
using Plane = QuadricPlane<PrimeField>;

P px(const std::string& s) { return parse_poly(F, s); }

Plane plane(std::initializer_list<const char*> forms) {
  std::vector<P> q;
  for (auto f : forms) q.push_back(px(f));
  return Plane::span(q);
}

Plane random_plane(Rng& rng) {
  while (true) {
    std::vector<P> q{random_form(rng, F, 4, 2), random_form(rng, F, 4, 2), random_form(rng, F, 4, 2)};
    if (FormSpace<PrimeField>::span(F, 4, 2, q).dim() == 3) return Plane::span(q);
  }
}

std::vector<P> random_operators(Rng& rng) {
  return {random_form(rng, F, 4, 1), random_form(rng, F, 4, 1), random_form(rng, F, 4, 1)};
}

// Partial derivative straight from the coefficient formula, for cross-checks.
P partial_by_formula(const P& f, int i) {
  P out(F, f.nvars());
  f.for_each_term([&](const Exponent& e, const Fp& c) {
    if (e[i] == 0) return;
    Exponent r = e;
    --r[i];
    out.add_term(r, c * F.from_int(e[i]));
  });
  return out;
}

}  // namespace

TEST_CASE("contract examples") {
  CHECK(contract(px("x0"), px("x0^2")) == px("2*x0"));
  CHECK(contract(px("x2^2 + x3^2"), px("x2^2 - x3^2")).is_zero());
  CHECK(contract(px("x0*x1"), px("x0^2*x1")) == px("2*x0"));
  CHECK(contract(px("x0^3"), px("x0")).is_zero());
  CHECK(contract(px("1"), px("x1^2")) == px("x1^2"));
  CHECK_THROWS_AS(contract(parse_poly(PrimeField(11), "x0"), parse_poly(PrimeField(11), "x0^11")), FieldError);
  CHECK_THROWS_AS(contract(px("x0"), P::variable(F, 3, 0)), RingMismatch);
}

TEST_CASE("contract agrees with iterated partial derivatives") {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_form(rng, F, 4, 4);
    const int i = static_cast<int>(rng.below(4)), j = static_cast<int>(rng.below(4));
    const auto d = P::variable(F, 4, i) * P::variable(F, 4, j);
    CHECK(contract(d, f) == partial_by_formula(partial_by_formula(f, j), i));
  }
}

TEST_CASE("module axiom") {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int a = static_cast<int>(rng.below(3)), b = static_cast<int>(rng.below(3));
    const auto d1 = random_form(rng, F, 4, a), d2 = random_form(rng, F, 4, b);
    const auto f = random_form(rng, F, 4, 2 + static_cast<int>(rng.below(4)));
    CHECK(contract(d1, contract(d2, f)) == contract(d1 * d2, f));
  }
}

TEST_CASE("annihilator of the diagonal example") {
  const auto L = plane({"x0^2", "x1^2", "x2^2 - x3^2"});
  const auto ann = annihilator(L.space(), 3);
  const std::vector<P> listed{px("x0*x1"), px("x0*x2"), px("x0*x3"), px("x1*x2"),
                              px("x1*x3"), px("x2*x3"), px("x2^2 + x3^2")};
  CHECK(ann.piece(2) == FormSpace<PrimeField>::span(F, 4, 2, listed));
  CHECK(ann.piece(2).dim() == 7);
  CHECK(ann.piece(3).dim() == 20);
  CHECK(ann.piece(1).dim() == 0);
  CHECK(ann.is_closed());
  CHECK(apolar_hilbert_function(L).with_linear == HilbertFunction{{1, 4, 3}});
  CHECK(apolar_hilbert_function(L).with_linear.to_string() == "(1,4,3)");

  // Same example over the rationals.
  std::vector<Poly<RationalField>> qq;
  for (auto s : {"x0^2", "x1^2", "x2^2 - x3^2"}) qq.push_back(parse_poly(Q, s));
  const auto qann = annihilator(FormSpace<RationalField>::span(Q, 4, 2, qq), 2);
  CHECK(qann.piece(2).contains(parse_poly(Q, "x2^2 + x3^2")));
  CHECK(qann.piece(2).dim() == 7);
}

TEST_CASE("annihilator small cases") {
  const std::vector<P> sq{px("x0^2")};
  const auto ann = annihilator(FormSpace<PrimeField>::span(F, 4, 2, sq), 2);
  const std::vector<P> killers{px("x1"), px("x2"), px("x3")};
  CHECK(ann.piece(1) == FormSpace<PrimeField>::span(F, 4, 1, killers));
  CHECK(annihilator(FormSpace<PrimeField>::full(F, 4, 2), 2).piece(2).dim() == 0);
  CHECK(ann.piece(0).dim() == 0);
}

TEST_CASE("apolar Hilbert functions") {
  const auto degenerate = apolar_hilbert_function(plane({"x0^2", "x0*x1", "x1^2"}));
  CHECK(degenerate.with_linear == HilbertFunction{{1, 4, 3}});
  CHECK(degenerate.plane_only == HilbertFunction{{1, 2, 3}});
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto L = random_plane(rng);
    const auto hf = apolar_hilbert_function(L);
    CHECK(hf.with_linear == HilbertFunction{{1, 4, 3}});
    CHECK(hf.with_linear.length() == 8);
    CHECK(hf.plane_only == HilbertFunction{{1, 4, 3}});
    CHECK(annihilator(L.space(), 3).is_closed());
  }
  // Length 8 also for special planes.
  for (const auto& L : {plane({"x0^2", "x0*x1", "x1^2"}), plane({"x0*x1", "x2*x3", "x0^2 + x1^2 + x2^2 + x3^2"}),
                        plane({"x0^2", "x1^2", "x2^2"})})
    CHECK(apolar_hilbert_function(L).with_linear.length() == 8);
}

TEST_CASE("apolar is order reversing") {
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_form(rng, F, 4, 2), b = random_form(rng, F, 4, 2), c = random_form(rng, F, 4, 2);
    const std::vector<P> small{a, b}, big{a, b, c};
    const auto ann_small = annihilator(FormSpace<PrimeField>::span(F, 4, 2, small), 3);
    const auto ann_big = annihilator(FormSpace<PrimeField>::span(F, 4, 2, big), 3);
    for (int d = 0; d <= 3; ++d) CHECK(ann_small.piece(d).contains(ann_big.piece(d)));
  }
}

TEST_CASE("partials space") {
  const auto fermat = partials_space(px("x0^3 + x1^3 + x2^3 + x3^3"));
  const std::vector<P> squares{px("x0^2"), px("x1^2"), px("x2^2"), px("x3^2")};
  CHECK(fermat == FormSpace<PrimeField>::span(F, 4, 2, squares));
  CHECK(partials_space(px("x0^3")).dim() == 1);
  CHECK_THROWS(partials_space(px("x0^2")));
  CHECK_THROWS(partials_space(px("x0^3 + x1")));
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_form(rng, F, 4, 3);
    // Rank of the 4 x 10 coefficient matrix of the partials.
    std::vector<P> partials;
    for (int i = 0; i < 4; ++i) partials.push_back(partial_by_formula(f, i));
    CHECK(FormSpace<PrimeField>::span(F, 4, 2, partials).dim() == 4);
    CHECK(partials_space(f).dim() == 4);
  }
}

TEST_CASE("plane from cubic") {
  const std::vector<P> d{px("x0"), px("x1"), px("x2")};
  CHECK(plane_from_cubic(px("x0^3 + x1^3 + x2^3 + x3^3"), std::span<const P>(d)) ==
        plane({"x0^2", "x1^2", "x2^2"}));
  CHECK_THROWS_AS(plane_from_cubic(px("x0^3"), std::span<const P>(d)), DependentForms);
  const std::vector<P> bad{px("x0"), px("x1^2"), px("x2")};
  CHECK_THROWS(plane_from_cubic(px("x0^3 + x1^3 + x2^3"), std::span<const P>(bad)));
}

TEST_CASE("symmetric quadric matrices") {
  const auto q = px("x0^2 + 4*x0*x1 - 6*x2*x3");
  const auto s = SymQuadric<PrimeField>::from_form(q);
  CHECK(s.matrix()(0, 1) == F.from_int(2));
  CHECK(s.matrix()(2, 3) == F.from_int(-3));
  CHECK(s.form() == q);
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = random_form(rng, F, 4, 2);
    const auto A = SymQuadric<PrimeField>::from_form(r).matrix();
    const auto x = random_vector(rng, F, 4);
    const auto ax = A.apply(x);
    Fp xax = F.zero();
    for (int i = 0; i < 4; ++i) xax += x[i] * ax[i];
    CHECK(xax == r.evaluate(x));
  }
}

TEST_CASE("block matrix of partial planes is degenerate") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ops = random_operators(rng);
    const auto L = plane_from_cubic(random_form(rng, F, 4, 3), std::span<const P>(ops));
    const auto q = L.basis();
    CHECK(is_zero(pfaffian(pfaffian_block_matrix(q[0], q[1], q[2]))));
  }
}

TEST_CASE("recover cubic") {
  const auto diag = plane({"x0^2", "x1^2", "x2^2"});
  const auto cert = recover_cubic(diag, 1);
  REQUIRE(cert.has_value());
  CHECK(check_certificate(diag, *cert));
  // The certificate pushes every operator into the plane, so the cubic's
  // x0, x1, x2 parts are pure cubes.
  CHECK(diag.space().contains(contract(cert->operators[0], cert->cubic)));

  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ops = random_operators(rng);
    const auto L = plane_from_cubic(random_form(rng, F, 4, 3), std::span<const P>(ops));
    const auto found = recover_cubic(L, rng.next());
    REQUIRE(found.has_value());
    CHECK(check_certificate(L, *found));
    CHECK(found->attempts == 1);
  }
  for (int trial = 0; trial < 5; ++trial) CHECK_FALSE(recover_cubic(random_plane(rng), rng.next(), 20).has_value());
}

TEST_CASE("recover cubic over the rationals") {
  std::vector<Poly<RationalField>> ops{parse_poly(Q, "x0 + x1"), parse_poly(Q, "x1 - 2*x2"), parse_poly(Q, "x3 + x0")};
  const auto L = plane_from_cubic(parse_poly(Q, "x0^3 + 2*x1^2*x2 - x0*x2*x3 + x3^3 + x1*x2*x3"),
                                  std::span<const Poly<RationalField>>(ops));
  const auto cert = recover_cubic(L, 3);
  REQUIRE(cert.has_value());
  CHECK(check_certificate(L, *cert));
}

#include "doctest.h"

#include <fstream>

#include "veronese/constructions.hpp"
#include "veronese/parse.hpp"

using namespace veronese;

namespace {

const PrimeField F{};

FpPoly px(const std::string& s, int nvars = 4) { return parse_poly(F, s, VarFamily{'x', nvars}); }
Fp c(std::int64_t v) { return F.from_int(v); }

FpPoint pt(std::initializer_list<std::int64_t> v) {
  FpPoint out;
  for (auto x : v) out.push_back(c(x));
  return out;
}

// Cubic pencil through 8 random points of P^2, with the points.
struct Pencil {
  PointSet gamma2;
  FpPoly c1, c2;
};

Pencil random_pencil(Rng& rng) {
  auto gamma2 = PointSet::random(rng, F, Ambient::projective, 2, 8);
  const auto cubics = forms_through(gamma2, 3);
  REQUIRE(cubics.dim() == 2);
  return {gamma2, cubics.form(0), cubics.form(1)};
}

// Row rank of the evaluation matrix, computed without forms_through.
std::size_t evaluation_rank(const PointSet& s, int d) {
  const auto h = s.homogenized();
  const auto basis = monomial_basis(h.coordinates(), d);
  Matrix<PrimeField> m(F, h.size(), basis.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      m(i, j) = FpPoly::monomial(F, h.coordinates(), basis[j], F.one()).evaluate(std::span<const Fp>(h[i]));
  return rank(m);
}

}  // namespace

TEST_CASE("point sets") {
  const PointSet s(F, Ambient::projective, 2, {pt({2, 4, 6}), pt({0, 3, 1})});
  CHECK(s[0] == pt({1, 2, 3}));
  CHECK(s[1][1] == F.one());
  CHECK_THROWS_AS(PointSet(F, Ambient::projective, 2, {pt({1, 2, 3}), pt({2, 4, 6})}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet(F, Ambient::projective, 2, {pt({0, 0, 0})}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet(F, Ambient::affine, 2, {pt({1, 2, 3})}), std::invalid_argument);
  const PointSet a(F, Ambient::affine, 2, {pt({5, 7})});
  CHECK(a.homogenized()[0] == normalize_projective(pt({5, 7, 1})));
  CHECK(a.homogenized().dehomogenized()[0] == pt({5, 7}));
  CHECK_THROWS_AS(PointSet(F, Ambient::projective, 1, {pt({1, 0})}).dehomogenized(), NonGeneric);

  const auto p = parse_point_set(F, {"1, 2, 3", " -1,0,4 "}, Ambient::projective);
  CHECK(p.size() == 2);
  CHECK(p[1] == normalize_projective(pt({-1, 0, 4})));
  CHECK(parse_point_set(F, {format_point_set(p).substr(0, format_point_set(p).find('\n'))}, Ambient::projective)[0] ==
        p[0]);
  CHECK_THROWS_AS(parse_point_set(F, {"1,2", "1,2,3"}, Ambient::projective), ParseError);
  CHECK_THROWS_AS(parse_point_set(F, {"1,,2"}, Ambient::projective), ParseError);
  CHECK_THROWS_AS(parse_point_set(F, {"1,x"}, Ambient::projective), ParseError);
  CHECK_THROWS_AS(parse_point_set(F, {}, Ambient::projective), ParseError);
}

TEST_CASE("rational maps and apply_map") {
  const auto v2 = veronese_map(F, 4, 2);
  CHECK(v2.target_vars() == 10);
  const auto img = apply_map(v2, pt({1, 0, 0, 0}));
  REQUIRE(img.has_value());
  FpPoint expected(10, F.zero());
  expected[0] = F.one();
  CHECK(*img == expected);
  CHECK_FALSE(apply_map(v2, pt({0, 0, 0, 0})).has_value());
  CHECK_THROWS_AS(apply_map(v2, pt({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(RationalMap(2, {px("x0", 2), px("x1^2", 2)}), std::invalid_argument);
  CHECK_THROWS_AS(RationalMap(2, {px("0", 2)}), std::invalid_argument);
  CHECK_THROWS_AS(RationalMap(3, {px("x0", 2)}), RingMismatch);

  const auto dir = std::filesystem::temp_directory_path();
  {
    std::ofstream out(dir / "veronese_map.txt");
    out << "# involution\nx1*x2\nx0*x2\n\nx0*x1\n";
    std::ofstream pts(dir / "veronese_points.txt");
    pts << "1,2,3\n# comment\n4,5,6\n";
  }
  const auto f = read_rational_map(F, dir / "veronese_map.txt", 3);
  CHECK(f.target_vars() == 3);
  CHECK(f.degree() == 2);
  CHECK(read_point_set(F, dir / "veronese_points.txt", Ambient::projective).size() == 2);
}

TEST_CASE("forms through points") {
  Rng rng(31);
  CHECK(forms_through(PointSet::random(rng, F, Ambient::projective, 4, 8), 2).dim() == 7);
  CHECK(forms_through(PointSet::random(rng, F, Ambient::projective, 2, 8), 4).dim() == 7);
  CHECK(forms_through(PointSet::random(rng, F, Ambient::projective, 2, 8), 3).dim() == 2);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = PointSet::random(rng, F, trial % 2 ? Ambient::affine : Ambient::projective, 4, 8);
    const auto q = forms_through(s, 2);
    CHECK(evaluation_rank(s, 2) == 8);
    const auto h = s.homogenized();
    for (const auto& f : q.forms())
      for (const auto& p : h.points()) CHECK(is_zero(f.evaluate(std::span<const Fp>(p))));
    // A fresh point is not a common zero.
    const auto fresh = random_vector(rng, F, 5);
    bool all_vanish = true;
    for (const auto& f : q.forms()) all_vanish = all_vanish && is_zero(f.evaluate(std::span<const Fp>(fresh)));
    CHECK_FALSE(all_vanish);
  }
}

TEST_CASE("initial system of points in A^4") {
  Rng rng(32);
  for (int trial = 0; trial < 5; ++trial) {
    const auto sys = initial_system(PointSet::random(rng, F, Ambient::affine, 4, 8));
    CHECK(sys.hilbert.to_string() == "(1,4,3)");
    CHECK(sys.hilbert.length() == 8);
    CHECK(sys.ideal.piece(2).dim() == 7);
    CHECK(sys.ideal.is_closed());
    REQUIRE(sys.plane.has_value());
    CHECK(annihilator(sys.plane->space(), 2).piece(2) == sys.ideal.piece(2));
    CHECK(is_zero(smoothable_pfaffian(*sys.plane)));
    CHECK(jump_dimension(*sys.plane).dimension == 3);
  }
  const auto two = initial_system(PointSet(F, Ambient::affine, 4, {pt({1, 2, 3, 4}), pt({0, 1, 0, 5})}));
  CHECK(two.hilbert.to_string() == "(1,1)");
  CHECK_FALSE(two.plane.has_value());
  CHECK_THROWS_AS(initial_system(PointSet(F, Ambient::projective, 4, {pt({1, 2, 3, 4, 5})})), std::invalid_argument);
}

TEST_CASE("ninth base point") {
  const auto c1 = px("x0^3 - 3*x0^2*x2 + 2*x0*x2^2", 3), c2 = px("x1^3 - 3*x1^2*x2 + 2*x1*x2^2", 3);
  std::vector<FpPoint> grid;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != 2 || j != 1) grid.push_back(pt({i, j, 1}));
  const PointSet known(F, Ambient::projective, 2, grid);
  CHECK(ninth_base_point(c1, c2, known, 1) == normalize_projective(pt({2, 1, 1})));

  Rng rng(33);
  for (int trial = 0; trial < 5; ++trial) {
    const auto pencil = random_pencil(rng);
    const auto q = ninth_base_point(pencil.c1, pencil.c2, pencil.gamma2, static_cast<std::uint64_t>(trial));
    CHECK(is_zero(pencil.c1.evaluate(std::span<const Fp>(q))));
    CHECK(is_zero(pencil.c2.evaluate(std::span<const Fp>(q))));
    CHECK(std::find(pencil.gamma2.points().begin(), pencil.gamma2.points().end(), q) == pencil.gamma2.points().end());
  }

  std::vector<FpPoint> off = grid;
  off.back() = pt({2, 3, 1});
  CHECK_THROWS_AS(ninth_base_point(c1, c2, PointSet(F, Ambient::projective, 2, off), 1), std::invalid_argument);
}

TEST_CASE("ninth base point coinciding with a known point") {
  // The conic x0 x2 = x1^2 touches the line x0 = 0 at (0:0:1), so that point
  // counts twice among the 9 intersections.
  const auto c1 = px("x0^3 - 5*x0^2*x2 + 4*x0*x2^2", 3);
  const auto c2 = px("x0*x1*x2 - 3*x0*x2^2 - x1^3 + 3*x1^2*x2", 3);
  const PointSet known(F, Ambient::projective, 2,
                       {pt({0, 0, 1}), pt({1, 1, 1}), pt({1, -1, 1}), pt({4, 2, 1}), pt({4, -2, 1}), pt({0, 3, 1}),
                        pt({1, 3, 1}), pt({4, 3, 1})});
  CHECK_THROWS_AS(ninth_base_point(c1, c2, known, 1), NonGeneric);
  CHECK_THROWS_AS(ninth_base_point(c1, c1, known, 1), std::invalid_argument);
}

TEST_CASE("gale dual and the quadric chain") {
  Rng rng(34);
  for (int trial = 0; trial < 3; ++trial) {
    const auto pencil = random_pencil(rng);
    const auto q = ninth_base_point(pencil.c1, pencil.c2, pencil.gamma2, 7);
    const auto gale = gale_dual(pencil.gamma2, q, rng.next());
    CHECK(gale.conics.rows() == 5);
    CHECK(gale.points.size() == 8);
    CHECK_FALSE(gale.map(q).has_value());
    const auto through = forms_through(gale.points, 2);
    CHECK(through.dim() == 7);

    const auto sys = initial_system(gale.points.dehomogenized());
    CHECK(sys.hilbert.to_string() == "(1,4,3)");
    REQUIRE(sys.plane.has_value());
    CHECK(is_zero(smoothable_pfaffian(*sys.plane)));
    CHECK_FALSE(secant_intersects(*sys.plane).hit);

    const auto scroll = scroll_quadrics(gale);
    CHECK(scroll.dim() == 3);
    std::optional<FormSpace<PrimeField>> meet;
    std::vector<FormSpace<PrimeField>> segre;
    for (int k = 1; k <= 3; ++k) {
      const auto member = elliptic_member(pencil.c1, pencil.c2, gale, F.from_int(k * 17 + trial));
      CHECK(member.quadrics.dim() == 5);
      for (const auto& f : member.quadrics.forms())
        for (const auto& p : member.samples.points()) CHECK(is_zero(f.evaluate(std::span<const Fp>(p))));
      CHECK(member.quadrics.contains(scroll));
      CHECK(through.contains(member.quadrics));
      meet = meet ? meet->intersect(member.quadrics) : member.quadrics;
      segre.push_back(segre_cubic(member, *sys.plane));
    }
    CHECK(*meet == scroll);

    const auto jump = jump_dimension(*sys.plane);
    REQUIRE(jump.dimension == 3);
    auto total = segre[0];
    for (const auto& s : segre) {
      CHECK(s.dim() >= 1);
      CHECK(jump.cubics.contains(s));
      total = total.sum(s);
    }
    CHECK(total == jump.cubics);
  }
}

TEST_CASE("gale dual errors") {
  Rng rng(35);
  const auto pencil = random_pencil(rng);
  CHECK_THROWS_AS(gale_dual(pencil.gamma2, pencil.gamma2[3]), NonGeneric);
  const auto q = ninth_base_point(pencil.c1, pencil.c2, pencil.gamma2, 1);
  const auto gale = gale_dual(pencil.gamma2, q);
  // c1 alone (s = 0) is a smooth member w.h.p.; equal s values give equal output.
  const auto a = elliptic_member(pencil.c1, pencil.c2, gale, F.from_int(5));
  const auto b = elliptic_member(pencil.c1, pencil.c2, gale, F.from_int(5));
  CHECK(a.quadrics == b.quadrics);
  const auto sys = initial_system(gale.points.dehomogenized());
  REQUIRE(sys.plane.has_value());
  CHECK(segre_cubic(a, *sys.plane) == segre_cubic(b, *sys.plane));
  // A plane unrelated to the configuration breaks the identification.
  const auto other = initial_system(PointSet::random(rng, F, Ambient::affine, 4, 8));
  CHECK_THROWS_AS(segre_cubic(a, *other.plane), std::logic_error);
}

TEST_CASE("singular pencil member") {
  // x0 x1 x2 + s (x0 + x1 + x2)^3 style members are smooth; the triangle itself is singular.
  const auto gamma = PointSet(F, Ambient::projective, 2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  GaleProjection gale = gale_dual(gamma, pt({1, 1, 1}));
  CHECK_THROWS_AS(elliptic_member(px("x0*x1*x2", 3), px("x0^3", 3), gale, F.zero()), NonGeneric);
}

TEST_CASE("members sampled through tangent lines") {
  // Over F_101 the lines x0 = a x2 are often tangent to the member, which
  // gives double roots; samples must still be distinct points.
  const PrimeField small(101);
  Rng rng(41);
  int built = 0;
  for (int trial = 0; trial < 20 && built < 5; ++trial) {
    try {
      const auto gamma2 = PointSet::random(rng, small, Ambient::projective, 2, 8);
      const auto cubics = forms_through(gamma2, 3);
      if (cubics.dim() != 2) continue;
      const auto q = ninth_base_point(cubics.form(0), cubics.form(1), gamma2, rng.next());
      const auto gale = gale_dual(gamma2, q, rng.next());
      const auto member = elliptic_member(cubics.form(0), cubics.form(1), gale, small.from_int(trial + 2), 80);
      CHECK(member.samples.size() == 80);
      CHECK(member.quadrics.dim() == 5);
      ++built;
    } catch (const NonGeneric&) {
    }
  }
  CHECK(built == 5);
}

TEST_CASE("octic surface") {
  Rng rng(36);
  const auto z = PointSet::random(rng, F, Ambient::projective, 2, 8);
  const auto s8 = octic_surface(z);
  CHECK(s8.embedding.target_vars() == 7);
  CHECK(s8.quadrics.dim() == 7);
  CHECK(s8.cremona.target_vars() == 7);
  CHECK(s8.cremona.degree() == 2);
  int checked = 0;
  while (checked < 100) {
    const auto p = random_vector(rng, F, 3);
    const auto image = apply_map(s8.embedding, p);
    if (!image) continue;
    for (const auto& q : s8.quadrics.forms()) CHECK(is_zero(q.evaluate(std::span<const Fp>(*image))));
    ++checked;
  }
  // Five collinear points force the line into every quartic.
  std::vector<FpPoint> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(pt({1, i, 2 * i + 3}));
  pts.push_back(pt({0, 1, 5}));
  pts.push_back(pt({3, 1, 7}));
  pts.push_back(pt({2, 9, 4}));
  CHECK_THROWS_AS(octic_surface(PointSet(F, Ambient::projective, 2, pts)), NonGeneric);
}

TEST_CASE("find inverse of the quadratic involution") {
  const RationalMap f(3, {px("x1*x2", 3), px("x0*x2", 3), px("x0*x1", 3)});
  const auto inv = find_inverse(f, 2);
  REQUIRE(inv.has_value());
  const auto lead = inv->lambda.coefficient(Exponent{1, 1, 1});
  CHECK(inv->lambda == px("x0*x1*x2", 3) * lead);
  for (int i = 0; i < 3; ++i) CHECK(inv->g.forms()[i] == f.forms()[i] * lead);
  CHECK(verify_inverse(f, inv->g, 1));
  CHECK_FALSE(find_inverse(f, 1).has_value());
  CHECK_THROWS_AS(find_inverse(f, 0), std::invalid_argument);
  CHECK_THROWS_AS(find_inverse(RationalMap(3, {px("x0", 3), px("x1", 3)}), 1), std::invalid_argument);
  // A linear automorphism is its own kind of inverse pair.
  const RationalMap lin(2, {px("x0 + x1", 2), px("x1", 2)});
  const auto li = find_inverse(lin, 1);
  REQUIRE(li.has_value());
  CHECK(verify_inverse(lin, li->g, 2));
  CHECK_FALSE(verify_inverse(lin, lin, 3));
}

TEST_CASE("elliptic quintic cremona has type (2,3)") {
  Rng rng(37);
  const auto pencil = random_pencil(rng);
  const auto q = ninth_base_point(pencil.c1, pencil.c2, pencil.gamma2, 3);
  const auto gale = gale_dual(pencil.gamma2, q);
  const auto member = elliptic_member(pencil.c1, pencil.c2, gale, F.from_int(11));
  const RationalMap ce(5, member.quadrics.forms());
  CHECK_FALSE(apply_map(ce, member.samples[0]).has_value());
  CHECK_FALSE(find_inverse(ce, 2).has_value());
  const auto inv = find_inverse(ce, 3, 5);
  REQUIRE(inv.has_value());
  CHECK(inv->g.degree() == 3);
  CHECK(inv->lambda.degree() == 5);
  CHECK(verify_inverse(ce, inv->g, 9));
}

TEST_CASE("octic cremona has no cubic inverse") {
  Rng rng(38);
  const auto s8 = octic_surface(PointSet::random(rng, F, Ambient::projective, 2, 8));
  CHECK_FALSE(find_inverse(s8.cremona, 3, 1).has_value());
}

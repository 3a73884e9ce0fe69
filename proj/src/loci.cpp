#include "veronese/loci.hpp"

#include "veronese/random.hpp"

namespace veronese {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::general: return "general";
    case Verdict::smoothable_divisor: return "smoothable-divisor";
    case Verdict::secant: return "secant";
    case Verdict::both: return "both";
  }
  return "unknown";
}

template <class Field>
typename Field::Element smoothable_pfaffian(const Poly<Field>& q1, const Poly<Field>& q2, const Poly<Field>& q3) {
  return pfaffian(pfaffian_block_matrix(q1, q2, q3));
}

template <class Field>
typename Field::Element smoothable_pfaffian(const QuadricPlane<Field>& L) {
  const auto q = L.basis();
  return smoothable_pfaffian(q[0], q[1], q[2]);
}

template <class Field>
FormSpace<Field> lperp(const QuadricPlane<Field>& L) {
  return perp(L.space());
}

template <class Field>
Matrix<Field> jump_matrix_from_perp(std::span<const Poly<Field>> perp_basis) {
  if (perp_basis.size() != 7) throw std::invalid_argument("jump matrix needs 7 operators");
  const Field& field = perp_basis[0].field();
  const auto products = monomial_images(perp_basis, 3);
  const std::size_t rows = monomial_count(4, 6);
  Matrix<Field> m(field, rows, products.size());
  for (std::size_t k = 0; k < products.size(); ++k) {
    const auto col = products[k].dense_component(6);
    for (std::size_t r = 0; r < rows; ++r) m(r, k) = col[r];
  }
  return m;
}

template <class Field>
Matrix<Field> jump_matrix(const QuadricPlane<Field>& L) {
  const auto basis = lperp(L).forms();
  return jump_matrix_from_perp(std::span<const Poly<Field>>(basis));
}

template <class Field>
JumpResult<Field> jump_dimension(const QuadricPlane<Field>& L) {
  auto basis = lperp(L).forms();
  const auto ker = kernel(jump_matrix_from_perp(std::span<const Poly<Field>>(basis)));
  return {ker.rows(), FormSpace<Field>::from_rows(7, 3, ker), std::move(basis)};
}

template <class Field>
std::vector<typename Field::Element> perp_image(std::span<const Poly<Field>> perp_basis,
                                                std::span<const typename Field::Element> p) {
  std::vector<typename Field::Element> out;
  for (const auto& n : perp_basis) out.push_back(n.evaluate(p));
  return out;
}

namespace {

// The 16 maximal minors of a A1 + b A2 + c A3, as cubics in (a, b, c).
template <class Field>
std::vector<Poly<Field>> secant_minors(const QuadricPlane<Field>& L) {
  const Field& field = L.field();
  const auto q = L.basis();
  std::array<Matrix<Field>, 3> a{SymQuadric<Field>::from_form(q[0]).matrix(), SymQuadric<Field>::from_form(q[1]).matrix(),
                                 SymQuadric<Field>::from_form(q[2]).matrix()};
  auto entry = [&](std::size_t i, std::size_t j) {
    std::vector<typename Field::Element> c{a[0](i, j), a[1](i, j), a[2](i, j)};
    return Poly<Field>::form(field, 3, 1, c);
  };
  std::vector<Poly<Field>> minors;
  for (std::size_t skip_r = 0; skip_r < 4; ++skip_r)
    for (std::size_t skip_c = 0; skip_c < 4; ++skip_c) {
      std::vector<std::size_t> r, c;
      for (std::size_t i = 0; i < 4; ++i) {
        if (i != skip_r) r.push_back(i);
        if (i != skip_c) c.push_back(i);
      }
      auto e = [&](int i, int j) { return entry(r[i], c[j]); };
      minors.push_back(e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
                       e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                       e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0)));
    }
  return minors;
}

template <class Field>
Matrix<Field> ideal_piece(const std::vector<Poly<Field>>& generators, int d) {
  const Field& field = generators[0].field();
  Matrix<Field> rows(field, 0, monomial_count(3, d));
  const auto multipliers = monomial_basis(3, d - 3);
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    for (const auto& m : multipliers) rows.append_row((g * Poly<Field>::monomial(field, 3, m, field.one())).dense_component(d));
  }
  return rows;
}

template <class Field>
bool is_common_zero(const std::vector<Poly<Field>>& gens, std::span<const typename Field::Element> p) {
  for (const auto& g : gens)
    if (!veronese::is_zero(g.evaluate(p))) return false;
  return true;
}

std::vector<Fp> field_roots(const UniPoly<PrimeField>& f) { return roots_in_field(f); }
std::vector<mpq_class> field_roots(const UniPoly<RationalField>& f) { return rational_roots(f); }

// Common zeros of gens on the line through P and Q, found as roots of the
// gcd of their restrictions (cubics, so 4 samples each); Q itself is checked too.
template <class Field>
std::optional<std::vector<typename Field::Element>> zero_on_line(const std::vector<Poly<Field>>& gens,
                                                                 const std::vector<typename Field::Element>& P,
                                                                 const std::vector<typename Field::Element>& Qv) {
  using E = typename Field::Element;
  const Field& field = gens[0].field();
  auto at = [&](const E& u) { return std::vector<E>{P[0] + u * Qv[0], P[1] + u * Qv[1], P[2] + u * Qv[2]}; };
  if (is_common_zero(gens, std::span<const E>(Qv))) return Qv;
  UniPoly<Field> g(field);
  for (const auto& f : gens) {
    std::vector<Sample<Field>> s;
    for (int k = 0; k < 4; ++k) {
      const E u = field.from_int(k);
      const auto x = at(u);
      s.push_back({u, f.evaluate(std::span<const E>(x))});
    }
    g = gcd(g, interpolate(field, std::span<const Sample<Field>>(s)));
  }
  if (g.is_zero() || g.degree() < 1) return std::nullopt;
  for (const auto& u : field_roots(g)) {
    auto x = at(u);
    if (is_common_zero(gens, std::span<const E>(x))) return x;
  }
  return std::nullopt;
}

// The functionals on Sym^d vanishing on the ideal piece, with the maps
// phi -> (m -> phi(x_i m)) into the degree d-1 functionals in coordinates.
// For evaluation at a zero p, these send ev_p to p_i ev_p, so when both
// spaces have the same dimension the eigenvalues of the pencil
// C_l - lambda C_h are the ratios l(p)/h(p) over the zeros.
template <class Field>
std::vector<typename Field::Element> pencil_ratios(const Matrix<Field>& low, const Matrix<Field>& high, int d,
                                                   const std::vector<typename Field::Element>& l,
                                                   const std::vector<typename Field::Element>& h) {
  using E = typename Field::Element;
  const Field& field = low.field();
  const std::size_t k = high.rows();
  const auto lower = monomial_basis(3, d - 1);
  const auto lower_t = low.transpose();
  auto image = [&](const std::vector<E>& form) {
    Matrix<Field> c(field, k, k);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<E> phi(lower.size(), field.zero());
      for (std::size_t m = 0; m < lower.size(); ++m)
        for (int i = 0; i < 3; ++i) phi[m] += form[i] * high(j, monomial_rank(exponent_sum(lower[m], unit_exponent(i)), 3));
      const auto x = solve(lower_t, std::span<const E>(phi));
      if (!x) return std::optional<Matrix<Field>>();
      for (std::size_t r = 0; r < k; ++r) c(r, j) = (*x)[r];
    }
    return std::optional<Matrix<Field>>(c);
  };
  const auto cl = image(l), ch = image(h);
  if (!cl || !ch) return {};
  std::vector<Sample<Field>> s;
  for (std::size_t t = 0; t <= k; ++t) {
    const E lambda = field.from_uint(t);
    Matrix<Field> m(field, k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = (*cl)(i, j) - lambda * (*ch)(i, j);
    s.push_back({lambda, determinant(std::move(m))});
  }
  const auto poly = interpolate(field, std::span<const Sample<Field>>(s));
  if (poly.is_zero()) return {};
  return field_roots(poly);
}

// A common zero with coordinates in the field, given the ideal pieces at
// degrees d, d + 1 and d + 2. Finite zero sets are read off the dual pencil;
// positive-dimensional ones meet random lines.
template <class Field>
std::optional<std::vector<typename Field::Element>> rational_common_zero(const std::vector<Poly<Field>>& gens,
                                                                         const std::vector<Matrix<Field>>& pieces,
                                                                         int d, std::uint64_t seed) {
  using E = typename Field::Element;
  const auto dual = kernel(pieces[0]);
  if (dual.rows() == 1) {
    // A single reduced point: the functional is p^m over the monomials.
    for (int i = 0; i < 3; ++i) {
      Exponent pure{};
      pure[i] = static_cast<std::uint8_t>(d);
      const E lead = dual(0, monomial_rank(pure, 3));
      if (veronese::is_zero(lead)) continue;
      std::vector<E> p(3);
      for (int j = 0; j < 3; ++j) {
        Exponent e = pure;
        --e[i];
        ++e[j];
        p[j] = dual(0, monomial_rank(e, 3)) / lead;
      }
      if (is_common_zero(gens, std::span<const E>(p))) return p;
    }
  }
  const Field& field = gens[0].field();
  Rng rng(seed);
  const auto next = kernel(pieces[1]);
  if (next.rows() == dual.rows() && kernel(pieces[2]).rows() == dual.rows()) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      const auto l = random_vector(rng, field, 3), h = random_vector(rng, field, 3);
      for (const auto& lambda : pencil_ratios(dual, next, d + 1, l, h)) {
        // The zero lies on the line l - lambda h = 0.
        Matrix<Field> row(field, 1, 3);
        for (int i = 0; i < 3; ++i) row(0, i) = l[i] - lambda * h[i];
        const auto span = kernel(row);
        if (span.rows() != 2) continue;
        const std::vector<E> P(span.row(0).begin(), span.row(0).end()), Qv(span.row(1).begin(), span.row(1).end());
        if (auto x = zero_on_line(gens, P, Qv)) return x;
      }
    }
    return std::nullopt;
  }
  for (int line = 0; line < 40; ++line) {
    if (auto x = zero_on_line(gens, random_vector(rng, field, 3), random_vector(rng, field, 3))) return x;
  }
  return std::nullopt;
}

}  // namespace

template <class Field>
SecantResult<Field> secant_intersects(const QuadricPlane<Field>& L, int degree_bound, std::uint64_t seed) {
  if (degree_bound < 3) throw std::invalid_argument("secant degree bound must be at least 3");
  const auto minors = secant_minors(L);
  SecantResult<Field> out;
  std::vector<Matrix<Field>> pieces;
  for (int d = degree_bound; d <= degree_bound + 2; ++d) {
    pieces.push_back(ideal_piece(minors, d));
    out.deficiency.emplace_back(d, monomial_count(3, d) - rank(pieces.back()));
  }
  out.hit = out.deficiency[0].second > 0;
  for (const auto& [d, def] : out.deficiency)
    if ((def > 0) != out.hit) out.degrees_agree = false;
  if (out.hit) {
    if (auto p = rational_common_zero(minors, pieces, degree_bound, seed)) {
      const auto q = L.basis();
      out.low_rank_member = q[0] * (*p)[0] + q[1] * (*p)[1] + q[2] * (*p)[2];
    }
  }
  return out;
}

template <class Field>
bool killed_by_triples(std::span<const Poly<Field>> perp_basis, const Poly<Field>& f) {
  for (const auto& prod : monomial_images(perp_basis, 3))
    if (!veronese::is_zero(pairing(prod, f))) return false;
  return true;
}

template <class Field>
SexticWitness<Field> rank2_sextic_witness(const QuadricPlane<Field>& L, const Poly<Field>& q, const Matrix<Field>& B) {
  const Field& field = L.field();
  if (!L.contains(q)) throw std::invalid_argument("witness quadric is not in the plane");
  const auto adapted = linear_change(q, B);
  const Exponent x0x1{1, 1}, x0sq{2};
  const auto c01 = adapted.coefficient(x0x1), c00 = adapted.coefficient(x0sq);
  std::vector<Exponent> shapes;
  if (!veronese::is_zero(c01) && adapted == Poly<Field>::monomial(field, 4, x0x1, c01)) {
    shapes = {Exponent{5, 1}, Exponent{3, 3}, Exponent{1, 5}};
  } else if (!veronese::is_zero(c00) && adapted == Poly<Field>::monomial(field, 4, x0sq, c00)) {
    shapes = {Exponent{6}, Exponent{5, 1}, Exponent{4, 2}};
  } else {
    throw std::invalid_argument("quadric is not x0*x1 or x0^2 in the supplied coordinates");
  }
  const auto back = inverse(B);
  SexticWitness<Field> out;
  const auto basis = lperp(L).forms();
  out.annihilated = true;
  for (const auto& e : shapes) {
    out.sextics.push_back(linear_change(Poly<Field>::monomial(field, 4, e, field.one()), back));
    if (!killed_by_triples(std::span<const Poly<Field>>(basis), out.sextics.back())) out.annihilated = false;
  }
  return out;
}

template <class Field>
FormSpace<Field> annihilated_sextics(const QuadricPlane<Field>& L, const Poly<Field>& q) {
  const Field& field = L.field();
  if (!L.contains(q)) throw std::invalid_argument("quadric is not in the plane");
  const auto ech = row_reduce(SymQuadric<Field>::from_form(q).matrix());
  if (ech.pivots.empty() || ech.pivots.size() > 2) throw std::invalid_argument("quadric must have rank 1 or 2");
  std::vector<Poly<Field>> w;
  for (std::size_t i = 0; i < ech.reduced.rows(); ++i) w.push_back(Poly<Field>::form(field, 4, 1, ech.reduced.row(i)));
  for (int j = 0; w.size() < 2; ++j) {
    // Rank 1: complete the column space by a coordinate it misses.
    if (std::find(ech.pivots.begin(), ech.pivots.end(), static_cast<std::size_t>(j)) == ech.pivots.end())
      w.push_back(Poly<Field>::variable(field, 4, j));
  }
  std::vector<Poly<Field>> binary;
  for (int i = 0; i <= 6; ++i) {
    auto s = Poly<Field>::constant(field, 4, field.one());
    for (int k = 0; k < i; ++k) s = s * w[0];
    for (int k = i; k < 6; ++k) s = s * w[1];
    binary.push_back(s);
  }
  const auto basis = lperp(L).forms();
  const auto products = monomial_images(std::span<const Poly<Field>>(basis), 3);
  Matrix<Field> m(field, products.size(), binary.size());
  for (std::size_t r = 0; r < products.size(); ++r)
    for (std::size_t c = 0; c < binary.size(); ++c) m(r, c) = pairing(products[r], binary[c]);
  const auto ker = kernel(m);
  std::vector<Poly<Field>> killed;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Poly<Field> s(field, 4);
    for (std::size_t c = 0; c < binary.size(); ++c) s += binary[c] * ker(k, c);
    killed.push_back(s);
  }
  return FormSpace<Field>::span(field, 4, 6, killed);
}

template <class Field>
Classification<Field> classify(const QuadricPlane<Field>& L, int degree_bound, std::uint64_t seed) {
  auto jump = jump_dimension(L);
  auto sec = secant_intersects(L, degree_bound, seed);
  Classification<Field> c{smoothable_pfaffian(L), sec.hit, jump.dimension, Verdict::general, std::move(jump.cubics),
                          sec.low_rank_member, {}, sec.degrees_agree};
  const bool pf_zero = is_zero(c.pfaffian_value);
  c.verdict = pf_zero ? (c.secant_hit ? Verdict::both : Verdict::smoothable_divisor)
                      : (c.secant_hit ? Verdict::secant : Verdict::general);
  if (c.low_rank_member) c.annihilated = annihilated_sextics(L, *c.low_rank_member).forms();
  return c;
}

namespace {

using UP = UniPoly<PrimeField>;

struct Flag {
  Poly<PrimeField> a1, a2, u, w;
  std::vector<Poly<PrimeField>> k;  // W4^perp
  Poly<PrimeField> e, f;
};

std::optional<Flag> draw_flag(const PrimeField& field, Rng& rng) {
  Flag fl{random_form(rng, field, 4, 2), random_form(rng, field, 4, 2), random_form(rng, field, 4, 2),
          random_form(rng, field, 4, 2), {}, Poly<PrimeField>(field, 4), Poly<PrimeField>(field, 4)};
  const std::vector<Poly<PrimeField>> w2{fl.a1, fl.a2}, w4{fl.a1, fl.a2, fl.u, fl.w};
  const auto W4 = FormSpace<PrimeField>::span(field, 4, 2, w4);
  if (W4.dim() != 4) return std::nullopt;
  fl.k = perp(W4).forms();
  const auto W2perp = perp(FormSpace<PrimeField>::span(field, 4, 2, w2)).forms();
  Matrix<PrimeField> g(field, 2, W2perp.size());
  for (std::size_t j = 0; j < W2perp.size(); ++j) {
    g(0, j) = pairing(W2perp[j], fl.u);
    g(1, j) = pairing(W2perp[j], fl.w);
  }
  auto combine = [&](const std::vector<Fp>& c) {
    Poly<PrimeField> out(field, 4);
    for (std::size_t j = 0; j < c.size(); ++j) out += W2perp[j] * c[j];
    return out;
  };
  const std::vector<Fp> unit_u{field.one(), field.zero()}, unit_w{field.zero(), field.one()};
  const auto ce = solve(g, std::span<const Fp>(unit_u));
  const auto cf = solve(g, std::span<const Fp>(unit_w));
  if (!ce || !cf) return std::nullopt;
  fl.e = combine(*ce);
  fl.f = combine(*cf);
  return fl;
}

}  // namespace

PencilReport pencil_experiment(const PrimeField& field, std::uint64_t seed, int max_retries) {
  if (field.modulus() <= 40) throw std::invalid_argument("pencil experiment needs p > 40");
  Rng rng(seed);
  PencilReport report{UP(field), UP(field), std::nullopt, {-1, -1, -1}, false, false, std::nullopt, 0};
  for (int attempt = 1; attempt <= max_retries + 1; ++attempt) {
    report.attempts = attempt;
    const auto fl = draw_flag(field, rng);
    if (!fl) continue;
    std::vector<Sample<PrimeField>> det_samples, pf_samples;
    for (int i = 0; i < 40; ++i) {
      const Fp t = field.from_int(i + 1);
      auto basis = fl->k;
      basis.push_back(fl->e * t - fl->f);
      det_samples.push_back({t, determinant(jump_matrix_from_perp(std::span<const Poly<PrimeField>>(basis)))});
    }
    for (int i = 0; i < 5; ++i) {
      const Fp t = field.from_int(i + 1);
      pf_samples.push_back({t, smoothable_pfaffian(fl->a1, fl->a2, fl->u + fl->w * t)});
    }
    report.det_poly = interpolate(field, std::span<const Sample<PrimeField>>(det_samples));
    report.pf_poly = interpolate(field, std::span<const Sample<PrimeField>>(pf_samples));
    report.degrees = {report.det_poly.degree(), report.pf_poly.degree(), -1};
    if (report.degrees[0] != 36 || report.degrees[1] != 2) continue;

    const auto pf3 = report.pf_poly * report.pf_poly * report.pf_poly;
    const auto [quotient, remainder] = report.det_poly.divmod(pf3);
    report.pf_cubed_divides = remainder.is_zero();
    if (report.pf_cubed_divides) {
      if (auto cube = squarefree_and_power(quotient, 3)) {
        report.s_poly = cube->root;
        report.degrees[2] = cube->root.degree();
        report.s_squarefree = gcd(cube->root, cube->root.derivative()).degree() == 0;
      }
    }
    report.factorization_ok = report.pf_cubed_divides && report.degrees[2] == 10;
    return report;
  }
  throw GenericityExhausted("pencil experiment: degenerate flags in " + std::to_string(max_retries + 1) + " draws");
}

#define VERONESE_INSTANTIATE(F)                                                                                 \
  template F::Element smoothable_pfaffian(const QuadricPlane<F>&);                                              \
  template F::Element smoothable_pfaffian(const Poly<F>&, const Poly<F>&, const Poly<F>&);                      \
  template FormSpace<F> lperp(const QuadricPlane<F>&);                                                          \
  template Matrix<F> jump_matrix_from_perp(std::span<const Poly<F>>);                                           \
  template Matrix<F> jump_matrix(const QuadricPlane<F>&);                                                       \
  template JumpResult<F> jump_dimension(const QuadricPlane<F>&);                                                \
  template std::vector<F::Element> perp_image(std::span<const Poly<F>>, std::span<const F::Element>);           \
  template SecantResult<F> secant_intersects(const QuadricPlane<F>&, int, std::uint64_t);                       \
  template bool killed_by_triples(std::span<const Poly<F>>, const Poly<F>&);                                    \
  template SexticWitness<F> rank2_sextic_witness(const QuadricPlane<F>&, const Poly<F>&, const Matrix<F>&);     \
  template FormSpace<F> annihilated_sextics(const QuadricPlane<F>&, const Poly<F>&);                            \
  template Classification<F> classify(const QuadricPlane<F>&, int, std::uint64_t);

VERONESE_INSTANTIATE(PrimeField)
VERONESE_INSTANTIATE(RationalField)

#undef VERONESE_INSTANTIATE

}  // namespace veronese

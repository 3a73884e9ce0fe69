#include "veronese/apolarity.hpp"

#include <sstream>

#include "veronese/random.hpp"

namespace veronese {

std::string HilbertFunction::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << ")";
  return out.str();
}

namespace {

// prod_l b_l! / (b_l - a_l)!, the scalar in d^a x^b = scalar * x^(b - a).
template <class Field>
typename Field::Element falling(const Field& field, const Exponent& a, const Exponent& b, int nvars) {
  auto c = field.one();
  for (int l = 0; l < nvars; ++l)
    for (int k = 0; k < a[l]; ++k) c = c * field.from_int(b[l] - k);
  return c;
}

template <class Field>
void check_characteristic(const Field& field, int degree) {
  const auto p = field.characteristic();
  if (p != 0 && p <= static_cast<std::uint64_t>(std::max(degree, 0)))
    throw FieldError("characteristic " + std::to_string(p) + " too small to differentiate degree " +
                     std::to_string(degree));
}

}  // namespace

template <class Field>
Poly<Field> contract(const Poly<Field>& D, const Poly<Field>& F) {
  D.check_same_ring(F);
  const Field& field = F.field();
  check_characteristic(field, F.degree());
  const int n = F.nvars();
  Poly<Field> out(field, n);
  D.for_each_term([&](const Exponent& a, const typename Field::Element& dc) {
    F.for_each_term([&](const Exponent& b, const typename Field::Element& fc) {
      if (!divides(a, b)) return;
      Exponent rest = b;
      for (int l = 0; l < n; ++l) rest[l] = static_cast<std::uint8_t>(b[l] - a[l]);
      out.add_term(rest, dc * fc * falling(field, a, b, n));
    });
  });
  return out;
}

template <class Field>
typename Field::Element pairing(const Poly<Field>& D, const Poly<Field>& F) {
  D.check_same_ring(F);
  const Field& field = F.field();
  if (D.is_zero() || F.is_zero()) return field.zero();
  if (!D.is_homogeneous() || !F.is_homogeneous() || D.degree() != F.degree())
    throw std::invalid_argument("pairing needs forms of equal degree");
  const int d = F.degree();
  check_characteristic(field, d);
  const auto basis = monomial_basis(F.nvars(), d);
  const auto a = D.component(d), b = F.component(d);
  auto total = field.zero();
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!veronese::is_zero(a[k]) && !veronese::is_zero(b[k]))
      total += a[k] * b[k] * falling(field, basis[k], basis[k], F.nvars());
  return total;
}

template <class Field>
FormSpace<Field> perp(const FormSpace<Field>& S) {
  return annihilator(S, S.degree()).piece(S.degree());
}

template <class Field>
bool GradedIdeal<Field>::is_closed() const {
  for (int d = 0; d < max_degree(); ++d) {
    const auto& lower = piece(d);
    const auto& upper = piece(d + 1);
    for (std::size_t k = 0; k < lower.dim(); ++k) {
      const auto f = lower.form(k);
      for (int i = 0; i < lower.nvars(); ++i)
        if (!upper.contains(f * Poly<Field>::variable(lower.field(), lower.nvars(), i))) return false;
    }
  }
  return true;
}

template <class Field>
HilbertFunction GradedIdeal<Field>::quotient_hilbert_function() const {
  std::vector<std::size_t> v;
  for (const auto& p : pieces) v.push_back(p.ambient_dim() - p.dim());
  return HilbertFunction::trimmed(std::move(v));
}

template <class Field>
GradedIdeal<Field> annihilator(std::span<const FormSpace<Field>> generators, int up_to) {
  if (generators.empty()) throw std::invalid_argument("annihilator of nothing");
  const Field& field = generators[0].field();
  const int n = generators[0].nvars();
  int top = 0;
  for (const auto& g : generators) {
    if (g.nvars() != n) throw RingMismatch("generator spaces in different rings");
    top = std::max(top, g.degree());
  }
  check_characteristic(field, top);
  GradedIdeal<Field> ideal;
  for (int i = 0; i <= up_to; ++i) {
    const auto ops = monomial_basis(n, i);
    Matrix<Field> eqs(field, 0, ops.size());
    std::vector<typename Field::Element> row(ops.size());
    for (const auto& g : generators) {
      const int k = g.degree();
      if (k < i) continue;
      const auto outs = monomial_basis(n, k - i);
      for (std::size_t j = 0; j < g.dim(); ++j) {
        const auto coeffs = g.basis_matrix().row(j);
        for (const auto& c : outs) {
          for (std::size_t a = 0; a < ops.size(); ++a) {
            const Exponent b = exponent_sum(ops[a], c);
            const auto& x = coeffs[monomial_rank(b, n)];
            row[a] = veronese::is_zero(x) ? field.zero() : x * falling(field, ops[a], b, n);
          }
          eqs.append_row(row);
        }
      }
    }
    ideal.pieces.push_back(FormSpace<Field>::from_rows(n, i, kernel(eqs)));
  }
  return ideal;
}

template <class Field>
ApolarHilbert apolar_hilbert_function(const QuadricPlane<Field>& L) {
  const Field& field = L.field();
  const std::vector<FormSpace<Field>> with_linear{L.space(), FormSpace<Field>::full(field, 4, 1)};
  return {annihilator(std::span<const FormSpace<Field>>(with_linear), 3).quotient_hilbert_function(),
          annihilator(L.space(), 3).quotient_hilbert_function()};
}

template <class Field>
FormSpace<Field> partials_space(const Poly<Field>& F) {
  if (F.is_zero() || F.degree() != 3 || !F.is_homogeneous())
    throw std::invalid_argument("partials_space needs a nonzero cubic form");
  std::vector<Poly<Field>> partials;
  for (int i = 0; i < F.nvars(); ++i) partials.push_back(contract(Poly<Field>::variable(F.field(), F.nvars(), i), F));
  return FormSpace<Field>::span(F.field(), F.nvars(), 2, partials);
}

template <class Field>
QuadricPlane<Field> plane_from_cubic(const Poly<Field>& F, std::span<const Poly<Field>> operators) {
  if (F.is_zero() || F.degree() != 3 || !F.is_homogeneous() || F.nvars() != 4)
    throw std::invalid_argument("plane_from_cubic needs a cubic form in 4 variables");
  if (operators.size() != 3) throw std::invalid_argument("plane_from_cubic needs three operators");
  std::vector<Poly<Field>> images;
  for (const auto& d : operators) {
    if (d.is_zero() || d.degree() != 1 || !d.is_homogeneous())
      throw std::invalid_argument("operators must be nonzero linear forms");
    images.push_back(contract(d, F));
  }
  auto space = FormSpace<Field>::span(F.field(), 4, 2, images);
  if (space.dim() != 3) throw DependentForms("the three contractions of the cubic are dependent");
  return QuadricPlane<Field>(std::move(space));
}

template <class Field>
Matrix<Field> pfaffian_block_matrix(const Poly<Field>& q1, const Poly<Field>& q2, const Poly<Field>& q3) {
  const Field& field = q1.field();
  const auto a1 = SymQuadric<Field>::from_form(q1).matrix();
  const auto a2 = SymQuadric<Field>::from_form(q2).matrix();
  const auto a3 = SymQuadric<Field>::from_form(q3).matrix();
  const std::size_t n = a1.rows();
  if (a2.rows() != n || a3.rows() != n) throw RingMismatch("quadrics in different rings");
  Matrix<Field> m(field, 3 * n, 3 * n);
  auto put = [&](std::size_t bi, std::size_t bj, const Matrix<Field>& a, bool negate) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(bi * n + i, bj * n + j) = negate ? -a(i, j) : a(i, j);
  };
  put(0, 1, a1, false);
  put(0, 2, a2, true);
  put(1, 0, a1, true);
  put(1, 2, a3, false);
  put(2, 0, a2, false);
  put(2, 1, a3, true);
  return m;
}

template <class Field>
bool check_certificate(const QuadricPlane<Field>& L, const CubicCertificate<Field>& cert) {
  const auto q = L.basis();
  for (int i = 0; i < 3; ++i)
    if (!(contract(cert.operators[i], cert.cubic) == q[i])) return false;
  return true;
}

namespace {

template <class Field>
Poly<Field> linear_form(const Field& field, std::span<const typename Field::Element> c) {
  return Poly<Field>::form(field, 4, 1, c);
}

// Cubics F with d F in L for every operator d.
template <class Field>
Matrix<Field> cubics_mapping_into(const FormSpace<Field>& lperp, const std::array<Poly<Field>, 3>& ops) {
  const Field& field = lperp.field();
  const auto cubic_basis = monomial_basis(4, 3);
  // <P, d x^b> = (P d) x^b = (P d)_b * b!.
  std::vector<typename Field::Element> scale;
  for (const auto& b : cubic_basis) scale.push_back(falling(field, b, b, 4));
  Matrix<Field> eqs(field, 0, cubic_basis.size());
  std::vector<typename Field::Element> row(cubic_basis.size());
  for (const auto& d : ops)
    for (std::size_t k = 0; k < lperp.dim(); ++k) {
      const auto pd = (lperp.form(k) * d).dense_component(3);
      for (std::size_t b = 0; b < row.size(); ++b) row[b] = pd[b] * scale[b];
      eqs.append_row(row);
    }
  return kernel(eqs);
}

// Operator d with d F = target, if any.
template <class Field>
std::optional<Poly<Field>> operator_hitting(const Poly<Field>& F, const Poly<Field>& target) {
  const Field& field = F.field();
  Matrix<Field> m(field, monomial_count(4, 2), 4);
  for (int l = 0; l < 4; ++l) {
    const auto partial = contract(Poly<Field>::variable(field, 4, l), F).dense_component(2);
    for (std::size_t r = 0; r < partial.size(); ++r) m(r, static_cast<std::size_t>(l)) = partial[r];
  }
  const auto rhs = target.dense_component(2);
  const auto x = solve(m, std::span<const typename Field::Element>(rhs));
  if (!x) return std::nullopt;
  return linear_form(field, std::span<const typename Field::Element>(*x));
}

}  // namespace

template <class Field>
std::optional<CubicCertificate<Field>> recover_cubic(const QuadricPlane<Field>& L, std::uint64_t seed, int budget) {
  const Field& field = L.field();
  const auto q = L.basis();
  const auto block_kernel = kernel(pfaffian_block_matrix(q[0], q[1], q[2]));
  const auto lperp = perp(L.space());
  Rng rng(seed);
  for (int attempt = 1; attempt <= budget; ++attempt) {
    std::vector<typename Field::Element> w(12, field.zero());
    if (block_kernel.rows() > 0) {
      for (std::size_t k = 0; k < block_kernel.rows(); ++k) {
        const auto r = random_element(rng, field);
        for (std::size_t j = 0; j < 12; ++j) w[j] += r * block_kernel(k, j);
      }
    } else {
      w = random_vector(rng, field, 12);
    }
    // A kernel vector (w1, w2, w3) of the block matrix pairs with operators
    // (d1, d2, d3) = (w3, w2, w1): symmetry of the cubic's tensor gives
    // A_i d_j = A_j d_i.
    using E = typename Field::Element;
    const std::array<Poly<Field>, 3> ops{linear_form(field, std::span<const E>(w.data() + 8, 4)),
                                         linear_form(field, std::span<const E>(w.data() + 4, 4)),
                                         linear_form(field, std::span<const E>(w.data(), 4))};
    const auto cubics = cubics_mapping_into(lperp, ops);
    if (cubics.rows() == 0) continue;
    std::vector<E> coeffs(cubics.cols(), field.zero());
    for (std::size_t k = 0; k < cubics.rows(); ++k) {
      const auto r = random_element(rng, field);
      for (std::size_t j = 0; j < cubics.cols(); ++j) coeffs[j] += r * cubics(k, j);
    }
    const auto F = Poly<Field>::form(field, 4, 3, coeffs);
    if (F.is_zero()) continue;
    CubicCertificate<Field> cert{F, {Poly<Field>(field, 4), Poly<Field>(field, 4), Poly<Field>(field, 4)}, attempt};
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      auto d = operator_hitting(F, q[i]);
      if (!d) ok = false;
      else cert.operators[i] = *d;
    }
    if (ok && check_certificate(L, cert)) return cert;
  }
  return std::nullopt;
}

#define VERONESE_INSTANTIATE(F)                                                                          \
  template Poly<F> contract(const Poly<F>&, const Poly<F>&);                                             \
  template F::Element pairing(const Poly<F>&, const Poly<F>&);                                           \
  template FormSpace<F> perp(const FormSpace<F>&);                                                       \
  template struct GradedIdeal<F>;                                                                        \
  template GradedIdeal<F> annihilator(std::span<const FormSpace<F>>, int);                               \
  template ApolarHilbert apolar_hilbert_function(const QuadricPlane<F>&);                                \
  template FormSpace<F> partials_space(const Poly<F>&);                                                  \
  template QuadricPlane<F> plane_from_cubic(const Poly<F>&, std::span<const Poly<F>>);                   \
  template Matrix<F> pfaffian_block_matrix(const Poly<F>&, const Poly<F>&, const Poly<F>&);              \
  template bool check_certificate(const QuadricPlane<F>&, const CubicCertificate<F>&);                   \
  template std::optional<CubicCertificate<F>> recover_cubic(const QuadricPlane<F>&, std::uint64_t, int);

VERONESE_INSTANTIATE(PrimeField)
VERONESE_INSTANTIATE(RationalField)

#undef VERONESE_INSTANTIATE

}  // namespace veronese

#include "veronese/unipoly.hpp"

#include <algorithm>

namespace veronese {

namespace {

using U = UniPoly<PrimeField>;

// g is monic, square-free and splits into distinct linear factors over F_p.
void split_linear(const U& g, std::uint64_t shift, std::vector<Fp>& out) {
  const PrimeField& field = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coefficient(0));
    return;
  }
  const std::uint64_t p = field.modulus();
  for (std::uint64_t a = shift; a < p; ++a) {
    const U t_plus_a(field, {field.from_uint(a), field.one()});
    auto h = power_mod(t_plus_a, (p - 1) / 2, g) - U::constant(field, field.one());
    auto part = gcd(g, h);
    if (part.degree() > 0 && part.degree() < g.degree()) {
      split_linear(part, a + 1, out);
      split_linear(g / part, a + 1, out);
      return;
    }
  }
  throw std::logic_error("equal-degree splitting failed");
}

}  // namespace

std::vector<Fp> roots_in_field(const U& f) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const PrimeField& field = f.field();
  std::vector<Fp> roots;
  if (f.degree() == 0) return roots;
  const U t(field, {field.zero(), field.one()});
  const auto frobenius = power_mod(t, field.modulus(), f.monic()) - t;
  const auto linear_part = gcd(f, frobenius);
  std::vector<Fp> distinct;
  split_linear(linear_part, 0, distinct);
  for (const auto& r : distinct) {
    auto rest = f;
    const auto factor = U::linear_root(field, r);
    while (true) {
      auto [q, rem] = rest.divmod(factor);
      if (!rem.is_zero()) break;
      roots.push_back(r);
      rest = q;
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Fp& a, const Fp& b) { return a.value < b.value; });
  return roots;
}

namespace {

// Positive divisors of |n|, or nothing when n is too large to factor by trial division.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  if (n == 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 40) return std::nullopt;
  std::vector<mpz_class> out{1};
  mpz_class m = n;
  for (mpz_class d = 2; d * d <= m; ++d) {
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    const std::size_t base = out.size();
    mpz_class power = 1;
    for (int k = 0; k < e; ++k) {
      power *= d;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  if (m > 1) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * m);
  }
  return out;
}

}  // namespace

std::vector<mpq_class> rational_roots(const UniPoly<RationalField>& f) {
  using Q = UniPoly<RationalField>;
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const RationalField field;
  std::vector<mpq_class> roots;
  Q rest = f.degree() > 0 ? f.divmod(gcd(f, f.derivative())).first : f;
  if (!rest.is_zero() && is_zero(rest.coefficient(0)) && rest.degree() > 0) {
    roots.push_back(0);
    rest = rest.divmod(Q(field, {field.zero(), field.one()})).first;
  }
  if (rest.degree() >= 1) {
    mpz_class common = 1;
    for (const auto& c : rest.coefficients()) common = lcm(common, mpz_class(c.get_den()));
    std::vector<mpz_class> ints;
    for (const auto& c : rest.coefficients()) ints.push_back(mpz_class(c * common));
    const auto num = divisors(ints.front()), den = divisors(ints.back());
    if (num && den)
      for (const auto& a : *num)
        for (const auto& b : *den)
          for (int sign : {1, -1}) {
            mpq_class r(sign * a, b);
            r.canonicalize();
            if (is_zero(rest.evaluate(r)) && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
          }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace veronese

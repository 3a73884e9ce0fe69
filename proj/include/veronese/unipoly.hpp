#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "veronese/linalg.hpp"

namespace veronese {

/// Univariate polynomial, coefficients from low to high degree, trimmed.
template <class Field>
class UniPoly {
 public:
  using Element = typename Field::Element;

  explicit UniPoly(Field field) : field_(std::move(field)) {}
  UniPoly(Field field, std::vector<Element> coefficients) : field_(std::move(field)), c_(std::move(coefficients)) {
    for (auto& x : c_) x = field_.bind(x);
    trim();
  }

  static UniPoly constant(const Field& field, const Element& c) { return UniPoly(field, {c}); }
  /// t - root
  static UniPoly linear_root(const Field& field, const Element& root) { return UniPoly(field, {-root, field.one()}); }

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Element>& coefficients() const noexcept { return c_; }
  Element coefficient(int i) const { return i >= 0 && i <= degree() ? c_[i] : field_.zero(); }
  Element leading() const { return is_zero() ? field_.zero() : c_.back(); }

  Element evaluate(const Element& t) const {
    Element acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UniPoly derivative() const {
    std::vector<Element> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * field_.from_int(i));
    return UniPoly(field_, std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return *this * inverse(leading());
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Element& s) {
    for (auto& x : a.c_) x = x * s;
    a.trim();
    return a;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Element> out(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(a.field_, std::move(out));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws on division by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Element> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) return {UniPoly(field_), *this};
    std::vector<Element> quo(static_cast<std::size_t>(degree() - dd + 1), field_.zero());
    const Element inv = inverse(d.leading());
    for (int i = degree(); i >= dd; --i) {
      const Element q = rem[i] * inv;
      quo[i - dd] = q;
      if (veronese::is_zero(q)) continue;
      for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {UniPoly(field_, std::move(quo)), UniPoly(field_, std::move(rem))};
  }

  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }

 private:
  void trim() {
    while (!c_.empty() && veronese::is_zero(c_.back())) c_.pop_back();
  }

  Field field_;
  std::vector<Element> c_;
};

/// Monic gcd (zero when both inputs are zero).
template <class Field>
UniPoly<Field> gcd(UniPoly<Field> a, UniPoly<Field> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// (base^exponent) mod modulus.
template <class Field>
UniPoly<Field> power_mod(UniPoly<Field> base, std::uint64_t exponent, const UniPoly<Field>& modulus) {
  UniPoly<Field> result = UniPoly<Field>::constant(base.field(), base.field().one()) % modulus;
  base = base % modulus;
  while (exponent != 0) {
    if (exponent & 1u) result = (result * base) % modulus;
    base = (base * base) % modulus;
    exponent >>= 1u;
  }
  return result;
}

template <class Field>
struct Sample {
  typename Field::Element t;
  typename Field::Element value;
};

/// The unique polynomial of degree < samples.size() through all samples
/// (Newton divided differences). Throws on repeated abscissae.
template <class Field>
UniPoly<Field> interpolate(const Field& field, std::span<const Sample<Field>> samples) {
  using Element = typename Field::Element;
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (samples[i].t == samples[j].t) throw std::invalid_argument("interpolation needs distinct sample points");
  std::vector<Element> dd;
  for (const auto& s : samples) dd.push_back(field.bind(s.value));
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].t - samples[i - level].t);
  UniPoly<Field> result(field);
  for (std::size_t i = n; i-- > 0;) {
    result = result * UniPoly<Field>::linear_root(field, samples[i].t);
    result += UniPoly<Field>::constant(field, dd[i]);
  }
  return result;
}

/// Sylvester-matrix resultant of two nonzero polynomials.
template <class Field>
typename Field::Element resultant(const UniPoly<Field>& f, const UniPoly<Field>& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const int m = f.degree(), n = g.degree();
  const Field& field = f.field();
  if (m + n == 0) return field.one();
  Matrix<Field> s(field, static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = f.coefficient(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = g.coefficient(n - j);
  return determinant(std::move(s));
}

/// Yun's square-free decomposition f = lc(f) * prod factors[i]^(i+1), each
/// factor monic and square-free. Valid in characteristic 0 or p > deg f.
template <class Field>
std::vector<UniPoly<Field>> squarefree_factors(const UniPoly<Field>& f) {
  if (f.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
  const auto p = f.field().characteristic();
  if (p != 0 && p <= static_cast<std::uint64_t>(f.degree()))
    throw std::invalid_argument("characteristic too small for derivative-based decomposition");
  std::vector<UniPoly<Field>> factors;
  const UniPoly<Field> one = UniPoly<Field>::constant(f.field(), f.field().one());
  if (f.degree() == 0) return factors;
  const auto fm = f.monic();
  auto a = gcd(fm, fm.derivative());
  auto b = fm / a;
  auto c = fm.derivative() / a;
  auto d = c - b.derivative();
  while (!(b == one)) {
    auto ai = gcd(b, d);
    b = b / ai;
    c = d / ai;
    d = c - b.derivative();
    factors.push_back(ai);
  }
  return factors;
}

template <class Field>
struct PowerForm {
  typename Field::Element scale;  // f = scale * root^k
  UniPoly<Field> root;            // monic
};

/// Writes f = c * g^k with g monic when possible.
template <class Field>
std::optional<PowerForm<Field>> squarefree_and_power(const UniPoly<Field>& f, int k) {
  if (k < 1) throw std::invalid_argument("power must be positive");
  const auto factors = squarefree_factors(f);
  UniPoly<Field> root = UniPoly<Field>::constant(f.field(), f.field().one());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const int multiplicity = static_cast<int>(i) + 1;
    if (factors[i].degree() == 0) continue;
    if (multiplicity % k != 0) return std::nullopt;
    for (int r = 0; r < multiplicity / k; ++r) root = root * factors[i];
  }
  return PowerForm<Field>{f.leading(), root};
}

/// Roots in F_p with multiplicity, ascending. Splits gcd(f, t^p - t) by
/// deterministic equal-degree splitting with shifts t + a, a = 0, 1, ...
std::vector<Fp> roots_in_field(const UniPoly<PrimeField>& f);

/// Distinct rational roots, ascending, by the rational root theorem on the
/// primitive integer polynomial. Leading and constant terms above 2^40 are
/// not factored, and such roots are skipped; the result is then incomplete.
std::vector<mpq_class> rational_roots(const UniPoly<RationalField>& f);

}  // namespace veronese

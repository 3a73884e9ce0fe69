#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "veronese/field.hpp"
#include "veronese/matrix.hpp"
#include "veronese/monomial.hpp"

namespace veronese {

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multivariate polynomial over `Field`, stored dense by degree: component d
/// holds the coefficients of the degree-d part over monomial_basis(nvars, d).
/// Trailing zero components are trimmed, so degree() is exact.
template <class Field>
class Poly {
 public:
  using Element = typename Field::Element;

  Poly(Field field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("bad variable count");
  }

  static Poly constant(const Field& field, int nvars, const Element& c) {
    Poly p(field, nvars);
    p.add_term(Exponent{}, c);
    return p;
  }

  static Poly variable(const Field& field, int nvars, int index) {
    Poly p(field, nvars);
    p.add_term(unit_exponent(index), field.one());
    return p;
  }

  static Poly monomial(const Field& field, int nvars, const Exponent& e, const Element& c) {
    Poly p(field, nvars);
    p.add_term(e, c);
    return p;
  }

  /// Homogeneous form from dense coefficients over monomial_basis(nvars, degree).
  static Poly form(const Field& field, int nvars, int degree, std::span<const Element> coefficients) {
    if (coefficients.size() != monomial_count(nvars, degree))
      throw std::invalid_argument("coefficient count does not match monomial basis");
    Poly p(field, nvars);
    p.parts_.assign(static_cast<std::size_t>(degree) + 1, {});
    for (int d = 0; d < degree; ++d) p.parts_[d].assign(monomial_count(nvars, d), field.zero());
    p.parts_[degree].reserve(coefficients.size());
    for (const auto& c : coefficients) p.parts_[degree].push_back(field.bind(c));
    p.trim();
    return p;
  }

  const Field& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return static_cast<int>(parts_.size()) - 1; }
  bool is_zero() const noexcept { return parts_.empty(); }

  bool is_homogeneous() const {
    for (int d = 0; d < degree(); ++d)
      if (!component_is_zero(d)) return false;
    return true;
  }

  /// Degree-d coefficients (empty when d exceeds the degree).
  std::span<const Element> component(int d) const {
    if (d < 0 || d > degree()) return {};
    return parts_[d];
  }

  /// Dense coefficients of the degree-d part, zero-filled.
  std::vector<Element> dense_component(int d) const {
    if (d >= 0 && d <= degree()) return parts_[d];
    return std::vector<Element>(monomial_count(nvars_, d), field_.zero());
  }

  Poly homogeneous_part(int d) const {
    Poly p(field_, nvars_);
    if (d < 0 || d > degree()) return p;
    return form(field_, nvars_, d, parts_[d]);
  }

  Element coefficient(const Exponent& e) const {
    const int d = total_degree(e, nvars_);
    if (d > degree()) return field_.zero();
    return parts_[d][monomial_rank(e, nvars_)];
  }

  void add_term(const Exponent& e, const Element& c) {
    const int d = total_degree(e, nvars_);
    for (int i = nvars_; i < kMaxVars; ++i)
      if (e[i] != 0) throw std::invalid_argument("exponent refers to a variable outside the ring");
    grow(d);
    auto& slot = parts_[d][monomial_rank(e, nvars_)];
    slot = slot + c;
    trim();
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != static_cast<std::size_t>(nvars_))
      throw std::invalid_argument("evaluation point has wrong dimension");
    Element total = field_.zero();
    for (int d = 0; d <= degree(); ++d) {
      if (component_is_zero(d)) continue;
      const auto basis = monomial_basis(nvars_, d);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (veronese::is_zero(parts_[d][k])) continue;
        Element term = parts_[d][k];
        for (int i = 0; i < nvars_; ++i)
          for (int e = 0; e < basis[k][i]; ++e) term = term * point[i];
        total = total + term;
      }
    }
    return total;
  }

  /// Calls fn(exponent, coefficient) for every nonzero term, degree by degree.
  template <class Fn>
  void for_each_term(Fn&& fn) const {
    for (int d = 0; d <= degree(); ++d) {
      if (component_is_zero(d)) continue;
      const auto basis = monomial_basis(nvars_, d);
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (!veronese::is_zero(parts_[d][k])) fn(basis[k], parts_[d][k]);
    }
  }

  Poly& operator+=(const Poly& other) {
    check_same_ring(other);
    grow(other.degree());
    for (int d = 0; d <= other.degree(); ++d)
      for (std::size_t k = 0; k < other.parts_[d].size(); ++k) parts_[d][k] = parts_[d][k] + other.parts_[d][k];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    check_same_ring(other);
    grow(other.degree());
    for (int d = 0; d <= other.degree(); ++d)
      for (std::size_t k = 0; k < other.parts_[d].size(); ++k) parts_[d][k] = parts_[d][k] - other.parts_[d][k];
    trim();
    return *this;
  }

  Poly& operator*=(const Element& c) {
    for (auto& part : parts_)
      for (auto& x : part) x = x * c;
    trim();
    return *this;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& part : p.parts_)
      for (auto& x : part) x = -x;
    return p;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Element& c) { return a *= c; }
  friend Poly operator*(const Element& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.parts_ == b.parts_;
  }

  /// Product; throws RingMismatch on differing variable counts or fields.
  friend Poly poly_mul(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly c(a.field_, a.nvars_);
    if (a.is_zero() || b.is_zero()) return c;
    c.grow(a.degree() + b.degree());
    for (int da = 0; da <= a.degree(); ++da) {
      if (a.component_is_zero(da)) continue;
      for (int db = 0; db <= b.degree(); ++db) {
        if (b.component_is_zero(db)) continue;
        const auto table = product_rank_table(a.nvars_, da, db);
        const auto& pa = a.parts_[da];
        const auto& pb = b.parts_[db];
        auto& out = c.parts_[da + db];
        for (std::size_t i = 0; i < pa.size(); ++i) {
          if (veronese::is_zero(pa[i])) continue;
          for (std::size_t j = 0; j < pb.size(); ++j)
            if (!veronese::is_zero(pb[j])) out[table[i * pb.size() + j]] += pa[i] * pb[j];
        }
      }
    }
    c.trim();
    return c;
  }

  void check_same_ring(const Poly& other) const {
    if (nvars_ != other.nvars_)
      throw RingMismatch("polynomials live in rings with " + std::to_string(nvars_) + " and " +
                         std::to_string(other.nvars_) + " variables");
    if (!(field_ == other.field_)) throw RingMismatch("polynomials live over different fields");
  }

 private:
  bool component_is_zero(int d) const {
    return std::all_of(parts_[d].begin(), parts_[d].end(), [](const Element& x) { return veronese::is_zero(x); });
  }

  void grow(int d) {
    while (degree() < d) parts_.emplace_back(monomial_count(nvars_, degree() + 1), field_.zero());
  }

  void trim() {
    while (!parts_.empty() && component_is_zero(degree())) parts_.pop_back();
  }

  Field field_;
  int nvars_;
  std::vector<std::vector<Element>> parts_;
};

/// f(images[0], ..., images[n-1]); all images must share one ring.
template <class Field>
Poly<Field> substitute(const Poly<Field>& f, std::span<const Poly<Field>> images) {
  if (images.size() != static_cast<std::size_t>(f.nvars()))
    throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty()) throw std::invalid_argument("empty substitution");
  const Field& field = f.field();
  const int m = images[0].nvars();
  Poly<Field> result(field, m);
  // powers[i][k] = images[i]^k, built lazily.
  std::vector<std::vector<Poly<Field>>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(Poly<Field>::constant(field, m, field.one()));
  f.for_each_term([&](const Exponent& e, const typename Field::Element& c) {
    Poly<Field> term = Poly<Field>::constant(field, m, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
      if (e[i] != 0) term = term * powers[i][e[i]];
    }
    result += term;
  });
  return result;
}

/// images(forms, d)[k] = basis_k(forms), where basis_k runs over
/// monomial_basis(forms.size(), d). Each product reuses a degree-(d-1) one.
template <class Field>
std::vector<Poly<Field>> monomial_images(std::span<const Poly<Field>> forms, int d) {
  const int n = static_cast<int>(forms.size());
  if (n == 0) throw std::invalid_argument("no forms to combine");
  const Field& field = forms[0].field();
  std::vector<Poly<Field>> previous{Poly<Field>::constant(field, forms[0].nvars(), field.one())};
  for (int degree = 1; degree <= d; ++degree) {
    const auto basis = monomial_basis(n, degree);
    std::vector<Poly<Field>> current;
    current.reserve(basis.size());
    for (const auto& e : basis) {
      int first = 0;
      while (e[first] == 0) ++first;
      Exponent rest = e;
      --rest[first];
      current.push_back(previous[monomial_rank(rest, n)] * forms[first]);
    }
    previous = std::move(current);
  }
  return previous;
}

/// f(g x): variable i becomes the linear form sum_j g(i, j) x_j.
template <class Field>
Poly<Field> linear_change(const Poly<Field>& f, const Matrix<Field>& g) {
  const int n = f.nvars();
  if (g.rows() != static_cast<std::size_t>(n) || g.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("coordinate change has the wrong size");
  std::vector<Poly<Field>> images;
  for (int i = 0; i < n; ++i) images.push_back(Poly<Field>::form(f.field(), n, 1, g.row(i)));
  return substitute(f, std::span<const Poly<Field>>(images));
}

}  // namespace veronese

#pragma once

#include <cstdint>
#include <random>

#include "veronese/linalg.hpp"
#include "veronese/poly.hpp"

namespace veronese {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Sub-seed for trial `index` of stream `stream` under `master`:
/// mix64(mix64(master ^ mix64(stream)) + index). Depends only on the three
/// inputs, so trials can be evaluated in any order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) noexcept {
  return mix64(mix64(master ^ mix64(stream)) + index);
}

/// Deterministic generator. Bounded draws use rejection sampling on the raw
/// 64-bit output, so sequences do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform residue over F_p; small integers in [-9, 9] over the rationals.
template <class Field>
typename Field::Element random_element(Rng& rng, const Field& field) {
  if constexpr (Field::is_prime_field) {
    return field.from_uint(rng.below(field.modulus()));
  } else {
    return field.from_int(rng.between(-9, 9));
  }
}

template <class Field>
typename Field::Element random_nonzero(Rng& rng, const Field& field) {
  while (true) {
    auto x = random_element(rng, field);
    if (!is_zero(x)) return x;
  }
}

template <class Field>
Poly<Field> random_form(Rng& rng, const Field& field, int nvars, int degree) {
  std::vector<typename Field::Element> c(monomial_count(nvars, degree));
  for (auto& x : c) x = random_element(rng, field);
  return Poly<Field>::form(field, nvars, degree, c);
}

template <class Field>
Matrix<Field> random_matrix(Rng& rng, const Field& field, std::size_t rows, std::size_t cols) {
  Matrix<Field> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element(rng, field);
  return m;
}

template <class Field>
Matrix<Field> random_invertible(Rng& rng, const Field& field, std::size_t n) {
  while (true) {
    auto m = random_matrix(rng, field, n, n);
    if (rank(m) == n) return m;
  }
}

template <class Field>
std::vector<typename Field::Element> random_vector(Rng& rng, const Field& field, std::size_t n) {
  std::vector<typename Field::Element> v(n);
  for (auto& x : v) x = random_element(rng, field);
  return v;
}

}  // namespace veronese

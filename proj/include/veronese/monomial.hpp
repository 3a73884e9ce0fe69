#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace veronese {

inline constexpr int kMaxVars = 8;
inline constexpr int kMaxDegree = 24;

/// Exponent vector; entries past the ring's variable count are zero.
using Exponent = std::array<std::uint8_t, kMaxVars>;

std::uint64_t binomial(int n, int k);

/// Number of monomials of total degree `degree` in `nvars` variables.
std::size_t monomial_count(int nvars, int degree);

/// All exponent vectors of total degree `degree`, in graded lexicographic
/// order: x0^d first, then x0^(d-1) x1, ..., ending with x_{n-1}^d.
std::vector<Exponent> monomial_basis(int nvars, int degree);

/// Position of `e` inside monomial_basis(nvars, total_degree(e)).
std::size_t monomial_rank(const Exponent& e, int nvars);

int total_degree(const Exponent& e, int nvars);

inline Exponent exponent_sum(const Exponent& a, const Exponent& b) {
  Exponent c{};
  for (int i = 0; i < kMaxVars; ++i) c[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return c;
}

inline bool divides(const Exponent& a, const Exponent& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent unit_exponent(int i) {
  Exponent e{};
  e[i] = 1;
  return e;
}

/// rank[i * cols + j] = rank of basis(d1)[i] + basis(d2)[j] in basis(d1 + d2).
std::vector<std::uint32_t> product_rank_table(int nvars, int d1, int d2);

}  // namespace veronese

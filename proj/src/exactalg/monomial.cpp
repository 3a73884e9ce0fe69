#include "veronese/monomial.hpp"

#include <stdexcept>
#include <string>

namespace veronese {

namespace {

constexpr int kBinomialRows = 64;

struct BinomialTable {
  std::array<std::array<std::uint64_t, kBinomialRows>, kBinomialRows> c{};
  constexpr BinomialTable() {
    for (int n = 0; n < kBinomialRows; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
    }
  }
};

constexpr BinomialTable kBinomials{};

void check_ring(int nvars, int degree) {
  if (nvars < 1 || nvars > kMaxVars)
    throw std::invalid_argument("variable count must be in [1, " + std::to_string(kMaxVars) + "]");
  if (degree < 0 || degree > kMaxDegree)
    throw std::invalid_argument("degree must be in [0, " + std::to_string(kMaxDegree) + "]");
}

void enumerate(int nvars, int position, int remaining, Exponent& current, std::vector<Exponent>& out) {
  if (position == nvars - 1) {
    current[position] = static_cast<std::uint8_t>(remaining);
    out.push_back(current);
    current[position] = 0;
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    current[position] = static_cast<std::uint8_t>(k);
    enumerate(nvars, position + 1, remaining - k, current, out);
  }
  current[position] = 0;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n >= kBinomialRows) throw std::out_of_range("binomial table exceeded");
  return kBinomials.c[n][k];
}

std::size_t monomial_count(int nvars, int degree) {
  check_ring(nvars, degree);
  return static_cast<std::size_t>(binomial(nvars + degree - 1, degree));
}

std::vector<Exponent> monomial_basis(int nvars, int degree) {
  check_ring(nvars, degree);
  std::vector<Exponent> out;
  out.reserve(monomial_count(nvars, degree));
  Exponent current{};
  enumerate(nvars, 0, degree, current, out);
  return out;
}

int total_degree(const Exponent& e, int nvars) {
  int d = 0;
  for (int i = 0; i < nvars; ++i) d += e[i];
  return d;
}

std::size_t monomial_rank(const Exponent& e, int nvars) {
  // Count exponents of the same degree that precede e: at position i, every
  // larger entry k in (e_i, r] contributes C(r - k + m - 1, m - 1) completions
  // of the m = n - i - 1 trailing variables; summed, C(r - e_i - 1 + m, m).
  int remaining = total_degree(e, nvars);
  std::size_t rank = 0;
  for (int i = 0; i + 1 < nvars; ++i) {
    const int m = nvars - i - 1;
    if (e[i] < remaining) rank += static_cast<std::size_t>(binomial(remaining - e[i] - 1 + m, m));
    remaining -= e[i];
  }
  return rank;
}

std::vector<std::uint32_t> product_rank_table(int nvars, int d1, int d2) {
  const auto b1 = monomial_basis(nvars, d1);
  const auto b2 = monomial_basis(nvars, d2);
  std::vector<std::uint32_t> table(b1.size() * b2.size());
  for (std::size_t i = 0; i < b1.size(); ++i)
    for (std::size_t j = 0; j < b2.size(); ++j)
      table[i * b2.size() + j] = static_cast<std::uint32_t>(monomial_rank(exponent_sum(b1[i], b2[j]), nvars));
  return table;
}

}  // namespace veronese

#include "veronese/field.hpp"

#include <cctype>

namespace veronese {

Fp power(Fp base, std::uint64_t exponent) {
  if (base.modulus == 0) throw FieldError("power of an unbound residue");
  Fp result{1, base.modulus};
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

Fp inverse(const Fp& a) {
  if (a.value == 0) throw FieldError("division by zero in F_p");
  // Extended Euclid; p < 2^31 so signed 64-bit is ample.
  std::int64_t r0 = a.modulus, r1 = a.value, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s0 < 0) s0 += a.modulus;
  return {static_cast<std::uint32_t>(s0), a.modulus};
}

mpq_class inverse(const mpq_class& a) {
  if (sgn(a) == 0) throw FieldError("division by zero in Q");
  return 1 / a;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 11 || p >= (1u << 31) || !is_prime(p))
    throw FieldError("prime field requires a prime 11 <= p < 2^31, got " + std::to_string(p));
}

Fp PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r), p_};
}

namespace {

std::string_view check_integer_literal(std::string_view digits) {
  std::size_t i = 0;
  if (i < digits.size() && (digits[i] == '-' || digits[i] == '+')) ++i;
  if (i == digits.size()) throw FieldError("empty integer literal");
  for (std::size_t j = i; j < digits.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(digits[j])))
      throw FieldError("invalid integer literal '" + std::string(digits) + "'");
  return digits;
}

}  // namespace

Fp PrimeField::from_string(std::string_view digits) const {
  check_integer_literal(digits);
  bool negative = digits.front() == '-';
  std::uint64_t r = 0;
  for (char c : digits) {
    if (c == '-' || c == '+') continue;
    r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
  }
  Fp v{static_cast<std::uint32_t>(r), p_};
  return negative ? -v : v;
}

std::int64_t PrimeField::signed_value(const Fp& a) const noexcept {
  return a.value > p_ / 2 ? static_cast<std::int64_t>(a.value) - p_ : a.value;
}

mpq_class RationalField::from_string(std::string_view digits) const {
  check_integer_literal(digits);
  std::string s(digits);
  if (s.front() == '+') s.erase(0, 1);
  return mpq_class(mpz_class(s));
}

void FieldCfg::validate() const {
  if (kind == Kind::prime) PrimeField{prime};
}

}  // namespace veronese

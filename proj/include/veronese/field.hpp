#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace veronese {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Residue modulo a runtime prime, always kept in [0, modulus).
//
// A default-constructed value (modulus == 0) is an unbound zero: it adopts
// the modulus of whatever it is combined with. This keeps resized vectors and
// default-initialized matrix entries usable without a field handle.
struct Fp {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;

  friend bool operator==(const Fp& a, const Fp& b) noexcept { return a.value == b.value; }
};

namespace detail {

inline std::uint32_t common_modulus(const Fp& a, const Fp& b) {
  if (a.modulus == b.modulus || b.modulus == 0) return a.modulus;
  if (a.modulus == 0) return b.modulus;
  throw FieldError("field mismatch: residues modulo " + std::to_string(a.modulus) + " and " +
                   std::to_string(b.modulus));
}

}  // namespace detail

inline Fp operator+(const Fp& a, const Fp& b) {
  const std::uint32_t p = detail::common_modulus(a, b);
  std::uint32_t s = a.value + b.value;
  if (s >= p && p != 0) s -= p;
  return {s, p};
}

inline Fp operator-(const Fp& a) noexcept { return {a.value == 0 ? 0 : a.modulus - a.value, a.modulus}; }

inline Fp operator-(const Fp& a, const Fp& b) {
  const std::uint32_t p = detail::common_modulus(a, b);
  return {a.value >= b.value ? a.value - b.value : a.value + p - b.value, p};
}

inline Fp operator*(const Fp& a, const Fp& b) {
  const std::uint32_t p = detail::common_modulus(a, b);
  if (p == 0) return {0, 0};
  return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p), p};
}

inline Fp& operator+=(Fp& a, const Fp& b) { return a = a + b; }
inline Fp& operator-=(Fp& a, const Fp& b) { return a = a - b; }
inline Fp& operator*=(Fp& a, const Fp& b) { return a = a * b; }

inline bool is_zero(const Fp& a) noexcept { return a.value == 0; }
inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }

Fp inverse(const Fp& a);
mpq_class inverse(const mpq_class& a);

inline Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }
inline Fp& operator/=(Fp& a, const Fp& b) { return a = a / b; }

Fp power(Fp base, std::uint64_t exponent);

bool is_prime(std::uint64_t n);

/// Prime field F_p. Requires p prime, 11 <= p < 2^31.
class PrimeField {
 public:
  using Element = Fp;
  static constexpr bool is_prime_field = true;
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }

  Fp zero() const noexcept { return {0, p_}; }
  Fp one() const noexcept { return {1, p_}; }
  Fp from_int(std::int64_t v) const noexcept;
  Fp from_uint(std::uint64_t v) const noexcept { return {static_cast<std::uint32_t>(v % p_), p_}; }
  // Decimal integer literal with optional sign, reduced mod p.
  Fp from_string(std::string_view digits) const;
  Fp bind(const Fp& a) const noexcept { return {a.value, p_}; }

  std::string format(const Fp& a) const { return std::to_string(a.value); }
  // Representative in (-p/2, p/2], which is what users expect when typing
  // small negative coefficients.
  std::int64_t signed_value(const Fp& a) const noexcept;
  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;
  static constexpr bool is_prime_field = false;

  std::uint64_t characteristic() const noexcept { return 0; }

  mpq_class zero() const { return mpq_class(0); }
  mpq_class one() const { return mpq_class(1); }
  mpq_class from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  mpq_class from_uint(std::uint64_t v) const { return mpq_class(static_cast<unsigned long>(v)); }
  mpq_class from_string(std::string_view digits) const;
  mpq_class bind(const mpq_class& a) const { return a; }

  std::string format(const mpq_class& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// User-facing field selection.
struct FieldCfg {
  enum class Kind { prime, rationals };
  Kind kind = Kind::prime;
  std::uint32_t prime = PrimeField::kDefaultPrime;

  static FieldCfg rationals() { return {Kind::rationals, 0}; }
  static FieldCfg prime_field(std::uint32_t p) { return {Kind::prime, p}; }
  // Throws FieldError when a prime configuration is invalid.
  void validate() const;
};

}  // namespace veronese

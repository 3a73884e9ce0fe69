#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "veronese/constructions.hpp"

namespace veronese {

/// Sub-seed streams. A trial with master seed m and index i uses
/// derive_seed(m, stream, i); each resample bumps an inner counter.
enum class Stream : std::uint64_t { kstar = 1, gale, cremona, pencil, classify, battery };

/// 8 random points of A^4, their k*-limit and the derived plane.
struct KstarTrial {
  HilbertFunction hilbert;
  bool pfaffian_zero = false;
  std::size_t jump_dim = 0;
  int attempts = 0;

  bool ok() const { return hilbert == HilbertFunction{{1, 4, 3}} && pfaffian_zero && jump_dim == 3; }
};

KstarTrial kstar_trial(const PrimeField& field, std::uint64_t seed, int max_retries = 10);

/// 8 random points of P^2 through the Gale dual Gamma in P^4 to Segre cubics.
struct GaleTrial {
  std::size_t scroll_dim = 0;
  std::vector<std::size_t> member_dims;
  std::size_t through_dim = 0;
  bool containments = false;    // scroll in every member, every member in the quadrics through Gamma
  bool scroll_is_meet = false;  // the members' quadric spaces intersect in the scroll quadrics
  HilbertFunction hilbert;
  bool pfaffian_zero = false;
  bool secant = true;
  std::size_t jump_dim = 0;
  std::vector<std::size_t> segre_dims;
  std::size_t segre_span = 0;
  bool segre_in_kernel = false;
  int attempts = 0;

  bool chain_ok() const;
  bool ok() const;
};

GaleTrial gale_trial(const PrimeField& field, std::uint64_t seed, int members = 3, int max_retries = 10);

/// c_E of an elliptic quintic and c_S8 of a random octic surface. The
/// degree 4 inversion of c_S8 only runs when `slow` is set.
struct CremonaTrial {
  std::size_t s8_quadrics = 0;
  bool ce_inverse_found = false;
  bool ce_inverse_verified = false;
  bool ce_quadratic_absent = false;
  bool s8_cubic_absent = false;
  std::optional<bool> s8_quartic_found;
  std::optional<bool> s8_quartic_verified;
  int attempts = 0;

  bool ok() const;
};

CremonaTrial cremona_trial(const PrimeField& field, std::uint64_t seed, bool slow, int max_retries = 10);

}  // namespace veronese

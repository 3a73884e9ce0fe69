#include "veronese/pipelines.hpp"

#include <iostream>

namespace veronese {

namespace {

// Runs body(rng) with fresh sub-seeds until it stops throwing NonGeneric.
template <class Body>
auto with_retries(const char* what, std::uint64_t seed, int max_retries, Body body) {
  for (int attempt = 0;; ++attempt) {
    Rng rng(derive_seed(seed, 0, static_cast<std::uint64_t>(attempt)));
    try {
      auto out = body(rng);
      out.attempts = attempt + 1;
      return out;
    } catch (const NonGeneric& e) {
      std::clog << what << ": resampling after attempt " << attempt + 1 << ": " << e.what() << "\n";
      if (attempt >= max_retries)
        throw GenericityExhausted(std::string(what) + ": no generic configuration in " +
                                  std::to_string(max_retries + 1) + " attempts");
    }
  }
}

struct GaleSetup {
  PointSet gamma2;
  FpPoly c1, c2;
  GaleProjection gale;
};

GaleSetup gale_setup(const PrimeField& field, Rng& rng) {
  auto gamma2 = PointSet::random(rng, field, Ambient::projective, 2, 8);
  const auto cubics = forms_through(gamma2, 3);
  if (cubics.dim() != 2) throw NonGeneric("points do not impose independent conditions on cubics");
  const auto c1 = cubics.form(0), c2 = cubics.form(1);
  const auto q = ninth_base_point(c1, c2, gamma2, rng.next());
  auto gale = gale_dual(gamma2, q, rng.next());
  return {std::move(gamma2), c1, c2, std::move(gale)};
}

// Distinct nonzero pencil parameters.
std::vector<Fp> pencil_parameters(const PrimeField& field, Rng& rng, int count) {
  std::vector<Fp> out;
  while (static_cast<int>(out.size()) < count) {
    const auto s = random_nonzero(rng, field);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace

KstarTrial kstar_trial(const PrimeField& field, std::uint64_t seed, int max_retries) {
  return with_retries("kstar", seed, max_retries, [&](Rng& rng) {
    const auto sys = initial_system(PointSet::random(rng, field, Ambient::affine, 4, 8));
    if (!sys.plane) throw NonGeneric("Hilbert function " + sys.hilbert.to_string());
    return KstarTrial{sys.hilbert, is_zero(smoothable_pfaffian(*sys.plane)), jump_dimension(*sys.plane).dimension, 0};
  });
}

bool GaleTrial::chain_ok() const {
  return scroll_dim == 3 && through_dim == 7 && containments && scroll_is_meet &&
         std::all_of(member_dims.begin(), member_dims.end(), [](std::size_t d) { return d == 5; });
}

bool GaleTrial::ok() const {
  return chain_ok() && hilbert == HilbertFunction{{1, 4, 3}} && pfaffian_zero && !secant && jump_dim == 3 &&
         segre_in_kernel && segre_span == 3 &&
         std::all_of(segre_dims.begin(), segre_dims.end(), [](std::size_t d) { return d >= 1; });
}

GaleTrial gale_trial(const PrimeField& field, std::uint64_t seed, int members, int max_retries) {
  return with_retries("gale", seed, max_retries, [&](Rng& rng) {
    const auto setup = gale_setup(field, rng);
    GaleTrial out;
    const auto through = forms_through(setup.gale.points, 2);
    out.through_dim = through.dim();
    const auto sys = initial_system(setup.gale.points.dehomogenized());
    out.hilbert = sys.hilbert;
    if (!sys.plane) throw NonGeneric("Gale dual has Hilbert function " + sys.hilbert.to_string());
    const auto& L = *sys.plane;
    out.pfaffian_zero = is_zero(smoothable_pfaffian(L));
    out.secant = secant_intersects(L).hit;
    const auto jump = jump_dimension(L);
    out.jump_dim = jump.dimension;

    const auto scroll = scroll_quadrics(setup.gale);
    out.scroll_dim = scroll.dim();
    out.containments = true;
    out.segre_in_kernel = true;
    std::optional<FormSpace<PrimeField>> meet, segre_total;
    for (const auto& s : pencil_parameters(field, rng, members)) {
      const auto member = elliptic_member(setup.c1, setup.c2, setup.gale, s);
      out.member_dims.push_back(member.quadrics.dim());
      out.containments = out.containments && member.quadrics.contains(scroll) && through.contains(member.quadrics);
      meet = meet ? meet->intersect(member.quadrics) : member.quadrics;
      const auto segre = segre_cubic(member, L);
      out.segre_dims.push_back(segre.dim());
      out.segre_in_kernel = out.segre_in_kernel && jump.cubics.contains(segre);
      segre_total = segre_total ? segre_total->sum(segre) : segre;
    }
    out.scroll_is_meet = meet && *meet == scroll;
    out.segre_span = segre_total ? segre_total->dim() : 0;
    return out;
  });
}

bool CremonaTrial::ok() const {
  return s8_quadrics == 7 && ce_inverse_found && ce_inverse_verified && ce_quadratic_absent && s8_cubic_absent &&
         s8_quartic_found.value_or(true) && s8_quartic_verified.value_or(true);
}

CremonaTrial cremona_trial(const PrimeField& field, std::uint64_t seed, bool slow, int max_retries) {
  return with_retries("cremona", seed, max_retries, [&](Rng& rng) {
    CremonaTrial out;
    const auto setup = gale_setup(field, rng);
    const auto member = elliptic_member(setup.c1, setup.c2, setup.gale, random_nonzero(rng, field));
    const RationalMap ce(5, member.quadrics.forms());
    out.ce_quadratic_absent = !find_inverse(ce, 2, rng.next()).has_value();
    if (const auto inv = find_inverse(ce, 3, rng.next())) {
      out.ce_inverse_found = true;
      out.ce_inverse_verified = verify_inverse(ce, inv->g, rng.next());
    }
    const auto s8 = octic_surface(PointSet::random(rng, field, Ambient::projective, 2, 8));
    out.s8_quadrics = s8.quadrics.dim();
    out.s8_cubic_absent = !find_inverse(s8.cremona, 3, rng.next()).has_value();
    if (slow) {
      const auto inv = find_inverse(s8.cremona, 4, rng.next());
      out.s8_quartic_found = inv.has_value();
      out.s8_quartic_verified = inv && verify_inverse(s8.cremona, inv->g, rng.next());
    }
    return out;
  });
}

}  // namespace veronese

// The verify-theorem battery: each item is one record with its trial counts.

#include <chrono>

#include "veronese/cli.hpp"
#include "veronese/parse.hpp"
#include "veronese/pipelines.hpp"

namespace veronese::cli {

namespace {

using Plane = QuadricPlane<PrimeField>;

struct Item {
  std::string name;
  std::function<bool(Json&, const PrimeField&, std::uint64_t)> run;
};

Plane random_plane(Rng& rng, const PrimeField& field, std::vector<FpPoly> forms = {}) {
  while (true) {
    auto all = forms;
    while (all.size() < 3) all.push_back(random_form(rng, field, 4, 2));
    if (FormSpace<PrimeField>::span(field, 4, 2, all).dim() == 3) return Plane::span(all);
  }
}

std::optional<Plane> random_partials_plane(Rng& rng, const PrimeField& field) {
  const auto f = random_form(rng, field, 4, 3);
  std::vector<FpPoly> ops{random_form(rng, field, 4, 1), random_form(rng, field, 4, 1), random_form(rng, field, 4, 1)};
  try {
    return plane_from_cubic(f, std::span<const FpPoly>(ops));
  } catch (const DependentForms&) {
    return std::nullopt;  // degenerate trial
  }
}

// Allowed genericity failures among n trials.
std::size_t tolerance(std::size_t n) { return n / 100; }

}  // namespace

Report cmd_verify_theorem(const RunConfig& cfg) {
  if (cfg.field.kind != FieldCfg::Kind::prime) throw UsageError("verify-theorem needs a prime field");
  const PrimeField field(cfg.field.prime);
  const std::size_t n = cfg.samples;

  std::vector<Item> items;
  items.push_back({"annihilator-example", [](Json& r, const PrimeField& F, std::uint64_t) {
                     std::vector<FpPoly> gens, listed;
                     for (auto s : {"x0^2", "x1^2", "x2^2 - x3^2"}) gens.push_back(parse_poly(F, s));
                     for (auto s : {"x0*x1", "x0*x2", "x0*x3", "x1*x2", "x1*x3", "x2*x3", "x2^2 + x3^2"})
                       listed.push_back(parse_poly(F, s));
                     const auto L = Plane::span(gens);
                     const bool piece = annihilator(L.space(), 2).piece(2) == FormSpace<PrimeField>::span(F, 4, 2, listed);
                     const auto hf = apolar_hilbert_function(L).with_linear;
                     r["degree2_matches"] = piece;
                     r["hilbert"] = hf.to_string();
                     return piece && hf == HilbertFunction{{1, 4, 3}};
                   }});
  items.push_back({"partials-planes", [n](Json& r, const PrimeField& F, std::uint64_t seed) {
                     Rng rng(seed);
                     std::size_t pf_zero = 0, jump3 = 0, degenerate = 0;
                     for (std::size_t i = 0; i < n; ++i) {
                       const auto L = random_partials_plane(rng, F);
                       if (!L) {
                         ++degenerate;
                         continue;
                       }
                       pf_zero += is_zero(smoothable_pfaffian(*L));
                       jump3 += jump_dimension(*L).dimension == 3;
                     }
                     r["trials"] = n;
                     r["degenerate"] = degenerate;
                     r["pfaffian_zero"] = pf_zero;
                     r["jump_dim_3"] = jump3;
                     return pf_zero == n - degenerate && jump3 == n - degenerate && degenerate <= tolerance(n);
                   }});
  items.push_back({"generic-planes", [n, &cfg](Json& r, const PrimeField& F, std::uint64_t seed) {
                     Rng rng(seed);
                     std::size_t general = 0, violations = 0;
                     for (std::size_t i = 0; i < n; ++i) {
                       const auto c = classify(random_plane(rng, F), cfg.degree_bound, rng.next());
                       general += c.verdict == Verdict::general && c.jump_dim == 0;
                       violations += !c.consistent();
                     }
                     r["trials"] = n;
                     r["general"] = general;
                     r["consistency_violations"] = violations;
                     return violations == 0 && general + tolerance(n) >= n;
                   }});
  items.push_back({"secant-planes", [n](Json& r, const PrimeField& F, std::uint64_t seed) {
                     Rng rng(seed);
                     std::size_t jump3 = 0, annihilated = 0;
                     const auto xy = parse_poly(F, "x0*x1");
                     for (std::size_t i = 0; i < n; ++i) {
                       const auto g = random_invertible(rng, F, 4);
                       const auto q = linear_change(xy, g);
                       const auto L = random_plane(rng, F, {q});
                       jump3 += jump_dimension(L).dimension >= 3;
                       annihilated += rank2_sextic_witness(L, q, inverse(g)).annihilated;
                     }
                     r["trials"] = n;
                     r["jump_dim_at_least_3"] = jump3;
                     r["witnesses_annihilated"] = annihilated;
                     return jump3 == n && annihilated == n;
                   }});
  items.push_back({"pencil-degrees", [n](Json& r, const PrimeField& F, std::uint64_t seed) {
                     std::size_t good = 0;
                     for (std::size_t i = 0; i < n; ++i) {
                       const auto p = pencil_experiment(F, derive_seed(seed, 0, i));
                       good += p.factorization_ok && p.degrees == std::array<int, 3>{36, 2, 10};
                     }
                     r["trials"] = n;
                     r["factorization_ok"] = good;
                     return good == n;
                   }});
  items.push_back({"kstar-limits", [n](Json& r, const PrimeField& F, std::uint64_t seed) {
                     std::size_t good = 0;
                     for (std::size_t i = 0; i < n; ++i) good += kstar_trial(F, derive_seed(seed, 0, i)).ok();
                     r["trials"] = n;
                     r["ok_trials"] = good;
                     return good == n;
                   }});
  items.push_back({"gale-segre", [n](Json& r, const PrimeField& F, std::uint64_t seed) {
                     std::size_t good = 0;
                     for (std::size_t i = 0; i < n; ++i) good += gale_trial(F, derive_seed(seed, 0, i)).ok();
                     r["trials"] = n;
                     r["ok_trials"] = good;
                     return good == n;
                   }});
  items.push_back({"cremona-types", [&cfg](Json& r, const PrimeField& F, std::uint64_t seed) {
                     const auto c = cremona_trial(F, seed, cfg.slow);
                     r["ce_type_2_3"] = c.ce_inverse_found && c.ce_inverse_verified && c.ce_quadratic_absent;
                     r["s8_cubic_absent"] = c.s8_cubic_absent;
                     if (c.s8_quartic_found) r["s8_type_2_4"] = *c.s8_quartic_found && c.s8_quartic_verified.value_or(false);
                     return c.ok();
                   }});
  items.push_back({"properties", [n](Json& r, const PrimeField& F, std::uint64_t seed) {
                     Rng rng(seed);
                     std::size_t pf_det = 0, equivariant = 0, scaling = 0;
                     const std::size_t matrices = std::max<std::size_t>(n, 100);
                     for (std::size_t i = 0; i < matrices; ++i) {
                       auto a = random_matrix(rng, F, 12, 12);
                       for (std::size_t x = 0; x < 12; ++x) {
                         a(x, x) = F.zero();
                         for (std::size_t y = 0; y < x; ++y) a(x, y) = -a(y, x);
                       }
                       const auto pf = pfaffian(a);
                       pf_det += pf * pf == determinant(a);
                     }
                     for (std::size_t i = 0; i < n; ++i) {
                       const auto L = i % 2 ? random_plane(rng, F) : random_plane(rng, F, {parse_poly(F, "x0*x1")});
                       const auto g = random_invertible(rng, F, 4);
                       const auto a = classify(L), b = classify(L.transformed(g));
                       equivariant += a.verdict == b.verdict && a.jump_dim == b.jump_dim;
                       const auto q = L.basis();
                       const auto lambda = random_nonzero(rng, F);
                       const int slot = static_cast<int>(i % 3);
                       auto s = q;
                       s[slot] = s[slot] * lambda;
                       scaling += smoothable_pfaffian(s[0], s[1], s[2]) ==
                                  smoothable_pfaffian(q[0], q[1], q[2]) * lambda * lambda;
                     }
                     r["pfaffian_squared_is_det"] = pf_det;
                     r["matrices"] = matrices;
                     r["classify_equivariant"] = equivariant;
                     r["pfaffian_scaling"] = scaling;
                     r["trials"] = n;
                     return pf_det == matrices && equivariant == n && scaling == n;
                   }});

  Report report;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const std::string inputs = items[k].name + "|" + field.name() + "|" + std::to_string(cfg.seed) + "|" +
                               std::to_string(n) + "|" + std::to_string(cfg.degree_bound) + "|" +
                               (cfg.slow ? "slow" : "fast");
    Json record{{"op", "verify-theorem"}, {"item", items[k].name}, {"seed", cfg.seed},
                {"inputs_digest", fnv1a_digest(inputs)}};
    const auto start = std::chrono::steady_clock::now();
    const bool ok = items[k].run(record, field, derive_seed(cfg.seed, static_cast<std::uint64_t>(Stream::battery), k));
    record["ok"] = ok;
    if (cfg.timing)
      record["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    report.records.push_back(std::move(record));
  }
  return report;
}

}  // namespace veronese::cli

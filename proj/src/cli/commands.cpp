#include <chrono>
#include <cstdio>
#include <functional>

#include "veronese/cli.hpp"
#include "veronese/parse.hpp"
#include "veronese/pipelines.hpp"

namespace veronese::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t sub_seed(const RunConfig& cfg, Stream stream, std::uint64_t index) {
  return derive_seed(cfg.seed, static_cast<std::uint64_t>(stream), index);
}

std::string config_text(const std::string& op, const RunConfig& cfg) {
  std::string field = cfg.field.kind == FieldCfg::Kind::rationals ? "Q" : "F_" + std::to_string(cfg.field.prime);
  return op + "|" + field + "|" + std::to_string(cfg.seed) + "|" + std::to_string(cfg.samples) + "|" +
         std::to_string(cfg.degree_bound) + "|" + (cfg.slow ? "slow" : "fast");
}

// Runs body, which fills the record, and appends ok and the optional timing.
void emit(Report& report, const RunConfig& cfg, Json record, const std::function<bool(Json&)>& body) {
  const auto start = Clock::now();
  const bool ok = body(record);
  record["ok"] = ok;
  if (cfg.timing)
    record["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  report.records.push_back(std::move(record));
}

Json base_record(const std::string& op, const RunConfig& cfg, const std::string& inputs) {
  return Json{{"op", op}, {"seed", cfg.seed}, {"inputs_digest", fnv1a_digest(config_text(op, cfg) + "|" + inputs)}};
}

PrimeField prime_field(const RunConfig& cfg, const char* op) {
  if (cfg.field.kind != FieldCfg::Kind::prime) throw UsageError(std::string(op) + " needs a prime field");
  return PrimeField(cfg.field.prime);
}

template <class Field>
std::string element_text(const Field& field, const typename Field::Element& x) {
  if constexpr (Field::is_prime_field) return std::to_string(field.signed_value(x));
  else return field.format(x);
}

template <class Field>
QuadricPlane<Field> plane_from_lines(const Field& field, const std::vector<std::string>& lines) {
  std::vector<Poly<Field>> forms;
  for (const auto& line : lines) forms.push_back(parse_poly(field, line));
  auto degree_is = [&](std::size_t i, int d) { return forms[i].is_homogeneous() && forms[i].degree() == d; };
  if (forms.size() == 3 && degree_is(0, 2) && degree_is(1, 2) && degree_is(2, 2))
    return QuadricPlane<Field>::span(forms);
  if (forms.size() == 4 && degree_is(0, 3) && degree_is(1, 1) && degree_is(2, 1) && degree_is(3, 1)) {
    std::vector<Poly<Field>> ops(forms.begin() + 1, forms.end());
    return plane_from_cubic(forms[0], std::span<const Poly<Field>>(ops));
  }
  throw UsageError("classify input must be 3 quadrics, or a cubic followed by 3 linear operators");
}

template <class Field>
bool classify_into(Json& r, const QuadricPlane<Field>& L, const RunConfig& cfg, std::uint64_t seed) {
  const auto c = classify(L, cfg.degree_bound, seed);
  r["field"] = L.field().name();
  r["pfaffian_zero"] = is_zero(c.pfaffian_value);
  r["pfaffian"] = element_text(L.field(), c.pfaffian_value);
  r["secant"] = c.secant_hit;
  r["secant_degrees_agree"] = c.secant_degrees_agree;
  r["jump_dim"] = c.jump_dim;
  r["verdict"] = to_string(c.verdict);
  Json cubics = Json::array();
  for (const auto& f : c.kernel_cubics.forms()) cubics.push_back(format_poly(f, VarFamily::target()));
  r["kernel_cubics"] = cubics;
  if (c.low_rank_member) r["low_rank_member"] = format_poly(*c.low_rank_member);
  Json sextics = Json::array();
  for (const auto& f : c.annihilated) sextics.push_back(format_poly(f));
  r["annihilated_sextics"] = sextics;
  r["consistent"] = c.consistent();
  return c.consistent() && c.secant_degrees_agree;
}

}  // namespace

bool Report::all_ok() const {
  return std::all_of(records.begin(), records.end(), [](const Json& r) { return r.at("ok").get<bool>(); });
}

std::string Report::jsonl() const {
  std::string out;
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report cmd_classify(const std::vector<std::string>& paths, const RunConfig& cfg) {
  if (paths.empty()) throw UsageError("classify needs at least one input file");
  Report report;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::vector<std::string> lines;
    try {
      lines = read_content_lines(paths[i]);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    std::string joined;
    for (const auto& l : lines) joined += l + "\n";
    auto record = base_record("classify", cfg, joined);
    record["input"] = paths[i];
    const auto seed = sub_seed(cfg, Stream::classify, i);
    if (cfg.field.kind == FieldCfg::Kind::rationals) {
      const RationalField field;
      const auto L = plane_from_lines(field, lines);
      emit(report, cfg, std::move(record), [&](Json& r) { return classify_into(r, L, cfg, seed); });
    } else {
      const PrimeField field(cfg.field.prime);
      const auto L = plane_from_lines(field, lines);
      emit(report, cfg, std::move(record), [&](Json& r) { return classify_into(r, L, cfg, seed); });
    }
  }
  return report;
}

Report cmd_pencil(const RunConfig& cfg) {
  const auto field = prime_field(cfg, "pencil");
  if (field.modulus() <= 40) throw UsageError("pencil needs p > 40 for 40 interpolation points");
  Report report;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    auto record = base_record("pencil", cfg, std::to_string(i));
    record["trial"] = i;
    emit(report, cfg, std::move(record), [&](Json& r) {
      const auto p = pencil_experiment(field, sub_seed(cfg, Stream::pencil, i));
      r["degrees"] = p.degrees;
      r["pf_cubed_divides"] = p.pf_cubed_divides;
      r["factorization_ok"] = p.factorization_ok;
      if (p.s_squarefree) r["s_squarefree"] = *p.s_squarefree;
      r["attempts"] = p.attempts;
      return p.factorization_ok && p.degrees == std::array<int, 3>{36, 2, 10};
    });
  }
  return report;
}

Report cmd_gale(const RunConfig& cfg) {
  const auto field = prime_field(cfg, "gale");
  Report report;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    auto record = base_record("gale", cfg, std::to_string(i));
    record["trial"] = i;
    emit(report, cfg, std::move(record), [&](Json& r) {
      const auto g = gale_trial(field, sub_seed(cfg, Stream::gale, i));
      r["chain"] = {g.scroll_dim, g.member_dims.empty() ? 0 : g.member_dims.front(), g.through_dim};
      r["member_dims"] = g.member_dims;
      r["containments"] = g.containments;
      r["scroll_is_meet"] = g.scroll_is_meet;
      r["hilbert"] = g.hilbert.to_string();
      r["pfaffian_zero"] = g.pfaffian_zero;
      r["secant"] = g.secant;
      r["jump_dim"] = g.jump_dim;
      r["segre_dims"] = g.segre_dims;
      r["segre_span"] = g.segre_span;
      r["segre_in_kernel"] = g.segre_in_kernel;
      r["attempts"] = g.attempts;
      return g.ok();
    });
  }
  return report;
}

Report cmd_cremona(const RunConfig& cfg) {
  const auto field = prime_field(cfg, "cremona");
  Report report;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    auto record = base_record("cremona", cfg, std::to_string(i));
    record["trial"] = i;
    emit(report, cfg, std::move(record), [&](Json& r) {
      const auto c = cremona_trial(field, sub_seed(cfg, Stream::cremona, i), cfg.slow);
      r["s8_quadrics"] = c.s8_quadrics;
      r["ce_type"] = c.ce_inverse_found && c.ce_inverse_verified ? Json::array({2, 3}) : Json(nullptr);
      r["ce_inverse_found"] = c.ce_inverse_found;
      r["ce_inverse_verified"] = c.ce_inverse_verified;
      r["ce_quadratic_absent"] = c.ce_quadratic_absent;
      r["s8_cubic_absent"] = c.s8_cubic_absent;
      if (c.s8_quartic_found) {
        r["s8_quartic_found"] = *c.s8_quartic_found;
        r["s8_quartic_verified"] = c.s8_quartic_verified.value_or(false);
        r["s8_type"] = *c.s8_quartic_found && c.s8_cubic_absent ? Json::array({2, 4}) : Json(nullptr);
      }
      r["attempts"] = c.attempts;
      return c.ok();
    });
  }
  return report;
}

}  // namespace veronese::cli

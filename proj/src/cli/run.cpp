#include <iostream>

#include "CLI11.hpp"
#include "veronese/cli.hpp"
#include "veronese/loci.hpp"
#include "veronese/parse.hpp"

namespace veronese::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projections of the Veronese threefold: exact classification and verification", "veronese"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  bool rationals = false;
  auto* prime_opt = app.add_option("--prime", prime, "prime modulus, 11 <= p < 2^31")->capture_default_str();
  auto* rat_opt = app.add_flag("--rationals", rationals, "work over Q (classify only)");
  prime_opt->excludes(rat_opt);
  app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "trials per item")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--degree-bound", cfg.degree_bound, "degree checked by the secant test")
      ->check(CLI::Range(3, 20))
      ->capture_default_str();
  app.add_flag("--slow", cfg.slow, "include the degree 4 inversion of c_S8");
  app.add_flag("--timing", cfg.timing, "add elapsed_ms to every record");

  std::vector<std::string> paths;
  auto* classify = app.add_subcommand("classify", "classify planes read from files");
  classify->add_option("files", paths, "3 quadrics, or a cubic and 3 linear operators, one per line")->required();
  auto* verify = app.add_subcommand("verify-theorem", "run the verification battery");
  auto* pencil = app.add_subcommand("pencil", "degree bookkeeping along random pencils");
  auto* gale = app.add_subcommand("gale", "8 points in P^2 through Gale duality to Segre cubics");
  auto* cremona = app.add_subcommand("cremona", "types of c_E and c_S8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    cfg.field = rationals ? FieldCfg::rationals() : FieldCfg::prime_field(prime);
    cfg.field.validate();
    Report report;
    if (*classify) report = cmd_classify(paths, cfg);
    else if (*verify) report = cmd_verify_theorem(cfg);
    else if (*pencil) report = cmd_pencil(cfg);
    else if (*gale) report = cmd_gale(cfg);
    else if (*cremona) report = cmd_cremona(cfg);
    out << report.jsonl();
    return report.exit_code();
  } catch (const GenericityExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kGenericity;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {  // FieldError, DependentForms
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace veronese::cli

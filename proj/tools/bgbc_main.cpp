#include "bgbc/report.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <string>

namespace {

struct Flags {
  int n = 2;
  std::string type = "A";
  int k_max = 2;
  int l_min = 0;
  int l_max = 0;
  std::string flavor = "plus";
  int gamma_bound = 0;
  std::string g1;
  std::string format = "text";
  std::uint64_t seed = 0;
  int threads = 1;
  bool flip = false;
};

void add_common(CLI::App* cmd, Flags& f, bool* has_lmin, bool* has_lmax,
                bool* has_bound) {
  cmd->add_option("--n", f.n, "number of directions N");
  cmd->add_option("--type", f.type, "algebra type, A or C")
      ->check(CLI::IsMember({"A", "C"}));
  cmd->add_option("--kmax", f.k_max, "largest conformal weight");
  cmd->add_option("--lmin", f.l_min, "smallest charge to report")
      ->each([has_lmin](const std::string&) { *has_lmin = true; });
  cmd->add_option("--lmax", f.l_max, "largest charge to report")
      ->each([has_lmax](const std::string&) { *has_lmax = true; });
  cmd->add_option("--flavor", f.flavor, "plus or full")
      ->check(CLI::IsMember({"plus", "full"}));
  cmd->add_option("--gamma-bound", f.gamma_bound,
                  "gamma_(-1) degree bound, full flavor only")
      ->each([has_bound](const std::string&) { *has_bound = true; });
  cmd->add_option("--g1", f.g1, "degree-1 witness, e.g. \"x1^2 d2\"");
  cmd->add_option("--format", f.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--seed", f.seed, "seed for randomized checks");
  cmd->add_option("--threads", f.threads, "worker count for grade fan-out");
}

bgbc::RunConfig to_config(const Flags& f, bool has_lmin, bool has_lmax, bool has_bound) {
  bgbc::RunConfig cfg;
  cfg.N = f.n;
  cfg.type = bgbc::algebra_type_from_letter(f.type.at(0));
  cfg.k_max = f.k_max;
  if (has_lmin) cfg.l_min = f.l_min;
  if (has_lmax) cfg.l_max = f.l_max;
  cfg.flavor = f.flavor == "full" ? bgbc::Flavor::full : bgbc::Flavor::plus;
  if (has_bound) cfg.gamma_bound = f.gamma_bound;
  cfg.g1_choice = f.g1;
  cfg.format = bgbc::format_from_name(f.format);
  cfg.seed = f.seed;
  cfg.threads = f.threads;
  cfg.inject_adjoint_sign_flip = f.flip;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free-field vertex algebra tables"};
  app.require_subcommand(1);

  Flags f;
  bool has_lmin = false, has_lmax = false, has_bound = false;
  CLI::App* basis = app.add_subcommand("basis", "weight-space dimension tables");
  CLI::App* invariants =
      app.add_subcommand("invariants", "invariant dimensions against the generated span");
  CLI::App* verify = app.add_subcommand("verify", "run the property suite");
  for (CLI::App* cmd : {basis, invariants, verify})
    add_common(cmd, f, &has_lmin, &has_lmax, &has_bound);
  verify->add_flag("--inject-adjoint-sign-flip", f.flip)->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    const bgbc::RunConfig cfg = to_config(f, has_lmin, has_lmax, has_bound);
    bgbc::Report report;
    if (basis->parsed()) report = bgbc::cmd_basis(cfg);
    else if (invariants->parsed()) report = bgbc::cmd_invariants(cfg);
    else report = bgbc::cmd_verify(cfg);
    std::cout << bgbc::render(report);
    if (!report.all_properties_passed()) return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

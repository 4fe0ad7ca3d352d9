#include <CLI11.hpp>

#include "abtk/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Direct scattering and long-time asymptotics for the coupled AB system"};
  app.require_subcommand(1);

  abtk::CommonOptions opt;
  opt.out_dir = abtk::default_out_dir();
  app.add_option("--config", opt.config_path, "JSON config file")->envname("AB_CONFIG");
  app.add_option("--out", opt.out_dir, "output directory (default $AB_OUT_DIR or .)");
  app.add_option("--threads", opt.threads, "worker threads (0 = auto)");
  app.add_flag("--fast", opt.fast, "skip the PDE-backed acceptance criteria");

  auto* scatter = app.add_subcommand(
      "scatter", "compute scattering data (s11, s21, r) from initial data");
  auto* asymptote = app.add_subcommand(
      "asymptote", "evaluate the leading-order solution along rays");
  auto* evolve = app.add_subcommand("evolve", "run the reference PDE solver");
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  auto* compare = app.add_subcommand(
      "compare", "evolve and compare against the leading-order formula");

  CLI11_PARSE(app, argc, argv);

  if (scatter->parsed()) return abtk::cmd_scatter(opt);
  if (asymptote->parsed()) return abtk::cmd_asymptote(opt);
  if (evolve->parsed()) return abtk::cmd_evolve(opt);
  if (verify->parsed()) return abtk::cmd_verify(opt);
  if (compare->parsed()) return abtk::cmd_compare(opt);
  return abtk::kInputError;
}

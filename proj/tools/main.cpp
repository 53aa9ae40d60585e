#include <iostream>

#include "CLI11.hpp"
#include "plift/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"partially lifted bivariate codes with disjoint repair groups"};
  app.require_subcommand(1);

  plift::BuildOptions build_opt;
  CLI::App* build = app.add_subcommand("build", "construct a code and write its descriptor");
  build->add_option("--ell", build_opt.ell, "field degree, q = 2^ell")->required();
  build->add_option("--s", build_opt.s, "slope subgroup order, s | q-1")->required();
  build->add_option("--t", build_opt.t, "intercept subgroup order, t | q-1")->required();
  build->add_option("--out", build_opt.out_path, "descriptor output path")->required();

  plift::AnalyzeOptions analyze_opt;
  CLI::App* analyze =
      app.add_subcommand("analyze", "exact dimension and repair profile of a descriptor");
  analyze->add_option("descriptor", analyze_opt.descriptor_path, "code descriptor path")
      ->required();
  analyze->add_option("--out", analyze_opt.matrix_out_path,
                      "also export the generator matrix as CSV");

  plift::VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite on a descriptor");
  verify->add_option("descriptor", verify_opt.descriptor_path, "code descriptor path")
      ->required();

  plift::EstTableOptions est_opt;
  CLI::App* est = app.add_subcommand("est-table", "pair-count table: exact, bound, baseline");
  est->add_option("--ell", est_opt.ell_max, "largest (even) ell row");
  est->add_option("--out", est_opt.out_path, "CSV output path (default stdout)");
  est->add_option("--format", est_opt.format, "output format (csv)");

  plift::RepairDemoOptions demo_opt;
  CLI::App* demo = app.add_subcommand("repair-demo", "seeded erasure-repair trials");
  demo->add_option("descriptor", demo_opt.descriptor_path, "code descriptor path")->required();
  demo->add_option("--seed", demo_opt.seed, "PRNG seed");
  demo->add_option("--trials", demo_opt.trials, "number of trials");
  demo->add_option("--erasures", demo_opt.erasures, "random non-target erasures per trial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return plift::cmd_build(build_opt, std::cout);
    if (analyze->parsed()) return plift::cmd_analyze(analyze_opt, std::cout);
    if (verify->parsed()) return plift::cmd_verify(verify_opt, std::cout);
    if (est->parsed()) return plift::cmd_est_table(est_opt, std::cout);
    if (demo->parsed()) return plift::cmd_repair_demo(demo_opt, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

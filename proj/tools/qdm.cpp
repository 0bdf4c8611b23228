#include <iostream>

#include <CLI11.hpp>

#include "qdmaps/cli.hpp"

namespace {

using qdmaps::cli::RunConfig;

void add_model_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--model", cfg.model,
                  "one of werner-exp|werner-stretched|werner-cospower|spinstar|sigmazx")
      ->capture_default_str();
  cmd->add_option("--alpha", cfg.alpha, "decay rate of the exponential p(t) families")
      ->capture_default_str();
  cmd->add_option("--beta", cfg.beta, "stretching exponent of werner-stretched")
      ->capture_default_str();
  cmd->add_option("--a", cfg.a, "frequency of the cos-power p(t)")->capture_default_str();
  cmd->add_option("--N", cfg.n, "cos-power exponent / spin-star bath size")
      ->capture_default_str();
  cmd->add_option("--g", cfg.g, "spin-star coupling strength")->capture_default_str();
  cmd->add_option("--omega", cfg.omega, "sigmazx dephasing frequency")->capture_default_str();
}

void add_grid_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--t-start", cfg.t_start, "first grid time")->capture_default_str();
  cmd->add_option("--t-end", cfg.t_end, "last grid time")->capture_default_str();
  cmd->add_option("--steps", cfg.steps, "number of grid points")->capture_default_str();
}

void add_tol_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--cp-tol", cfg.cp_tol, "CP threshold on the smallest Choi eigenvalue")
      ->capture_default_str();
  cmd->add_option("--singular-tol", cfg.singular_tol, "pivot threshold for map inversion")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum dynamical maps: export, diagnose, scan and classify"};
  app.require_subcommand(1);

  int rc = 0;

  RunConfig check_cfg;
  auto* check = app.add_subcommand("check", "diagnose a map file: TP, Hermiticity, CP");
  check->add_option("map", check_cfg.map_file, "map file (JSON)")->required();
  check->add_option("--cp-tol", check_cfg.cp_tol)->capture_default_str();
  check->add_option("--seed", check_cfg.seed, "seed for block-positivity sampling")
      ->capture_default_str();
  check->callback([&] { rc = qdmaps::cli::run_check(check_cfg, std::cout); });

  RunConfig model_cfg;
  double model_t1 = 0.0;
  double model_t2 = 0.0;
  auto* model = app.add_subcommand(
      "model", "write a model map to a file: A(t1,0) with --t1, B(t2,t1) with --t1 --t2");
  add_model_options(model, model_cfg);
  add_tol_options(model, model_cfg);
  auto* model_t1_opt = model->add_option("--t1", model_t1, "time of the map (or lower time)");
  auto* model_t2_opt = model->add_option("--t2", model_t2, "upper time of the intermediate map");
  model->add_option("--out", model_cfg.out, "output map file")->required();
  model->callback([&] {
    if (*model_t1_opt) model_cfg.t1 = model_t1;
    if (*model_t2_opt) model_cfg.t2 = model_t2;
    rc = qdmaps::cli::run_model(model_cfg, std::cout);
  });

  RunConfig scan_cfg;
  auto* scan = app.add_subcommand("scan", "CP-divisibility sweep over all grid pairs");
  add_model_options(scan, scan_cfg);
  add_grid_options(scan, scan_cfg);
  add_tol_options(scan, scan_cfg);
  scan->add_option("--seed", scan_cfg.seed)->capture_default_str();
  scan->add_option("--out", scan_cfg.out, "output CSV")->required();
  scan->callback([&] { rc = qdmaps::cli::run_scan(scan_cfg, std::cout); });

  RunConfig conc_cfg;
  conc_cfg.t_start = 0.0;
  conc_cfg.t_end = 5.0;
  conc_cfg.steps = 101;
  auto* conc = app.add_subcommand("concurrence",
                                  "concurrence trajectory of the isotropic state family");
  add_model_options(conc, conc_cfg);
  add_grid_options(conc, conc_cfg);
  conc->add_option("--out", conc_cfg.out, "output CSV")->required();
  conc->callback([&] { rc = qdmaps::cli::run_concurrence(conc_cfg, std::cout); });

  RunConfig cls_cfg;
  double cls_t1 = 0.0;
  double cls_t2 = 0.0;
  auto* cls = app.add_subcommand("classify", "Markov / non-Markov verdict for one (t1,t2)");
  add_model_options(cls, cls_cfg);
  add_tol_options(cls, cls_cfg);
  cls->add_option("--t1", cls_t1, "lower time")->required();
  cls->add_option("--t2", cls_t2, "upper time")->required();
  cls->callback([&] {
    cls_cfg.t1 = cls_t1;
    cls_cfg.t2 = cls_t2;
    rc = qdmaps::cli::run_classify(cls_cfg, std::cout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return rc;
}

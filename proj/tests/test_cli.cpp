#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qdmaps/cli.hpp"
#include "qdmaps/errors.hpp"
#include "qdmaps/mapfile.hpp"
#include "qdmaps/models.hpp"

using namespace qdmaps;
using cli::RunConfig;

namespace {

const double kPi = 3.141592653589793238462643383279502884;

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Exit code of the installed binary, stdout discarded.
int run_binary(const std::string& args) {
  const std::string cmd = std::string(QDM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name) : path(temp_path(name)) {}
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("fmt12") {
  CHECK(cli::fmt12(0.0) == "0");
  CHECK(cli::fmt12(1.0) == "1");
  CHECK(cli::fmt12(kPi) == "3.14159265359");
  CHECK(cli::fmt12(1.0 / 3.0) == "0.333333333333");
  CHECK(cli::fmt12(-9.424411740306708) == "-9.42441174031");
  CHECK(cli::fmt12(std::nan("")) == "nan");
}

TEST_CASE("linspace") {
  const auto g = cli::linspace(0.2, 3.0, 15);
  REQUIRE(g.size() == 15);
  CHECK(g.front() == 0.2);
  CHECK(g.back() == 3.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);

  CHECK_THROWS_AS(cli::linspace(0.0, 1.0, 1), InvalidConfig);
  CHECK_THROWS_AS(cli::linspace(1.0, 1.0, 5), InvalidConfig);
  CHECK_THROWS_AS(cli::linspace(-0.5, 1.0, 5), InvalidConfig);
}

TEST_CASE("model name dispatch") {
  RunConfig cfg;
  cfg.model = "werner-exp";
  CHECK(cli::make_family(cfg).kind == ModelFamily::Kind::werner);
  CHECK(cli::make_pfunction(cfg).kind == PFunction::Kind::exponential);
  cfg.model = "werner-stretched";
  CHECK(cli::make_pfunction(cfg).kind == PFunction::Kind::stretched);
  cfg.model = "werner-cospower";
  CHECK(cli::make_pfunction(cfg).kind == PFunction::Kind::cospower);
  cfg.model = "spinstar";
  CHECK(cli::make_family(cfg).kind == ModelFamily::Kind::spinstar);
  CHECK_THROWS_AS(cli::make_pfunction(cfg), InvalidConfig);
  cfg.model = "sigmazx";
  CHECK(cli::make_family(cfg).kind == ModelFamily::Kind::sigmazx);

  cfg.model = "bogus";
  CHECK_THROWS_AS(cli::make_family(cfg), InvalidConfig);
}

TEST_CASE("run_model then run_check") {
  TempFile map("qdmaps_cli_map.json");

  // A(t1, 0) export: the time-pi/4 sigma-zx map is CP
  RunConfig model_cfg;
  model_cfg.model = "sigmazx";
  model_cfg.t1 = kPi / 4.0;
  model_cfg.out = map.path.string();
  std::ostringstream out;
  CHECK(cli::run_model(model_cfg, out) == 0);

  RunConfig check_cfg;
  check_cfg.map_file = map.path.string();
  std::ostringstream check_out;
  CHECK(cli::run_check(check_cfg, check_out) == 0);
  CHECK(contains(check_out.str(), "verdict CP"));
  CHECK(contains(check_out.str(), "tp true"));
  CHECK(contains(check_out.str(), "min_choi_eig"));
  CHECK(contains(check_out.str(), "block_pos_min"));

  // intermediate B export for the NCP spin-star window
  RunConfig inter_cfg;
  inter_cfg.model = "spinstar";
  inter_cfg.n = 1;
  inter_cfg.g = 1.0;
  inter_cfg.t1 = 0.75;
  inter_cfg.t2 = 1.2;
  inter_cfg.out = map.path.string();
  std::ostringstream inter_out;
  CHECK(cli::run_model(inter_cfg, inter_out) == 0);

  std::ostringstream ncp_out;
  CHECK(cli::run_check(check_cfg, ncp_out) == 2);
  CHECK(contains(ncp_out.str(), "verdict NCP"));
  CHECK(contains(ncp_out.str(), "min_choi_eig -9.42441174031"));

  // missing --out and missing t1 with t2 are configuration errors
  RunConfig bad = model_cfg;
  bad.out.clear();
  std::ostringstream bad_out;
  CHECK(cli::run_model(bad, bad_out) == 1);
  CHECK(contains(bad_out.str(), "error:"));

  bad = model_cfg;
  bad.t1.reset();
  bad.t2 = 1.0;
  std::ostringstream bad_out2;
  CHECK(cli::run_model(bad, bad_out2) == 1);
}

TEST_CASE("run_check on a B-kind file") {
  TempFile map("qdmaps_cli_bmap.json");
  write_map_file(map.path.string(), werner_bmap(0.5));

  RunConfig cfg;
  cfg.map_file = map.path.string();
  std::ostringstream out;
  CHECK(cli::run_check(cfg, out) == 0);
  CHECK(contains(out.str(), "kind B"));
  CHECK(contains(out.str(), "min_choi_eig 0.25"));
  CHECK(contains(out.str(), "verdict CP"));
}

TEST_CASE("run_check input failures") {
  RunConfig cfg;
  cfg.map_file = "/nonexistent/qdmaps.json";
  std::ostringstream out;
  CHECK(cli::run_check(cfg, out) == 1);
  CHECK(contains(out.str(), "error:"));

  TempFile corrupt("qdmaps_cli_corrupt.json");
  std::ofstream(corrupt.path) << "{ nope";
  cfg.map_file = corrupt.path.string();
  std::ostringstream out2;
  CHECK(cli::run_check(cfg, out2) == 1);
}

TEST_CASE("run_scan") {
  TempFile csv("qdmaps_cli_scan.csv");

  RunConfig cfg;
  cfg.model = "werner-exp";
  cfg.out = csv.path.string();
  std::ostringstream out;
  CHECK(cli::run_scan(cfg, out) == 0);

  const std::string first = slurp(csv.path);
  CHECK(contains(first, "t1,t2,min_choi_eig,cp,semigroup_defect\n"));
  CHECK(contains(first, ",true,"));
  CHECK_FALSE(contains(first, ",false,"));

  std::ostringstream out2;
  CHECK(cli::run_scan(cfg, out2) == 0);
  CHECK(slurp(csv.path) == first);  // same config, byte-identical file

  cfg.model = "werner-cospower";
  std::ostringstream out3;
  CHECK(cli::run_scan(cfg, out3) == 2);  // NCP window found
  CHECK(contains(slurp(csv.path), ",false,"));

  // a grid point sitting on the p(t) = 0 node produces a nan row
  cfg.t_start = kPi / 2.0;
  cfg.t_end = kPi / 2.0 + 1.0;
  cfg.steps = 3;
  std::ostringstream out4;
  const int rc = cli::run_scan(cfg, out4);
  CHECK((rc == 0 || rc == 2));
  CHECK(contains(slurp(csv.path), ",nan,,nan"));

  RunConfig bad = cfg;
  bad.steps = 1;
  std::ostringstream bad_out;
  CHECK(cli::run_scan(bad, bad_out) == 1);

  bad = cfg;
  bad.t_start = 0.0;
  std::ostringstream bad_out2;
  CHECK(cli::run_scan(bad, bad_out2) == 1);

  bad = cfg;
  bad.out.clear();
  std::ostringstream bad_out3;
  CHECK(cli::run_scan(bad, bad_out3) == 1);
}

TEST_CASE("run_concurrence") {
  TempFile csv("qdmaps_cli_conc.csv");

  RunConfig cfg;
  cfg.model = "werner-exp";
  cfg.t_start = 0.0;
  cfg.t_end = 5.0;
  cfg.steps = 101;
  cfg.out = csv.path.string();
  std::ostringstream out;
  CHECK(cli::run_concurrence(cfg, out) == 0);

  const std::string text = slurp(csv.path);
  CHECK(contains(text, "t,p,concurrence\n"));
  CHECK(contains(text, "0,1,1\n"));  // t = 0 row

  cfg.model = "werner-cospower";
  cfg.t_start = 0.0;
  cfg.t_end = kPi;
  cfg.steps = 3;
  std::ostringstream out2;
  CHECK(cli::run_concurrence(cfg, out2) == 0);
  const std::string rev = slurp(csv.path);
  CHECK(contains(rev, "3.14159265359,1,1\n"));  // full revival at t = pi

  cfg.model = "spinstar";
  std::ostringstream out3;
  CHECK(cli::run_concurrence(cfg, out3) == 1);  // no p(t) family to trace
}

TEST_CASE("run_classify") {
  RunConfig cfg;
  cfg.model = "werner-exp";
  cfg.t1 = 1.0;
  cfg.t2 = 2.0;
  std::ostringstream out;
  CHECK(cli::run_classify(cfg, out) == 0);
  CHECK(contains(out.str(), "verdict Markov"));
  CHECK(contains(out.str(), "cp_intermediate true"));
  CHECK(contains(out.str(), "min_choi_eig_t1"));

  cfg.model = "werner-cospower";
  cfg.t1 = 2.0 * kPi / 3.0;
  cfg.t2 = kPi;
  std::ostringstream out2;
  CHECK(cli::run_classify(cfg, out2) == 2);
  CHECK(contains(out2.str(), "verdict NonMarkov"));

  cfg.model = "sigmazx";
  cfg.t1 = 1.2;
  cfg.t2 = 2.0;
  std::ostringstream out3;
  CHECK(cli::run_classify(cfg, out3) == 2);
  CHECK(contains(out3.str(), "min_choi_eig_intermediate -0.148441923502"));

  cfg.t1 = kPi / 2.0;  // cos(w t1) = 0: no intermediate map
  std::ostringstream out4;
  CHECK(cli::run_classify(cfg, out4) == 1);
  CHECK(contains(out4.str(), "intermediate undefined at t1"));

  RunConfig bad;
  bad.model = "werner-exp";
  std::ostringstream bad_out;
  CHECK(cli::run_classify(bad, bad_out) == 1);  // t1/t2 missing

  bad.t1 = 2.0;
  bad.t2 = 1.0;
  std::ostringstream bad_out2;
  CHECK(cli::run_classify(bad, bad_out2) == 1);  // inverted order
}

TEST_CASE("binary front end") {
  CHECK(run_binary("--help") == 0);
  CHECK(run_binary("") == 1);          // a subcommand is required
  CHECK(run_binary("frobnicate") == 1);

  TempFile csv("qdmaps_cli_proc_scan.csv");
  CHECK(run_binary("scan --model werner-exp --out " + csv.path.string()) == 0);
  CHECK(std::filesystem::exists(csv.path));
  CHECK(contains(slurp(csv.path), "t1,t2,min_choi_eig,cp,semigroup_defect"));

  TempFile map("qdmaps_cli_proc_map.json");
  CHECK(run_binary("model --model spinstar --t1 0.75 --t2 1.2 --out " + map.path.string()) ==
        0);
  CHECK(run_binary("check " + map.path.string()) == 2);

  CHECK(run_binary("classify --model werner-exp --t1 1 --t2 2") == 0);
  CHECK(run_binary("classify --model sigmazx --t1 1.2 --t2 2.0") == 2);
}

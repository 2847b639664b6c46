/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kTableArgs = "-a -0.1 -b 0.5 -c 0.2 --sigma2 0.72";

}  // namespace

TEST_CASE("exit-code contract") {
  CHECK(run_cli(std::string("check ") + kTableArgs).exit_code == 0);
  CHECK(run_cli("check -a 0.5 -b 0.5 -c 0.5").exit_code == 2);
  CHECK(run_cli("check -a x -b 0 -c 0").exit_code == 1);
  CHECK(run_cli("bogus-subcommand").exit_code == 1);
  CHECK(run_cli("check -a 0 -b 0 -c 0 --format nope").exit_code == 1);
  CHECK(run_cli(std::string("acf ") + kTableArgs + " --format csv").exit_code == 0);
  CHECK(run_cli("acf -a 0.5 -b 0.5 -c 0.5").exit_code == 2);
  CHECK(run_cli("simulate -a 0.5 -b 0.5 -c 0.5 --rows 4 --cols 4").exit_code == 2);
  CHECK(run_cli("check -a 0.1 -b 0.1 -c 0.1 --sigma2 -4").exit_code == 2);
}

TEST_CASE("nonstationary commands never produce output") {
  RunResult r = run_cli("acf -a 0.5 -b 0.5 -c 0.5 --format csv");
  CHECK(r.exit_code == 2);
  CHECK(r.output.empty());

  auto tmp = std::filesystem::temp_directory_path() / "planar_ar_reject.csv";
  std::filesystem::remove(tmp);
  RunResult r2 = run_cli("simulate -a 0.5 -b 0.5 -c 0.5 --rows 4 --cols 4 --format csv --out " +
                         tmp.string());
  CHECK(r2.exit_code == 2);
  CHECK_FALSE(std::filesystem::exists(tmp));
}

TEST_CASE("check table output carries the verdicts") {
  RunResult r = run_cli(std::string("check ") + kTableArgs);
  CHECK(r.output.find("stationary     = yes") != std::string::npos);
  CHECK(r.output.find("causal         = yes") != std::string::npos);
  CHECK(r.output.find("transect_uncorrelated") != std::string::npos);

  RunResult js = run_cli(std::string("check ") + kTableArgs + " --format json");
  CHECK(js.output.find("\"stationary\":true") != std::string::npos);
  CHECK(js.output.find("\"D\":0.5184") != std::string::npos);
}

TEST_CASE("acf golden rows and determinism") {
  std::string args = std::string("acf ") + kTableArgs +
                     " --h1-min -2 --h1-max 3 --h2-min -3 --h2-max 3 --format csv";
  RunResult r1 = run_cli(args);
  RunResult r2 = run_cli(args);
  CHECK(r1.output == r2.output);
  CHECK(r1.output.rfind("h1,h2,gamma\n", 0) == 0);

  auto value_at = [&](const std::string& prefix) {
    auto pos = r1.output.find("\n" + prefix);
    REQUIRE(pos != std::string::npos);
    return std::stod(r1.output.substr(pos + 1 + prefix.size()));
  };
  CHECK(std::abs(value_at("0,0,") - 1.0) < 1e-12);
  CHECK(std::abs(value_at("1,1,") - 0.15) < 1e-12);
  CHECK(std::abs(value_at("3,3,") - -0.00225) < 1e-12);
  CHECK(std::abs(value_at("-2,-3,") - 0.0225) < 1e-12);

  RunResult oracle = run_cli(args + " --oracle --nodes 512");
  CHECK(oracle.output.rfind("h1,h2,gamma,oracle,abs_diff\n", 0) == 0);
}

TEST_CASE("psi output") {
  RunResult r = run_cli(std::string("psi ") + kTableArgs + " --kmax 2 --lmax 2 --format csv");
  CHECK(r.output.rfind("k,l,psi\n", 0) == 0);
  CHECK(r.output.find("\n0,0,1\n") != std::string::npos);
  CHECK(r.output.find("\n1,1,0.1") != std::string::npos);
  RunResult js = run_cli(std::string("psi ") + kTableArgs + " --format json");
  CHECK(js.output.find("\"tail_bound_estimated\"") != std::string::npos);
}

TEST_CASE("simulate reruns are byte-identical and thread-count independent") {
  std::string args = std::string("simulate ") + kTableArgs +
                     " --rows 48 --cols 40 --seed 9 --format csv";
  RunResult r1 = run_cli(args);
  RunResult r2 = run_cli(args);
  CHECK(r1.output == r2.output);

  std::string cli = g_cli;
  g_cli = "PLANAR_AR_THREADS=1 " + cli;
  RunResult t1 = run_cli(args + " --method ma");
  g_cli = "PLANAR_AR_THREADS=8 " + cli;
  RunResult t8 = run_cli(args + " --method ma");
  g_cli = cli;
  CHECK(t1.output == t8.output);
  CHECK(t1.exit_code == 0);
}

TEST_CASE("white-noise image uses the full gray range") {
  RunResult r = run_cli("simulate -a 0 -b 0 -c 0 --rows 64 --cols 64 --seed 3 --format pgm");
  CHECK(r.output.rfind("P2\n", 0) == 0);
  std::istringstream ss(r.output);
  std::string magic, comment, dims_w, dims_h, maxval;
  std::getline(ss, magic);
  std::getline(ss, comment);
  ss >> dims_w >> dims_h >> maxval;
  CHECK(dims_w == "64");
  CHECK(maxval == "255");
  bool saw0 = false, saw255 = false;
  int pix;
  while (ss >> pix) {
    CHECK(pix >= 0);
    CHECK(pix <= 255);
    saw0 = saw0 || pix == 0;
    saw255 = saw255 || pix == 255;
  }
  CHECK(saw0);
  CHECK(saw255);
}

TEST_CASE("estimate round trip through files") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path();
  auto acf_path = (dir / "planar_ar_acf.csv").string();
  auto field_path = (dir / "planar_ar_field.csv").string();

  CHECK(run_cli(std::string("acf ") + kTableArgs + " --format csv --out " + acf_path)
            .exit_code == 0);
  RunResult est = run_cli("estimate --acf " + acf_path + " --format table");
  CHECK(est.exit_code == 0);
  CHECK(est.output.find("a      = -0.1") != std::string::npos);
  CHECK(est.output.find("sigma2 = 0.72") != std::string::npos);

  CHECK(run_cli(std::string("simulate ") + kTableArgs +
                " --rows 256 --cols 256 --seed 11 --format csv --out " + field_path)
            .exit_code == 0);
  RunResult est2 = run_cli("estimate --field " + field_path);
  CHECK(est2.exit_code == 0);
  CHECK(est2.output.find("\"source\":\"empirical_acf\"") != std::string::npos);
  CHECK(est2.output.find("\"yw_diagnostics\"") != std::string::npos);

  // malformed input: ragged cell set
  auto bad_path = (dir / "planar_ar_bad.csv").string();
  std::ofstream(bad_path) << "i,j,value\n0,0,1\n0,1,2\n1,0,3\n";
  CHECK(run_cli("estimate --field " + bad_path).exit_code == 1);
  CHECK(run_cli("estimate").exit_code == 1);
  CHECK(run_cli("estimate --acf " + acf_path + " --field " + field_path).exit_code == 1);
}

TEST_CASE("equiv output lists the paired parameterization") {
  RunResult r = run_cli(std::string("equiv ") + kTableArgs);
  CHECK(r.output.find("class size 2") != std::string::npos);
  CHECK(r.output.find("(causal)") != std::string::npos);
  RunResult js = run_cli(std::string("equiv ") + kTableArgs + " --format json");
  CHECK(js.output.find("\"class_size\":2") != std::string::npos);
}

TEST_CASE("spectrum is positive everywhere") {
  RunResult r = run_cli(std::string("spectrum ") + kTableArgs + " --resolution 17");
  CHECK(r.exit_code == 0);
  std::istringstream ss(r.output);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "nu1,nu2,density");
  int rows = 0;
  while (std::getline(ss, line)) {
    auto last = line.rfind(',');
    CHECK(std::stod(line.substr(last + 1)) > 0.0);
    ++rows;
  }
  CHECK(rows == 17 * 17);
}

TEST_CASE("atomic output writes") {
  namespace fs = std::filesystem;
  auto path = (fs::temp_directory_path() / "planar_ar_atomic.csv").string();
  CHECK(run_cli(std::string("acf ") + kTableArgs + " --format csv --out " + path).exit_code == 0);
  CHECK(fs::exists(path));
  CHECK_FALSE(fs::exists(path + ".tmp"));
  std::string direct = run_cli(std::string("acf ") + kTableArgs + " --format csv").output;
  CHECK(read_file(path) == direct);
}

int run_doctest(int argc, char** argv) {
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-planar-ar-binary>\n");
    return 2;
  }
  g_cli = argv[1];
  return run_doctest(argc - 1, argv + 1);
}

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(FEVAL_BIN) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("feval_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("full pipeline on a synthetic dataset") {
  TempDir tmp;
  std::string dir = tmp.path.string();
  REQUIRE(run("synth --out " + dir + " --seed 42") == 0);
  std::string cfg = " --config " + dir + "/config.txt";
  REQUIRE(run("ingest" + cfg) == 0);

  fs::path out = tmp.path / "run";
  CHECK(fs::exists(out / "panel.csv"));
  CHECK(fs::exists(out / "panel.json"));
  CHECK(fs::exists(out / "realized.csv"));
  CHECK(fs::exists(out / "states.csv"));

  REQUIRE(run("test-bias" + cfg) == 0);
  CHECK(fs::exists(out / "bias_tests.csv"));
  CHECK(fs::exists(out / "bias_tests.json"));

  REQUIRE(run("backtest" + cfg) == 0);
  CHECK(fs::exists(out / "backtest_CPI_AR1_h1.csv"));

  SUBCASE("reruns are byte-identical") {
    std::string panel = slurp(out / "panel.csv");
    std::string bias = slurp(out / "bias_tests.csv");
    std::string back = slurp(out / "backtest_CPI_AR1_h1.csv");
    REQUIRE(run("ingest" + cfg) == 0);
    REQUIRE(run("test-bias" + cfg) == 0);
    REQUIRE(run("backtest" + cfg) == 0);
    CHECK(slurp(out / "panel.csv") == panel);
    CHECK(slurp(out / "bias_tests.csv") == bias);
    CHECK(slurp(out / "backtest_CPI_AR1_h1.csv") == back);
  }
}

TEST_CASE("config and schema failures exit with code 1") {
  TempDir tmp;
  SUBCASE("missing forecast file") {
    std::ofstream cfg(tmp.path / "config.txt");
    cfg << "forecasts = " << (tmp.path / "absent.csv").string() << "\n"
        << "monthly = " << (tmp.path / "absent_monthly.csv").string() << "\n"
        << "variables = CPI\n"
        << "out = " << (tmp.path / "out").string() << "\n";
    cfg.close();
    CHECK(run("ingest --config " + (tmp.path / "config.txt").string()) == 1);
  }
  SUBCASE("unknown config key") {
    std::ofstream cfg(tmp.path / "config.txt");
    cfg << "no_such_key = 1\n";
    cfg.close();
    CHECK(run("ingest --config " + (tmp.path / "config.txt").string()) == 1);
  }
  SUBCASE("duplicate forecast cell") {
    std::string dir = tmp.path.string();
    REQUIRE(run("synth --out " + dir + " --seed 1 --years 6") == 0);
    std::ofstream f(tmp.path / "forecasts.csv", std::ios::app);
    // Repeat an existing (variable, target, horizon) coordinate.
    f << "CPI,2001,5,2001,1,9.9\n";
    f.close();
    CHECK(run("ingest --config " + dir + "/config.txt") == 1);
  }
  SUBCASE("missing config file") {
    CHECK(run("ingest --config " + (tmp.path / "none.txt").string()) == 1);
  }
}

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gabor/cli.hpp"

using namespace gabor;
namespace fs = std::filesystem;

namespace {

const fs::path source = GABOR_SOURCE_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "gabor-sections");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("gabor-cli-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string config(const std::string& name) { return (source / "configs" / name).string(); }

}  // namespace

TEST_CASE("sweep on the density-2 config") {
  const auto dir = scratch("sweep");
  const auto r = run({"sweep", "--config", config("gaussian-density2.toml"), "--out", dir.string(), "--plot",
                      "--csv-dir", (dir / "csv").string()});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("numerically linearly dependent at radius 3") != std::string::npos);
  const auto csv = slurp(dir / "sweep.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= 6);
  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "sweep.gp"));
  CHECK(slurp(dir / "csv" / "sweep.csv") == csv);
  CHECK(fs::exists(dir / "csv" / "bounds.csv"));
  CHECK(fs::exists(dir / "csv" / "fits.csv"));
}

TEST_CASE("malformed config exits 1 and names the key") {
  const auto dir = scratch("bad");
  std::ofstream(dir / "bad.toml") << "[sweep]\nradii = [1.0, -0.5]\n";
  const auto r = run({"sweep", "--config", (dir / "bad.toml").string(), "--out", dir.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("ConfigError") != std::string::npos);
  CHECK(r.err.find("sweep.radii") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  CHECK(run({"sweep", "--config", (dir / "missing.toml").string()}).code == 1);
  CHECK(run({"sweep", "--bogus"}).code == 1);
}

TEST_CASE("kernel on the critical lattice reports a missing gap") {
  const auto dir = scratch("critical");
  const auto r = run({"kernel", "--config", config("gaussian-critical.toml"), "--out", dir.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("GapMissing") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "kernel.json"));
}

TEST_CASE("kernel, gram-dump, fit and bounds write their outputs") {
  const auto dir = scratch("all");
  const auto d2 = config("gaussian-density2.toml");
  CHECK(run({"kernel", "--config", d2, "--out", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "kernel.json"));
  CHECK(fs::exists(dir / "kernel_vector.csv"));
  CHECK(fs::exists(dir / "lemma_check.csv"));
  CHECK(run({"gram-dump", "--config", d2, "--out", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "gram.csv"));
  CHECK(fs::exists(dir / "envelope.csv"));
  const auto fit = run({"fit", "--config", d2, "--out", dir.string()});
  CHECK(fit.code == 0);
  CHECK(fit.out.find("gaussian_type: slope") != std::string::npos);
  CHECK(fs::exists(dir / "fit.json"));
  CHECK(run({"bounds", "--config", d2, "--out", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "bounds.csv"));
  CHECK(fs::exists(dir / "weight_checks.json"));
}

TEST_CASE("outputs do not depend on the worker count") {
  const auto a = scratch("threads1");
  const auto b = scratch("threads3");
  const auto d2 = config("gaussian-density2.toml");
  for (const char* cmd : {"sweep", "kernel"}) {
    REQUIRE(run({cmd, "--config", d2, "--out", a.string(), "--threads", "1"}).code == 0);
    REQUIRE(run({cmd, "--config", d2, "--out", b.string(), "--threads", "3"}).code == 0);
  }
  for (const char* file : {"sweep.csv", "report.json", "kernel.json", "kernel_vector.csv", "lemma_check.csv"}) {
    INFO(file);
    CHECK(slurp(a / file) == slurp(b / file));
  }
}

TEST_CASE("thread count precedence") {
  unsetenv("GABOR_SECTIONS_THREADS");
  CHECK(resolve_threads(std::nullopt, 0) >= 1);
  CHECK(resolve_threads(std::nullopt, 5) == 5);
  setenv("GABOR_SECTIONS_THREADS", "3", 1);
  CHECK(resolve_threads(std::nullopt, 5) == 3);
  CHECK(resolve_threads(7, 5) == 7);
  setenv("GABOR_SECTIONS_THREADS", "many", 1);
  CHECK(resolve_threads(std::nullopt, 5) == 5);
  unsetenv("GABOR_SECTIONS_THREADS");
}

TEST_CASE("print-config and selftest") {
  const auto r = run({"--print-config", "--config", config("gaussian-critical.toml")});
  CHECK(r.code == 0);
  CHECK(r.out.find("[lattice]\ngenerator = [1, 0, 0, 1]") != std::string::npos);
  CHECK(r.out.find("[sweep]") != std::string::npos);
  const auto s = run({"selftest"});
  CHECK(s.code == 0);
  CHECK(s.out.find("FAIL") == std::string::npos);
  const auto bare = run({});
  CHECK(bare.code == 1);
  CHECK(bare.out.find("sweep") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("installed binary") {
  const auto dir = scratch("binary");
  const std::string cmd = std::string("\"") + GABOR_CLI + "\" kernel --config \"" + config("gaussian-critical.toml") +
                          "\" --out \"" + dir.string() + "\" 2> \"" + (dir / "err.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 2);
  const auto err = slurp(dir / "err.txt");
  CHECK(err.rfind("error code=GapMissing", 0) == 0);
}

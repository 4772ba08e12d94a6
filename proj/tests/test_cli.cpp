#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string command = std::string(RINDLER_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("rindler_cli_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("exit codes") {
  TempDir tmp;
  CHECK(run("sweep --family theta1 --alpha 0.9 --r 0:pi/4:3 --p 0:1:5 --out " + (tmp.path / "a.csv").string()) == 0);
  CHECK(run("verify") == 0);
  CHECK(run("") == 2);
  CHECK(run("sweep --bogus") == 2);
  CHECK(run("sweep --alpha 2") == 2);
  CHECK(run("sweep --p 1.5") == 2);
  CHECK(run("sweep --r pi") == 2);
  CHECK(run("sweep --methods svd") == 2);
  CHECK(run("sweep --jobs 0") == 2);
  CHECK(run("sweep --out /nonexistent/dir/out.csv") == 3);
  CHECK(run("sweep --config /nonexistent/config.txt") == 3);
  CHECK(run("fig1 --out /proc/rindler_forbidden") == 3);
}

TEST_CASE("config file with flag precedence") {
  TempDir tmp;
  {
    std::ofstream cfg(tmp.path / "cfg.txt");
    cfg << "family = theta2\nalpha = 0.6,0.8\nmethods = closed\n";
  }
  const auto out = tmp.path / "out.csv";
  REQUIRE(run("sweep --config " + (tmp.path / "cfg.txt").string() + " --family theta1 --out " + out.string()) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.find("theta2") == std::string::npos);
  CHECK(csv.find("theta1,0.59999999999999998,") != std::string::npos);
  CHECK(csv.find("theta1,0.80000000000000004,") != std::string::npos);

  {
    std::ofstream bad(tmp.path / "bad.txt");
    bad << "bogus = 1\n";
  }
  CHECK(run("sweep --config " + (tmp.path / "bad.txt").string()) == 2);
}

TEST_CASE("figure commands write their files") {
  TempDir tmp;
  REQUIRE(run("fig1 --jobs 2 --out " + (tmp.path / "f1").string()) == 0);
  for (const char* family : {"theta1", "theta2"})
    for (const char* suffix : {"r0", "rpi6", "rpi4"})
      CHECK(fs::exists(tmp.path / "f1" / (std::string("fig1_") + family + "_" + suffix + ".csv")));
  REQUIRE(run("fig2 --out " + (tmp.path / "f2").string()) == 0);
  CHECK(fs::exists(tmp.path / "f2" / "fig2_theta1.csv"));
  CHECK(fs::exists(tmp.path / "f2" / "fig2_theta2.csv"));
}

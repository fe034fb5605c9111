#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "shannon/cone.hpp"
#include "shannon/lattice_io.hpp"
#include "shannon/report.hpp"

namespace fs = std::filesystem;
using namespace shannon;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("shannonlat-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("non-shannon pipeline") {
    TempDir dir;
    std::string lat = dir.file("lld.lat");
    Result cat = run({"catalog", "lld11", "-o", lat});
    CHECK(cat.code == cli::kOk);
    Result check = run({"check-shannon", lat});
    CHECK(check.code == cli::kFinding);
    CHECK(contains(check.out, "verdict: non_shannon"));
    CHECK(contains(check.out, "(q1, q4, q2, q3)"));
    CHECK(contains(check.out, "normalized gap -1/4"));
  }

  TEST_CASE("shannon pipeline") {
    TempDir dir;
    std::string lat = dir.file("m7.lat");
    CHECK(run({"catalog", "m_n", "7", "-o", lat}).code == cli::kOk);
    Result check = run({"check-shannon", lat});
    CHECK(check.code == cli::kOk);
    CHECK(contains(check.out, "verdict: shannon"));
    Result profile = run({"analyze", lat});
    CHECK(profile.code == cli::kOk);
    CHECK(contains(profile.out, "modular: yes"));
  }

  TEST_CASE("enumerate and classify") {
    Result r = run({"enumerate", "--max-n", "7", "--classify"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "total: 78"));
    CHECK(contains(r.out, "shannon: 78"));

    TempDir dir;
    Result e = run({"enumerate", "--max-n", "4", "--export", dir.path.string()});
    CHECK(e.code == cli::kOk);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir.path)) {
      CHECK(entry.path().extension() == ".lat");
      ++files;
    }
    CHECK(files == 5);
  }

  TEST_CASE("json output is stable") {
    TempDir dir;
    std::string lat = dir.file("lld.lat");
    run({"catalog", "lld11", "-o", lat});
    Result first = run({"--json", "check-shannon", lat});
    Result second = run({"--json", "check-shannon", lat});
    CHECK(first.out == second.out);
    std::istringstream lines(first.out);
    std::string line;
    std::size_t parsed = 0;
    while (std::getline(lines, line)) {
      auto j = nlohmann::json::parse(line);
      if (j.contains("verdict")) {
        CHECK(j["verdict"] == "non_shannon");
        CHECK(j["witness_gap"]["normalized_gap"] == "-1/4");
      }
      ++parsed;
    }
    CHECK(parsed > 1);
  }

  TEST_CASE("rays match the library") {
    TempDir dir;
    std::string lat = dir.file("s7.lat");
    run({"catalog", "s7", "-o", lat});
    Lattice l = read_lat_file(lat).lattice;
    for (ConstraintMode mode : {ConstraintMode::full, ConstraintMode::reduced}) {
      Result r = run({"rays", lat, "--mode", to_string(mode)});
      CHECK(r.code == cli::kOk);
      CHECK(r.out == format_ray_report(l, extreme_rays(build_constraints(l, mode))));
    }
    Result oracle = run({"rays", lat, "--oracle"});
    CHECK(oracle.code == cli::kOk);
  }

  TEST_CASE("inequality subcommand") {
    TempDir dir;
    std::string lat = dir.file("lld.lat");
    run({"catalog", "lld11", "-o", lat});
    std::string values = dir.file("rays.txt");
    write(values, "0 2 2 2 2 3 3 3 3 3 4\n");
    Result zy = run({"inequality", "zy", lat, "--values", values});
    CHECK(zy.code == cli::kFinding);
    CHECK(contains(zy.out, "-1/"));
    Result all = run({"inequality", "ingleton", lat, "--values", values, "--all"});
    CHECK(all.code == cli::kFinding);

    std::string m7 = dir.file("m7.lat");
    run({"catalog", "m_n", "7", "-o", m7});
    std::string half = dir.file("half.txt");
    write(half, "0 1 1 1 1 1 2\n");
    CHECK(run({"inequality", "zhang-yeung", m7, "--values", half}).code == cli::kOk);

    std::string wrong = dir.file("wrong.txt");
    write(wrong, "0 1 2\n");
    CHECK(run({"inequality", "zy", m7, "--values", wrong}).code == cli::kInputError);
  }

  TEST_CASE("functional dependencies") {
    TempDir dir;
    std::string lat = dir.file("b3.lat");
    run({"catalog", "boolean_n", "3", "-o", lat});
    std::string deps = dir.file("deps.txt");
    write(deps, "# ab determines c\nd 3 4\n");
    Result r = run({"fd", "close", lat, "--deps", deps});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "cl(ab) = abc"));
    CHECK(contains(r.out, "n 7"));
  }

  TEST_CASE("realize") {
    TempDir dir;
    std::string lat = dir.file("m5.lat");
    run({"catalog", "m_n", "5", "-o", lat});
    Result r = run({"realize", lat, "--ray", "0"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "certificate:"));
    CHECK(run({"realize", lat, "--ray", "999"}).code == cli::kInputError);
  }

  TEST_CASE("input errors") {
    CHECK(run({}).code == cli::kInputError);
    CHECK(run({"bogus"}).code == cli::kInputError);
    CHECK(run({"analyze", "/nonexistent.lat"}).code == cli::kInputError);
    CHECK(run({"catalog", "m_n", "2"}).code == cli::kInputError);
    CHECK(run({"catalog", "unknown"}).code == cli::kInputError);
    TempDir dir;
    std::string lat = dir.file("c.lat");
    run({"catalog", "chain_k", "3", "-o", lat});
    CHECK(run({"rays", lat, "--mode", "sideways"}).code == cli::kInputError);
    CHECK(run({"inequality", "vamos", lat, "--values", lat}).code == cli::kInputError);
    std::string broken = dir.file("broken.lat");
    write(broken, "n 4\nc 0 1\nc 0 2\n");
    Result r = run({"analyze", broken});
    CHECK(r.code == cli::kInputError);
    CHECK(contains(r.err, "NotALattice"));
  }
}

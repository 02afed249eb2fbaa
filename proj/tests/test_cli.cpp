#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

std::string qhom_bin() { return std::string(QHOM_BINARY_DIR) + "/qhom"; }

int run_cli(const std::string& args) {
  std::string cmd = qhom_bin() + " " + args + " > /dev/null 2>&1";
  int st = std::system(cmd.c_str());
  REQUIRE(st != -1);
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

fs::path fresh_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() /
               ("qhom_cli_" + tag + "_" + std::to_string((long)::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("usage and config errors exit with code 2") {
  CHECK(run_cli("") == 2);                         // missing subcommand
  CHECK(run_cli("frobnicate") == 2);               // unknown subcommand
  CHECK(run_cli("verify --n 5 --q 2") == 2);       // unsupported N
  CHECK(run_cli("homology --n 2 --q 1") == 2);     // degenerate specialization
  CHECK(run_cli("homology --n 2 --q 0") == 2);
  CHECK(run_cli("homology --n 2 --q -1") == 2);
  CHECK(run_cli("homology --n 2 --q 2 --twist bogus") == 2);
  CHECK(run_cli("algebra --n 2 --q 2 --which X") == 2);
  CHECK(run_cli("algebra --n 2 --q notanumber --which B") == 2);
}

TEST_CASE("algebra descriptor for the laurent pair") {
  fs::path dir = fresh_dir("algd");
  CHECK(run_cli("algebra --which D --n 2 --q 2 --out " + dir.string()) == 0);
  Json j = Json::parse(slurp(dir / "algebra_D.json"));
  CHECK(j["schemaVersion"] == "1");
  CHECK(j["command"] == "algebra");
  CHECK(j["which"] == "D");
  CHECK(j["presentation"]["generators"] == Json::array({"t", "tinv"}));
  CHECK(j["presentation"]["rules"].size() == 2);
  CHECK(j["presentation"]["certificate"]["allResolved"] == true);
  // one basis word in every Laurent degree
  CHECK(j["presentation"]["gradedDims"]["0"] == 1);
  CHECK(j["presentation"]["gradedDims"]["-3"] == 1);
  CHECK(j["presentation"]["gradedDims"]["5"] == 1);
  fs::remove_all(dir);
}

TEST_CASE("algebra descriptor for the matrix algebra") {
  fs::path dir = fresh_dir("algb");
  CHECK(run_cli("algebra --which B --n 2 --q 2 --dmax 4 --out " + dir.string()) == 0);
  Json j = Json::parse(slurp(dir / "algebra_B.json"));
  CHECK(j["presentation"]["generators"].size() == 4);
  CHECK(j["presentation"]["rules"].size() == 6);
  CHECK(j["presentation"]["certificate"]["overlapCount"] == 4);
  CHECK(j["presentation"]["certificate"]["allResolved"] == true);
  CHECK(j["presentation"]["gradedDims"] == Json::array({1, 4, 10, 20, 35}));
  CHECK(j["detq"] == "-2*u12.u21 + u11.u22");
  CHECK(j["sigmaExponents"]["u11"] == 2);
  CHECK(j["sigmaExponents"]["u22"] == -2);
  fs::remove_all(dir);
}

TEST_CASE("uncertified presentations are refused unless overridden") {
  fs::path dir = fresh_dir("alga3");
  CHECK(run_cli("algebra --which A --n 3 --q 2 --out " + dir.string()) == 2);
  CHECK(run_cli("algebra --which A --n 3 --q 2 --allow-uncertified --out " + dir.string()) == 0);
  Json j = Json::parse(slurp(dir / "algebra_A.json"));
  CHECK(j["presentation"]["certificate"]["allResolved"] == false);
  fs::remove_all(dir);
}

TEST_CASE("homology export in csv and json") {
  fs::path dir = fresh_dir("hom");
  CHECK(run_cli("homology --n 2 --q 2 --dmax 3 --format csv --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "homology_sigma.csv"));
  CHECK_FALSE(fs::exists(dir / "homology_sigma.json"));
  auto lines = lines_of(slurp(dir / "homology_sigma.csv"));
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == "n,d,chainDim,rankOut,rankIn,homDim");
  CHECK(lines[1] == "0,0,1,0,0,1");

  CHECK(run_cli("homology --n 2 --q 2 --dmax 3 --twist none --format both --out " +
                dir.string()) == 0);
  CHECK(fs::exists(dir / "homology_none.csv"));
  Json j = Json::parse(slurp(dir / "homology_none.json"));
  CHECK(j["command"] == "homology");
  CHECK(j["twist"] == "none");
  CHECK(j["table"]["complete"] == true);
  CHECK(j["table"]["rows"].size() >= 4);
  fs::remove_all(dir);
}

TEST_CASE("chain size guard refuses oversized complexes") {
  CHECK(run_cli("homology --n 2 --q 2 --dmax 8 --chain-limit 10") == 2);
}

TEST_CASE("verify runs are byte-deterministic") {
  fs::path a = fresh_dir("ver");
  CHECK(run_cli("verify --n 2 --q 2 --out " + a.string()) == 0);
  std::string first = slurp(a / "verify_report.json");
  CHECK(run_cli("verify --n 2 --q 2 --out " + a.string()) == 0);
  std::string second = slurp(a / "verify_report.json");
  CHECK(first == second);

  Json j = Json::parse(first);
  CHECK(j["pass"] == true);
  REQUIRE(j["sections"].size() == 8);
  for (const auto& s : j["sections"]) CHECK(s["status"] == "pass");
  // timing sidecar exists but is excluded from the determinism contract
  CHECK(fs::exists(a / "verify_timings.json"));
  fs::remove_all(a);
}

TEST_CASE("output directory falls back to the environment") {
  fs::path dir = fresh_dir("envout");
  ::setenv("QHOM_OUTPUT_DIR", dir.string().c_str(), 1);
  CHECK(run_cli("algebra --which D --n 2 --q 2") == 0);
  ::unsetenv("QHOM_OUTPUT_DIR");
  CHECK(fs::exists(dir / "algebra_D.json"));
  fs::remove_all(dir);
}

// End-to-end checks of the deltashell binary.  The path to the binary comes
// from the DELTASHELL_CLI environment variable (set by CTest); the cases are
// skipped when it is absent.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using Catch::Approx;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli_path() {
  const char* p = std::getenv("DELTASHELL_CLI");
  return p ? p : "";
}

int run_cmd(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TmpDir {
  fs::path dir;
  TmpDir() : dir(fs::temp_directory_path() / "deltashell_cli_test") {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~TmpDir() { fs::remove_all(dir); }
  fs::path file(const std::string& name) const { return dir / name; }
};

}  // namespace

TEST_CASE("cli end-to-end") {
  const std::string cli = cli_path();
  if (cli.empty()) SKIP("DELTASHELL_CLI not set");
  TmpDir tmp;

  SECTION("phase-shift with inert shells emits zero deltas") {
    const fs::path cfg = tmp.file("inert.json");
    std::ofstream(cfg) << "{\"radii\":[1.0,2.0],\"alphas\":[0.0,0.0]}";
    const fs::path out = tmp.file("ps.csv");
    REQUIRE(run_cmd(cli + " --out " + out.string() + " phase-shift --config " + cfg.string() +
                    " --ell 0 --kmin 0.1 --kmax 2 --points 12") == 0);
    std::ifstream in(out);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "k,delta,re_S,im_S,abs_det");
    int rows = 0;
    while (std::getline(in, line)) {
      std::stringstream ss(line);
      std::string field;
      std::getline(ss, field, ',');
      std::getline(ss, field, ',');
      REQUIRE(std::stod(field) == 0.0);  // delta column
      ++rows;
    }
    REQUIRE(rows == 12);
  }

  SECTION("threshold subcommand reports the critical coupling") {
    const fs::path out = tmp.file("th.json");
    REQUIRE(run_cmd(cli + " --out " + out.string() + " threshold --R1 1 --R2 2 --theta1 1") == 0);
    const json j = json::parse(slurp(out));
    REQUIRE(j.at("theta2_critical").get<double>() == Approx(-8.0 / 3.0).epsilon(1e-12));
    REQUIRE(j.at("regime_at_critical") == "ExceptionalNondegenerate");
    REQUIRE(j.at("C2").get<double>() == Approx(160.0 / 9.0).epsilon(1e-12));
    REQUIRE(j.at("C2").get<double>() == Approx(17.7778).epsilon(1e-4));
  }

  SECTION("zero-energy on a double shell emits the five constants") {
    const fs::path cfg = tmp.file("ds.json");
    std::ofstream(cfg) << "{\"radii\":[1.0,2.0],\"alphas\":[1.0,0.25]}";
    const fs::path out = tmp.file("ze.json");
    REQUIRE(run_cmd(cli + " --out " + out.string() + " zero-energy --config " + cfg.string()) ==
            0);
    const json j = json::parse(slurp(out));
    REQUIRE(j.at("a").get<double>() == 1.0);
    REQUIRE(j.at("b").get<double>() == Approx(2.0));
    REQUIRE(j.at("c").get<double>() == Approx(-1.0));
    REQUIRE(j.at("d").get<double>() == Approx(11.0 / 4.0));
    REQUIRE(j.at("e").get<double>() == Approx(-10.0 / 4.0));
  }

  SECTION("zero-energy on other shell counts emits the exterior pair") {
    const fs::path cfg = tmp.file("one.json");
    std::ofstream(cfg) << "{\"radii\":[2.0],\"alphas\":[0.75]}";
    const fs::path out = tmp.file("ze1.json");
    REQUIRE(run_cmd(cli + " --out " + out.string() + " zero-energy --config " + cfg.string()) ==
            0);
    const json j = json::parse(slurp(out));
    REQUIRE(j.at("d").get<double>() == Approx(1.0 + 3.0 / 2.0));
    REQUIRE_FALSE(j.contains("a"));
  }

  SECTION("bound-states finds the single-shell root") {
    const fs::path cfg = tmp.file("attr.json");
    std::ofstream(cfg) << "{\"radii\":[1.0],\"alphas\":[-3.0]}";
    const fs::path out = tmp.file("bs.json");
    REQUIRE(run_cmd(cli + " --out " + out.string() + " bound-states --config " + cfg.string() +
                    " --ell 0 --kappa-max 20") == 0);
    const json j = json::parse(slurp(out));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    REQUIRE(j[0].at("kappa").get<double>() == Approx(1.4107196860610394).margin(1e-9));
    REQUIRE(j[0].at("energy").get<double>() < 0.0);
  }

  SECTION("cross-section sweep") {
    const fs::path cfg = tmp.file("cs.json");
    std::ofstream(cfg) << "{\"radii\":[1.0],\"alphas\":[1.0]}";
    const fs::path out = tmp.file("cs.csv");
    REQUIRE(run_cmd(cli + " --out " + out.string() + " cross-section --config " + cfg.string() +
                    " --kmin 0.01 --kmax 0.02 --points 3 --lmax 4") == 0);
    std::ifstream in(out);
    std::string header;
    REQUIRE(std::getline(in, header));
    REQUIRE(header == "k,sigma_total,sigma_l0,sigma_l1,sigma_l2,sigma_l3,sigma_l4");
    std::string row;
    REQUIRE(std::getline(in, row));
    std::stringstream ss(row);
    std::string field;
    std::getline(ss, field, ',');
    REQUIRE(std::stod(field) == 0.01);
    std::getline(ss, field, ',');
    // sigma -> 4 pi a_s^2 = pi at low k for a_s = 1/2
    REQUIRE(std::stod(field) == Approx(3.1416).epsilon(0.02));
  }

  SECTION("oracle-compare emits routes and passes") {
    const fs::path cfg = tmp.file("oc.json");
    std::ofstream(cfg) << "{\"radii\":[1.0,2.0],\"alphas\":[1.0,-0.5]}";
    const fs::path out = tmp.file("oc.json.out");
    REQUIRE(run_cmd(cli + " --out " + out.string() + " oracle-compare --config " + cfg.string() +
                    " --ell 1 --k 2.5 --numerov") == 0);
    const json j = json::parse(slurp(out));
    REQUIRE(j.at("pass").get<bool>());
    REQUIRE(j.at("max_s_deviation").get<double>() <= 1e-8);
    REQUIRE(j.at("numerov").at("deviation_mod_pi").get<double>() <= 1e-4);
  }

  SECTION("exit codes") {
    REQUIRE(run_cmd(cli + " scattering-length --config /nonexistent.json 2>/dev/null") == 2);

    const fs::path bad = tmp.file("bad.json");
    std::ofstream(bad) << "{\"radii\":[2.0,1.0],\"alphas\":[0.0,0.0]}";  // unsorted
    REQUIRE(run_cmd(cli + " scattering-length --config " + bad.string() + " 2>/dev/null") == 2);

    const fs::path one = tmp.file("one2.json");
    std::ofstream(one) << "{\"radii\":[1.0],\"alphas\":[1.0]}";  // N != 2
    REQUIRE(run_cmd(cli + " scattering-length --config " + one.string() + " 2>/dev/null") == 2);

    REQUIRE(run_cmd(cli + " 2>/dev/null") == 2);  // missing subcommand

    // numerical errors exit with status 1: channel cutoff beyond the
    // special-function order cap
    const fs::path ok = tmp.file("ok.json");
    std::ofstream(ok) << "{\"radii\":[1.0],\"alphas\":[1.0]}";
    REQUIRE(run_cmd(cli + " cross-section --config " + ok.string() +
                    " --kmin 1 --kmax 2 --points 2 --lmax 100 2>/dev/null") == 1);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef NCKG_CLI_PATH
#error "NCKG_CLI_PATH must name the nckg executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

Run nckg(const std::string& args, const std::string& env = "") {
  const std::string out = "nckg_cli_test.out", err = "nckg_cli_test.err";
  const std::string cmd = env + " \"" NCKG_CLI_PATH "\" " + args + " > " + out + " 2> " + err;
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

}  // namespace

TEST_CASE("spectrum with theta = 0 leaves every level at E0") {
  const auto r = nckg("spectrum --model rel --n 0..2 --l 0..3 --theta 0");
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["schema_version"] == "1.0");
  CHECK(j["command"] == "spectrum");
  CHECK(j["results"].size() == 12);
  int previous_n = -1, previous_l = -1;
  for (const auto& row : j["results"]) {
    CHECK(row["total"].get<double>() == row["e0"].get<double>());
    const int n = row["n"], l = row["l"];
    CHECK((n > previous_n || (n == previous_n && l > previous_l)));
    previous_n = n;
    previous_l = l;
  }
}

TEST_CASE("nr 3d splitting has five equidistant lines") {
  const auto r = nckg("spectrum --model nr --n 3 --l 2 --ml all --theta 1e-25");
  REQUIRE(r.code == 0);
  const auto rows = r.json()["results"];
  REQUIRE(rows.size() == 5);
  const double spacing = rows[1]["shift_theta1"].get<double>() - rows[0]["shift_theta1"].get<double>();
  for (int i = 1; i < 5; ++i) {
    CHECK(rows[i]["m_l"] == i - 2);
    const double d = rows[i]["shift_theta1"].get<double>() - rows[i - 1]["shift_theta1"].get<double>();
    CHECK(std::abs(d - spacing) <= 1e-12 * std::abs(spacing));
    CHECK(rows[i]["shift_theta2_f5"] == rows[0]["shift_theta2_f5"]);
  }
}

TEST_CASE("1s second-order shifts are null with a warning") {
  const auto r = nckg("spectrum --model rel --n 0 --l 0 --theta 1e-25");
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["results"][0]["shift_theta2_f5"].is_null());
  CHECK(j["results"][0]["shift_theta2_f6"].is_null());
  CHECK(j["results"][0]["second_order_converged"] == false);
  REQUIRE(j["warnings"].size() == 2);
  CHECK(j["warnings"][0].get<std::string>().find("DivergentMoment") != std::string::npos);
}

TEST_CASE("moments command") {
  auto r = nckg("moments --model nr --n 2 --l 1 --k 4");
  REQUIRE(r.code == 0);
  auto row = r.json()["results"][0];
  CHECK(std::abs(row["closed_form_bohr_units"].get<double>() * 24.0 - 1.0) <= 1e-12);
  CHECK(row["rel_discrepancy"].get<double>() <= 1e-10);

  r = nckg("moments --model rel --n 0 --l 2 --k 6");
  REQUIRE(r.code == 0);
  row = r.json()["results"][0];
  CHECK(row["paper_discrepancy"].get<double>() > 1.0);
  CHECK(row["rel_discrepancy"].get<double>() <= 1e-10);
  CHECK(r.json()["warnings"].size() == 1);

  r = nckg("moments --model nr --n 1 --l 0 --k 5");
  REQUIRE(r.code == 0);
  row = r.json()["results"][0];
  CHECK(row["error"] == "DivergentMoment");
  CHECK(row["closed_form"].is_null());
}

TEST_CASE("nu command") {
  auto r = nckg("nu --n 0 --l 1");
  REQUIRE(r.code == 0);
  auto res = r.json()["results"];
  CHECK(res["difference"].get<double>() <= 1e-10);
  CHECK(res["branches"].size() == 4);
  CHECK(res["admissible_count"] == 1);
  CHECK(std::abs(res["selected"]["lambda"].get<double>() - res["selected"]["lambda_printed"].get<double>()) <= 1e-12);

  r = nckg("nu --n 0 --l 0 --alpha 0");
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["energy_rootfind"].get<double>() == 1.0);
  CHECK(r.json()["results"]["energy_closed"].get<double>() == 1.0);

  r = nckg("nu --n 2 --l 1");
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["admissible_count"] == 1);
}

TEST_CASE("bound command") {
  const auto r = nckg("bound --state 2,1,1 --model nr --accuracy-hz 14e3 --order first");
  REQUIRE(r.code == 0);
  const auto res = r.json()["results"];
  CHECK(res["roundtrip_passed"] == true);
  CHECK(res["roundtrip_rel_error"].get<double>() <= 1e-10);
  CHECK(res["paper_reference_value_gev2"].get<double>() == 2.5e-7);
  for (const char* key : {"theta_max_ev2", "theta_max_gev2", "lambda_gev", "dominant_term", "ratio_to_paper"})
    CHECK(res.contains(key));
  CHECK(nckg("bound --state 2,1,0 --order first").code == 3);
}

TEST_CASE("potential command") {
  const auto r = nckg("--format csv potential --theta 0 --rmin 0.1 --rmax 10 --points 5");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "r,a0,ai_abs,angular_momentum,energy_coupling,transverse,contact");
  int rows = 0;
  const double e = std::sqrt(7.2973525693e-3);
  while (std::getline(in, line)) {
    const double rr = std::stod(line.substr(0, line.find(',')));
    const double a0 = std::stod(line.substr(line.find(',') + 1));
    CHECK(std::abs(a0 + e / rr) <= 1e-15 * e / rr);
    ++rows;
  }
  CHECK(rows == 5);
  const auto j = nckg("potential --theta 1e-12 --points 3").json();
  CHECK(j["inputs"]["theta_contraction"].get<double>() == 2.0);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string args = "spectrum --model rel --n 0..3 --l 0..3 --ml all --theta 1e-22";
  CHECK(nckg(args).out == nckg(args).out);
  CHECK(nckg("verify").out == nckg("verify").out);
  CHECK(nckg("--format csv moments --model nr --n 2..5 --l 0..4").out ==
        nckg("--format csv moments --model nr --n 2..5 --l 0..4").out);
}

TEST_CASE("exit codes and machine-readable errors") {
  CHECK(nckg("spectrum --model dirac").code == 2);
  CHECK(nckg("spectrum --n x").code == 2);
  CHECK(nckg("").code == 2);
  CHECK(nckg("--format xml verify").code == 2);
  CHECK(nckg("--format csv nu").code == 2);
  CHECK(nckg("--help").code == 0);
  const auto r = nckg("spectrum --alpha 1.5");
  CHECK(r.code == 3);
  const auto err = nlohmann::json::parse(r.err);
  CHECK(err["error"] == "DomainError");
  CHECK(err.contains("message"));
  CHECK(nckg("verify").code == 0);
}

TEST_CASE("config file and environment fallback") {
  {
    std::ofstream f("nckg_cli_config.json");
    f << R"({"alpha": 0.2})";
  }
  CHECK(nckg("--config nckg_cli_config.json nu --n 0 --l 0").json()["inputs"]["alpha"].get<double>() == 0.2);
  CHECK(nckg("nu --n 0 --l 0", "NCKG_CONFIG=nckg_cli_config.json").json()["inputs"]["alpha"].get<double>() == 0.2);
  std::remove("nckg_cli_config.json");
  const auto r = nckg("--config /nonexistent.json nu");
  CHECK(r.code == 3);
  CHECK(nlohmann::json::parse(r.err)["error"] == "ConfigError");
}

TEST_CASE("--out writes the record to a file") {
  REQUIRE(nckg("--out nckg_cli_out.json nu --n 1 --l 1").code == 0);
  CHECK(nlohmann::json::parse(slurp("nckg_cli_out.json"))["command"] == "nu");
  std::remove("nckg_cli_out.json");
}

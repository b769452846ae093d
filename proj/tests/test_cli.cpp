#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "deform");
  std::ostringstream out, err;
  const int code = deform::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("correction: s-levels use the modified theory") {
  auto r = run({"correction", "--n", "1", "--l", "0", "--xi", "1e-3", "--eta", "1/3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["method"] == "modified");
  CHECK(j["value"].get<double>() == doctest::Approx(5.0 / 3.0 * 1e-6).epsilon(1e-12));
  CHECK(j["units"] == "hartree");
  CHECK_FALSE(j["warnings"].empty());

  r = run({"correction", "--n", "2", "--l", "0", "--beta", "1e-6", "--beta-prime", "0", "--units", "MHz"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["units"] == "MHz");
  CHECK(j["value"].get<double>() > 0);
}

TEST_CASE("correction: outside the modified domain") {
  const auto r = run({"correction", "--beta", "1", "--beta-prime", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("2 beta < beta'") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("correction: ordinal levels") {
  const auto r = run({"correction", "--n", "2", "--l", "1", "--xi", "1e-3", "--eta", "0.5", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "method,n,l,D,beta,beta_prime,xi,eta,value,units");
  CHECK(split(lines[1])[0] == "ordinal");

  CHECK(run({"correction", "--n", "3", "--l", "0", "--beta", "1e-6", "--beta-prime", "0"}).code == 2);
  CHECK(run({"correction", "--n", "2", "--l", "1", "--beta", "1e-6", "--beta-prime", "0", "--method", "modified"})
            .code == 2);
  const auto d4 = run({"correction", "--n", "1", "--l", "0", "--D", "4", "--beta", "1e-6", "--beta-prime", "0"});
  REQUIRE(d4.code == 0);
  CHECK(nlohmann::json::parse(d4.out)["as_printed"] == true);
}

TEST_CASE("correction: usage errors") {
  CHECK(run({"correction", "--xi", "1e-3"}).code == 1);
  CHECK(run({"correction", "--xi", "1e-3", "--eta", "0.5", "--beta", "1", "--beta-prime", "0"}).code == 1);
  CHECK(run({"correction", "--xi", "abc", "--eta", "0.5"}).code == 1);
  CHECK(run({"correction", "--n", "x", "--xi", "1e-3", "--eta", "0.5"}).code == 1);
  CHECK(run({"correction", "--bogus"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"correction", "--n", "1", "--l", "1", "--xi", "1e-3", "--eta", "0.5"}).code == 2);
  CHECK(run({"correction", "--xi", "1e-3", "--eta", "0.2"}).code == 2);
  CHECK(run({"correction", "--beta", "-1", "--beta-prime", "0"}).code == 2);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("figure: deterministic and well-formed") {
  const auto a = run({"figure"});
  const auto b = run({"figure"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto lines = data_lines(a.out);
  REQUIRE(lines.size() == 1 + 2 * 101);
  CHECK(lines[0] == "xi,eta,delta_e_over_e0");
  CHECK(split(lines[1]) == std::vector<std::string>{"0", "0.3333333333333333", "0"});

  const auto r2 = run({"figure", "--which", "2s", "--eta-list", "1,0.5", "--xi-steps", "3"});
  REQUIRE(r2.code == 0);
  const auto l2 = data_lines(r2.out);
  REQUIRE(l2.size() == 7);
  CHECK(split(l2[1])[1] == "0.5");
  CHECK(split(l2[6])[1] == "1");

  CHECK(run({"figure", "--eta-list", ""}).code == 1);
  CHECK(run({"figure", "--which", "3s"}).code == 1);
  CHECK(run({"figure", "--xi-steps", "1"}).code == 1);
  CHECK(run({"figure", "--eta-list", "0.1"}).code == 2);
}

TEST_CASE("figure: file output") {
  const auto dir = std::filesystem::temp_directory_path() / "deform_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "fig.csv";
  REQUIRE(run({"figure", "--out", path.string()}).code == 0);
  CHECK(slurp(path) == run({"figure"}).out);
  CHECK_FALSE(std::filesystem::exists(dir / "fig.csv.tmp"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("bound: defaults") {
  const auto r = run({"bound"});
  REQUIRE(r.code == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 102);
  CHECK(lines[0] == "eta,xi,dx_min_m,error");
  const auto first = split(lines[1]);
  const auto last = split(lines.back());
  CHECK(std::stod(first[2]) == doctest::Approx(1.64e-16).epsilon(0.01));
  CHECK(std::stod(last[2]) == doctest::Approx(2.86e-17).epsilon(0.01));
  CHECK(r.out.find("# lamb_exp_MHz=8172.837") != std::string::npos);
  CHECK(r.out.find("1.13e-16") != std::string::npos);

  const auto same = run({"bound", "--lamb-exp", "8172.837", "--lamb-theor", "8172.731"});
  CHECK(same.out == r.out);
}

TEST_CASE("bound: grids and data errors") {
  CHECK(run({"bound", "--eta-list", "1,0.5"}).code == 1);
  CHECK(run({"bound", "--eta-min", "1", "--eta-max", "0.5"}).code == 1);
  CHECK(run({"bound", "--lamb-exp", "8172.731"}).code == 2);
  CHECK(run({"bound", "--lamb-exp", "8000"}).code == 2);

  const auto partial = run({"bound", "--eta-list", "0.2,0.5"});
  REQUIRE(partial.code == 0);
  const auto lines = data_lines(partial.out);
  REQUIRE(lines.size() == 3);
  CHECK(split(lines[1])[1].empty());
  CHECK_FALSE(split(lines[1])[3].empty());
  CHECK(split(lines[2])[3].empty());
}

TEST_CASE("bound: environment fallback and flag precedence") {
  ::setenv("DEFORM_LAMB_EXP_MHZ", "8172.943", 1);
  const auto env = run({"bound", "--eta-list", "1/3"});
  const auto flag = run({"bound", "--eta-list", "1/3", "--lamb-exp", "8172.837"});
  ::unsetenv("DEFORM_LAMB_EXP_MHZ");
  REQUIRE(env.code == 0);
  REQUIRE(flag.code == 0);
  CHECK(flag.out == run({"bound", "--eta-list", "1/3"}).out);
  // Twice the discrepancy, so xi grows by sqrt 2.
  const double xi_env = std::stod(split(data_lines(env.out)[1])[1]);
  const double xi_flag = std::stod(split(data_lines(flag.out)[1])[1]);
  CHECK(xi_env / xi_flag == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("verify") {
  const auto dir = std::filesystem::temp_directory_path() / "deform_cli_verify";
  std::filesystem::create_directories(dir);
  const auto path = dir / "report.json";

  auto r = run({"verify", "--out", path.string()});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["overall_pass"] == true);
  CHECK(j["cases"].size() > 20);

  CHECK(run({"verify", "--rel-tol", "1e-6"}).code == 0);
  CHECK(run({"verify", "--rel-tol", "1e-16"}).code == 2);

  std::filesystem::remove(path);
  r = run({"verify", "--inject-printed-prefactor", "--out", path.string()});
  CHECK(r.code == 3);
  REQUIRE(std::filesystem::exists(path));
  j = nlohmann::json::parse(slurp(path));
  CHECK(j["overall_pass"] == false);
  std::filesystem::remove_all(dir);
}

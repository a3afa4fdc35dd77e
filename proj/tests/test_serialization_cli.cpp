#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fstefan/errors.hpp"
#include "fstefan/serialization.hpp"
#include "json.hpp"
#include "oracle_values.hpp"

using namespace fstefan;
using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "frac-stefan");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    result.push_back(line);
  }
  return result;
}

}  // namespace

TEST_CASE("shortest round-trip doubles") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.9562976585438846, 5e-324}) {
    const std::string s = io::format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(1.0) == "1");
}

TEST_CASE("CSV writer") {
  io::CsvWriter csv({"name", "value"});
  csv.row({std::string("plain"), 1.5});
  csv.row({std::string("with,comma"), 2LL});
  csv.row({std::string("say \"hi\""), -0.25});
  CHECK(csv.str() == "name,value\nplain,1.5\n\"with,comma\",2\n\"say \"\"hi\"\"\",-0.25\n");
  CHECK_THROWS_AS(csv.row({1.0}), ValidationError);
  CHECK_THROWS_AS(io::CsvWriter({}), ValidationError);
}

TEST_CASE("solution JSON round trip reproduces u bit for bit") {
  const auto st1 = stefan::solve_st1({FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0});
  const auto st2 = stefan::solve_st2({FractionalOrder(0.7), 1.3, 2.0, -1.0, 0.6});
  for (const auto& sol : {st1, st2}) {
    const std::string text = io::to_json(sol).dump();
    const auto back = io::solution_from_json(json::parse(text));
    CHECK(back.kind == sol.kind);
    CHECK(back.alpha == sol.alpha);
    for (int m = 1; m <= 5; ++m) {
      const double t = 0.4 * m;
      for (int i = 0; i <= 10; ++i) {
        const double x = stefan::front(sol, t) * i / 10.0;
        CHECK(stefan::evaluate_u(back, x, t) == stefan::evaluate_u(sol, x, t));
      }
    }
  }
  json broken = io::to_json(st1);
  broken.erase("xi");
  CHECK_THROWS_AS(io::solution_from_json(broken), ValidationError);
}

TEST_CASE("solve-st1 JSON") {
  const auto r = invoke({"solve-st1", "--alpha", "0.5", "--lambda", "1", "--B", "1", "--C", "0", "--k", "1",
                         "--format", "json"});
  REQUIRE(r.status == 0);
  CHECK(r.err.empty());
  const json j = json::parse(r.out);
  for (const char* key : {"alpha", "lambda", "a", "b", "xi", "rhs", "solver_residual"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["xi"].get<double>() == doctest::Approx(oracle::st1_xi).epsilon(1e-12));
}

TEST_CASE("solve-st2 CSV profile") {
  const auto r = invoke({"solve-st2", "--alpha", "0.5", "--q", "1", "--C", "0", "--format", "csv", "--nx", "11",
                         "--nt", "5"});
  REQUIRE(r.status == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + 11 * 5);
  CHECK(rows[0] == "t,x,s,u,in_domain");
  CHECK(rows[1].rfind("0.1,0,", 0) == 0);
}

TEST_CASE("equivalence and sweep commands") {
  const auto e = invoke({"equivalence", "--alpha", "0.5", "--lambda", "1", "--q", "1", "--C", "0", "--k", "1"});
  REQUIRE(e.status == 0);
  const json j = json::parse(e.out);
  CHECK(j["xi_gap"].get<double>() <= 1e-10);
  CHECK(j["equivalent"].get<bool>());

  const auto s = invoke({"sweep-alpha", "--alphas", "0.5,0.7,0.9,0.99", "--B", "1", "--C", "0", "--k", "1",
                         "--lambda", "1"});
  REQUIRE(s.status == 0);
  const auto rows = lines(s.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "alpha,xi,xi_classical,abs_gap");
  double prev = INFINITY;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double gap = std::stod(rows[i].substr(rows[i].rfind(',') + 1));
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(invoke({"sweep-alpha", "--alphas", "0.5", "--C", "0"}).status == 2);
}

TEST_CASE("evaluation, residual and profile commands") {
  const auto w = invoke({"eval-wright", "--z", "-2,-30", "--rho", "-0.25", "--beta", "1"});
  REQUIRE(w.status == 0);
  const json j = json::parse(w.out);
  CHECK(j["points"][0]["value"].get<double>() == doctest::Approx(oracle::wright_m2_m025_1).epsilon(1e-14));
  CHECK(j["points"][1]["method"] == "integral");

  const auto m = invoke({"eval-mainardi", "--nu", "0.25", "--x", "1", "--format", "csv"});
  REQUIRE(m.status == 0);
  CHECK(lines(m.out).size() == 2);

  const auto res = invoke({"residual", "--problem", "st2", "--alpha", "0.5", "--q", "1", "--C", "0", "--nx", "16",
                           "--nt", "16"});
  REQUIRE(res.status == 0);
  CHECK(json::parse(res.out)["stefan_residual"].get<double>() <= 1e-10);

  const auto g = invoke({"greens-profile", "--kind", "convolution", "--alpha", "0.5", "--n", "5"});
  REQUIRE(g.status == 0);
  const auto rows = lines(g.out);
  CHECK(rows[0] == "x,value,closed_form,abs_diff");
  CHECK(rows.size() == 6);
  CHECK(invoke({"greens-profile", "--kind", "nope", "--alpha", "0.5"}).status == 2);
}

TEST_CASE("exit statuses and error objects") {
  SUBCASE("validation") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"solve-st1", "--alpha", "0.5", "--B", "0", "--C", "0"},
             {"solve-st2", "--alpha", "0.5", "--q", "-1", "--C", "0"},
             {"solve-st1", "--alpha", "1", "--B", "1", "--C", "0"},
             {"solve-st1", "--alpha", "0", "--B", "1", "--C", "0"},
             {"solve-st1", "--B", "1", "--C", "0"},
             {"solve-st1", "--alpha", "abc", "--B", "1", "--C", "0"},
             {"frobnicate"},
             {},
         }) {
      const auto r = invoke(args);
      CHECK(r.status == 2);
      CHECK(r.out.empty());
      const json e = json::parse(r.err);
      CHECK(e["error"]["status"] == 2);
      CHECK(e["error"]["type"] == "validation");
    }
  }
  SUBCASE("numerical failure") {
    const auto r = invoke({"solve-st1", "--alpha", "0.5", "--B", "1e6", "--C", "0", "--k", "1e6"});
    CHECK(r.status == 3);
    CHECK(json::parse(r.err)["error"]["type"] == "numerical");
  }
  SUBCASE("help") {
    const auto r = invoke({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("sweep-alpha") != std::string::npos);
  }
}

TEST_CASE("output files and tolerance overrides") {
  const auto dir = std::filesystem::temp_directory_path() / "fstefan_cli_test";
  std::filesystem::create_directories(dir);
  const auto good = dir / "good.json";
  const auto bad = dir / "bad.json";
  std::filesystem::remove(good);
  std::filesystem::remove(bad);

  CHECK(invoke({"--output", good.string(), "solve-st1", "--alpha", "0.5", "--B", "1", "--C", "0"}).status == 0);
  CHECK(std::filesystem::exists(good));
  CHECK(invoke({"--output", bad.string(), "solve-st1", "--alpha", "0.5", "--B", "1", "--C", "2"}).status == 2);
  CHECK(!std::filesystem::exists(bad));

  ::setenv("FRAC_STEFAN_TOL", "0", 1);
  CHECK(invoke({"solve-st1", "--alpha", "0.5", "--B", "1", "--C", "0"}).status == 2);
  ::setenv("FRAC_STEFAN_TOL", "1e-12", 1);
  CHECK(invoke({"solve-st1", "--alpha", "0.5", "--B", "1", "--C", "0"}).status == 0);
  ::unsetenv("FRAC_STEFAN_TOL");
  CHECK(invoke({"--tol-rel", "2", "solve-st1", "--alpha", "0.5", "--B", "1", "--C", "0"}).status == 2);
  CHECK(invoke({"--max-terms", "3", "eval-wright", "--z", "-2", "--rho", "-0.25", "--beta", "1"}).status == 3);
  std::filesystem::remove_all(dir);
}

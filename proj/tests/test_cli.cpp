#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polylat/cli/app.hpp"
#include "polylat/cli/studies.hpp"
#include "polylat/cli/weight_spec.hpp"
#include "polylat/errors.hpp"

using namespace polylat;
using namespace polylat::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "polylat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("polylat_test_" + name)).string();
}

std::vector<std::string> csv_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("weight spec examples") {
  const auto poly = parse_weight_spec("poly:2", 3);
  REQUIRE(poly.size() == 3);
  CHECK(poly[0] == 1.0);
  CHECK(poly[1] == 0.25);
  CHECK(poly[2] == doctest::Approx(0.1111111111111111).epsilon(1e-15));

  const auto geom = parse_weight_spec("geom:0.95", 2);
  CHECK(geom[0] == 0.95);
  CHECK(geom[1] == doctest::Approx(0.9025).epsilon(1e-15));

  CHECK_THROWS_AS(parse_weight_spec("list:1,0.5", 3), ParseError);
  const auto list = parse_weight_spec("list:1,0.5", 2);
  CHECK(list[1] == 0.5);
}

TEST_CASE("weight spec errors carry positions") {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_weight_spec(text, 2);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(position_of("poly:") > 0);
  CHECK(position_of("cubic:2") == 1);
  CHECK(position_of("poly:-1") == 6);
  CHECK(position_of("geom:1.5") == 6);
  CHECK(position_of("list:1,,2") > 0);
  CHECK(position_of("list:1,-0.5") > 0);
  CHECK(position_of("poly:2x") == 7);
  CHECK(position_of("poly:2") == 0);
}

TEST_CASE("convergence rows match the published error at m = 6") {
  StudyParams p;
  p.ms = {6};
  p.alphas = {1.5, 3.0};
  p.weights = parse_weight_spec("poly:2");
  p.eval_weight_power = true;
  const auto t = run_convergence_study(p);
  REQUIRE(t.rows.size() == 2);
  CHECK(std::get<double>(t.rows[0][3]) == doctest::Approx(3.90712472682382e-2).epsilon(1e-3));
  CHECK(std::get<double>(t.rows[1][3]) == doctest::Approx(1.28697975158607e-5).epsilon(1e-3));

  p.alphas = {1.5};
  p.weights = parse_weight_spec("geom:0.95");
  CHECK(std::get<double>(run_convergence_study(p).rows[0][3]) == doctest::Approx(7243051451.11146).epsilon(1e-3));
}

TEST_CASE("exit codes") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({}).code == kUsageError);
  CHECK(invoke({"frobnicate"}).code == kUsageError);
  CHECK(invoke({"construct", "--m", "4", "--d", "3"}).code == kSuccess);
  CHECK(invoke({"construct", "--m", "4"}).code == kUsageError);
  CHECK(invoke({"construct", "--m", "4", "--d", "3", "--seed", "7"}).code == kUsageError);
  CHECK(invoke({"construct", "--m", "4", "--d", "3", "--weights", "list:1"}).code == kUsageError);
  CHECK(invoke({"construct", "--m", "4", "--d", "3", "--b", "4"}).code == kUsageError);
  CHECK(invoke({"construct", "--m", "40", "--d", "3"}).code == kResourceRefusal);
  CHECK(invoke({"construct", "--m", "4", "--d", "3", "--method", "cbc"}).code == kUsageError);
  CHECK(invoke({"convergence", "--m-range", "5-6"}).code == kUsageError);
  CHECK(invoke({"convergence", "--m", "4", "--b", "3"}).code == kUsageError);
  CHECK(invoke({"convergence", "--m", "4", "--d", "3", "--alpha", "1"}).code == kUsageError);
  CHECK(invoke({"check", "--only", "no-such-check"}).code == kUsageError);
  CHECK(invoke({"check", "--only", "index-bijection"}).code == kSuccess);
}

TEST_CASE("corrupted vector file is a parse error") {
  const auto path = temp_path("corrupt.txt");
  {
    std::ofstream f(path);
    f << "2 4 3\n1\nzebra\n7\n";
  }
  const auto r = invoke({"error", "--vector", path, "--alpha", "2"});
  CHECK(r.code == kUsageError);
  CHECK(r.err.find("parse error") != std::string::npos);
  CHECK(invoke({"error", "--vector", temp_path("missing.txt")}).code == kUsageError);
  std::remove(path.c_str());
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"compare", "--m-range", "4:6", "--d", "5", "--alpha", "1.5", "--alpha", "2"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(csv_lines(a.out).front() == "m,N,alpha,dbd_error,cbc_error");
  CHECK(csv_lines(a.out).size() == 7);
}

TEST_CASE("construct then error reproduces the convergence row") {
  const auto path = temp_path("roundtrip.txt");
  for (const std::string weights : {"poly:2", "geom:0.7"}) {
    const auto c = invoke({"construct", "--m", "7", "--d", "12", "--weights", weights, "--out", path});
    REQUIRE(c.code == 0);
    const std::vector<std::string> eval{"--alpha", "1.5", "--alpha", "2", "--weights", weights, "--eval-weight-power"};
    std::vector<std::string> err_args{"error", "--vector", path};
    err_args.insert(err_args.end(), eval.begin(), eval.end());
    std::vector<std::string> conv_args{"convergence", "--m", "7", "--d", "12"};
    conv_args.insert(conv_args.end(), eval.begin(), eval.end());
    const auto e = invoke(err_args);
    const auto v = invoke(conv_args);
    CHECK(e.code == 0);
    CHECK(v.code == 0);
    CHECK(e.out == v.out);
  }
  std::remove(path.c_str());
}

TEST_CASE("vector file comments record the construction") {
  const auto r = invoke({"construct", "--m", "5", "--d", "2", "--weights", "geom:0.5"});
  CHECK(r.out.find("# weights=geom:0.5") != std::string::npos);
  CHECK(r.out.find("# method=cbc-dbd") != std::string::npos);
  const auto c = invoke({"construct", "--m", "5", "--d", "2", "--method", "cbc", "--alpha", "2", "--modulus", "primitive"});
  CHECK(c.code == 0);
  CHECK(c.out.find("# modulus=37") != std::string::npos);
}

TEST_CASE("json mirrors csv") {
  const auto csv = invoke({"convergence", "--m", "5", "--d", "4"});
  const auto json = invoke({"convergence", "--m", "5", "--d", "4", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.front() == '[');
  CHECK(json.out.find("\"m\": 5") < json.out.find("\"error\""));
  CHECK(csv_lines(csv.out).size() == 2);
}

TEST_CASE("points subcommand") {
  const auto path = temp_path("points.txt");
  {
    std::ofstream f(path);
    f << "2 2 2\n1\n3\n";
  }
  const auto r = invoke({"points", "--vector", path});
  CHECK(r.code == 0);
  CHECK(r.out == "n,x1,x2\n0,0/4,0/4\n1,1/4,3/4\n2,2/4,2/4\n3,3/4,1/4\n");
  std::remove(path.c_str());
}

TEST_CASE("bench rows") {
  const auto r = invoke({"bench", "--m", "8", "--d", "10", "--d", "20"});
  CHECK(r.code == 0);
  const auto lines = csv_lines(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "m,d,seconds");
  CHECK(lines[1].rfind("8,10,", 0) == 0);
}

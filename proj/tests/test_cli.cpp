#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hilbrad::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kDataDir = HILBRAD_DATA_DIR;

}  // namespace

TEST_CASE("cli: doublesat and section") {
  auto r = run({"doublesat", "--ideal", kDataDir + "/H5_I1.txt"});
  CHECK(r.code == 0);
  CHECK(r.out == "(x0, x1^3, x1^2*x2^2, x1^2*x2*x3)\n");
  r = run({"section", "--ideal", kDataDir + "/H5_I3.txt"});
  CHECK(r.code == 0);
  CHECK(r.out == "(x0, x1^3, x1^2*x2^2, x1^2*x2*x3)\nlast_variable_nonzerodivisor=true\n");
}

TEST_CASE("cli: hp, hf, gotzmann") {
  auto r = run({"hp", "--ideal", kDataDir + "/H5_I2.txt"});
  CHECK(r.code == 0);
  CHECK(r.out == "2*C(t+3,3)-C(t+1,1)\n1/3*t^3 + 2*t^2 + 8/3*t + 1\n");
  r = run({"hf", "--n", "2", "--gens", "(x0^2, x0*x1)", "--max-degree", "2"});
  CHECK(r.out == "HF(0)=1\nHF(1)=3\nHF(2)=4\n");
  r = run({"--format", "json", "gotzmann", "--poly", "twoplanes:5"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["gotzmann_number"] == 6);
  r = run({"gotzmann", "--coeffs", "1,1/2"});
  CHECK(r.code == 1);
}

TEST_CASE("cli: lex and enum") {
  auto r = run({"lex", "--n", "4", "--poly", "2*C(t+2,2)-C(t,0)", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out == "ring n=4\nx0\nx1^3\nx1^2*x2^2\nx1^2*x2*x3\n\n");
  r = run({"--format", "json", "enum", "--n", "4", "--poly", "twoplanes:4"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ideals"].size() == 3);
  CHECK(j["ideals"][2] == nlohmann::json{"x0", "x1^3", "x1^2*x2^2", "x1^2*x2*x3"});
  CHECK(j.contains("nodes"));
  CHECK(j.contains("seconds"));
  r = run({"enum", "--n", "5", "--poly", "twoplanes:5", "--budget", "10"});
  CHECK(r.code == 1);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("cli: threads flag does not change enum output") {
  auto a = run({"--threads", "1", "enum", "--n", "5", "--poly", "twoplanes:5"});
  auto b = run({"enum", "--n", "5", "--poly", "twoplanes:5", "--threads", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli: checks and lexcomp") {
  auto r = run({"borelcheck", "--n", "2", "--gens", "(x1)"});
  CHECK(r.out == "strongly_stable=false\n");
  r = run({"satcheck", "--n", "2", "--gens", "(x1)"});
  CHECK(r.err.find("warning") != std::string::npos);
  r = run({"lexcomp", "--ideal", kDataDir + "/H5_I8.txt", "--poly", "twoplanes:5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("in_lex_component=false\n", 0) == 0);
  CHECK(r.out.find("unvalidated") == std::string::npos);
  r = run({"lexcomp", "--n", "6", "--gens", "(x0, x1)", "--coeffs", "1,1"});
  CHECK(r.code == 1);
}

TEST_CASE("cli: graphs") {
  auto r = run({"graph", "radius", "builtin:H5"});
  CHECK(r.code == 0);
  CHECK(r.out == "radius=2, centers=[H5_2,H5_3,H5_4,H5_5]\n");
  CHECK(r.err.find("conjecturally complete") != std::string::npos);
  r = run({"graph", "distance", "builtin:H4", "--from", "H4_1", "--to", "H4_lex"});
  CHECK(r.out == "distance=2\n");
  r = run({"--format", "json", "graph", "centers", "builtin:H4"});
  CHECK(nlohmann::json::parse(r.out)["centers"] == nlohmann::json{"H4_2"});
  r = run({"graph", "diameter", "builtin:H4"});
  CHECK(r.code == 2);
}

TEST_CASE("cli: error codes and positions") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"--format", "xml", "hp"}).code == 2);
  auto r = run({"hp", "--n", "3", "--gens", "(x0, x1^)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("column") != std::string::npos);
  r = run({"lex", "--n", "4", "--poly", "2*C(t+2,2)-Q"});
  CHECK(r.code == 1);
  CHECK(r.err.find("column") != std::string::npos);
  r = run({"hp", "--ideal", "/nonexistent/file.txt"});
  CHECK(r.code == 1);
}

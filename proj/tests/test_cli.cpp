#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "newform_weyl/cli/cli.hpp"
#include "newform_weyl/exactnum/serialization.hpp"
#include "newform_weyl/spectral/coefficients.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "newform-weyl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = nw::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::vector<std::string> csv_first_column(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) out.push_back(line.substr(0, line.find(',')));
  return out;
}

}  // namespace

TEST_CASE("coeffs at level one") {
  const auto r = run({"coeffs", "1", "--kind", "newform"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "c1 = 1/12"));
  CHECK(contains(r.out, "c2 = (1/pi)*(-2)"));
  CHECK(contains(r.out, "c3 = (1/pi)*(2 + log(pi) - log(2))"));
}

TEST_CASE("coeffs at a cocompact-type level") {
  const auto r = run({"coeffs", "12", "--kind", "newform"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "c1 = 1/6"));
  CHECK(contains(r.out, "c2 = 0"));
  CHECK(contains(r.out, "c3 = 0"));
  CHECK(contains(r.out, "cocompact type: yes"));
}

TEST_CASE("coeffs JSON round-trips through the canonical serialization") {
  const auto r = run({"coeffs", "9", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nw::ordered_json::parse(r.out);
  CHECK(j["c3"]["logs"]["3"] == "-3");
  CHECK(j["c1"] == "5/12");
  const auto expected = nw::spectral::newform_coeffs(9);
  CHECK(nw::symbolic_from_json(j["c2"]) == expected.c2);
  CHECK(nw::symbolic_from_json(j["c3"]) == expected.c3);
  CHECK(nw::Rational::parse(j["c1"].get<std::string>()) == expected.c1);
  CHECK(j["approx"]["precision"] == 12);
}

TEST_CASE("coeffs CSV keeps exact columns exact") {
  const auto r = run({"coeffs", "9", "--kind", "both", "--format", "csv", "--precision", "6"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "level,kind,c1,c2,c3,c1_approx,c2_approx,c3_approx,cocompact,reason\n"));
  CHECK(contains(r.out, "9,full,1,(1/pi)*(-8),"));
  CHECK(contains(r.out, "9,newform,5/12,(1/pi)*(-2),(1/pi)*(2 + log(pi) - log(2) - 3*log(3)),0.416667,-0.63662,"));
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"coeffs", "360", "--kind", "both", "--format", "json"},
        std::vector<std::string>{"scan", "--max", "200", "--format", "csv"},
        std::vector<std::string>{"weyl", "30", "--lambda", "12345.5"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("scan") {
  const auto only = run({"scan", "--max", "16", "--only-cocompact", "--format", "csv"});
  CHECK(only.code == 0);
  CHECK(csv_first_column(only.out) == std::vector<std::string>{"6", "10", "12", "14", "15"});

  const auto one = run({"scan", "--max", "1", "--format", "csv"});
  CHECK(one.out == "level,t,n,cocompact,reason,c2_is_zero,L_is_zero\n1,1,1,false,not-cocompact,false,true\n");

  const auto four = run({"scan", "--max", "4", "--only-cocompact", "--format", "csv"});
  CHECK(csv_first_column(four.out).empty());

  const auto oracle = run({"scan", "--max", "300", "--format", "csv", "--method", "oracle"});
  const auto theorem = run({"scan", "--max", "300", "--format", "csv"});
  CHECK(oracle.out == theorem.out);

  const auto json = nw::ordered_json::parse(run({"scan", "--max", "16", "--only-cocompact", "--format", "json"}).out);
  CHECK(json.size() == 5);
  CHECK(json[2]["reason"] == "n>1-and-4||M-rule");

  const auto too_big = run({"scan", "--max", "1000001"});
  CHECK(too_big.code == 2);
  CHECK(contains(too_big.err, "at most"));
}

TEST_CASE("weyl") {
  const auto r = run({"weyl", "1", "--lambda", "10000"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "833.333"));
  CHECK(contains(r.out, "-293.17"));
  CHECK(contains(r.out, "78.036"));
  CHECK(contains(r.out, "error scale"));

  const auto cocompact = run({"weyl", "12", "--lambda", "100", "--kind", "newform"});
  CHECK(contains(cocompact.out, "16.6666666667"));
  CHECK(contains(cocompact.out, "only the linear term"));

  CHECK(run({"weyl", "1", "--lambda", "1"}).code == 2);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--suite", "closed-forms", "--max", "500"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS closed-forms"));
  CHECK(contains(r.out, "note: c2 table"));
  CHECK(run({"verify", "--suite", "group"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"coeffs"}).code == 2);
  CHECK(run({"coeffs", "0"}).code == 2);
  CHECK(run({"coeffs", "5", "--kind", "old"}).code == 2);
  CHECK(run({"coeffs", "5", "--precision", "51"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

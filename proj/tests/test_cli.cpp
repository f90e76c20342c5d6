#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qmoon/classical_forms.hpp"
#include "qmoon/exponents.hpp"
#include "qmoon/series_json.hpp"

using namespace qmoon;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QMOON_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("expand j") {
  const Result r = invoke({"expand", "j", "--order", "2", "--json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["coeffs"]["1"] == "196884");
  CHECK(j["coeffs"]["2"] == "21493760");
  CHECK(qseries_from_json(j) == forms::j_invariant(2));

  const Result t = invoke({"expand", "j", "--order", "0"});
  CHECK(t.code == 0);
  CHECK(t.out == "q^-1 + 744 + O(q^1)\n");
}

TEST_CASE("default order comes from the environment") {
  setenv("QMOON_DEFAULT_ORDER", "3", 1);
  const Result r = invoke({"expand", "delta", "--json"});
  CHECK(Json::parse(r.out)["trunc"] == 3);
  setenv("QMOON_DEFAULT_ORDER", "three", 1);
  CHECK(invoke({"expand", "delta"}).code == 2);
  unsetenv("QMOON_DEFAULT_ORDER");
}

TEST_CASE("verify exit codes") {
  CHECK(invoke({"verify", "triple", "--order", "30"}).code == 0);
  const Result bad = invoke({"verify", "quintuple_w2", "--order", "10", "--json"});
  CHECK(bad.code == 3);
  const Json j = Json::parse(bad.out);
  CHECK(j["passed"] == false);
  CHECK(invoke({"verify", "no_such_identity"}).code == 4);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"expand", "j", "--frobnicate"}).code == 2);
  CHECK(invoke({"expand", "j", "--order", "-3"}).code == 2);
  CHECK(invoke({"moonshine"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("data errors") {
  CHECK(invoke({"factor", "--input", data("missing.json")}).code == 4);
  CHECK(invoke({"factor", "--input", data("bad_series.json"), "--order", "2"}).code == 4);
  CHECK(invoke({"expand", "theta3", "--nome", "full"}).code == 4);
  CHECK(invoke({"maass", "check", "--file", data("siegel_bad.json")}).code == 3);
}

TEST_CASE("factor round trip") {
  const std::string path = "cli_test_delta.json";
  {
    std::ofstream f(path);
    f << to_json(forms::delta(12)).dump();
  }
  const Result r = invoke({"factor", "--input", path, "--order", "10", "--json"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["h"] == "-1");
  for (const auto& e : j["exponents"]) CHECK(e == "24");
}

TEST_CASE("lift, hurwitz and zero multiplicities") {
  const Result l = invoke({"lift", "--name", "f_4", "--order", "5", "--json"});
  CHECK(l.code == 0);
  const Json j = Json::parse(l.out);
  CHECK(j["h"] == "0");
  CHECK(first_mismatch(qseries_from_json(j["series"]), forms::eisenstein(4, 5)) == std::nullopt);
  const Result h = invoke({"hurwitz", "--max", "12", "--json"});
  CHECK(Json::parse(h.out)["12"] == "4/3");
  const Result z = invoke({"zeromult", "--name", "f_j", "--disc", "-3"});
  CHECK(z.out == "3\n");
}

TEST_CASE("moonshine subcommands") {
  CHECK(invoke({"moonshine", "denom", "--cap", "3"}).code == 0);
  CHECK(invoke({"moonshine", "replication", "--cap", "3", "--json"}).code == 0);
}

TEST_CASE("vector systems") {
  const Result p = invoke({"vsys", "psi", "--file", data("s1.json"), "--order", "4", "--json"});
  CHECK(p.code == 0);
  const Json j = Json::parse(p.out);
  CHECK(j["m"] == "2");
  CHECK(j["psi"]["prefactor"] == "1/12");
  CHECK(invoke({"vsys", "check", "--file", data("s1.json"), "--shift", "1"}).code == 0);
  CHECK(invoke({"vsys", "check", "--sample", "s2", "--shift", "1,-1"}).code == 0);
  CHECK(invoke({"vsys", "check", "--sample", "s1", "--shift", "1/3"}).code == 4);
  CHECK(invoke({"vsys", "psi"}).code == 2);
}

TEST_CASE("maass subcommands") {
  const Result l = invoke({"maass", "lift", "--file", data("jacobi_k10.json"), "--max-m", "3", "--json"});
  CHECK(l.code == 0);
  const std::string path = "cli_test_siegel.json";
  {
    std::ofstream f(path);
    f << l.out;
  }
  CHECK(invoke({"maass", "check", "--file", path}).code == 0);
  std::remove(path.c_str());
}

TEST_CASE("multiplicity subcommands") {
  const Result t = invoke({"mult", "table", "--algebra", "e10", "--min-norm", "-40", "--json"});
  CHECK(t.code == 0);
  CHECK(Json::parse(t.out)["rows"].size() == 22);
  const Result r = invoke({"mult", "rademacher", "--n", "8", "--terms", "6", "--json"});
  CHECK(Json::parse(r.out)["exact"] == "143184000");
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"expand", "E4", "--order", "20", "--json"},
           {"verify", "theta_products", "--order", "8", "--json"},
           {"vsys", "psi", "--sample", "s2", "--order", "3"},
           {"mult", "table", "--algebra", "fake_monster", "--min-norm", "-10"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
}

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ahecke/cli.hpp"
#include "ahecke/json_io.hpp"

using ahecke::io::json;

namespace {

struct Run {
  int code;
  std::string text;
  json doc() const { return json::parse(text); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ahecke");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  int code = ahecke::cli::run(int(argv.size()), argv.data(), out);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  Run info = run({"datum", "info", "--datum", "data/a1_adjoint.json"});
  REQUIRE(info.code == 0);
  CHECK(info.doc()["order_W0"] == 2);
  CHECK(info.doc()["semisimple"] == true);
  CHECK(info.doc()["spec"] == 1);

  Run mul = run({"hecke", "mul", "--input", "data/hecke_ns_squared.json"});
  REQUIRE(mul.code == 0);
  const json terms = mul.doc()["terms"];
  REQUIRE(terms.size() == 2);
  CHECK(terms[0]["word"].empty());
  CHECK(terms[0]["re"].get<double>() == doctest::Approx(1.0));
  CHECK(terms[1]["word"] == json::array({0}));
  CHECK(terms[1]["re"].get<double>() == doctest::Approx(1.5));

  Run ext = run({"ext", "dims", "--package", "data/a1_minus1.json"});
  REQUIRE(ext.code == 0);
  CHECK(ext.doc()["ext"] == json::parse("[[1,0],[0,1]]"));
  CHECK(ext.doc()["ep"] == json::parse("[1,-1]"));
}

TEST_CASE("every command answers") {
  std::vector<std::vector<std::string>> cmds = {
      {"weyl", "enumerate", "--datum", "data/a1_adjoint.json"},
      {"theta", "--datum", "data/a1_adjoint.json", "--x", "1"},
      {"rgroup", "compute", "--datum", "data/a1_minus1.json"},
      {"chevalley", "extract", "--datum", "data/b2_reflection.json"},
      {"ep", "pair", "--package", "data/a1_minus1.json"},
      {"ep", "gram", "--package", "data/a1_minus1.json"},
      {"oracle", "koszul", "--problem", "data/koszul_z2_sign.json"},
      {"oracle", "crossed"},
      {"oracle", "validate", "--random", "3", "--seed", "7"},
      {"oracle", "validate", "--package", "data/a1_minus1.json"},
  };
  for (const auto& c : cmds) {
    CAPTURE(c[0]);
    Run r = run(c);
    CHECK(r.code == 0);
    CHECK(r.doc()["spec"] == 1);
  }
  CHECK(run({"rgroup", "compute", "--datum", "data/a1_minus1.json"}).doc()["order_rgroup"] == 2);
  CHECK(run({"chevalley", "extract", "--datum", "data/b2_reflection.json"}).doc()["degrees"] == json::parse("[2,4]"));
  CHECK(run({"ep", "gram", "--package", "data/a1_minus1.json"}).doc()["gram"] == json::parse("[[1,-1],[-1,1]]"));
  CHECK(run({"oracle", "koszul", "--problem", "data/koszul_z2_sign.json"}).doc()["ext"] == json::parse("[0,1]"));
  CHECK(run({"ext", "dims", "--package", "data/a2_regular.json"}).doc()["ext"] == json::parse("[[1,2,1]]"));
}

TEST_CASE("exit codes and diagnostics") {
  Run missing = run({"ext", "dims", "--package", "data/does_not_exist.json"});
  CHECK(missing.code == 2);
  CHECK(missing.doc()["error"]["code"] == "FileNotFound");

  Run usage = run({"ext"});
  CHECK(usage.code == 2);
  CHECK(usage.doc()["error"]["code"] == "UsageError");

  CHECK(run({"datum", "info", "--datum", "data/a1_adjoint.json", "--tolerance", "5"}).code == 2);

  Run cap = run({"weyl", "enumerate", "--datum", "data/a1_adjoint.json", "--cap", "1"});
  CHECK(cap.code == 3);
  CHECK(cap.doc()["error"]["kind"] == "CapExceeded");

  Run prop = run({"oracle", "koszul", "--problem", "data/koszul_nonzero_point.json"});
  CHECK(prop.code == 4);
  CHECK(prop.doc()["error"]["code"] == "NonvanishingDifferential");

  Run schema = run({"oracle", "koszul", "--problem", "data/a1_adjoint.json"});
  CHECK(schema.code == 2);
  CHECK(schema.doc()["error"]["code"] == "SchemaError");
}

TEST_CASE("output is deterministic") {
  for (const auto& c : std::vector<std::vector<std::string>>{
           {"ext", "dims", "--package", "data/a1_minus1.json"},
           {"oracle", "validate", "--random", "4", "--seed", "11"},
           {"theta", "--datum", "data/a1_adjoint.json", "--x", "-2"}}) {
    Run a = run(c), b = run(c);
    CHECK(a.text == b.text);
  }
  const std::string path = "build_cli_output_test.json";
  Run f = run({"datum", "info", "--datum", "data/a1_adjoint.json", "--output", path});
  CHECK(f.code == 0);
  CHECK(f.text.empty());
  std::ifstream in(path);
  json j = json::parse(in);
  CHECK(j["order_W0"] == 2);
  std::remove(path.c_str());
}

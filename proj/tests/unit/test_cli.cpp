#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "asailab/cli.hpp"
#include "json.hpp"

using namespace asailab;
using namespace asailab::cli;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ASAILAB_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("number parsing") {
  CHECK(parse_complex_rational("3/4") == std::pair<Q, Q>(Q(3, 4), 0));
  CHECK(parse_complex_rational("1/2+3/2i") == std::pair<Q, Q>(Q(1, 2), Q(3, 2)));
  CHECK(parse_complex_rational("-i") == std::pair<Q, Q>(0, -1));
  CHECK(parse_complex_rational("2 - 5*i") == std::pair<Q, Q>(2, -5));
  CHECK(parse_complex_rational("(1+2i)/3") == std::pair<Q, Q>(Q(1, 3), Q(2, 3)));
  CHECK(parse_complex_rational("0.25") == std::pair<Q, Q>(Q(1, 4), 0));
  // leading zeros are decimal
  CHECK(parse_complex_rational("010") == std::pair<Q, Q>(10, 0));
  CHECK(parse_complex_rational("1.05") == std::pair<Q, Q>(Q(21, 20), 0));
  CHECK(parse_complex("14") == cplx(14, 0));
  for (const char* bad : {"", "x", "1/0", "1+", "(1+i", "(1+i)/0", "2i3"}) CHECK_THROWS_AS(parse_complex_rational(bad), UsageError);

  CHECK(parse_coeff("-7/3") == Coeff(Q(-7, 3)));
  CHECK(parse_coeff("1/2+3*sqrt(5)") == Coeff(Q(1, 2), 3, 5));
  CHECK(parse_coeff("-sqrt(2)") == Coeff(0, -1, 2));
  CHECK(parse_coeff("4-sqrt(-1)") == Coeff(4, -1, -1));
  for (const char* bad : {"sqrt(4)", "sqrt(1)", "1+sqrt(5", "abc"}) CHECK_THROWS_AS(parse_coeff(bad), UsageError);
}

TEST_CASE("precision from the environment") {
  unsetenv("ASAILAB_PRECISION");
  CHECK(default_precision() == 20);
  setenv("ASAILAB_PRECISION", "37", 1);
  CHECK(default_precision() == 37);
  CHECK(call({"gauss-sum", "--p", "5"}).report()["provenance"]["precision"] == 37);
  // the flag wins
  CHECK(call({"--precision", "9", "gauss-sum", "--p", "5"}).report()["provenance"]["precision"] == 9);
  setenv("ASAILAB_PRECISION", "many", 1);
  CHECK_THROWS_AS(default_precision(), UsageError);
  CHECK(call({"gauss-sum", "--p", "5"}).code == kUsage);
  unsetenv("ASAILAB_PRECISION");
}

TEST_CASE("report shape") {
  auto o = call({"field-info", "--d", "5"});
  REQUIRE(o.code == kOk);
  auto r = o.report();
  CHECK(r["command"] == "field-info");
  CHECK(r["inputs"]["d"] == "5");
  CHECK(r["result"]["discriminant"] == 5);
  CHECK(r["provenance"].contains("precision"));
  CHECK(r["provenance"]["cutoffs"].is_object());
  std::vector<std::string> keys;
  for (auto& [k, v] : r.items()) keys.push_back(k);
  CHECK(keys.size() == 4);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == kUsage);
  CHECK(call({"no-such-command"}).code == kUsage);
  CHECK(call({"field-info", "--bogus", "1"}).code == kUsage);
  auto o = call({"eisenstein", "--k", "0", "--alpha", "1/3", "--tau", "x", "--s", "2"});
  CHECK(o.code == kUsage);
  CHECK(o.err.find("malformed") != std::string::npos);
  CHECK(o.out.empty());
  CHECK(call({"--help"}).code == kOk);
}

TEST_CASE("validation and hypothesis failures") {
  auto v = call({"form-validate", "--form", data("bad_parity.json")});
  CHECK(v.code == kValidation);
  CHECK(v.report()["result"]["error"]["kind"] == "validation");
  CHECK(call({"field-info", "--d", "12"}).code == kValidation);

  auto h = call({"nez", "--p", "5", "--k", "0", "--kp", "0", "--alpha-p", "2", "--alpha-q", "2", "--require"});
  CHECK(h.code == kHypothesis);
  CHECK(call({"nez", "--p", "5", "--k", "0", "--kp", "0", "--alpha-p", "2", "--alpha-q", "2"}).code == kOk);
  // E at s = 1, k = 0 is the pole
  CHECK(call({"eisenstein", "--k", "0", "--alpha", "1/3", "--tau", "i", "--s", "1"}).code == kHypothesis);
}

TEST_CASE("form-validate on a data file") {
  auto o = call({"form-validate", "--form", data("d5_weight2.json"), "--bound", "25"});
  REQUIRE(o.code == kOk);
  auto r = o.report()["result"];
  CHECK(r["valid"] == true);
  CHECK(r["hecke"]["violations"].empty());
  CHECK(r["weight"] == json({2, 2, 0, 0}));
  CHECK(o.report()["provenance"]["cutoffs"]["hecke_bound"] == 25);
  // the table stops at 36.1, so a larger bound is missing data
  CHECK(call({"form-validate", "--form", data("d5_weight2.json"), "--bound", "40"}).code == kValidation);
}

TEST_CASE("subcommands") {
  auto e = call({"euler-factor", "--d", "5", "--ell", "3", "--lambda", "2", "--w", "2"}).report()["result"];
  // inert: 1 - lambda X + ... - ell^{2w} X^4
  CHECK(e["coefficients"] == json({"1", "-2", "0", "18", "-81"}));
  CHECK(e["kind"] == "inert");

  auto c = call({"constants", "--k", "0", "--kp", "0", "--D", "5", "--N", "5"}).report()["result"];
  CHECK(c["unfolding"]["exact"] == "1/4*pi^-1*sqrt(5)");
  CHECK(c["regulator"]["exact"] == "1*sqrt(5)");
  CHECK(c["regulator_over_unfolding"]["exact"] == "4*pi^1");

  auto g = call({"gauss-sum", "--p", "5", "--r", "1", "--eta", "1"});
  REQUIRE(g.code == kOk);

  auto z = call({"eisenstein", "--k", "0", "--alpha", "1/3", "--tau", "1/2+3/2i", "--s", "2", "--method", "both", "--cutoff", "60"});
  REQUIRE(z.code == kOk);
  auto zr = z.report()["result"];
  double a = zr["continued"][0], b = zr["lattice"][0];
  CHECK(std::abs(a - b) < 1e-3 * std::abs(a));

  auto bc = call({"base-change", "--d", "5", "--bound", "200"});
  REQUIRE(bc.code == kOk);
  CHECK(bc.report()["provenance"]["cutoffs"]["hecke_bound"] == 200);
  CHECK(call({"base-change", "--d", "5", "--bound", "200", "--check", "300"}).code == kValidation);

  CHECK(call({"kronecker-check", "--alpha", "1/3", "--tau", "1/5+i"}).code == kOk);
  CHECK(call({"hecke-identity", "--d", "5", "--ell", "11"}).code == kOk);
  CHECK(call({"norm-factor", "--d", "5", "--ell", "11", "--lambda", "4,4", "--m", "5", "--characters"}).code == kOk);
  CHECK(call({"padic-params", "--p", "5", "--k", "0", "--kp", "0", "--alpha-p", "6", "--alpha-q", "-4"}).code == kOk);
}

TEST_CASE("report to a file") {
  std::string path = "asailab_cli_test_out.json";
  auto o = call({"--out", path, "field-info", "--d", "13"});
  CHECK(o.code == kOk);
  CHECK(o.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  json r = json::parse(f);
  CHECK(r["result"]["discriminant"] == 13);
  std::remove(path.c_str());
  CHECK(call({"--out", "/nonexistent/dir/x.json", "field-info", "--d", "13"}).code == kValidation);
}

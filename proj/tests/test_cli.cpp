#include <sstream>
#include <vector>

#include "doctest.h"
#include "meropencil_cli/commands.hpp"
#include "meropencil_cli/descriptor.hpp"
#include "meropencil_cli/report_json.hpp"

using namespace mero;
using mero::cli::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "meropencil");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json rational(long n) { return Json{{"num", std::to_string(n)}, {"den", "1"}}; }

const std::string kExample = "x*(z^2 + x*y);y^2*z";

}  // namespace

TEST_CASE("descriptor parsing") {
  auto d = cli::parse_descriptor(R"({"P": "x*y", "Q": "z^2", "V": "axis"})");
  CHECK(*d.P == "x*y");
  CHECK(d.V == VChoice::Axis);
  d = cli::parse_descriptor("affine = x + x^2*y\n");
  CHECK(*d.affine == "x + x^2*y");
  d = cli::parse_descriptor("# comment\nP: x\nQ: y\nV: none\n");
  CHECK(d.V == VChoice::None);

  CHECK_THROWS_AS(cli::parse_descriptor(R"({"P": "x"})"), InputError);
  CHECK_THROWS_AS(cli::parse_descriptor(R"({"P": "x", "Q": "y", "affine": "x"})"), InputError);
  CHECK_THROWS_AS(cli::parse_descriptor(R"({"P": "x", "Q": "y", "W": "x"})"), InputError);
  CHECK_THROWS_AS(cli::parse_descriptor(R"({"P": 1, "Q": "y"})"), InputError);
  CHECK_THROWS_AS(cli::parse_descriptor(R"({"P": "x", "Q": "y", "V": "sometimes"})"), InputError);
  CHECK_THROWS_AS(cli::parse_descriptor("{\"P\": "), InputError);
  CHECK_THROWS_AS(cli::parse_descriptor("P x"), InputError);
  CHECK_THROWS_AS(cli::descriptor_from_pair("x*y", VChoice::Q), InputError);
}

TEST_CASE("values and points") {
  CHECK(cli::parse_value("inf").is_infinity());
  CHECK(cli::parse_value("-3/4").value == Rational(-3, 4));
  CHECK_THROWS_AS(cli::parse_value("three"), InputError);
  auto p = cli::parse_point("[0:1:0]");
  CHECK(p[1] == Rational(1));
  CHECK(cli::parse_point(" 1/2 : 0 : 1 ")[0] == Rational(1, 2));
  CHECK_THROWS_AS(cli::parse_point("1:2"), InputError);
  CHECK_THROWS_AS(cli::parse_point("1:2:3:4"), InputError);
  CHECK_THROWS_AS(cli::parse_point("0:0:0"), InputError);
}

TEST_CASE("serialized values") {
  CHECK(cli::rational_json(Rational(-6, 4)) == Json{{"num", "-3"}, {"den", "2"}});
  CHECK(cli::value_json(ValueClass::infinity()) == Json{{"infinity", true}});
  auto alg = ValueClass::from_modulus(UPoly<Rational>({Rational(-32), Rational(0), Rational(1)}));
  CHECK(cli::value_json(alg) == Json{{"modulus", Json::array({rational(-32), rational(0), rational(1)})}});
  auto z = ZetaFunction::factor(1, -1) * ZetaFunction::factor(6, 1);
  CHECK(cli::zeta_json(z) == Json::array({Json{{"k", 1}, {"exp", -1}}, Json{{"k", 6}, {"exp", 1}}}));
  CHECK(cli::zeta_json(std::nullopt).is_null());
}

TEST_CASE("report on the example pencil") {
  Run r = invoke({"report", "--pencil", kExample});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["atypical_values"].size() == 1);
  CHECK(j["atypical_values"][0]["a"] == rational(0));
  CHECK(j["balance"]["ok"] == true);
  CHECK(j["violations"].empty());
  bool found = false;
  for (const auto& v : j["values"])
    if (v["a"] == rational(0)) {
      CHECK(v["lambda_total"] == 3);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("report on an affine polynomial") {
  Run r = invoke({"report", "--affine", "x + x^2*y"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j["atypical_values"].size() == 1);
  CHECK(j["atypical_values"][0]["a"] == rational(0));
  for (const auto& v : j["values"])
    if (v["a"] == rational(0)) CHECK(v["betti_vanishing"] == 1);
  CHECK(j["gamma"]["gamma0"] == 3);
  CHECK(j["gamma"]["gamma1_generic"] == 3);
}

TEST_CASE("input errors exit 1 with no output") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"report", "--pencil", "x*(z^2 + ;y^2*z"},
           {"report", "--pencil", "x*y"},
           {"report", "--pencil", "x*y + z;z^2"},
           {"report", "--pencil", "x;y", "--v", "maybe"},
           {"report", "--pencil", "x;y", "--affine", "x"},
           {"report"},
           {"report", "--input", "/nonexistent/descriptor.json"},
           {"euler", "--pencil", kExample, "--value", "one"},
           {"gamma", "--pencil", kExample},
           {"nonsense"},
       }) {
    Run r = invoke(args);
    CAPTURE(args[0]);
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
  }
}

TEST_CASE("hypothesis violations exit 2 and carry the flag") {
  Run r = invoke({"report", "--pencil", "x^2;y^2"});
  CHECK(r.code == 2);
  Json j = Json::parse(r.out);
  CHECK(j["flags"][0] == "positive_dimensional_critical_locus");
}

TEST_CASE("the same input and seed give identical bytes") {
  for (const auto& seed : {"0", "11"}) {
    Run a = invoke({"report", "--pencil", kExample, "--seed", seed});
    Run b = invoke({"report", "--pencil", kExample, "--seed", seed});
    CHECK(a.out == b.out);
    a = invoke({"report", "--affine", "x^3 - 6*x + y^2", "--seed", seed, "--format", "text"});
    b = invoke({"report", "--affine", "x^3 - 6*x + y^2", "--seed", seed, "--format", "text"});
    CHECK(a.out == b.out);
  }
}

TEST_CASE("local") {
  Run r = invoke({"local", "--pencil", kExample, "--point", "0:1:0", "--value", "0"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["on_axis"] == true);
  CHECK(j["mu"] == 3);
  CHECK(j["mu_generic"] == 0);
  CHECK(j["lambda"]["value"] == 3);

  r = invoke({"local", "--affine", "x^2 + y^3", "--point", "0:0:1"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["a"] == rational(0));
  CHECK(j["mu"] == 2);
  CHECK(j["lambda"].is_null());

  r = invoke({"local", "--pencil", kExample, "--point", "0:1:0"});
  CHECK(r.code == 1);
}

TEST_CASE("per-value commands") {
  Run r = invoke({"lambda", "--pencil", kExample, "--value", "0"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["values"][0]["lambda_total"] == 3);

  r = invoke({"euler", "--pencil", kExample});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["chi_space"] == 0);
  CHECK(j["chi_generic_fibre"] == -3);

  r = invoke({"zeta", "--pencil", "x*y;z*(x + y)", "--value", "0", "--v", "axis"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["values"][0]["net_degree"] == -j["values"][0]["chi_generic_fibre"].get<long>());

  r = invoke({"gamma", "--affine", "x + x^2*y", "--value", "0"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["gamma0"] == 3);
  CHECK(j["gamma1_generic"] == 3);
  CHECK(j["gamma1"] == 2);

  r = invoke({"atypical", "--affine", "x^3 - 3*x + y^2"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["atypical_values"] == Json::array({rational(-2), rational(2)}));

  r = invoke({"euler", "--pencil", "x*y;z*(x + y)", "--v", "none", "--value", "inf", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("a = inf") != std::string::npos);
}

TEST_CASE("selftest") {
  Run r = invoke({"selftest"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["grid"].size() == 36);
  int seen = 0;
  for (const auto& row : j["grid"]) {
    if (row["a"] == 1 && row["b"] == 2 && row["p"] == 2 && row["q"] == 2) {
      CHECK(row["computed"] == 4);
      ++seen;
    }
    if (row["a"] == 2 && row["b"] == 1 && row["p"] == 3 && row["q"] == 1) {
      CHECK(row["computed"] == 7);
      ++seen;
    }
  }
  CHECK(seen == 2);
}

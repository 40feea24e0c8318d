#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hfp/error.hpp"
#include "hfp/hf.hpp"
#include "hfp/plot.hpp"
#include "hfp/regress.hpp"
#include "hfp/report.hpp"

using namespace hfp;

namespace {

SeifertSummary example() { return validate_and_derive({0, {{2, 1}, {7, 3}, {14, 1}}}); }

GradingProfile example_profile() {
  auto s = example();
  return build_profile(s, canonicalize(s, parse_label("-1;0,0,0")));
}

ErrorCode parse_code(const std::string& text) {
  try {
    input_from_json(nlohmann::json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("input round trip") {
  SeifertInput in{0, {{2, 1}, {7, 3}, {14, 1}}};
  json out = to_json(in);
  CHECK(out.dump() == R"({"base_genus":0,"fibers":[[2,1],[7,3],[14,1]]})");
  SeifertInput back = input_from_json(nlohmann::json::parse(out.dump()));
  CHECK(to_json(back) == out);
  CHECK(parse_code(R"([1,2])") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"base_genus":0})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"base_genus":0,"fibers":[[2,1,3]]})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"base_genus":"x","fibers":[]})") == ErrorCode::ParseError);
  CHECK_THROWS_AS(load_input("/nonexistent/input.json"), Error);
}

TEST_CASE("rationals serialize as exact strings") {
  CHECK(to_json(Rational(3, 6)) == json("1/2"));
  CHECK(to_json(Rational(-4)) == json("-4/1"));
  auto s = example();
  json c = to_json(canonicalize(s, parse_label("-1;0,0,0")));
  CHECK(c["label"] == "-1;0,0,0");
  CHECK(c["sl"].is_string());
  CHECK(c["epsilon"] == "0/1");
  CHECK(c["torsion"] == false);
}

TEST_CASE("envelope carries version, command and input") {
  SeifertInput in{0, {{2, 1}, {7, 3}, {14, 1}}};
  json e = envelope("info", in, to_json(validate_and_derive(in)));
  CHECK(e["version"] == kVersion);
  CHECK(e["command"] == "info");
  CHECK(e["input"] == to_json(in));
  CHECK(e["result"]["d"] == 14);
  CHECK(e["result"]["g_sigma"] == 3);
}

TEST_CASE("hf and level reports") {
  auto s = example();
  json h = to_json(assemble_hf(s, canonicalize(s, parse_label("-2;0,0,12"))));
  for (const char* key : {"class", "sl", "epsilon", "chern_pairing", "tower", "omegas", "wells", "u_incidence",
                          "t_shift", "totals"})
    CHECK(h.contains(key));
  CHECK(h["t_shift"] == json{{"period", 14}, {"height_delta", 0}});
  json l = to_json(aggregate_level(s, 2));
  CHECK(l["totals"]["a_rank"] == 2);
}

TEST_CASE("plot output") {
  auto p = example_profile();
  json pts = json::parse(render_profile(p, HalfInt::integer(0), HalfInt::integer(14), PlotFormat::Json))["points"];
  REQUIRE(pts.size() == 29);
  CHECK(pts[0]["F"] == 1);
  CHECK(pts[1]["F"] == 1);
  CHECK(pts[2]["F"] == 1);
  CHECK(pts[28]["x"] == "14/1");
  CHECK(pts[28]["F"] == 5);
  std::string a = render_profile(p, HalfInt::integer(-14), HalfInt::integer(28), PlotFormat::Svg);
  std::string b = render_profile(p, HalfInt::integer(-14), HalfInt::integer(28), PlotFormat::Svg);
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(render_profile(p, HalfInt::integer(0), HalfInt::integer(3), PlotFormat::Ascii).find("F(x)") !=
        std::string::npos);
  CHECK(parse_plot_format("ascii") == PlotFormat::Ascii);
  CHECK_THROWS_AS(parse_plot_format("png"), Error);
}

TEST_CASE("regression fixtures") {
  auto fixtures = default_fixtures();
  auto results = run_fixtures(fixtures);
  for (const auto& r : results) CHECK_MESSAGE(r.passed, r.name);

  for (auto& f : fixtures)
    if (f.name == "example.level1.a_rank") f.expected = 2;
  auto perturbed = run_fixtures(fixtures);
  int failures = 0;
  for (const auto& r : perturbed) failures += !r.passed;
  CHECK(failures == 1);
  json summary = to_json(perturbed);
  CHECK(summary.dump().find("example.level1.a_rank") != std::string::npos);
}

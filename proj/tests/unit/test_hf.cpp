#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "corpus.hpp"
#include "hfp/error.hpp"
#include "hfp/hf.hpp"

using namespace hfp;

namespace {

SeifertSummary example(std::int64_t g = 0) { return validate_and_derive({g, {{2, 1}, {7, 3}, {14, 1}}}); }

HFDescription hf_of(const SeifertSummary& s, const char* label) {
  return assemble_hf(s, canonicalize(s, parse_label(label)));
}

}  // namespace

TEST_CASE("example class without tower") {
  auto hf = hf_of(example(), "-1;0,0,0");
  CHECK_FALSE(hf.tower.has_value());
  CHECK(hf.omega_summands.empty());
  REQUIRE(hf.well_part.wells.size() == 1);
  CHECK(mod_pos(hf.well_part.wells[0].height - 1, 4) == 0);
  CHECK(hf.well_part.t_shift == TShift{14, 4});
  CHECK(hf.split_over_ZU);
}

TEST_CASE("torsion class of the example") {
  auto hf = hf_of(example(), "-2;0,0,12");
  REQUIRE(hf.tower.has_value());
  REQUIRE(hf.well_part.wells.size() == 2);
  const auto& w = hf.well_part.wells;
  CHECK(w[1].height - w[0].height == 2);
  REQUIRE(hf.well_part.u_matrix.size() == 1);
  CHECK(hf.well_part.u_matrix[0].from == 1);
  CHECK(hf.well_part.u_matrix[0].to == 0);
  CHECK(hf.well_part.t_shift == TShift{14, 0});
  // tower bottom five above the bottom of the two-step fragment
  CHECK(hf.tower->bottom_grading - w[0].height == 5);
}

TEST_CASE("no fibers, genus one") {
  auto s = validate_and_derive({1, {}});
  auto hf = hf_of(s, "0;");
  REQUIRE(hf.tower.has_value());
  CHECK(hf.tower->bottom_grading == 2);
  REQUIRE(hf.omega_summands.size() == 1);
  CHECK(hf.omega_summands[0] == OmegaToken{1, 1, 1, 0});
  // a single one-point well per period, matching a_0 = 1
  REQUIRE(hf.well_part.wells.size() == 1);
  CHECK(hf.well_part.wells[0].height == 1);
  CHECK(hf.well_part.wells[0].left == HalfInt::from_twice(1));
  CHECK(hf.well_part.wells[0].right == HalfInt::from_twice(3));
  CHECK(rank_table(s, 0).a_rank == 1);
}

TEST_CASE("level aggregates on the example") {
  auto s = example();
  CHECK(aggregate_level(s, 0).totals.a_rank == 1);
  CHECK(aggregate_level(s, 1).totals.a_rank == 1);
  CHECK(aggregate_level(s, 2).totals.a_rank == 2);
  for (std::int64_t e = 0; e <= 4; ++e) {
    auto sum = aggregate_level(s, e);
    REQUIRE(sum.classes.size() == 1);
    CHECK(sum.classes[0].tower.has_value() == (e == 2));
    CHECK(sum.annotations.empty());
  }
  auto g1 = aggregate_level(example(1), 14);
  CHECK(g1.totals.a_rank == 11);
  CHECK(g1.totals.b_counts == std::map<std::int64_t, std::uint64_t>{{1, 10}});
  CHECK(aggregate_level(example(1), 0).annotations.size() == 1);
}

TEST_CASE("genus one relative gradings") {
  auto hf = aggregate_level(example(1), 14).classes.at(0);
  std::vector<std::int64_t> omegas;
  for (const auto& t : hf.omega_summands) omegas.push_back(t.grading);
  std::sort(omegas.begin(), omegas.end());
  CHECK(omegas == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1, 1, 3, 5});
  std::map<std::int64_t, int> mod_t;
  for (const auto& w : hf.well_part.wells) ++mod_t[mod_pos(w.height, 4)];
  // nine at 5, one at 7, one at 9 reduce to ten wells at 1 and one at 3 mod 4
  CHECK(mod_t == std::map<std::int64_t, int>{{1, 10}, {3, 1}});
}

TEST_CASE("tokens are indexed by g + eta(p + 1)") {
  for (const auto& s : corpus::random_inputs(40, {3, 0, 4, 10})) {
    if (s.base_genus() == 0) continue;
    for (const auto& c : enumerate_classes_at_level(s, s.fiber_genus - 1)) {
      auto hf = assemble_hf(s, c);
      for (const auto& t : hf.omega_summands) {
        CHECK(t.index == s.base_genus() + hf.profile.eta_at(t.position + 1));
        CHECK(t.index >= 1);
        CHECK(t.index <= 2 * s.base_genus() - 1);
        CHECK(t.grading == hf.profile.at_twice(2 * t.position + 1) - 1);
      }
      CHECK(hf.tower.has_value());
    }
  }
}

TEST_CASE("levels outside the range are trivial") {
  for (const auto& s : corpus::random_inputs(30, {2, 0, 4, 8})) {
    std::int64_t top = 2 * (s.fiber_genus - 1);
    for (std::int64_t e : {top + 1, top + 2, std::int64_t{-1}, std::int64_t{-2}}) {
      if (e >= 0 && e <= top) continue;
      auto sum = aggregate_level(s, e);
      CHECK(sum.totals.a_rank == 0);
      CHECK(sum.totals.b_counts.empty());
      for (const auto& hf : sum.classes) CHECK(hf.tower.has_value() == hf.cls.torsion());
    }
  }
}

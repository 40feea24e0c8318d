#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "hfp/book.hpp"
#include "hfp/error.hpp"
#include "hfp/profile.hpp"

using namespace hfp;

namespace {

const std::vector<std::int64_t> kExampleEta = {-1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1};

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::vector<std::int64_t> random_nontorsion_eta(std::mt19937_64& rng) {
  while (true) {
    std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, 8)(rng);
    std::vector<std::int64_t> e(d);
    std::int64_t sum = 0;
    for (auto& v : e) sum += v = std::uniform_int_distribution<std::int64_t>(-2, 2)(rng);
    if (sum != 0) return e;
  }
}

}  // namespace

TEST_CASE("example book builds") {
  std::int64_t d = 14;
  BookComplex b = build_book(kExampleEta, -3 * d, 3 * d, 4);
  CHECK_FALSE(b.cells.empty());
  CHECK_NOTHROW(check_axioms(b));
  for (std::size_t c = 0; c < b.cells.size(); ++c)
    for (std::size_t t : b.differential[c]) CHECK(b.cells[t].level == b.cells[c].level - 1);
  CHECK(b.f(0) == 2);
  CHECK(b.f(14) - b.f(0) == 4);
  CHECK(code_of([] { build_book({}, 0, 1, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("tiny complexes") {
  // L(0,0) -> R(0,0) and nothing else
  BookComplex pair = build_book({0}, 0, 0, 1);
  REQUIRE(pair.cells.size() == 2);
  auto h = gf2_homology(pair);
  for (auto [level, rank] : h) CHECK(rank == 0);
  // L(0,-1) has no partner inside the window
  BookComplex lone = build_book({-1}, 0, 0, 1);
  REQUIRE(lone.cells.size() == 2);
  auto left = lone.find(Side::Left, 0, -1);
  REQUIRE(left.has_value());
  CHECK(lone.differential[*left].empty());
  CHECK(homology_rank(lone, lone.cells[*left].level) == 1);
}

TEST_CASE("single positive step") {
  BookComplex b = build_book({1}, -3, 3, 3);
  CHECK_NOTHROW(check_axioms(b));
  for (const auto& c : b.cells)
    if (c.side == Side::Left && c.column >= 0) CHECK(b.find(Side::Right, c.page, c.column).has_value());
}

TEST_CASE("random books satisfy the axioms") {
  std::mt19937_64 rng(corpus::kSeed + 7);
  for (int trial = 0; trial < 60; ++trial) {
    std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, 9)(rng);
    std::vector<std::int64_t> e(d);
    for (auto& v : e) v = std::uniform_int_distribution<std::int64_t>(-3, 3)(rng);
    std::int64_t delta = std::uniform_int_distribution<std::int64_t>(1, 5)(rng);
    BookComplex b = build_book(e, -2 * d, 2 * d, delta);
    CHECK_NOTHROW(check_axioms(b));
  }
}

TEST_CASE("oracle on the example class") {
  OracleReport r = compare_with_closed_form(kExampleEta, {6, 4});
  CHECK(r.p_min == -42);
  CHECK(r.p_max == 42);
  CHECK(r.window_converged);
  CHECK(r.all_match);
  REQUIRE_FALSE(r.levels.empty());
  for (const auto& v : r.levels) {
    CHECK(v.stable_rank == (mod_pos(v.level - 1, 4) == 0 ? 1 : 0));
    if (mod_pos(v.level, 2) == 1) CHECK(v.stable_rank == v.well_count);
  }
  auto s = validate_and_derive({0, {{2, 1}, {7, 3}, {14, 1}}});
  OracleReport viaclass = compare_with_closed_form(s, canonicalize(s, parse_label("-1;0,0,0")));
  CHECK(viaclass.all_match);
  CHECK(viaclass.eta_string == kExampleEta);
}

TEST_CASE("oracle preconditions") {
  CHECK(code_of([] { compare_with_closed_form({-1, 1}); }) == ErrorCode::TorsionExcluded);
  CHECK(code_of([] { compare_with_closed_form(kExampleEta, {1, 4}); }) == ErrorCode::BandEmpty);
  auto s = validate_and_derive({1, {{2, 1}, {7, 3}, {14, 1}}});
  CHECK(code_of([&] { compare_with_closed_form(s, canonicalize(s, parse_label("-1;0,0,0"))); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("oracle on random nontorsion eta strings") {
  std::mt19937_64 rng(corpus::kSeed + 8);
  for (int seed = 0; seed < 25; ++seed) {
    auto e = random_nontorsion_eta(rng);
    OracleReport r = compare_with_closed_form(e);
    CHECK(r.all_match);
    CHECK(r.window_converged);
    for (const auto& v : r.levels) {
      if (mod_pos(v.level, 2) == 1) CHECK(v.stable_rank == v.well_count);
      else CHECK(v.stable_rank == 0);
    }
    // a small cutoff still matches the exact truncated prediction
    OracleReport small = compare_with_closed_form(e, {std::nullopt, 1});
    CHECK(small.all_match);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "hfp/error.hpp"
#include "hfp/seifert.hpp"

using namespace hfp;

namespace {

ErrorCode code_of(const SeifertInput& in) {
  try {
    validate_and_derive(in);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("example invariants") {
  auto s = validate_and_derive({0, {{2, 1}, {7, 3}, {14, 1}}});
  CHECK(s.order_d == 14);
  CHECK(s.fiber_genus == 3);
  CHECK(s.num_fibers == 3);
  CHECK(validate_and_derive({1, {{2, 1}, {7, 3}, {14, 1}}}).fiber_genus == 17);
  CHECK(validate_and_derive({2, {{2, 1}, {7, 3}, {14, 1}}}).fiber_genus == 31);
}

TEST_CASE("no fibers") {
  auto s = validate_and_derive({1, {}});
  CHECK(s.order_d == 1);
  CHECK(s.fiber_genus == 1);
  CHECK(validate_and_derive({3, {}}).fiber_genus == 3);
  CHECK(validate_and_derive({0, {}}).fiber_genus == 0);
  CHECK(validate_and_derive({0, {{2, 1}, {2, 1}}}).fiber_genus == 0);
}

TEST_CASE("rejections") {
  CHECK(code_of({0, {{2, 1}}}) == ErrorCode::NotSpecial);
  CHECK(code_of({0, {{4, 2}, {4, 2}}}) == ErrorCode::InvalidFiber);
  CHECK(code_of({0, {{3, 3}, {3, 0}}}) == ErrorCode::InvalidFiber);
  CHECK(code_of({0, {{1, 0}}}) == ErrorCode::InvalidFiber);
  CHECK(code_of({-1, {}}) == ErrorCode::InvalidArgument);
}

TEST_CASE("random inputs: integral genus and order independence") {
  for (const auto& s : corpus::random_inputs(60)) {
    Rational core = Rational(s.order_d) * (Rational(s.base_genus() - 1) + s.fiber_defect() / 2);
    CHECK(core.is_integer());
    auto reversed = s.input;
    std::reverse(reversed.fibers.begin(), reversed.fibers.end());
    auto t = validate_and_derive(reversed);
    CHECK(t.order_d == s.order_d);
    CHECK(t.fiber_genus == s.fiber_genus);
  }
}

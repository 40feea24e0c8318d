#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hfp/report.hpp"

namespace hfp {

struct Fixture {
  std::string name;
  std::function<json()> compute;
  json expected;
};

struct FixtureResult {
  std::string name;
  bool passed = false;
  json expected;
  json observed;
  std::string error;
};

std::vector<Fixture> default_fixtures();
std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures);
json to_json(const std::vector<FixtureResult>& results);

}  // namespace hfp

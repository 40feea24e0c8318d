#pragma once

#include <cstdint>
#include <vector>

#include "hfp/rational.hpp"

namespace hfp {

struct Fiber {
  std::int64_t p = 2;
  std::int64_t q = 1;
  friend bool operator==(const Fiber&, const Fiber&) = default;
};

struct SeifertInput {
  std::int64_t base_genus = 0;
  std::vector<Fiber> fibers;
  friend bool operator==(const SeifertInput&, const SeifertInput&) = default;
};

struct SeifertSummary {
  SeifertInput input;
  std::int64_t order_d = 1;
  std::int64_t fiber_genus = 0;
  std::size_t num_fibers = 0;

  std::int64_t base_genus() const { return input.base_genus; }
  const std::vector<Fiber>& fibers() const { return input.fibers; }
  // sum over fibers of (1 - 1/p)
  Rational fiber_defect() const;
};

SeifertSummary validate_and_derive(const SeifertInput& input);

}  // namespace hfp

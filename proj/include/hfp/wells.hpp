#pragma once

#include <cstdint>
#include <vector>

#include "hfp/profile.hpp"

namespace hfp {

struct Well {
  HalfInt left;
  HalfInt right;
  std::int64_t height = 0;
  bool boundary = false;

  friend bool operator==(const Well& a, const Well& b) {
    return a.left == b.left && a.right == b.right && a.height == b.height;
  }
};

// w' < w: i <= i' < j' <= j and height(w') = height(w) - 2.
bool nested_below(const Well& outer, const Well& inner);

struct UEntry {
  std::size_t from = 0;
  std::size_t to = 0;
  // For periodic groups: U(from) contains T^t_power(to).
  std::int64_t t_power = 0;
  friend bool operator==(const UEntry&, const UEntry&) = default;
};

struct TShift {
  std::int64_t period = 1;
  std::int64_t height_delta = 0;
  friend bool operator==(const TShift&, const TShift&) = default;
};

struct WellGroup {
  std::vector<Well> wells;
  std::vector<UEntry> u_matrix;
  TShift t_shift;
  // true: wells are T-orbit representatives with left wall in [0, d).
  bool periodic = false;
};

// All wells at odd height n contained in [x_lo, x_hi]; wells ending on an
// endpoint carry the boundary flag.
std::vector<Well> wells_at_height(const GradingProfile& profile, std::int64_t n, HalfInt x_lo,
                                  HalfInt x_hi);

// Every well at any odd height inside the window, with U incidence.
WellGroup window_wells(const GradingProfile& profile, HalfInt x_lo, HalfInt x_hi);

// One representative per T-orbit.
WellGroup period_wells(const GradingProfile& profile);

// Recomputes the incidence of group.wells. Window groups throw
// BoundaryUnsafe when a flagged well is present.
std::vector<UEntry> u_action(const GradingProfile& profile, const WellGroup& group);

TShift t_action(const GradingProfile& profile);

// Wells at height n anywhere on the line (only for nonzero slope).
std::vector<Well> wells_on_line(const WellGroup& period_group, std::int64_t n);

// Length of the longest U-chain among the representatives.
std::int64_t nesting_depth(const WellGroup& period_group);

}  // namespace hfp

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfp/rational.hpp"
#include "hfp/seifert.hpp"
#include "hfp/spinc.hpp"

namespace hfp {

// A point of the half-integer lattice, stored doubled.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t t) { return HalfInt(t); }
  static constexpr HalfInt integer(std::int64_t n) { return HalfInt(2 * n); }
  // Throws OffLattice unless 2x is an integer.
  static HalfInt from_rational(const Rational& x);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // floor(x)
  std::int64_t floor() const { return floor_div(twice_, 2); }
  Rational to_rational() const { return Rational(twice_, 2); }
  std::string to_string() const { return to_rational().to_string(); }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(std::int64_t t) : twice_(t) {}
  std::int64_t twice_ = 0;
};

struct GradingProfile {
  // eta_period[t - 1] = eta(t) for t = 1..d
  std::vector<std::int64_t> eta_period;
  std::int64_t spike = 0;
  Rational slope_per_unit;
  std::int64_t anchor = 1;
  std::int64_t period = 1;

  // G(0..d)
  std::vector<std::int64_t> g_table;
  // F(x + d) - F(x)
  std::int64_t rise_per_period = 0;

  std::int64_t eta_at(std::int64_t x) const;
  std::int64_t g_at(std::int64_t x) const;
  std::int64_t at_twice(std::int64_t x2) const;
  std::int64_t at(HalfInt x) const { return at_twice(x.twice()); }
  bool torsion() const { return rise_per_period == 0; }
};

std::int64_t eta(const SeifertSummary& s, const SpincClass& cls, std::int64_t x);

GradingProfile build_profile(const SeifertSummary& s, const SpincClass& cls);

// Profile determined by an eta string indexed eta(0), ..., eta(d-1).
GradingProfile profile_from_eta(const std::vector<std::int64_t>& eta_from_zero, std::int64_t spike);

std::int64_t evaluate(const GradingProfile& profile, HalfInt x);
std::int64_t evaluate(const GradingProfile& profile, const Rational& x);

// Smallest even integer >= max F; nullopt means infinity (nonzero slope).
std::optional<std::int64_t> least_even_upper_bound(const GradingProfile& profile);

std::int64_t period_max(const GradingProfile& profile);
std::int64_t period_min(const GradingProfile& profile);

}  // namespace hfp

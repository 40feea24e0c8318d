#include "hfp/profile.hpp"

#include <algorithm>

#include "hfp/error.hpp"

namespace hfp {

HalfInt HalfInt::from_rational(const Rational& x) {
  Rational t = x * Rational(2);
  if (!t.is_integer()) throw Error(ErrorCode::OffLattice, x.to_string() + " is not on the half-integer lattice");
  return from_twice(t.num());
}

std::int64_t GradingProfile::eta_at(std::int64_t x) const { return eta_period[mod_pos(x - 1, period)]; }

std::int64_t GradingProfile::g_at(std::int64_t x) const {
  std::int64_t k = floor_div(x, period);
  return g_table[x - k * period] + k * rise_per_period;
}

std::int64_t GradingProfile::at_twice(std::int64_t x2) const {
  if (x2 % 2 == 0) return g_at(x2 / 2);
  std::int64_t m = floor_div(x2, 2);
  return (g_at(m) + g_at(m + 1)) / 2 + spike;
}

std::int64_t eta(const SeifertSummary& s, const SpincClass& cls, std::int64_t x) {
  check_label(s, cls.canonical);
  Rational total = -cls.epsilon_value / Rational(s.order_d) + Rational(s.base_genus() - 1);
  for (std::size_t l = 0; l < s.num_fibers; ++l) {
    const auto& f = s.fibers()[l];
    total += Rational(mod_pos(f.q * mod_pos(x, f.p) - cls.canonical.residues[l], f.p), f.p);
  }
  if (!total.is_integer())
    throw Error(ErrorCode::NonIntegralEta, "eta(" + std::to_string(x) + ") = " + total.to_string());
  return total.num();
}

namespace {

void fill_tables(GradingProfile& p) {
  p.g_table.assign(p.period + 1, p.anchor);
  for (std::int64_t t = 1; t <= p.period; ++t) p.g_table[t] = p.g_table[t - 1] + 2 * p.eta_period[t - 1];
  p.rise_per_period = p.g_table[p.period] - p.g_table[0];
}

}  // namespace

GradingProfile build_profile(const SeifertSummary& s, const SpincClass& cls) {
  GradingProfile p;
  p.period = s.order_d;
  p.spike = s.base_genus();
  p.slope_per_unit = cls.sl_value;
  p.eta_period.resize(p.period);
  for (std::int64_t t = 1; t <= p.period; ++t) p.eta_period[t - 1] = eta(s, cls, t);
  fill_tables(p);
  if (Rational(p.rise_per_period) != Rational(p.period) * cls.sl_value)
    throw Error(ErrorCode::NonIntegralEta, "eta sum does not match the slope of " + cls.sl_value.to_string());
  return p;
}

GradingProfile profile_from_eta(const std::vector<std::int64_t>& eta_from_zero, std::int64_t spike) {
  if (eta_from_zero.empty()) throw Error(ErrorCode::InvalidArgument, "empty eta string");
  GradingProfile p;
  p.period = static_cast<std::int64_t>(eta_from_zero.size());
  p.spike = spike;
  p.eta_period.resize(p.period);
  for (std::int64_t t = 1; t <= p.period; ++t) p.eta_period[t - 1] = eta_from_zero[t % p.period];
  fill_tables(p);
  p.slope_per_unit = Rational(p.rise_per_period, p.period);
  return p;
}

std::int64_t evaluate(const GradingProfile& profile, HalfInt x) { return profile.at(x); }

std::int64_t evaluate(const GradingProfile& profile, const Rational& x) {
  return profile.at(HalfInt::from_rational(x));
}

std::int64_t period_max(const GradingProfile& profile) {
  std::int64_t best = profile.at_twice(0);
  for (std::int64_t x2 = 1; x2 < 2 * profile.period; ++x2) best = std::max(best, profile.at_twice(x2));
  return best;
}

std::int64_t period_min(const GradingProfile& profile) {
  std::int64_t best = profile.at_twice(0);
  for (std::int64_t x2 = 1; x2 < 2 * profile.period; ++x2) best = std::min(best, profile.at_twice(x2));
  return best;
}

std::optional<std::int64_t> least_even_upper_bound(const GradingProfile& profile) {
  if (!profile.torsion()) return std::nullopt;
  std::int64_t m = period_max(profile);
  return mod_pos(m, 2) == 0 ? m : m + 1;
}

}  // namespace hfp

#include "hfp/counting.hpp"

#include <algorithm>
#include <limits>

#include "hfp/error.hpp"

namespace hfp {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw Error(ErrorCode::Overflow, "tuple count overflow");
  return a + b;
}

}  // namespace

FiberSums::FiberSums(const SeifertSummary& s) : d_(s.order_d), g_(s.base_genus()), dist_{1} {
  for (const auto& f : s.fibers()) {
    std::int64_t w = d_ / f.p;
    std::vector<std::uint64_t> next(dist_.size() + static_cast<std::size_t>((f.p - 1) * w), 0);
    for (std::size_t t = 0; t < dist_.size(); ++t) {
      if (dist_[t] == 0) continue;
      for (std::int64_t i = 0; i < f.p; ++i) {
        auto& slot = next[t + static_cast<std::size_t>(i * w)];
        slot = checked_add(slot, dist_[t]);
      }
    }
    dist_ = std::move(next);
  }
}

std::uint64_t FiberSums::count(std::int64_t target) const {
  if (target < 0 || target > max_target()) return 0;
  return dist_[static_cast<std::size_t>(target)];
}

std::uint64_t FiberSums::N(std::int64_t D, std::int64_t E) const { return count(E + d_ * (D - g_ + 1)); }

std::uint64_t count_N(const SeifertSummary& s, std::int64_t D, std::int64_t E) { return FiberSums(s).N(D, E); }

std::int64_t well_weight(std::int64_t g, std::int64_t D) {
  return std::max({std::int64_t{0}, -D, floor_div(g - D + 1, 2)});
}

CountTable rank_table(const SeifertSummary& s, std::int64_t level) {
  FiberSums sums(s);
  std::int64_t g = s.base_genus(), d = s.order_d;
  CountTable t;
  t.level = level;
  t.formula_level = level <= s.fiber_genus - 1 ? level : 2 * (s.fiber_genus - 1) - level;
  std::int64_t e = t.formula_level;
  // target = e + d(D - g + 1) must lie in [0, max_target]
  std::int64_t d_lo = g - 1 - floor_div(e, d);
  std::int64_t d_hi = g - 1 + floor_div(sums.max_target() - e, d);
  for (std::int64_t D = d_lo; D <= d_hi; ++D) {
    std::uint64_t n = sums.N(D, e);
    if (n == 0) continue;
    std::uint64_t w = static_cast<std::uint64_t>(well_weight(g, D));
    if (w != 0 && n > std::numeric_limits<std::uint64_t>::max() / w) throw Error(ErrorCode::Overflow, "rank overflow");
    t.a_rank = checked_add(t.a_rank, w * n);
  }
  for (std::int64_t k = 1; k <= 2 * g - 1; ++k) {
    std::uint64_t n = sums.N(k - g, level);
    if (n != 0) t.b_counts[k] = n;
  }
  return t;
}

std::int64_t lefschetz(const SeifertSummary& s, std::int64_t power) {
  std::int64_t d = s.order_d;
  if (mod_pos(power, d) == 0)
    throw Error(ErrorCode::IdentityPower, "phi^" + std::to_string(power) + " is the identity (d = " +
                                              std::to_string(d) + ")");
  std::int64_t count = 0;
  for (const auto& f : s.fibers())
    if (power % (d / f.p) == 0) ++count;
  return count;
}

std::int64_t predicted_level_two_rank(const SeifertSummary& s) {
  if (s.order_d <= 2) throw Error(ErrorCode::OrderTooSmall, "needs d > 2, got d = " + std::to_string(s.order_d));
  std::int64_t l1 = lefschetz(s, 1), l2 = lefschetz(s, 2);
  return l2 + (l1 * l1 - l1) / 2;
}

}  // namespace hfp

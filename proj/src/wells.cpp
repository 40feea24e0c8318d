#include "hfp/wells.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "hfp/error.hpp"

namespace hfp {

namespace {

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();

bool contains_integer(std::int64_t i2, std::int64_t j2) {
  std::int64_t first = i2 + 1 + (mod_pos(i2 + 1, 2));
  return first < j2;
}

// Scans right from a candidate left wall i2 and reports each odd height n
// together with the right wall of the well (i2, j2)_n. Stops at limit2, or
// after one period past the wall when the profile does not rise.
void scan_from(const GradingProfile& f, std::int64_t i2, std::int64_t limit2, std::int64_t only_height,
               const std::function<void(std::int64_t, std::int64_t)>& emit) {
  std::int64_t top = f.at_twice(i2) - 1;
  std::int64_t low = f.at_twice(i2 + 1);
  if (low > top) return;
  if (only_height != kNone) {
    if (only_height < low || only_height > top) return;
    low = top = only_height;
  }
  std::int64_t stop = limit2;
  if (f.rise_per_period <= 0) stop = std::min(stop, i2 + 2 * f.period);
  std::int64_t running = kNone;
  for (std::int64_t x2 = i2 + 1; x2 <= stop; ++x2) {
    std::int64_t v = f.at_twice(x2);
    if (running != kNone && v > running) {
      std::int64_t n = std::max(running, low);
      if (mod_pos(n, 2) == 0) ++n;
      for (; n < v && n <= top; n += 2)
        if (contains_integer(i2, x2)) emit(n, x2);
    }
    running = std::max(running, v);
    if (running > top) return;
  }
}

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

void sort_wells(std::vector<Well>& wells) {
  std::sort(wells.begin(), wells.end(), [](const Well& a, const Well& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.left < b.left;
  });
}

std::vector<UEntry> plain_incidence(const std::vector<Well>& wells) {
  std::vector<UEntry> out;
  std::multimap<std::int64_t, std::size_t> by_height;
  for (std::size_t k = 0; k < wells.size(); ++k) by_height.emplace(wells[k].height, k);
  for (std::size_t a = 0; a < wells.size(); ++a) {
    auto range = by_height.equal_range(wells[a].height - 2);
    for (auto it = range.first; it != range.second; ++it)
      if (nested_below(wells[a], wells[it->second])) out.push_back({a, it->second, 0});
  }
  std::sort(out.begin(), out.end(), [](const UEntry& x, const UEntry& y) {
    return std::tie(x.from, x.to, x.t_power) < std::tie(y.from, y.to, y.t_power);
  });
  return out;
}

std::vector<UEntry> periodic_incidence(const GradingProfile& f, const std::vector<Well>& reps) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> index;
  for (std::size_t k = 0; k < reps.size(); ++k) index[{reps[k].left.twice(), reps[k].height}] = k;
  std::int64_t span = 2 * f.period;
  std::vector<UEntry> out;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    const Well& w = reps[a];
    for (const Well& sub : wells_at_height(f, w.height - 2, w.left, w.right)) {
      std::int64_t k = floor_div(sub.left.twice(), span);
      auto it = index.find({sub.left.twice() - k * span, sub.height - k * f.rise_per_period});
      if (it == index.end()) throw Error(ErrorCode::InternalMismatch, "sub-well has no orbit representative");
      out.push_back({a, it->second, k});
    }
  }
  std::sort(out.begin(), out.end(), [](const UEntry& x, const UEntry& y) {
    return std::tie(x.from, x.to, x.t_power) < std::tie(y.from, y.to, y.t_power);
  });
  return out;
}

}  // namespace

bool nested_below(const Well& outer, const Well& inner) {
  return inner.height == outer.height - 2 && outer.left <= inner.left && inner.right <= outer.right;
}

std::vector<Well> wells_at_height(const GradingProfile& profile, std::int64_t n, HalfInt x_lo, HalfInt x_hi) {
  std::vector<Well> out;
  if (mod_pos(n, 2) != 1) return out;
  std::int64_t lo2 = x_lo.twice(), hi2 = x_hi.twice();
  for (std::int64_t i2 = lo2; i2 < hi2; ++i2) {
    scan_from(profile, i2, hi2, n, [&](std::int64_t h, std::int64_t j2) {
      out.push_back({HalfInt::from_twice(i2), HalfInt::from_twice(j2), h, i2 == lo2 || j2 == hi2});
    });
  }
  return out;
}

WellGroup window_wells(const GradingProfile& profile, HalfInt x_lo, HalfInt x_hi) {
  WellGroup group;
  std::int64_t lo2 = x_lo.twice(), hi2 = x_hi.twice();
  for (std::int64_t i2 = lo2; i2 < hi2; ++i2) {
    scan_from(profile, i2, hi2, kNone, [&](std::int64_t h, std::int64_t j2) {
      group.wells.push_back({HalfInt::from_twice(i2), HalfInt::from_twice(j2), h, i2 == lo2 || j2 == hi2});
    });
  }
  sort_wells(group.wells);
  group.u_matrix = plain_incidence(group.wells);
  group.t_shift = t_action(profile);
  return group;
}

WellGroup period_wells(const GradingProfile& profile) {
  WellGroup group;
  group.periodic = true;
  for (std::int64_t i2 = 0; i2 < 2 * profile.period; ++i2) {
    scan_from(profile, i2, kUnbounded, kNone, [&](std::int64_t h, std::int64_t j2) {
      group.wells.push_back({HalfInt::from_twice(i2), HalfInt::from_twice(j2), h, false});
    });
  }
  sort_wells(group.wells);
  group.u_matrix = periodic_incidence(profile, group.wells);
  group.t_shift = t_action(profile);
  return group;
}

std::vector<UEntry> u_action(const GradingProfile& profile, const WellGroup& group) {
  if (group.periodic) return periodic_incidence(profile, group.wells);
  for (const auto& w : group.wells)
    if (w.boundary)
      throw Error(ErrorCode::BoundaryUnsafe, "well (" + w.left.to_string() + ", " + w.right.to_string() +
                                                 ") touches the window edge");
  return plain_incidence(group.wells);
}

TShift t_action(const GradingProfile& profile) { return {profile.period, profile.rise_per_period}; }

std::vector<Well> wells_on_line(const WellGroup& period_group, std::int64_t n) {
  const TShift& t = period_group.t_shift;
  if (t.height_delta == 0) throw Error(ErrorCode::TorsionExcluded, "infinitely many wells at each height");
  std::vector<Well> out;
  for (const auto& w : period_group.wells) {
    if (mod_pos(n - w.height, t.height_delta) != 0) continue;
    std::int64_t k = (n - w.height) / t.height_delta;
    std::int64_t shift2 = 2 * k * t.period;
    out.push_back({HalfInt::from_twice(w.left.twice() + shift2), HalfInt::from_twice(w.right.twice() + shift2), n,
                   false});
  }
  std::sort(out.begin(), out.end(), [](const Well& a, const Well& b) { return a.left < b.left; });
  return out;
}

std::int64_t nesting_depth(const WellGroup& period_group) {
  std::vector<std::int64_t> depth(period_group.wells.size(), 1);
  std::vector<std::size_t> order(depth.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return period_group.wells[a].height < period_group.wells[b].height;
  });
  std::multimap<std::size_t, std::size_t> children;
  for (const auto& e : period_group.u_matrix) children.emplace(e.from, e.to);
  std::int64_t best = 0;
  for (std::size_t a : order) {
    auto range = children.equal_range(a);
    for (auto it = range.first; it != range.second; ++it) depth[a] = std::max(depth[a], depth[it->second] + 1);
    best = std::max(best, depth[a]);
  }
  return best;
}

}  // namespace hfp

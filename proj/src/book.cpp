#include "hfp/book.hpp"

#include <algorithm>
#include <set>

#include "hfp/error.hpp"
#include "hfp/gf2.hpp"
#include "hfp/profile.hpp"
#include "hfp/wells.hpp"

namespace hfp {

namespace {

int side_key(Side s) { return s == Side::Left ? 0 : 1; }

// Existence in the untruncated book.
bool cell_exists(std::int64_t eta_p, Side side, std::int64_t i) {
  if (side == Side::Right) return i >= 0;
  return std::max(i, i - eta_p) >= 0;
}

bool in_truncation(std::int64_t eta_p, Side side, std::int64_t i, std::int64_t cutoff) {
  if (!cell_exists(eta_p, side, i)) return false;
  if (side == Side::Right) return i < cutoff;
  return i < cutoff && i - eta_p < cutoff;
}

std::vector<std::size_t> sorted_unique_mod2(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < v.size();) {
    std::size_t m = k;
    while (m < v.size() && v[m] == v[k]) ++m;
    if ((m - k) % 2 == 1) out.push_back(v[k]);
    k = m;
  }
  return out;
}

void axiom(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::AxiomViolation, what);
}

}  // namespace

std::int64_t BookComplex::eta_at(std::int64_t p) const { return eta_string[mod_pos(p, period())]; }

std::int64_t BookComplex::f(std::int64_t p) const {
  std::int64_t d = period();
  std::int64_t k = floor_div(p, d);
  return f_period_[p - k * d] + k * (f_period_[d] - f_period_[0]);
}

std::pair<std::int64_t, std::int64_t> BookComplex::page_levels(std::int64_t p, std::int64_t cutoff) const {
  std::int64_t e = eta_at(p);
  std::int64_t base = f(p) - e;
  std::int64_t shift = std::min<std::int64_t>(0, e);
  std::int64_t lo = std::min(base + 2 * shift, base - 1);
  std::int64_t hi = std::max(base + 2 * (cutoff - 1 + shift), base + 2 * cutoff - 3);
  return {lo, hi};
}

std::optional<std::size_t> BookComplex::find(Side side, std::int64_t page, std::int64_t column) const {
  auto it = index_.find({side_key(side), page, column});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BookComplex build_book(const std::vector<std::int64_t>& eta_string, std::int64_t p_min, std::int64_t p_max,
                       std::int64_t u_cutoff) {
  if (eta_string.empty()) throw Error(ErrorCode::InvalidArgument, "empty eta string");
  if (p_min > p_max) throw Error(ErrorCode::InvalidArgument, "empty page window");
  if (u_cutoff < 1) throw Error(ErrorCode::InvalidArgument, "truncation needs delta >= 1");
  BookComplex b;
  b.eta_string = eta_string;
  b.p_min = p_min;
  b.p_max = p_max;
  b.u_cutoff = u_cutoff;
  std::int64_t d = b.period();
  b.f_period_.assign(d + 1, 0);
  b.f_period_[0] = 1 - eta_string[0];
  for (std::int64_t p = 0; p < d; ++p) b.f_period_[p + 1] = b.f_period_[p] + b.eta_at(p) + b.eta_at(p + 1);

  auto add = [&](Side side, std::int64_t p, std::int64_t i, std::int64_t level) {
    b.index_[{side_key(side), p, i}] = b.cells.size();
    b.cells.push_back({side, p, i, 0, level});
  };
  for (std::int64_t p = p_min; p <= p_max; ++p) {
    std::int64_t e = b.eta_at(p), fp = b.f(p);
    for (std::int64_t i = std::min<std::int64_t>(0, e); i < u_cutoff; ++i)
      if (in_truncation(e, Side::Left, i, u_cutoff)) add(Side::Left, p, i, 2 * i - e + fp);
    for (std::int64_t i = 0; i < u_cutoff; ++i) add(Side::Right, p, i, 2 * i - e + fp - 1);
  }
  b.differential.assign(b.cells.size(), {});
  b.level_pos.assign(b.cells.size(), 0);
  for (std::size_t c = 0; c < b.cells.size(); ++c) {
    const BookCell& cell = b.cells[c];
    auto& level = b.by_level[cell.level];
    b.level_pos[c] = level.size();
    level.push_back(c);
    if (cell.side != Side::Left) continue;
    std::vector<std::size_t> targets;
    if (auto t = b.find(Side::Right, cell.page, cell.column)) targets.push_back(*t);  // q_p
    if (auto t = b.find(Side::Right, cell.page + 1, cell.column - b.eta_at(cell.page))) targets.push_back(*t);  // S_p
    b.differential[c] = sorted_unique_mod2(std::move(targets));
  }
  check_axioms(b);
  return b;
}

void check_axioms(const BookComplex& b) {
  for (std::size_t c = 0; c < b.cells.size(); ++c) {
    std::vector<std::size_t> twice;
    for (std::size_t t : b.differential[c]) {
      axiom(b.cells[t].level == b.cells[c].level - 1, "differential does not lower level by one");
      twice.insert(twice.end(), b.differential[t].begin(), b.differential[t].end());
    }
    axiom(sorted_unique_mod2(std::move(twice)).empty(), "D^2 != 0");
  }
  auto shift_down = [&](std::size_t c) -> std::optional<std::size_t> {
    const BookCell& cell = b.cells[c];
    return b.find(cell.side, cell.page, cell.column - 1);
  };
  for (std::size_t c = 0; c < b.cells.size(); ++c) {
    const BookCell& cell = b.cells[c];
    std::int64_t e = b.eta_at(cell.page);
    auto below = shift_down(c);
    axiom(below.has_value() == cell_exists(e, cell.side, cell.column - 1), "truncation is not closed under U");
    std::vector<std::size_t> du, ud;
    if (below) du = b.differential[*below];
    for (std::size_t t : b.differential[c])
      if (auto s = shift_down(t)) ud.push_back(*s);
    std::sort(ud.begin(), ud.end());
    axiom(du == ud, "D does not commute with U");
    axiom(!cell_exists(e, cell.side, cell.column - b.u_cutoff), "truncated cell outside ker U^delta");
  }
  for (std::int64_t p = b.p_min; p <= b.p_max; ++p) {
    std::int64_t e = b.eta_at(p);
    for (Side side : {Side::Left, Side::Right}) {
      for (std::int64_t i = std::min<std::int64_t>(0, e) - 1; i <= b.u_cutoff + std::max<std::int64_t>(0, e) + 1; ++i) {
        bool in_kernel = cell_exists(e, side, i) && !cell_exists(e, side, i - b.u_cutoff);
        axiom(b.find(side, p, i).has_value() == in_kernel, "truncation differs from ker U^delta");
      }
    }
  }
}

namespace {

const std::vector<std::size_t>& level_cells(const BookComplex& b, std::int64_t level) {
  static const std::vector<std::size_t> empty;
  auto it = b.by_level.find(level);
  return it == b.by_level.end() ? empty : it->second;
}

std::vector<Gf2Vector> boundary_columns(const BookComplex& b, std::int64_t level) {
  std::vector<Gf2Vector> cols;
  for (std::size_t c : level_cells(b, level)) {
    Gf2Vector v;
    for (std::size_t t : b.differential[c]) v.push_back(b.level_pos[t]);
    std::sort(v.begin(), v.end());
    cols.push_back(std::move(v));
  }
  return cols;
}

}  // namespace

std::int64_t homology_rank(const BookComplex& b, std::int64_t level) {
  auto dim = static_cast<std::int64_t>(level_cells(b, level).size());
  auto out = static_cast<std::int64_t>(gf2_rank(boundary_columns(b, level)));
  auto in = static_cast<std::int64_t>(gf2_rank(boundary_columns(b, level + 1)));
  return dim - out - in;
}

std::map<std::int64_t, std::int64_t> gf2_homology(const BookComplex& b) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [level, cells] : b.by_level) out[level] = homology_rank(b, level);
  return out;
}

std::int64_t stable_rank(const BookComplex& small, const BookComplex& big, std::int64_t level) {
  const auto& small_cells = level_cells(small, level);
  std::vector<Gf2Vector> boundaries = boundary_columns(big, level + 1);
  Gf2Reducer image;
  for (auto& v : boundaries) image.add(v);
  std::size_t base = image.rank();
  const auto cols = boundary_columns(small, level);
  for (const auto& combo : gf2_kernel(cols)) {
    Gf2Vector v;
    for (std::size_t k : combo) {
      const BookCell& cell = small.cells[small_cells[k]];
      auto t = big.find(cell.side, cell.page, cell.column);
      axiom(t.has_value(), "truncations are not nested");
      v.push_back(big.level_pos[*t]);
    }
    std::sort(v.begin(), v.end());
    image.add(std::move(v));
  }
  return static_cast<std::int64_t>(image.rank() - base);
}

namespace {

// No page outside the open window (p_min, p_max) carries cells at levels
// s-1, s, s+1 of the given cutoff.
bool level_covered(const BookComplex& b, std::int64_t s, std::int64_t cutoff, std::int64_t rise) {
  std::int64_t d = b.period();
  auto touches = [&](std::int64_t p) {
    auto [lo, hi] = b.page_levels(p, cutoff);
    return lo <= s + 1 && hi >= s - 1;
  };
  auto far = [&](std::int64_t p, bool rightward) {
    auto [lo, hi] = b.page_levels(p, cutoff);
    bool up = (rise > 0) == rightward;
    return up ? lo > s + 1 : hi < s - 1;
  };
  for (bool rightward : {true, false}) {
    std::int64_t p = rightward ? b.p_max : b.p_min;
    std::int64_t run = 0;
    for (std::int64_t steps = 0; run < d; ++steps) {
      if (steps > 1000000) return false;
      if (touches(p)) return false;
      run = far(p, rightward) ? run + 1 : 0;
      p += rightward ? 1 : -1;
    }
  }
  return true;
}

std::vector<Gf2Vector> nest_columns(const std::vector<Well>& upper, const std::vector<Well>& lower) {
  std::vector<Gf2Vector> cols;
  for (const auto& w : upper) {
    Gf2Vector v;
    for (std::size_t k = 0; k < lower.size(); ++k)
      if (w.left <= lower[k].left && lower[k].right <= w.right) v.push_back(k);
    cols.push_back(std::move(v));
  }
  return cols;
}

struct Prediction {
  const WellGroup& group;
  std::int64_t delta;
  std::int64_t stable_delta;

  std::int64_t count(std::int64_t n) const {
    if (mod_pos(n, 2) != 1) return 0;
    return static_cast<std::int64_t>(wells_on_line(group, n).size());
  }
  // rank of U^k from height n to height n - 2k
  std::int64_t u_power_rank(std::int64_t n, std::int64_t k) const {
    if (mod_pos(n, 2) != 1) return 0;
    return static_cast<std::int64_t>(gf2_rank(nest_columns(wells_on_line(group, n), wells_on_line(group, n - 2 * k))));
  }
  std::int64_t raw(std::int64_t s) const {
    if (mod_pos(s, 2) == 1) return count(s) - u_power_rank(s, delta);
    std::int64_t m = s + 1 - 2 * delta;
    return count(m) - u_power_rank(s + 1, delta);
  }
  std::int64_t stable(std::int64_t s) const {
    if (mod_pos(s, 2) == 1) return count(s) - u_power_rank(s, delta);
    return u_power_rank(s + 1 - 2 * delta, stable_delta - delta) - u_power_rank(s + 1, stable_delta);
  }
};

}  // namespace

OracleReport compare_with_closed_form(const std::vector<std::int64_t>& eta_string, const OracleOptions& options) {
  if (eta_string.empty()) throw Error(ErrorCode::InvalidArgument, "empty eta string");
  GradingProfile profile = profile_from_eta(eta_string, 0);
  if (profile.torsion()) throw Error(ErrorCode::TorsionExcluded, "the oracle needs nonzero slope");
  WellGroup group = period_wells(profile);
  std::int64_t d = profile.period, rise = profile.rise_per_period;

  OracleReport rep;
  rep.eta_string = eta_string;
  rep.delta = options.delta.value_or(nesting_depth(group) + 1);
  if (rep.delta < 1) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  rep.stable_delta = 2 * rep.delta;

  BookComplex probe = build_book(eta_string, 0, 0, 1);
  std::int64_t lo = 0, hi = 0;
  for (std::int64_t p = 0; p < d; ++p) {
    auto [l, h] = probe.page_levels(p, rep.stable_delta);
    if (p == 0 || l < lo) lo = l;
    if (p == 0 || h > hi) hi = h;
  }
  std::int64_t span = (hi - lo + 2 + std::abs(rise) - 1) / std::abs(rise) + 1;
  rep.periods = options.periods.value_or(2 * (span + 2));
  if (rep.periods < 1) throw Error(ErrorCode::InvalidArgument, "periods must be positive");
  rep.p_min = -(rep.periods / 2) * d;
  rep.p_max = ((rep.periods + 1) / 2) * d;

  BookComplex small = build_book(eta_string, rep.p_min, rep.p_max, rep.delta);
  BookComplex big = build_book(eta_string, rep.p_min, rep.p_max, rep.stable_delta);
  for (const auto& [level, cells] : big.by_level)
    if (level_covered(big, level, rep.stable_delta, rise)) rep.band.push_back(level);
  if (rep.band.empty())
    throw Error(ErrorCode::BandEmpty, "no level is boundary-safe in " + std::to_string(rep.periods) + " periods");

  BookComplex wide_small = build_book(eta_string, rep.p_min - d, rep.p_max + d, rep.delta);
  BookComplex wide_big = build_book(eta_string, rep.p_min - d, rep.p_max + d, rep.stable_delta);
  Prediction predict{group, rep.delta, rep.stable_delta};
  rep.window_converged = true;
  rep.all_match = true;
  for (std::int64_t s : rep.band) {
    LevelVerdict v;
    v.level = s;
    v.raw_rank = homology_rank(small, s);
    v.stable_rank = stable_rank(small, big, s);
    v.predicted_raw = predict.raw(s);
    v.predicted_stable = predict.stable(s);
    v.well_count = predict.count(s);
    v.match = v.raw_rank == v.predicted_raw && v.stable_rank == v.predicted_stable;
    if (homology_rank(wide_small, s) != v.raw_rank || stable_rank(wide_small, wide_big, s) != v.stable_rank)
      rep.window_converged = false;
    rep.all_match = rep.all_match && v.match;
    rep.levels.push_back(v);
  }
  rep.all_match = rep.all_match && rep.window_converged;
  return rep;
}

OracleReport compare_with_closed_form(const SeifertSummary& s, const SpincClass& cls, const OracleOptions& options) {
  if (s.base_genus() != 0) throw Error(ErrorCode::InvalidArgument, "the book oracle is defined only for g = 0");
  GradingProfile profile = build_profile(s, cls);
  std::vector<std::int64_t> eta0(profile.period);
  for (std::int64_t p = 0; p < profile.period; ++p) eta0[p] = profile.eta_at(p);
  return compare_with_closed_form(eta0, options);
}

}  // namespace hfp

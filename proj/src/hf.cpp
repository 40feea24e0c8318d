#include "hfp/hf.hpp"

#include "hfp/error.hpp"

namespace hfp {

std::vector<OmegaToken> omega_tokens(const GradingProfile& profile) {
  std::vector<OmegaToken> out;
  std::int64_t g = profile.spike;
  for (std::int64_t p = 0; p < profile.period; ++p) {
    std::int64_t mid = profile.at_twice(2 * p + 1);
    std::int64_t k = mid - profile.at_twice(2 * p);
    if (k >= 1 && k <= 2 * g - 1) out.push_back({g, k, mid - 1, p});
  }
  return out;
}

HFDescription assemble_hf(const SeifertSummary& s, const SpincClass& cls) {
  HFDescription hf;
  hf.cls = cls;
  hf.profile = build_profile(s, cls);
  if (auto b = least_even_upper_bound(hf.profile)) hf.tower = TowerSummand{*b};
  hf.omega_summands = omega_tokens(hf.profile);
  hf.well_part = period_wells(hf.profile);
  return hf;
}

LevelSummary aggregate_level(const SeifertSummary& s, std::int64_t level) {
  LevelSummary out;
  out.level = level;
  out.totals = rank_table(s, level);
  out.enumerated.level = level;
  out.enumerated.formula_level = level;
  for (const auto& cls : enumerate_classes_at_level(s, level)) {
    out.classes.push_back(assemble_hf(s, cls));
    const auto& hf = out.classes.back();
    out.enumerated.a_rank += hf.well_part.wells.size();
    for (const auto& t : hf.omega_summands) ++out.enumerated.b_counts[t.index];
  }
  if (out.enumerated.a_rank != out.totals.a_rank || out.enumerated.b_counts != out.totals.b_counts)
    throw Error(ErrorCode::InternalMismatch,
                "level " + std::to_string(level) + ": formula a = " + std::to_string(out.totals.a_rank) +
                    ", enumerated a = " + std::to_string(out.enumerated.a_rank));
  std::int64_t g = s.base_genus();
  if (g > 0 && (level == 0 || level == 1))
    out.annotations.push_back("Omega^" + std::to_string(g) + "(" + std::to_string(2 * g - 1) +
                              ") tokens pair with the Z summands at this level");
  return out;
}

}  // namespace hfp

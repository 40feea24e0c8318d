#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfp/counting.hpp"
#include "hfp/profile.hpp"
#include "hfp/spinc.hpp"
#include "hfp/wells.hpp"

namespace hfp {

struct OmegaToken {
  std::int64_t genus = 0;
  std::int64_t index = 0;
  std::int64_t grading = 0;
  // lattice point p with F(p + 1/2) - F(p) = index
  std::int64_t position = 0;
  friend bool operator==(const OmegaToken&, const OmegaToken&) = default;
};

struct TowerSummand {
  std::int64_t bottom_grading = 0;
};

struct HFDescription {
  SpincClass cls;
  GradingProfile profile;
  std::optional<TowerSummand> tower;
  std::vector<OmegaToken> omega_summands;
  WellGroup well_part;
  std::string coefficient_ring_tag = "Z[H^1(Y0)]";
  bool split_over_ZU = true;
};

struct LevelSummary {
  std::int64_t level = 0;
  std::vector<HFDescription> classes;
  // From the counting formulas.
  CountTable totals;
  // Summed over the assembled classes.
  CountTable enumerated;
  std::vector<std::string> annotations;
};

HFDescription assemble_hf(const SeifertSummary& s, const SpincClass& cls);

std::vector<OmegaToken> omega_tokens(const GradingProfile& profile);

// Throws InternalMismatch when the counting formulas disagree with the
// assembled classes.
LevelSummary aggregate_level(const SeifertSummary& s, std::int64_t level);

}  // namespace hfp

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hfp/seifert.hpp"

namespace hfp {

struct CountTable {
  std::int64_t level = 0;
  std::uint64_t a_rank = 0;
  std::map<std::int64_t, std::uint64_t> b_counts;
  // Level at which the a_rank sum was evaluated (the conjugate level above g_sigma - 1).
  std::int64_t formula_level = 0;

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

// dist[t] = number of tuples 0 <= i_l < p_l with sum i_l * (d / p_l) = t.
class FiberSums {
 public:
  explicit FiberSums(const SeifertSummary& s);
  std::uint64_t count(std::int64_t target) const;
  std::int64_t max_target() const { return static_cast<std::int64_t>(dist_.size()) - 1; }
  std::uint64_t N(std::int64_t D, std::int64_t E) const;

 private:
  std::int64_t d_ = 1;
  std::int64_t g_ = 0;
  std::vector<std::uint64_t> dist_;
};

std::uint64_t count_N(const SeifertSummary& s, std::int64_t D, std::int64_t E);

// max{0, -D, floor((g - D + 1) / 2)}
std::int64_t well_weight(std::int64_t g, std::int64_t D);

CountTable rank_table(const SeifertSummary& s, std::int64_t level);

// Fixed points of phi^power: number of l with (d / p_l) dividing power.
std::int64_t lefschetz(const SeifertSummary& s, std::int64_t power);

// Lambda(phi^2) + (Lambda^2 - Lambda) / 2; requires d not in {1, 2}.
std::int64_t predicted_level_two_rank(const SeifertSummary& s);

}  // namespace hfp

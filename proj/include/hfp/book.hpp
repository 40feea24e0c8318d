#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "hfp/seifert.hpp"
#include "hfp/spinc.hpp"

namespace hfp {

enum class Side { Left, Right };

struct BookCell {
  Side side = Side::Left;
  std::int64_t page = 0;
  std::int64_t column = 0;
  std::int64_t module_index = 0;
  std::int64_t level = 0;
};

// The g = 0 book over GF(2), restricted to pages [p_min, p_max] and to the
// kernel of U^u_cutoff. With a single module, V = H = 0 and * is the identity,
// so lambda_p = rho_p = 0 and D = q_p + S_p.
class BookComplex {
 public:
  std::vector<std::int64_t> eta_string;  // eta(0), ..., eta(d-1)
  std::int64_t p_min = 0;
  std::int64_t p_max = 0;
  std::int64_t u_cutoff = 1;
  std::vector<BookCell> cells;
  // differential[c] = cells appearing in D(c)
  std::vector<std::vector<std::size_t>> differential;
  std::map<std::int64_t, std::vector<std::size_t>> by_level;
  // position of each cell inside its level
  std::vector<std::size_t> level_pos;

  std::int64_t period() const { return static_cast<std::int64_t>(eta_string.size()); }
  std::int64_t eta_at(std::int64_t p) const;
  std::int64_t f(std::int64_t p) const;
  std::int64_t fq(std::int64_t p) const { return f(p) - eta_at(p); }
  // level range [lo, hi] of cells on page p for a given cutoff
  std::pair<std::int64_t, std::int64_t> page_levels(std::int64_t p, std::int64_t cutoff) const;
  std::optional<std::size_t> find(Side side, std::int64_t page, std::int64_t column) const;

 private:
  friend BookComplex build_book(const std::vector<std::int64_t>&, std::int64_t, std::int64_t,
                                std::int64_t);
  std::vector<std::int64_t> f_period_;  // f(0..d)
  std::map<std::tuple<int, std::int64_t, std::int64_t>, std::size_t> index_;
};

// Throws AxiomViolation if D^2 != 0, D does not lower level by one, or the
// truncation is not U-closed.
BookComplex build_book(const std::vector<std::int64_t>& eta_string, std::int64_t p_min,
                       std::int64_t p_max, std::int64_t u_cutoff);

void check_axioms(const BookComplex& complex);

// Raw GF(2) ranks of the truncated complex at every level carrying cells.
std::map<std::int64_t, std::int64_t> gf2_homology(const BookComplex& complex);
std::int64_t homology_rank(const BookComplex& complex, std::int64_t level);
// Rank of H_s(small) -> H_s(big) induced by inclusion of truncations.
std::int64_t stable_rank(const BookComplex& small, const BookComplex& big, std::int64_t level);

struct LevelVerdict {
  std::int64_t level = 0;
  std::int64_t raw_rank = 0;
  std::int64_t predicted_raw = 0;
  std::int64_t stable_rank = 0;
  std::int64_t predicted_stable = 0;
  // wells of F at this height anywhere on the line
  std::int64_t well_count = 0;
  bool match = false;
};

struct OracleOptions {
  std::optional<std::int64_t> periods;
  std::optional<std::int64_t> delta;
};

struct OracleReport {
  std::vector<std::int64_t> eta_string;
  std::int64_t periods = 0;
  std::int64_t p_min = 0;
  std::int64_t p_max = 0;
  std::int64_t delta = 0;
  std::int64_t stable_delta = 0;
  std::vector<std::int64_t> band;
  std::vector<LevelVerdict> levels;
  bool window_converged = false;
  bool all_match = false;
};

// Throws TorsionExcluded for zero slope and BandEmpty when nothing certifies.
OracleReport compare_with_closed_form(const std::vector<std::int64_t>& eta_string,
                                      const OracleOptions& options = {});
OracleReport compare_with_closed_form(const SeifertSummary& s, const SpincClass& cls,
                                      const OracleOptions& options = {});

}  // namespace hfp

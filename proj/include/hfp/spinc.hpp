#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hfp/rational.hpp"
#include "hfp/seifert.hpp"

namespace hfp {

// A label (Q; r_1, ..., r_n) with 0 <= r_l < p_l.
struct SpincLabel {
  std::int64_t q_part = 0;
  std::vector<std::int64_t> residues;

  friend bool operator==(const SpincLabel&, const SpincLabel&) = default;
  friend auto operator<=>(const SpincLabel&, const SpincLabel&) = default;
};

struct SpincClass {
  SpincLabel canonical;
  Rational sl_value;
  Rational epsilon_value;
  Rational chern_pairing;

  bool torsion() const { return sl_value.is_zero(); }
};

// Throws ArityMismatch or InvalidLabel.
void check_label(const SeifertSummary& s, const SpincLabel& label);

Rational sl(const SeifertSummary& s, const SpincLabel& label);
Rational epsilon(const SeifertSummary& s, const SpincLabel& label);
bool same_class(const SeifertSummary& s, const SpincLabel& a, const SpincLabel& b);

// Shifts residues by x*q (mod p) and adjusts Q so that Sl is unchanged.
SpincLabel translate(const SeifertSummary& s, const SpincLabel& label, std::int64_t x);

// Lexicographically least representative of the orbit, with its invariants.
SpincClass canonicalize(const SeifertSummary& s, const SpincLabel& label);

// Canonical residue tuples, one per coset of the subgroup generated by (q_l).
std::vector<std::vector<std::int64_t>> coset_representatives(const SeifertSummary& s);

// Classes with epsilon equal to level, sorted by canonical label.
std::vector<SpincClass> enumerate_classes_at_level(const SeifertSummary& s, std::int64_t level);

SpincLabel parse_label(std::string_view text);
std::string format_label(const SpincLabel& label);

}  // namespace hfp

#include "hfp/spinc.hpp"

#include <algorithm>
#include <charconv>

#include "hfp/error.hpp"

namespace hfp {

void check_label(const SeifertSummary& s, const SpincLabel& label) {
  if (label.residues.size() != s.num_fibers)
    throw Error(ErrorCode::ArityMismatch, "label has " + std::to_string(label.residues.size()) +
                                              " residues for " + std::to_string(s.num_fibers) + " fibers");
  for (std::size_t l = 0; l < s.num_fibers; ++l) {
    auto r = label.residues[l];
    if (r < 0 || r >= s.fibers()[l].p)
      throw Error(ErrorCode::InvalidLabel, "residue " + std::to_string(r) + " out of range for p = " +
                                               std::to_string(s.fibers()[l].p));
  }
}

namespace {

Rational residue_sum(const SeifertSummary& s, const std::vector<std::int64_t>& r) {
  Rational total;
  for (std::size_t l = 0; l < r.size(); ++l) total += Rational(r[l], s.fibers()[l].p);
  return total;
}

Rational sl_unchecked(const SeifertSummary& s, const SpincLabel& label) {
  return s.fiber_defect() + Rational(2) * (Rational(label.q_part) + residue_sum(s, label.residues));
}

Rational epsilon_of_sl(const SeifertSummary& s, const Rational& sl_value) {
  return Rational(s.fiber_genus - 1) - Rational(s.order_d, 2) * sl_value;
}

// Offset x with r + x q lexicographically least (mod p).
std::int64_t canonical_offset(const SeifertSummary& s, const std::vector<std::int64_t>& r) {
  std::int64_t x0 = 0, m = 1;
  for (std::size_t l = 0; l < r.size(); ++l) {
    std::int64_t p = s.fibers()[l].p, q = s.fibers()[l].q;
    std::int64_t a = mod_pos(r[l] + mod_pos(x0, p) * q, p);
    std::int64_t g = gcd64(m, p);
    std::int64_t target = a % g;
    std::int64_t step = mod_pos(m % p * q, p) / g;
    std::int64_t mod = p / g;
    std::int64_t rhs = mod_pos((target - a) / g, mod);
    std::int64_t t = mod == 1 ? 0 : mod_pos(rhs * mod_inverse(step, mod), mod);
    x0 += m * t;
    m = lcm64(m, p);
    x0 = mod_pos(x0, m);
  }
  return x0;
}

}  // namespace

Rational sl(const SeifertSummary& s, const SpincLabel& label) {
  check_label(s, label);
  return sl_unchecked(s, label);
}

Rational epsilon(const SeifertSummary& s, const SpincLabel& label) { return epsilon_of_sl(s, sl(s, label)); }

SpincLabel translate(const SeifertSummary& s, const SpincLabel& label, std::int64_t x) {
  check_label(s, label);
  SpincLabel out;
  out.residues.resize(label.residues.size());
  Rational shift;
  for (std::size_t l = 0; l < label.residues.size(); ++l) {
    std::int64_t p = s.fibers()[l].p, q = s.fibers()[l].q;
    out.residues[l] = mod_pos(label.residues[l] + mod_pos(x, p) * q, p);
    shift += Rational(label.residues[l] - out.residues[l], p);
  }
  out.q_part = label.q_part + shift.to_integer("label shift");
  return out;
}

SpincClass canonicalize(const SeifertSummary& s, const SpincLabel& label) {
  check_label(s, label);
  SpincClass cls;
  cls.canonical = translate(s, label, canonical_offset(s, label.residues));
  cls.sl_value = sl_unchecked(s, cls.canonical);
  cls.epsilon_value = epsilon_of_sl(s, cls.sl_value);
  cls.chern_pairing = -Rational(s.order_d) * cls.sl_value;
  return cls;
}

bool same_class(const SeifertSummary& s, const SpincLabel& a, const SpincLabel& b) {
  return canonicalize(s, a).canonical == canonicalize(s, b).canonical;
}

std::vector<std::vector<std::int64_t>> coset_representatives(const SeifertSummary& s) {
  std::vector<std::int64_t> bound;
  std::int64_t m = 1;
  for (const auto& f : s.fibers()) {
    bound.push_back(gcd64(m, f.p));
    m = lcm64(m, f.p);
  }
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> r(bound.size(), 0);
  while (true) {
    out.push_back(r);
    std::size_t l = r.size();
    while (l > 0) {
      --l;
      if (++r[l] < bound[l]) break;
      r[l] = 0;
      if (l == 0) return out;
    }
    if (r.empty()) return out;
  }
}

std::vector<SpincClass> enumerate_classes_at_level(const SeifertSummary& s, std::int64_t level) {
  Rational target = Rational(2 * (s.fiber_genus - 1 - level), s.order_d);
  Rational base = (target - s.fiber_defect()) / 2;
  std::vector<SpincClass> out;
  for (auto& r : coset_representatives(s)) {
    Rational q = base - residue_sum(s, r);
    if (!q.is_integer()) continue;
    SpincClass cls;
    cls.canonical = SpincLabel{q.num(), r};
    cls.sl_value = target;
    cls.epsilon_value = Rational(level);
    cls.chern_pairing = -Rational(s.order_d) * target;
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const SpincClass& a, const SpincClass& b) { return a.canonical < b.canonical; });
  return out;
}

namespace {

std::int64_t parse_component(std::string_view text) {
  std::string clean;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      clean += '-';
      i += 2;
    } else if (text[i] != ' ' && text[i] != '\t') {
      clean += text[i];
    }
  }
  if (!clean.empty() && clean.front() == '+') clean.erase(0, 1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(clean.data(), clean.data() + clean.size(), v);
  if (clean.empty() || ec != std::errc() || ptr != clean.data() + clean.size())
    throw Error(ErrorCode::ParseError, "bad label component '" + std::string(text) + "'");
  return v;
}

}  // namespace

SpincLabel parse_label(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw Error(ErrorCode::ParseError, "label needs 'Q;r1,...,rn'");
  SpincLabel label;
  std::string_view head = text.substr(0, semi);
  while (!head.empty() && (head.front() == '(' || head.front() == ' ')) head.remove_prefix(1);
  label.q_part = parse_component(head);
  std::string_view rest = text.substr(semi + 1);
  while (!rest.empty() && (rest.back() == ')' || rest.back() == ' ')) rest.remove_suffix(1);
  if (rest.find_first_not_of(" \t") == std::string_view::npos) return label;
  while (true) {
    auto comma = rest.find(',');
    label.residues.push_back(parse_component(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return label;
}

std::string format_label(const SpincLabel& label) {
  std::string out = std::to_string(label.q_part) + ";";
  for (std::size_t i = 0; i < label.residues.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(label.residues[i]);
  }
  return out;
}

}  // namespace hfp

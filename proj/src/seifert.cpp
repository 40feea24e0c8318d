#include "hfp/seifert.hpp"

#include <string>

#include "hfp/error.hpp"

namespace hfp {

Rational SeifertSummary::fiber_defect() const {
  Rational total;
  for (const auto& f : input.fibers) total += Rational(1) - Rational(1, f.p);
  return total;
}

SeifertSummary validate_and_derive(const SeifertInput& input) {
  if (input.base_genus < 0)
    throw Error(ErrorCode::InvalidArgument, "base genus must be nonnegative");
  SeifertSummary s;
  s.input = input;
  s.num_fibers = input.fibers.size();
  Rational qsum;
  std::int64_t d = 1;
  for (const auto& f : input.fibers) {
    std::string tag = "(" + std::to_string(f.p) + "," + std::to_string(f.q) + ")";
    if (f.p < 2) throw Error(ErrorCode::InvalidFiber, "fiber " + tag + " needs p > 1");
    if (f.q <= 0 || f.q >= f.p) throw Error(ErrorCode::InvalidFiber, "fiber " + tag + " needs 0 < q < p");
    if (gcd64(f.p, f.q) != 1) throw Error(ErrorCode::InvalidFiber, "fiber " + tag + " has gcd(p, q) != 1");
    qsum += Rational(f.q, f.p);
    d = lcm64(d, f.p);
  }
  if (!qsum.is_integer())
    throw Error(ErrorCode::NotSpecial, "sum of q/p is " + qsum.to_string() + ", not an integer");
  s.order_d = d;
  Rational genus = Rational(1) + Rational(d) * (Rational(input.base_genus - 1) + s.fiber_defect() / 2);
  if (!genus.is_integer() || genus.sign() < 0)
    throw Error(ErrorCode::DegenerateGenus, "fiber genus " + genus.to_string());
  s.fiber_genus = genus.num();
  return s;
}

}  // namespace hfp

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hfp {

// Exact rational with 64-bit parts; every operation checks for overflow.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  std::int64_t floor() const;
  std::int64_t ceil() const;
  // x - floor(x), in [0, 1)
  Rational frac() const;
  // Throws unless the value is an integer.
  std::int64_t to_integer(std::string_view what = "value") const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "num/den", always with an explicit denominator.
  std::string to_string() const;
  // Accepts "n", "n/d" and surrounding whitespace.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
// Floor division and nonnegative remainder for positive m.
std::int64_t floor_div(std::int64_t a, std::int64_t m);
std::int64_t mod_pos(std::int64_t a, std::int64_t m);
// Inverse of a modulo m (gcd(a, m) == 1, m >= 1).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace hfp

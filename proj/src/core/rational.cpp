#include "hadcode/rational.hpp"

#include <numeric>

#include "hadcode/error.hpp"

namespace hadcode {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "rational multiplication overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "rational addition overflow");
  return r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = checked_mul(num, -1);
    den = checked_mul(den, -1);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t den = checked_mul(a.den_ / g, b.den_);
  return {checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g)), den};
}

Rational operator-(const Rational& a, const Rational& b) { return a + Rational(checked_mul(b.num_, -1), b.den_); }

Rational operator*(const Rational& a, const Rational& b) {
  // Denominators are positive, so neither gcd can be zero.
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return {checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1)};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(Errc::InvalidArgument, "division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Rational diff = a - b;
  return diff.num_ <=> 0;
}

}  // namespace hadcode

#include <limits>
#include <numeric>
#include <set>

#include "doctest.h"
#include "hadcode/bounds.hpp"
#include "hadcode/error.hpp"
#include "hadcode/rational.hpp"

using namespace hadcode;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

// 8d(n - d) / (n - (n - 2d)^2) as a reduced (num, den) pair in plain integers.
std::pair<std::int64_t, std::int64_t> bound_oracle(std::int64_t n, std::int64_t d) {
  const std::int64_t num = 8 * d * (n - d);
  const std::int64_t den = n - (n - 2 * d) * (n - 2 * d);
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-1, 2).den() == 2);
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(8, 2).str() == "4");
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(error_of([] { Rational(1, 0); }) == Errc::InvalidArgument);
  CHECK(error_of([] { Rational(1) / Rational(0); }) == Errc::InvalidArgument);
}

TEST_CASE("rational overflow is detected") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK(error_of([&] { big + Rational(1); }) == Errc::Overflow);
  CHECK(error_of([&] { big * Rational(2); }) == Errc::Overflow);
  CHECK(error_of([&] { Rational(1, std::numeric_limits<std::int64_t>::max()) + Rational(1, 3); }) == Errc::Overflow);
  // Cross-cancellation keeps representable products representable.
  CHECK(big * Rational(1, std::numeric_limits<std::int64_t>::max()) == Rational(1));
}

TEST_CASE("grey-rankin examples") {
  const auto r126 = grey_rankin(12, 6);
  CHECK(r126.applicable);
  CHECK(*r126.bound == Rational(24));
  CHECK(*r126.floor == 24);

  CHECK(*grey_rankin(20, 8).bound == Rational(192));
  const auto r164 = grey_rankin(16, 4);
  CHECK_FALSE(r164.applicable);
  CHECK_FALSE(r164.bound.has_value());

  CHECK(error_of([] { grey_rankin(10, 0); }) == Errc::BadParams);
  CHECK(error_of([] { grey_rankin(10, 11); }) == Errc::BadParams);
}

TEST_CASE("punctured bound") {
  CHECK(*grey_rankin_punctured(5, 1).bound == Rational(192));
  for (std::int64_t t = 1; t <= 50; ++t) CHECK(*grey_rankin_punctured(t, 0).bound == Rational(8 * t));

  const auto r = with_code_size(grey_rankin_punctured(125, 1), 8 * 125 + 8);
  CHECK(*r.bound == Rational(1032 * 121 + 120, 121));
  CHECK(*r.floor == 1032);
  CHECK(*r.gap == 24);

  CHECK(*with_code_size(grey_rankin(20, 8), 48).gap == 144);
  CHECK_FALSE(with_code_size(grey_rankin(16, 4), 10).gap.has_value());

  CHECK(error_of([] { grey_rankin_punctured(4, 1); }) == Errc::BadParams);
  CHECK(error_of([] { grey_rankin_punctured(16, 2); }) == Errc::BadParams);
  CHECK(error_of([] { grey_rankin_punctured(10, -1); }) == Errc::BadParams);
}

TEST_CASE("punctured bound matches the general bound and a cross-multiplication oracle") {
  for (std::int64_t i = 0; i <= 5; ++i) {
    for (std::int64_t t = 4 * i * i + 1; t <= 200; ++t) {
      const auto r = grey_rankin_punctured(t, i);
      CHECK(*r.bound == *grey_rankin(4 * t, 2 * t - 2 * i).bound);
      const auto [num, den] = bound_oracle(4 * t, 2 * t - 2 * i);
      CHECK(r.bound->num() == num);
      CHECK(r.bound->den() == den);
    }
  }
}

TEST_CASE("bound at the Hadamard point is 8t") {
  for (std::int64_t t = 1; t <= 200; ++t) CHECK(*grey_rankin(4 * t, 2 * t).bound == Rational(8 * t));
}

TEST_CASE("excess over 8t + 32i^2 is positive and decreasing") {
  for (std::int64_t i = 1; i <= 5; ++i) {
    Rational previous(std::numeric_limits<std::int32_t>::max());
    for (std::int64_t t = 4 * i * i + 1; t <= 400; ++t) {
      const Rational excess = *grey_rankin_punctured(t, i).bound - Rational(8 * t + 32 * i * i);
      CHECK(excess > Rational(0));
      CHECK(excess < previous);
      previous = excess;
    }
  }
  for (std::int64_t t = 125; t <= 2000; ++t) {
    CHECK(*with_code_size(grey_rankin_punctured(t, 1), static_cast<std::uint64_t>(8 * t + 8)).gap <= 24);
  }
}

TEST_CASE("integrality scan") {
  CHECK(integrality_scan_i1(5, 10) == std::vector<std::int64_t>{5, 6, 7, 8, 9, 10});
  const auto scan = integrality_scan_i1(5, 130);
  const std::set<std::int64_t> found(scan.begin(), scan.end());
  CHECK_FALSE(found.count(11));
  CHECK(found.count(124));
  CHECK_FALSE(found.count(125));
  std::vector<std::int64_t> expected;
  for (std::int64_t t = 5; t <= 130; ++t) {
    if (120 % (t - 4) == 0) expected.push_back(t);
  }
  CHECK(scan == expected);
  CHECK(error_of([] { integrality_scan_i1(4, 10); }) == Errc::BadParams);
  CHECK(error_of([] { integrality_scan_i1(10, 9); }) == Errc::BadParams);
}

TEST_CASE("maximality threshold") {
  CHECK(maximality_threshold(1) == 15);
  CHECK(maximality_threshold(0) == 0);
  CHECK(maximality_threshold(2) == 62);
  CHECK(error_of([] { maximality_threshold(-1); }) == Errc::BadParams);
}

TEST_CASE("symplectic comparison") {
  const auto s3 = symplectic_comparison(3);
  CHECK(s3.n == 28);
  CHECK(s3.d == 12);
  CHECK(s3.symplectic_size == 128);
  CHECK(s3.theorem_size == 64);
  CHECK(s3.t == 7);
  CHECK(s3.i == 1);
  CHECK(s3.ratio == Rational(2));

  for (std::int64_t l = 3; l <= 30; ++l) {
    const auto s = symplectic_comparison(l);
    CHECK(s.ratio == Rational(2));
    CHECK(4 * s.t == s.n);
    CHECK(4 * s.t + 4 * s.i == (std::int64_t{1} << (2 * l - 1)));
    CHECK(s.d == 2 * s.t - 2 * s.i);
  }
  CHECK(error_of([] { symplectic_comparison(2); }) == Errc::BadParams);
  CHECK(error_of([] { symplectic_comparison(1); }) == Errc::BadParams);
  CHECK(error_of([] { symplectic_comparison(31); }) == Errc::BadParams);
}

#include "hadcode/bounds.hpp"

#include <string>

#include "hadcode/error.hpp"

namespace hadcode {

BoundReport grey_rankin(std::int64_t n, std::int64_t d) {
  if (d <= 0 || d > n) {
    throw Error(Errc::BadParams, "need 0 < d <= n (n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
  }
  BoundReport r;
  r.n = n;
  r.d = d;
  const Rational spread = Rational(n) - Rational(2) * Rational(d);
  const Rational denominator = Rational(n) - spread * spread;
  r.applicable = denominator > Rational(0);
  if (r.applicable) {
    r.bound = Rational(8) * Rational(d) * (Rational(n) - Rational(d)) / denominator;
    r.floor = r.bound->floor();
  }
  return r;
}

BoundReport grey_rankin_punctured(std::int64_t t, std::int64_t i) {
  if (i < 0 || t <= 4 * i * i) {
    throw Error(Errc::BadParams, "need t > 4i^2 (t = " + std::to_string(t) + ", i = " + std::to_string(i) + ")");
  }
  const Rational i2 = Rational(i) * Rational(i);
  const Rational value =
      Rational(8) * Rational(t) + Rational(32) * i2 + (Rational(128) * i2 * i2 - Rational(8) * i2) / (Rational(t) - Rational(4) * i2);

  BoundReport r = grey_rankin(4 * t, 2 * t - 2 * i);
  if (!r.applicable || *r.bound != value) {
    throw Error(Errc::ConstructionFailed, "punctured bound disagrees with the general bound");
  }
  return r;
}

BoundReport with_code_size(BoundReport report, std::uint64_t code_size) {
  report.code_size = code_size;
  if (report.applicable) report.gap = *report.floor - static_cast<std::int64_t>(code_size);
  return report;
}

std::vector<std::int64_t> integrality_scan_i1(std::int64_t t_first, std::int64_t t_last) {
  if (t_first <= 4 || t_last < t_first) throw Error(Errc::BadParams, "scan range must satisfy 4 < first <= last");
  std::vector<std::int64_t> out;
  for (std::int64_t t = t_first; t <= t_last; ++t) {
    if (grey_rankin_punctured(t, 1).bound->is_integer()) out.push_back(t);
  }
  return out;
}

std::int64_t maximality_threshold(std::int64_t i) {
  if (i < 0) throw Error(Errc::BadParams, "i must be non-negative");
  return 16 * i * i - i;
}

SymplecticComparison symplectic_comparison(std::int64_t l) {
  if (l < 2 || l > 30) throw Error(Errc::BadParams, "l must lie in [2, 30]");
  SymplecticComparison s;
  s.l = l;
  const std::int64_t half = std::int64_t{1} << (l - 1);
  const std::int64_t order = std::int64_t{1} << (2 * l - 1);
  s.n = order - half;
  s.d = (std::int64_t{1} << (2 * l - 2)) - half;
  s.symplectic_size = std::int64_t{1} << (2 * l + 1);
  s.theorem_size = std::int64_t{1} << (2 * l);
  s.ratio = Rational(s.symplectic_size, s.theorem_size);
  if (s.n % 4 != 0) {
    throw Error(Errc::BadParams, "l = " + std::to_string(l) + " gives length " + std::to_string(s.n) + ", not a multiple of 4");
  }
  s.t = s.n / 4;
  s.i = (order - s.n) / 4;
  if (s.i >= s.t || s.d != 2 * s.t - 2 * s.i || s.theorem_size != 8 * s.t + 8 * s.i) {
    throw Error(Errc::BadParams, "parameters do not land on the punctured Hadamard grid");
  }
  return s;
}

}  // namespace hadcode

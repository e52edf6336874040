#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hadcode/rational.hpp"

namespace hadcode {

// Grey-Rankin bound |C| <= 8d(n - d) / (n - (n - 2d)^2) for self-complementary codes.
struct BoundReport {
  std::int64_t n = 0;
  std::int64_t d = 0;
  bool applicable = false;  // denominator strictly positive
  std::optional<Rational> bound;
  std::optional<std::int64_t> floor;
  std::optional<std::uint64_t> code_size;
  std::optional<std::int64_t> gap;  // floor - code_size
};

BoundReport grey_rankin(std::int64_t n, std::int64_t d);

// 8t + 32i^2 + (128i^4 - 8i^2) / (t - 4i^2), i.e. the bound at (4t, 2t - 2i).
// Requires t > 4i^2. Cross-checked against grey_rankin(4t, 2t - 2i).
BoundReport grey_rankin_punctured(std::int64_t t, std::int64_t i);

// Attaches a code size and the resulting gap (only meaningful when applicable).
BoundReport with_code_size(BoundReport report, std::uint64_t code_size);

// All t in [t_first, t_last] (t_first > 4) where the i = 1 bound is an integer.
std::vector<std::int64_t> integrality_scan_i1(std::int64_t t_first, std::int64_t t_last);

// 16i^2 - i: codes from puncturing 4i columns are maximal once t exceeds this.
std::int64_t maximality_threshold(std::int64_t i);

struct SymplecticComparison {
  std::int64_t l = 0;
  std::int64_t n = 0;               // 2^(2l-1) - 2^(l-1)
  std::int64_t d = 0;               // 2^(2l-2) - 2^(l-1)
  std::int64_t symplectic_size = 0; // 2^(2l+1)
  std::int64_t theorem_size = 0;    // 2^(2l), i.e. 8t + 8i
  Rational ratio;
  std::int64_t t = 0;
  std::int64_t i = 0;
};

// Valid for 3 <= l <= 30; l = 2 lands off the 4t grid and is rejected.
SymplecticComparison symplectic_comparison(std::int64_t l);

}  // namespace hadcode

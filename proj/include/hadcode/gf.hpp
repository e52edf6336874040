#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hadcode::gf {

inline constexpr std::uint64_t kDefaultSizeCap = 1'000'000;

bool is_prime(std::uint64_t n) noexcept;

struct PrimePower {
  std::uint32_t prime;
  unsigned exponent;
};

// Decomposes q = p^k; nullopt when q is not a prime power (q <= 1 included).
std::optional<PrimePower> prime_power(std::uint64_t q) noexcept;

// An element of GF(p^k) stored by its canonical encoding sum(coeffs[j] * p^j).
// The element remembers (p, q) so operations can reject operands from another field.
class FieldElement {
 public:
  std::uint32_t encoding() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend class FiniteField;
  FieldElement(std::uint32_t p, std::uint32_t q, std::uint32_t code) : p_(p), q_(q), code_(code) {}

  std::uint32_t p_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t code_ = 0;
};

class FiniteField {
 public:
  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }

  // Monic modulus, constant term first, k + 1 coefficients.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement element(std::uint32_t encoding) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coefficients(FieldElement a) const;

  FieldElement zero() const noexcept { return {p_, q_, 0}; }
  FieldElement one() const noexcept { return {p_, q_, 1}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  // 0 for zero, +1 for a nonzero square, -1 otherwise; a^((q-1)/2).
  int quadratic_character(FieldElement a) const;

  // All q elements in encoding order, zero first.
  std::vector<FieldElement> elements() const;

  // quadratic_character of every element, indexed by encoding.
  std::vector<std::int8_t> character_table() const;

  // Encoding-level subtraction used by the bulk matrix builders.
  std::uint32_t sub_encoded(std::uint32_t a, std::uint32_t b) const noexcept;

  bool contains(FieldElement a) const noexcept { return a.p_ == p_ && a.q_ == q_; }

  friend bool operator==(const FiniteField& x, const FiniteField& y) noexcept {
    return x.p_ == y.p_ && x.k_ == y.k_;
  }

 private:
  friend FiniteField make_field(std::uint32_t p, unsigned k, std::uint64_t size_cap);
  FiniteField(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

  void check(FieldElement a) const;
  std::uint32_t encode(std::span<const std::uint32_t> coeffs) const noexcept;
  void decode(std::uint32_t code, std::span<std::uint32_t> out) const noexcept;
  std::uint32_t mul_encoded(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
};

// GF(p^k) with the lexicographically smallest monic irreducible modulus, comparing
// coefficient tuples with the leading coefficient most significant. For k = 1 the
// modulus is x.
FiniteField make_field(std::uint32_t p, unsigned k, std::uint64_t size_cap = kDefaultSizeCap);

// Convenience: GF(q) for an odd prime power q.
FiniteField make_field_of_order(std::uint64_t q, std::uint64_t size_cap = kDefaultSizeCap);

// True iff the monic polynomial (constant term first) has no monic factor of
// degree 1 .. deg/2 over Z_p.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace hadcode::gf

#include "hadcode/gf.hpp"

#include <array>
#include <limits>
#include <string>

#include "hadcode/error.hpp"

namespace hadcode::gf {

namespace {

// 3^20 < 2^32 <= 3^21, so no supported field needs more than 20 coefficients.
constexpr std::size_t kMaxDegree = 20;
using CoeffBuffer = std::array<std::uint64_t, 2 * kMaxDegree>;

// Remainder of a (in place) modulo the monic polynomial g over Z_p.
void poly_reduce(std::vector<std::uint64_t>& a, std::span<const std::uint64_t> g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t top = a.size(); top-- > dg;) {
    const std::uint64_t c = a[top] % p;
    if (c == 0) continue;
    const std::size_t shift = top - dg;
    for (std::size_t j = 0; j <= dg; ++j) {
      a[shift + j] = (a[shift + j] + (p - c) * g[j]) % p;
    }
  }
  a.resize(dg);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  if (p > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), k};
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  if (monic.size() < 2 || monic.back() != 1) {
    throw Error(Errc::InvalidArgument, "is_irreducible expects a monic polynomial of degree >= 1");
  }
  const std::size_t deg = monic.size() - 1;
  std::vector<std::uint64_t> divisor;
  std::vector<std::uint64_t> work;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < d; ++j) count *= p;
    divisor.assign(d + 1, 0);
    divisor[d] = 1;
    for (std::uint64_t e = 0; e < count; ++e) {
      std::uint64_t rest = e;
      for (std::size_t j = 0; j < d; ++j) {
        divisor[j] = rest % p;
        rest /= p;
      }
      work.assign(monic.begin(), monic.end());
      poly_reduce(work, divisor, p);
      bool zero = true;
      for (auto c : work) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FiniteField make_field(std::uint32_t p, unsigned k, std::uint64_t size_cap) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  if (k == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned j = 0; j < k; ++j) {
    q *= p;
    if (q > size_cap || q > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(Errc::SizeCapExceeded,
                  "field of size " + std::to_string(p) + "^" + std::to_string(k) + " exceeds cap " +
                      std::to_string(size_cap));
    }
  }

  std::vector<std::uint32_t> modulus(k + 1, 0);
  modulus[k] = 1;
  if (k == 1) return FiniteField(p, k, std::move(modulus));

  // Digit j of e is the coefficient of x^j, so increasing e walks the tuples
  // (c_{k-1}, ..., c_0) in lexicographic order.
  for (std::uint64_t e = 0; e < q; ++e) {
    std::uint64_t rest = e;
    for (unsigned j = 0; j < k; ++j) {
      modulus[j] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(modulus, p)) return FiniteField(p, k, std::move(modulus));
  }
  throw Error(Errc::ConstructionFailed, "no irreducible polynomial found");
}

FiniteField make_field_of_order(std::uint64_t q, std::uint64_t size_cap) {
  const auto pp = prime_power(q);
  if (!pp) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  return make_field(pp->prime, pp->exponent, size_cap);
}

FiniteField::FiniteField(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned j = 0; j < k; ++j) q_ *= p;
}

void FiniteField::check(FieldElement a) const {
  if (!contains(a)) {
    throw Error(Errc::MixedFields, "element does not belong to GF(" + std::to_string(q_) + ")");
  }
}

std::uint32_t FiniteField::encode(std::span<const std::uint32_t> coeffs) const noexcept {
  std::uint32_t code = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) code = code * p_ + coeffs[j];
  return code;
}

void FiniteField::decode(std::uint32_t code, std::span<std::uint32_t> out) const noexcept {
  for (unsigned j = 0; j < k_; ++j) {
    out[j] = code % p_;
    code /= p_;
  }
}

FieldElement FiniteField::element(std::uint32_t encoding) const {
  if (encoding >= q_) {
    throw Error(Errc::InvalidArgument,
                "encoding " + std::to_string(encoding) + " outside GF(" + std::to_string(q_) + ")");
  }
  return {p_, q_, encoding};
}

FieldElement FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != k_) throw Error(Errc::InvalidArgument, "coefficient vector must have length k");
  for (auto c : coeffs) {
    if (c >= p_) throw Error(Errc::InvalidArgument, "coefficient outside Z_p");
  }
  return {p_, q_, encode(coeffs)};
}

std::vector<std::uint32_t> FiniteField::coefficients(FieldElement a) const {
  check(a);
  std::vector<std::uint32_t> out(k_);
  decode(a.code_, out);
  return out;
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  std::uint32_t code = 0, scale = 1, x = a.code_, y = b.code_;
  for (unsigned j = 0; j < k_; ++j) {
    code += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return {p_, q_, code};
}

std::uint32_t FiniteField::sub_encoded(std::uint32_t x, std::uint32_t y) const noexcept {
  if (k_ == 1) return (x + p_ - y) % p_;
  std::uint32_t code = 0, scale = 1;
  for (unsigned j = 0; j < k_; ++j) {
    code += ((x % p_ + p_ - y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return code;
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {p_, q_, sub_encoded(a.code_, b.code_)};
}

FieldElement FiniteField::neg(FieldElement a) const {
  check(a);
  return {p_, q_, sub_encoded(0, a.code_)};
}

std::uint32_t FiniteField::mul_encoded(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::array<std::uint32_t, kMaxDegree> x{}, y{};
  decode(a, x);
  decode(b, y);
  CoeffBuffer prod{};
  for (unsigned i = 0; i < k_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_;
    }
  }
  for (unsigned top = 2 * k_ - 2; top >= k_; --top) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    const unsigned shift = top - k_;
    for (unsigned j = 0; j <= k_; ++j) {
      prod[shift + j] = (prod[shift + j] + (p_ - c) * modulus_[j]) % p_;
    }
  }
  std::uint32_t code = 0;
  for (unsigned j = k_; j-- > 0;) code = code * p_ + static_cast<std::uint32_t>(prod[j]);
  return code;
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {p_, q_, mul_encoded(a.code_, b.code_)};
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  std::uint32_t result = 1, base = a.code_;
  while (e > 0) {
    if (e & 1U) result = mul_encoded(result, base);
    base = mul_encoded(base, base);
    e >>= 1U;
  }
  return {p_, q_, result};
}

int FiniteField::quadratic_character(FieldElement a) const {
  check(a);
  if (a.code_ == 0) return 0;
  return pow(a, (q_ - 1) / 2).code_ == 1 ? 1 : -1;
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t e = 0; e < q_; ++e) out.push_back({p_, q_, e});
  return out;
}

std::vector<std::int8_t> FiniteField::character_table() const {
  // Squares are exactly the images of x -> x^2; marking them avoids q exponentiations.
  std::vector<std::int8_t> table(q_, -1);
  table[0] = 0;
  for (std::uint32_t x = 1; x < q_; ++x) table[mul_encoded(x, x)] = 1;
  return table;
}

}  // namespace hadcode::gf

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "hadcode/bipolar_matrix.hpp"

namespace hadcode {

inline constexpr std::uint64_t kDefaultOrderCap = 4096;

// Order-2^a matrix from repeated doubling [[H, H], [H, -H]].
BipolarMatrix sylvester(unsigned a, std::uint64_t order_cap = kDefaultOrderCap);

// Order q + 1 for a prime power q = 3 (mod 4): Jacobsthal matrix bordered into a
// skew conference matrix S, then H = S + I.
BipolarMatrix paley_one(std::uint64_t q, std::uint64_t order_cap = kDefaultOrderCap);

// Order 2(q + 1) for a prime power q = 1 (mod 4): symmetric conference matrix with
// every entry expanded to a 2 x 2 block.
BipolarMatrix paley_two(std::uint64_t q, std::uint64_t order_cap = kDefaultOrderCap);

// Order q(q + 2) + 1 when q and q + 2 are both odd prime powers, from the twin
// prime power difference set in GF(q) x GF(q + 2).
BipolarMatrix twin_prime(std::uint64_t q, std::uint64_t order_cap = kDefaultOrderCap);

// Kronecker product of two Hadamard matrices.
BipolarMatrix kronecker(const BipolarMatrix& a, const BipolarMatrix& b,
                        std::uint64_t order_cap = kDefaultOrderCap);

// Unchecked Kronecker product of arbitrary bipolar matrices.
BipolarMatrix kronecker_product(const BipolarMatrix& a, const BipolarMatrix& b);

// Exact integer Gram check: every pair of distinct rows is orthogonal.
bool is_hadamard(const BipolarMatrix& m);

// Negates columns, then rows, so that the first row and column are all +1.
BipolarMatrix normalize(const BipolarMatrix& h);

class ConstructionPlan {
 public:
  enum class Kind { Sylvester, PaleyI, PaleyII, TwinPrime, Kronecker };

  static ConstructionPlan leaf(Kind kind, std::uint64_t parameter);
  static ConstructionPlan product(ConstructionPlan left, ConstructionPlan right);

  Kind kind() const noexcept { return kind_; }
  // Sylvester exponent a, or the prime power q of a Paley or twin prime leaf.
  std::uint64_t parameter() const noexcept { return parameter_; }
  std::uint64_t order() const noexcept { return order_; }
  const ConstructionPlan& left() const { return *left_; }
  const ConstructionPlan& right() const { return *right_; }

  std::size_t kronecker_nodes() const noexcept;
  std::string describe() const;

  friend bool operator==(const ConstructionPlan& x, const ConstructionPlan& y);

 private:
  ConstructionPlan() = default;

  Kind kind_ = Kind::Sylvester;
  std::uint64_t parameter_ = 0;
  std::uint64_t order_ = 1;
  std::shared_ptr<const ConstructionPlan> left_;
  std::shared_ptr<const ConstructionPlan> right_;
};

const char* kind_name(ConstructionPlan::Kind kind) noexcept;

// Fewest Kronecker nodes over the leaves {Sylvester, PaleyI, PaleyII, TwinPrime}.
// Ties prefer the leaf sequence (left to right) that is lexicographically smallest
// under Sylvester < PaleyI < PaleyII < TwinPrime, then smaller parameter.
// Throws OrderImpossible or OrderUnreachable.
ConstructionPlan plan_order(std::uint64_t n, std::uint64_t order_cap = kDefaultOrderCap);

// Builds the matrix a plan describes; every step self-verifies.
BipolarMatrix execute(const ConstructionPlan& plan, std::uint64_t order_cap = kDefaultOrderCap);

// The unique leaf of the given kind producing order n, if one exists.
std::optional<ConstructionPlan> leaf_for_order(ConstructionPlan::Kind kind, std::uint64_t n);

}  // namespace hadcode

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hadcode/error.hpp"
#include "hadcode/gf.hpp"
#include "hadcode/hadamard.hpp"

namespace hadcode {

namespace {

using Kind = ConstructionPlan::Kind;
using LeafKey = std::vector<std::pair<int, std::uint64_t>>;

void collect_leaves(const ConstructionPlan& plan, LeafKey& out) {
  if (plan.kind() == Kind::Kronecker) {
    collect_leaves(plan.left(), out);
    collect_leaves(plan.right(), out);
  } else {
    out.emplace_back(static_cast<int>(plan.kind()), plan.parameter());
  }
}

std::tuple<std::size_t, LeafKey> rank(const ConstructionPlan& plan) {
  LeafKey key;
  collect_leaves(plan, key);
  return {plan.kronecker_nodes(), std::move(key)};
}

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

class Planner {
 public:
  std::optional<ConstructionPlan> best(std::uint64_t n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    std::optional<ConstructionPlan> result;
    for (Kind kind : {Kind::Sylvester, Kind::PaleyI, Kind::PaleyII, Kind::TwinPrime}) {
      if ((result = leaf_for_order(kind, n))) break;
    }
    if (!result && n % 4 == 0) {
      std::optional<std::tuple<std::size_t, LeafKey>> best_rank;
      for (std::uint64_t a = 2; a * 2 <= n; ++a) {
        if (n % a != 0) continue;
        auto left = best(a);
        if (!left) continue;
        auto right = best(n / a);
        if (!right) continue;
        auto candidate = ConstructionPlan::product(*left, *right);
        auto r = rank(candidate);
        if (!best_rank || r < *best_rank) {
          best_rank = std::move(r);
          result = std::move(candidate);
        }
      }
    }
    memo_.emplace(n, result);
    return result;
  }

 private:
  std::map<std::uint64_t, std::optional<ConstructionPlan>> memo_;
};

}  // namespace

const char* kind_name(ConstructionPlan::Kind kind) noexcept {
  switch (kind) {
    case Kind::Sylvester: return "Sylvester";
    case Kind::PaleyI: return "PaleyI";
    case Kind::PaleyII: return "PaleyII";
    case Kind::TwinPrime: return "TwinPrime";
    case Kind::Kronecker: return "Kronecker";
  }
  return "?";
}

ConstructionPlan ConstructionPlan::leaf(Kind kind, std::uint64_t parameter) {
  ConstructionPlan p;
  p.kind_ = kind;
  p.parameter_ = parameter;
  switch (kind) {
    case Kind::Sylvester:
      if (parameter >= 63) throw Error(Errc::BadParams, "Sylvester exponent too large");
      p.order_ = std::uint64_t{1} << parameter;
      break;
    case Kind::PaleyI:
      if (!gf::prime_power(parameter) || parameter % 4 != 3) throw Error(Errc::BadParams, "PaleyI needs q = 3 mod 4");
      p.order_ = parameter + 1;
      break;
    case Kind::PaleyII:
      if (!gf::prime_power(parameter) || parameter % 4 != 1) throw Error(Errc::BadParams, "PaleyII needs q = 1 mod 4");
      p.order_ = 2 * (parameter + 1);
      break;
    case Kind::TwinPrime:
      if (parameter % 2 == 0 || !gf::prime_power(parameter) || !gf::prime_power(parameter + 2)) {
        throw Error(Errc::BadParams, "TwinPrime needs odd prime powers q, q + 2");
      }
      p.order_ = parameter * (parameter + 2) + 1;
      break;
    case Kind::Kronecker:
      throw Error(Errc::BadParams, "Kronecker is not a leaf");
  }
  return p;
}

ConstructionPlan ConstructionPlan::product(ConstructionPlan left, ConstructionPlan right) {
  ConstructionPlan p;
  p.kind_ = Kind::Kronecker;
  p.order_ = left.order() * right.order();
  p.left_ = std::make_shared<const ConstructionPlan>(std::move(left));
  p.right_ = std::make_shared<const ConstructionPlan>(std::move(right));
  return p;
}

std::size_t ConstructionPlan::kronecker_nodes() const noexcept {
  if (kind_ != Kind::Kronecker) return 0;
  return 1 + left_->kronecker_nodes() + right_->kronecker_nodes();
}

std::string ConstructionPlan::describe() const {
  if (kind_ == Kind::Kronecker) return "Kronecker(" + left_->describe() + ", " + right_->describe() + ")";
  return std::string(kind_name(kind_)) + "(" + std::to_string(parameter_) + ")";
}

bool operator==(const ConstructionPlan& x, const ConstructionPlan& y) {
  if (x.kind_ != y.kind_ || x.order_ != y.order_) return false;
  if (x.kind_ != ConstructionPlan::Kind::Kronecker) return x.parameter_ == y.parameter_;
  return *x.left_ == *y.left_ && *x.right_ == *y.right_;
}

std::optional<ConstructionPlan> leaf_for_order(ConstructionPlan::Kind kind, std::uint64_t n) {
  switch (kind) {
    case Kind::Sylvester:
      if (n >= 1 && (n & (n - 1)) == 0) {
        unsigned a = 0;
        while ((std::uint64_t{1} << a) < n) ++a;
        return ConstructionPlan::leaf(kind, a);
      }
      break;
    case Kind::PaleyI:
      if (n >= 4 && (n - 1) % 4 == 3 && gf::prime_power(n - 1)) return ConstructionPlan::leaf(kind, n - 1);
      break;
    case Kind::PaleyII:
      if (n >= 4 && n % 2 == 0 && (n / 2 - 1) % 4 == 1 && gf::prime_power(n / 2 - 1)) {
        return ConstructionPlan::leaf(kind, n / 2 - 1);
      }
      break;
    case Kind::TwinPrime: {
      // q(q + 2) + 1 = (q + 1)^2
      const std::uint64_t root = isqrt(n);
      if (root >= 4 && root * root == n) {
        const std::uint64_t q = root - 1;
        if (q % 2 == 1 && gf::prime_power(q) && gf::prime_power(q + 2)) return ConstructionPlan::leaf(kind, q);
      }
      break;
    }
    case Kind::Kronecker:
      break;
  }
  return std::nullopt;
}

ConstructionPlan plan_order(std::uint64_t n, std::uint64_t order_cap) {
  if (n == 0) throw Error(Errc::InvalidArgument, "order must be >= 1");
  if (n > 2 && n % 4 != 0) {
    throw Error(Errc::OrderImpossible, "order " + std::to_string(n) + " > 2 is not divisible by 4");
  }
  if (n > order_cap) {
    throw Error(Errc::SizeCapExceeded, "order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
  }
  Planner planner;
  auto plan = planner.best(n);
  if (!plan) {
    throw Error(Errc::OrderUnreachable,
                "not reachable by implemented constructions: order " + std::to_string(n));
  }
  return *plan;
}

BipolarMatrix execute(const ConstructionPlan& plan, std::uint64_t order_cap) {
  switch (plan.kind()) {
    case Kind::Sylvester: return sylvester(static_cast<unsigned>(plan.parameter()), order_cap);
    case Kind::PaleyI: return paley_one(plan.parameter(), order_cap);
    case Kind::PaleyII: return paley_two(plan.parameter(), order_cap);
    case Kind::TwinPrime: return twin_prime(plan.parameter(), order_cap);
    case Kind::Kronecker:
      return kronecker(execute(plan.left(), order_cap), execute(plan.right(), order_cap), order_cap);
  }
  throw Error(Errc::InvalidArgument, "unknown plan kind");
}

}  // namespace hadcode

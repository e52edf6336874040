#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadcode/bipolar_matrix.hpp"
#include "hadcode/bits.hpp"
#include "hadcode/hadamard.hpp"

namespace hadcode {

// Ordered list of equal-length binary words stored contiguously.
class BinaryCode {
 public:
  BinaryCode() = default;
  explicit BinaryCode(std::size_t length) : length_(length), stride_(blocks_for(length)) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return count_; }
  std::size_t blocks_per_word() const noexcept { return stride_; }

  WordRef word(std::size_t i) const noexcept { return {{data_.data() + i * stride_, stride_}, length_}; }
  void add(WordRef w);

  // Free-form note on how the code was made (plan and puncture), carried into reports.
  std::string provenance;

  friend bool operator==(const BinaryCode& a, const BinaryCode& b) noexcept {
    return a.length_ == b.length_ && a.count_ == b.count_ && a.data_ == b.data_;
  }

 private:
  std::size_t length_ = 0;
  std::size_t stride_ = 0;
  std::size_t count_ = 0;
  std::vector<Block> data_;
};

struct CodeParams {
  std::size_t length = 0;
  std::size_t size = 0;
  std::size_t min_distance = 0;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

struct GramSummary {
  // Largest |<r_i, r_j>| over i < j; meaningless when pair_count == 0.
  std::int64_t max_offdiag_abs = 0;
  std::uint64_t pair_count = 0;
  // histogram[v] = number of unordered row pairs with |<r_i, r_j>| = v.
  std::vector<std::uint64_t> histogram;
};

enum class ColumnPolicy { Last, First, Explicit };

struct PunctureParams {
  std::size_t t = 0;
  std::size_t i = 0;
  std::vector<std::size_t> deleted_columns;
};

// Column list of size 4i for an order-(4t + 4i) matrix under Last/First policies.
std::vector<std::size_t> policy_columns(ColumnPolicy policy, std::size_t order, std::size_t count);

// c_k = (r_k + 1) / 2 for every row, followed by the complements (rows of -M).
BinaryCode code_from_matrix(const BipolarMatrix& m);

std::size_t distance(WordRef u, WordRef v);

CodeParams min_distance(const BinaryCode& code);

// Minimum distance through the Gram matrix: d = (m - alpha) / 2, or m for a one-row matrix.
std::pair<GramSummary, CodeParams> gram_min_distance(const BipolarMatrix& m);

// Deletes 4i columns of a Hadamard matrix of order 4t + 4i.
BipolarMatrix puncture(const BipolarMatrix& h, const PunctureParams& params);

// Columns removed without any Hadamard preconditions.
BipolarMatrix delete_columns(const BipolarMatrix& m, const std::vector<std::size_t>& columns);

struct PuncturedCode {
  BinaryCode code;
  CodeParams params;
  std::size_t guaranteed_distance = 0;  // 2t - 2i
  ConstructionPlan plan;
  PunctureParams puncture;
  BipolarMatrix hadamard;  // the normalized matrix that was punctured
};

// Length 4t, 8t + 8i words, minimum distance at least 2t - 2i, from a planner-built
// Hadamard matrix of order 4t + 4i with 4i columns removed.
PuncturedCode punctured_hadamard_code(std::size_t t, std::size_t i, ColumnPolicy policy = ColumnPolicy::Last,
                                      const std::vector<std::size_t>& explicit_columns = {},
                                      std::uint64_t order_cap = kDefaultOrderCap);

// counts[d] = number of unordered word pairs at distance d, for d = 0 .. length.
std::vector<std::uint64_t> distance_distribution(const BinaryCode& code);

bool is_self_complementary(const BinaryCode& code);

}  // namespace hadcode

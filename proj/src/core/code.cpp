#include "hadcode/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "hadcode/error.hpp"

namespace hadcode {

namespace {

// Rows per tile of the pairwise loops; keeps both tiles resident in L1 for short words.
constexpr std::size_t kTile = 64;

}  // namespace

void BinaryCode::add(WordRef w) {
  if (w.length != length_) {
    throw Error(Errc::LengthMismatch,
                "word of length " + std::to_string(w.length) + " added to length-" + std::to_string(length_) + " code");
  }
  data_.insert(data_.end(), w.blocks.begin(), w.blocks.end());
  ++count_;
}

std::vector<std::size_t> policy_columns(ColumnPolicy policy, std::size_t order, std::size_t count) {
  if (count > order) throw Error(Errc::BadColumnList, "cannot delete more columns than exist");
  std::vector<std::size_t> cols(count);
  const std::size_t start = policy == ColumnPolicy::First ? 0 : order - count;
  if (policy == ColumnPolicy::Explicit) throw Error(Errc::InvalidArgument, "explicit policy needs a column list");
  for (std::size_t k = 0; k < count; ++k) cols[k] = start + k;
  return cols;
}

BinaryCode code_from_matrix(const BipolarMatrix& m) {
  std::vector<BitVector> all;
  all.reserve(2 * m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) all.emplace_back(m.row(r));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVector c(m.row(r));
    c.complement();
    all.push_back(std::move(c));
  }

  std::vector<BitVector> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::DegenerateRows, "matrix has duplicate or antipodal rows");
  }

  BinaryCode code(m.cols());
  for (const auto& w : all) code.add(w);
  return code;
}

std::size_t distance(WordRef u, WordRef v) {
  if (u.length != v.length || u.blocks.size() != v.blocks.size()) {
    throw Error(Errc::LengthMismatch,
                "distance between lengths " + std::to_string(u.length) + " and " + std::to_string(v.length));
  }
  return popcount_xor(u.blocks, v.blocks);
}

CodeParams min_distance(const BinaryCode& code) {
  const std::size_t n = code.size();
  if (n < 2) throw Error(Errc::TooFewWords, "minimum distance needs at least two words");
  std::size_t best = code.length() + 1;
  for (std::size_t bi = 0; bi < n; bi += kTile) {
    const std::size_t ei = std::min(n, bi + kTile);
    for (std::size_t bj = bi; bj < n; bj += kTile) {
      const std::size_t ej = std::min(n, bj + kTile);
      for (std::size_t i = bi; i < ei; ++i) {
        const auto wi = code.word(i).blocks;
        for (std::size_t j = std::max(bj, i + 1); j < ej; ++j) {
          best = std::min(best, popcount_xor(wi, code.word(j).blocks));
        }
      }
    }
  }
  return {code.length(), n, best};
}

std::pair<GramSummary, CodeParams> gram_min_distance(const BipolarMatrix& m) {
  GramSummary g;
  g.histogram.assign(m.cols() + 1, 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      const std::int64_t v = std::abs(m.inner_product(i, j));
      ++g.histogram[static_cast<std::size_t>(v)];
      ++g.pair_count;
      g.max_offdiag_abs = std::max(g.max_offdiag_abs, v);
    }
  }
  if (m.rows() == 0) throw Error(Errc::TooFewWords, "empty matrix");
  if (g.pair_count > 0 && g.max_offdiag_abs == static_cast<std::int64_t>(m.cols())) {
    throw Error(Errc::DegenerateRows, "matrix has duplicate or antipodal rows");
  }
  const auto cols = static_cast<std::int64_t>(m.cols());
  // Row pairs give (m -+ <r_i, r_j>) / 2; a row against its own complement gives m.
  const std::size_t d = g.pair_count == 0 ? m.cols() : static_cast<std::size_t>((cols - g.max_offdiag_abs) / 2);
  return {std::move(g), CodeParams{m.cols(), 2 * m.rows(), d}};
}

BipolarMatrix delete_columns(const BipolarMatrix& m, const std::vector<std::size_t>& columns) {
  std::vector<bool> drop(m.cols(), false);
  for (auto c : columns) {
    if (c >= m.cols()) throw Error(Errc::BadColumnList, "column " + std::to_string(c) + " out of range");
    if (drop[c]) throw Error(Errc::BadColumnList, "column " + std::to_string(c) + " listed twice");
    drop[c] = true;
  }
  BipolarMatrix out(m.rows(), m.cols() - columns.size(), +1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t k = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!drop[c]) out.set(r, k++, m.at(r, c));
    }
  }
  return out;
}

BipolarMatrix puncture(const BipolarMatrix& h, const PunctureParams& params) {
  if (params.t == 0 || params.i >= params.t) {
    throw Error(Errc::BadParams, "puncturing needs 0 <= i < t");
  }
  const std::size_t order = 4 * (params.t + params.i);
  if (!h.is_square() || h.rows() != order) {
    throw Error(Errc::BadShape, std::to_string(h.rows()) + "x" + std::to_string(h.cols()) +
                                    " matrix, expected order 4t + 4i = " + std::to_string(order));
  }
  if (params.deleted_columns.size() != 4 * params.i) {
    throw Error(Errc::BadColumnList, "expected " + std::to_string(4 * params.i) + " columns, got " +
                                         std::to_string(params.deleted_columns.size()));
  }
  if (!is_hadamard(h)) throw Error(Errc::NotHadamardInput, "puncture expects a Hadamard matrix");

  BipolarMatrix out = delete_columns(h, params.deleted_columns);
  const auto bound = static_cast<std::int64_t>(4 * params.i);
  for (std::size_t a = 0; a < out.rows(); ++a) {
    for (std::size_t b = a + 1; b < out.rows(); ++b) {
      if (std::abs(out.inner_product(a, b)) > bound) {
        throw Error(Errc::ConstructionFailed, "punctured Gram entry exceeds 4i");
      }
    }
  }
  return out;
}

PuncturedCode punctured_hadamard_code(std::size_t t, std::size_t i, ColumnPolicy policy,
                                      const std::vector<std::size_t>& explicit_columns, std::uint64_t order_cap) {
  if (t == 0 || i >= t) throw Error(Errc::BadParams, "need i < t (t = " + std::to_string(t) + ", i = " + std::to_string(i) + ")");
  const std::size_t order = 4 * (t + i);
  ConstructionPlan plan = plan_order(order, order_cap);
  BipolarMatrix h = normalize(execute(plan, order_cap));

  PunctureParams pp{t, i, policy == ColumnPolicy::Explicit ? explicit_columns : policy_columns(policy, order, 4 * i)};
  BinaryCode code = code_from_matrix(puncture(h, pp));
  const CodeParams params = min_distance(code);
  const std::size_t guaranteed = 2 * t - 2 * i;
  if (params.size != 8 * t + 8 * i || params.min_distance < guaranteed) {
    throw Error(Errc::ConstructionFailed, "punctured code misses its guaranteed parameters");
  }

  std::string cols;
  for (auto c : pp.deleted_columns) cols += (cols.empty() ? "" : ",") + std::to_string(c);
  code.provenance = plan.describe() + " normalized; deleted columns [" + cols + "]";
  return PuncturedCode{std::move(code), params, guaranteed, std::move(plan), std::move(pp), std::move(h)};
}

std::vector<std::uint64_t> distance_distribution(const BinaryCode& code) {
  if (code.size() < 2) throw Error(Errc::TooFewWords, "distance distribution needs at least two words");
  std::vector<std::uint64_t> counts(code.length() + 1, 0);
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto wi = code.word(i).blocks;
    for (std::size_t j = i + 1; j < code.size(); ++j) ++counts[popcount_xor(wi, code.word(j).blocks)];
  }
  return counts;
}

bool is_self_complementary(const BinaryCode& code) {
  std::vector<BitVector> words;
  words.reserve(code.size());
  for (std::size_t k = 0; k < code.size(); ++k) words.emplace_back(code.word(k));
  std::sort(words.begin(), words.end());
  for (const auto& w : words) {
    BitVector c = w;
    c.complement();
    if (!std::binary_search(words.begin(), words.end(), c)) return false;
  }
  return true;
}

}  // namespace hadcode

#include "hadcode/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "hadcode/error.hpp"
#include "hadcode/hadamard.hpp"

namespace hadcode {

namespace {

void require_hadamard(const BipolarMatrix& h) {
  if (!h.is_square() || !is_hadamard(h)) throw Error(Errc::NotHadamardInput, "expected a Hadamard matrix");
}

BitVector random_word(std::size_t length, std::mt19937_64& rng) {
  BitVector v(length);
  auto blocks = v.blocks();
  for (auto& b : blocks) b = rng();
  if (!blocks.empty()) blocks.back() &= tail_mask(length);
  return v;
}

// Sum of squared inner products and the largest |<r_j, v>|.
std::pair<std::int64_t, std::int64_t> row_profile(const BipolarMatrix& h, const BitVector& v) {
  const auto m = static_cast<std::int64_t>(h.cols());
  std::int64_t sum = 0, best = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    const std::int64_t ip = m - 2 * static_cast<std::int64_t>(popcount_xor(h.row_blocks(r), v.blocks()));
    sum += ip * ip;
    best = std::max(best, ip < 0 ? -ip : ip);
  }
  return {sum, best};
}

std::size_t distance_to_code(const BinaryCode& code, const BitVector& w) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t k = 0; k < code.size(); ++k) best = std::min(best, popcount_xor(code.word(k).blocks, w.blocks()));
  return best;
}

std::vector<BitVector> sorted_words(const BinaryCode& code) {
  std::vector<BitVector> out;
  out.reserve(code.size());
  for (std::size_t k = 0; k < code.size(); ++k) out.emplace_back(code.word(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t parity_sqrt_ceiling(std::int64_t m) {
  std::int64_t s = 0;
  while (s * s < m) ++s;
  if ((s - m) % 2 != 0) ++s;
  return s;
}

}  // namespace

bool parseval_check(const BipolarMatrix& h, const BitVector& v) {
  if (v.size() != h.cols()) {
    throw Error(Errc::LengthMismatch,
                "vector of length " + std::to_string(v.size()) + " against order " + std::to_string(h.cols()));
  }
  require_hadamard(h);
  const auto m = static_cast<std::int64_t>(h.cols());
  return row_profile(h, v).first == m * m;
}

ProbeReport maximality_probe(const BinaryCode& code, const BipolarMatrix& h, const PunctureParams& params,
                             std::uint64_t samples, std::uint64_t seed) {
  const std::size_t m = 4 * (params.t + params.i);
  if (params.t == 0 || params.i >= params.t || !h.is_square() || h.rows() != m ||
      params.deleted_columns.size() != 4 * params.i || code.length() != 4 * params.t || code.size() != 2 * m) {
    throw Error(Errc::ShapeMismatch, "code, matrix and puncture parameters are inconsistent");
  }
  require_hadamard(h);
  const BipolarMatrix punctured = delete_columns(h, params.deleted_columns);
  if (sorted_words(code_from_matrix(punctured)) != sorted_words(code)) {
    throw Error(Errc::ShapeMismatch, "code is not the punctured code of the given matrix");
  }

  std::vector<bool> dropped(m, false);
  for (auto c : params.deleted_columns) dropped[c] = true;

  ProbeReport r;
  r.samples = samples;
  r.seed = seed;
  r.t = params.t;
  r.i = params.i;
  r.guaranteed_distance = 2 * params.t - 2 * params.i;
  const auto ii = static_cast<std::int64_t>(params.i);
  r.in_guaranteed_range = static_cast<std::int64_t>(params.t) > 16 * ii * ii - ii;
  r.vacuous = samples == 0;
  r.parity_refined_bound = parity_sqrt_ceiling(static_cast<std::int64_t>(m));
  r.min_observed_best_distance = std::numeric_limits<std::size_t>::max();
  r.min_max_abs_inner = std::numeric_limits<std::int64_t>::max();
  if (r.vacuous) {
    r.min_observed_best_distance = 0;
    r.min_max_abs_inner = 0;
  }

  const auto mm = static_cast<std::int64_t>(m);
  std::mt19937_64 rng(seed);
  BitVector restricted(4 * params.t);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const BitVector v = random_word(m, rng);

    const auto [sum, max_abs] = row_profile(h, v);
    r.parseval_checked = r.parseval_checked && sum == mm * mm;
    r.sqrt_bound_held = r.sqrt_bound_held && max_abs * max_abs >= mm;
    r.parity_bound_held = r.parity_bound_held && max_abs >= r.parity_refined_bound;
    r.min_max_abs_inner = std::min(r.min_max_abs_inner, max_abs);

    for (std::size_t c = 0, k = 0; c < m; ++c) {
      if (!dropped[c]) restricted.set(k++, v.get(c));
    }
    const std::size_t best = distance_to_code(code, restricted);
    r.min_observed_best_distance = std::min(r.min_observed_best_distance, best);
    r.max_observed_best_distance = std::max(r.max_observed_best_distance, best);
    if (best >= r.guaranteed_distance) {
      r.all_rejected = false;
      if (!r.counterexample) r.counterexample = restricted;
    }
  }
  return r;
}

std::optional<BitVector> find_extension_word(const BinaryCode& code) {
  if (code.length() > kExhaustiveMaxLength) {
    throw Error(Errc::TooLong, "exhaustive search limited to length " + std::to_string(kExhaustiveMaxLength));
  }
  const std::size_t d = min_distance(code).min_distance;
  std::vector<Block> words(code.size());
  for (std::size_t k = 0; k < code.size(); ++k) words[k] = code.length() == 0 ? 0 : code.word(k).blocks[0];

  const Block limit = Block{1} << code.length();
  for (Block x = 0; x < limit; ++x) {
    bool far = true;
    for (Block w : words) {
      if (static_cast<std::size_t>(std::popcount(x ^ w)) < d) {
        far = false;
        break;
      }
    }
    if (far) {
      BitVector out(code.length());
      if (!out.blocks().empty()) out.blocks()[0] = x;
      return out;
    }
  }
  return std::nullopt;
}

bool exhaustive_maximality(const BinaryCode& code) { return !find_extension_word(code).has_value(); }

ExtensionReport extend_search(const BinaryCode& code, std::uint64_t budget, std::uint64_t seed) {
  const std::size_t d = min_distance(code).min_distance;
  const std::size_t n = code.length();

  ExtensionReport r;
  r.budget = budget;
  r.seed = seed;
  r.target_distance = d;

  std::vector<BitVector> pool;
  for (std::size_t k = 0; k < code.size(); ++k) pool.emplace_back(code.word(k));

  auto score = [&](const BitVector& w) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& p : pool) best = std::min(best, popcount_xor(p.blocks(), w.blocks()));
    return best;
  };
  auto accept = [&](const BitVector& w) {
    pool.push_back(w);
    r.added.push_back(w);
  };

  // Greedy: self-complementary codes with a missing partner regain it here.
  for (std::size_t k = 0; k < code.size() && r.spent < budget; ++k) {
    BitVector c(code.word(k));
    c.complement();
    ++r.spent;
    if (score(c) >= d) accept(c);
  }

  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> dist;
  while (r.spent < budget && d > 0 && n > 0) {
    ++r.restarts;
    BitVector x = random_word(n, rng);
    ++r.spent;
    dist.resize(pool.size());
    for (std::size_t k = 0; k < pool.size(); ++k) {
      dist[k] = static_cast<std::int64_t>(popcount_xor(pool[k].blocks(), x.blocks()));
    }

    // Lexicographic objective: raise the minimum distance, then thin out the words achieving it.
    auto evaluate = [&](std::size_t flip) {
      std::int64_t lo = std::numeric_limits<std::int64_t>::max();
      std::int64_t at_lo = 0;
      const bool xb = x.get(flip);
      for (std::size_t k = 0; k < pool.size(); ++k) {
        const std::int64_t nd = dist[k] + (pool[k].get(flip) == xb ? 1 : -1);
        if (nd < lo) {
          lo = nd;
          at_lo = 1;
        } else if (nd == lo) {
          ++at_lo;
        }
      }
      return std::pair{lo, -at_lo};
    };
    auto current = [&] {
      std::int64_t lo = std::numeric_limits<std::int64_t>::max();
      std::int64_t at_lo = 0;
      for (auto v : dist) {
        if (v < lo) {
          lo = v;
          at_lo = 1;
        } else if (v == lo) {
          ++at_lo;
        }
      }
      return std::pair{lo, -at_lo};
    };

    auto here = current();
    while (here.first < static_cast<std::int64_t>(d) && r.spent < budget) {
      std::optional<std::size_t> best_flip;
      auto best = here;
      std::size_t ties = 0;
      for (std::size_t j = 0; j < n && r.spent < budget; ++j) {
        ++r.spent;
        const auto s = evaluate(j);
        if (s > best) {
          best = s;
          best_flip = j;
          ties = 1;
        } else if (best_flip && s == best && rng() % ++ties == 0) {
          best_flip = j;
        }
      }
      if (!best_flip) break;
      const bool xb = x.get(*best_flip);
      for (std::size_t k = 0; k < pool.size(); ++k) dist[k] += pool[k].get(*best_flip) == xb ? 1 : -1;
      x.flip(*best_flip);
      here = best;
    }
    if (here.first >= static_cast<std::int64_t>(d)) accept(x);
  }

  // Certify every addition against the original code and the other additions.
  for (std::size_t a = 0; a < r.added.size(); ++a) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < code.size(); ++k) best = std::min(best, distance(code.word(k), r.added[a].view()));
    for (std::size_t b = 0; b < r.added.size(); ++b) {
      if (b != a) best = std::min(best, distance(r.added[a].view(), r.added[b].view()));
    }
    if (best < d) throw Error(Errc::ConstructionFailed, "extension word failed certification");
    r.certificate_distances.push_back(best);
  }
  return r;
}

}  // namespace hadcode

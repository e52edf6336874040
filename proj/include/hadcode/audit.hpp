#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hadcode/bipolar_matrix.hpp"
#include "hadcode/bits.hpp"
#include "hadcode/code.hpp"

namespace hadcode {

// sum_j <r_j, v>^2 == m^2 for a Hadamard H of order m and a +-1 vector v (bit set = +1).
bool parseval_check(const BipolarMatrix& h, const BitVector& v);

struct ProbeReport {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t t = 0;
  std::size_t i = 0;
  std::size_t guaranteed_distance = 0;  // 2t - 2i
  bool in_guaranteed_range = false;     // t > 16i^2 - i
  bool vacuous = false;                 // samples == 0
  bool all_rejected = true;             // every sample lies at distance < 2t - 2i from the code
  std::size_t min_observed_best_distance = 0;
  std::size_t max_observed_best_distance = 0;
  bool parseval_checked = true;         // the identity held exactly on every full-length sample
  // Largest |<r_j, v>| over rows, minimised over samples; the argument needs it >= sqrt(m).
  std::int64_t min_max_abs_inner = 0;
  bool sqrt_bound_held = true;
  // Smallest s >= sqrt(m) with s = m (mod 2); inner products share the parity of m.
  std::int64_t parity_refined_bound = 0;
  bool parity_bound_held = true;
  // First sample whose punctured word is at distance >= 2t - 2i from every codeword.
  std::optional<BitVector> counterexample;
};

// Draws `samples` uniform +-1 vectors of length m = 4t + 4i from std::mt19937_64(seed).
// Each is checked against H (Parseval, sqrt(m) row) and, restricted to the kept
// columns, against the punctured code. `code` must equal the code of H with
// params.deleted_columns removed (as a set of words).
ProbeReport maximality_probe(const BinaryCode& code, const BipolarMatrix& h, const PunctureParams& params,
                             std::uint64_t samples, std::uint64_t seed);

inline constexpr std::size_t kExhaustiveMaxLength = 24;

// A word at distance >= d(C) from every codeword, by full enumeration of {0,1}^n.
std::optional<BitVector> find_extension_word(const BinaryCode& code);

// True iff no word can join the code without lowering its minimum distance.
bool exhaustive_maximality(const BinaryCode& code);

struct ExtensionReport {
  std::uint64_t budget = 0;
  std::uint64_t spent = 0;
  std::uint64_t seed = 0;
  std::uint64_t restarts = 0;
  std::size_t target_distance = 0;
  std::vector<BitVector> added;
  // Exact minimum distance from each added word to the code and the other added words.
  std::vector<std::size_t> certificate_distances;
};

// Greedy pass over complements of codewords, then bit-flip hill climbing from random
// starts (std::mt19937_64(seed)). One unit of budget is one candidate scored against
// the current word pool.
ExtensionReport extend_search(const BinaryCode& code, std::uint64_t budget, std::uint64_t seed);

}  // namespace hadcode

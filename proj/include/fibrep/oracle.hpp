#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibrep/chung_graham.hpp"
#include "fibrep/golden_string.hpp"
#include "fibrep/index_sets.hpp"
#include "fibrep/natural.hpp"
#include "fibrep/zeckendorf.hpp"

// Brute-force reference implementations. Everything here recomputes from
// first principles, sharing no logic with the fast paths it is meant to
// check, and is deliberately slow. Calls beyond the recommended ranges only
// print a warning to stderr; they are not rejected.
namespace fibrep::oracle {

// Every way to write n as a sum of distinct pairwise nonadjacent Fibonacci
// numbers F(i), 2 <= i <= max_idx, found by exhaustive search with sum
// pruning. Recommended: n <= F(max_idx + 1) - 1 and max_idx <= 30 or so.
std::vector<ZeckendorfDecomposition> z_all(const Natural& n, FibIndex max_idx);

// Every way to write n in the even-index digit system (digits 0, 1, 2 over
// F(2), F(4), ..., F(max_idx) with a zero between any two 2s), likewise by
// exhaustive search.
std::vector<ChungGrahamDecomposition> cg_all(const Natural& n, FibIndex max_idx);

// Elements of the family <= limit found by testing every candidate with
// member(), i.e. by actually decomposing each n. Recommended limit <= 1e6.
std::vector<Natural> set_upto(const SetHandle& h, const Natural& limit);

// First `length` letters of the infinite word obtained by literal string
// concatenation, independent of golden_prefix.
std::string prefix_concat(std::uint64_t length, std::uint64_t cap = kDefaultPrefixCap);

// Letter at a 1-based position, read out of a concatenated prefix.
GoldenLetter letter(std::uint64_t position, std::uint64_t cap = kDefaultPrefixCap);

// Positions of the first `count` B letters, by scanning a concatenated
// prefix.
std::vector<std::uint64_t> b_positions(std::uint64_t count,
                                       std::uint64_t cap = kDefaultPrefixCap);

// floor(n * phi) recomputed through 256 fractional bits of fixed-point
// arithmetic, with the square root taken by GMP rather than the library's
// own routine. Exact for n well beyond 1e30.
Natural floor_phi_fixed(const Natural& n);

}  // namespace fibrep::oracle

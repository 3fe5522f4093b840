#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibrep/golden_string.hpp"
#include "fibrep/natural.hpp"

// Cross-checks every published identity of the library against the
// brute-force reference implementations from oracle.hpp. Each check runs
// over an explicit finite range and reports one result per (check, k) cell.
namespace fibrep::verify {

enum class Target { All, Main, ZToCg, CgToZ, Golden, Tables, Diffs };

std::optional<Target> parse_target(std::string_view name);
std::string_view target_name(Target t);

struct Options {
    FibIndex k_lo = 1;
    FibIndex k_hi = 4;
    std::uint64_t limit = 100000;
    std::uint64_t prefix_cap = kDefaultPrefixCap;
};

struct CheckResult {
    std::string check;
    std::optional<FibIndex> k;  // absent for k-independent checks
    std::uint64_t cases = 0;
    bool passed = true;
    std::string detail;  // first counterexample, set only on failure
};

using ResultSink = std::function<void(const CheckResult&)>;

// Runs every cell of the selected target, streaming results as they finish.
// Returns true when all cells passed.
bool run(Target target, const Options& opts, const ResultSink& sink);

// Individual cells, exposed so callers can run them at custom ranges.

// Structural facts about the infinite word: the concatenation recurrence,
// running letter counts against the closed-form count, letters at Fibonacci
// positions, self-similar segment copies, and the no-AA rule.
std::vector<CheckResult> golden_structure_cells(std::uint64_t limit, std::uint64_t cap);

// b_position against positions read off a scanned prefix.
CheckResult b_position_cell(std::uint64_t count, std::uint64_t cap);

// floor_phi against 256-bit fixed-point recomputation, for 1..n_max plus
// deterministic pseudorandom samples around 1e30.
CheckResult floor_phi_cell(std::uint64_t n_max, unsigned big_samples);

// Family members <= limit found by decomposing every candidate equal the
// elements produced by the rank functions, for each k. A single pass
// decomposes each n once and feeds all four families.
std::vector<CheckResult> set_equality_cells(FibIndex k_lo, FibIndex k_hi,
                                            std::uint64_t limit);

// Exhaustive search finds exactly one representation per n, matching greedy.
CheckResult z_uniqueness_cell(std::uint64_t n_max);
CheckResult cg_uniqueness_cell(std::uint64_t n_max);

// decompose -> value round trip and validity, both systems, n in 0..n_max.
CheckResult round_trip_cell(std::uint64_t n_max);

// For n whose Fibonacci summands include F(2k) as well as some index below
// 2k, the summands below 2k form a number L < F(2k-1) and the even-index
// decomposition of n is the disjoint union of those of L and n - L.
std::vector<CheckResult> split_cells(FibIndex k_lo, FibIndex k_hi, std::uint64_t n_max);

// c_element(k, n+1) == a_element(k, b_position(n) + 1) for n in 1..n_max.
std::vector<CheckResult> bridge_cells(FibIndex k_lo, FibIndex k_hi, std::uint64_t n_max);

// check_z_to_cg / check_cg_to_z over rows 2..j_max, one cell per k.
std::vector<CheckResult> z_to_cg_cells(FibIndex k_lo, FibIndex k_hi, std::uint64_t j_max);
std::vector<CheckResult> cg_to_z_cells(FibIndex k_lo, FibIndex k_hi, std::uint64_t j_max);

// a_gap / c_gap against recomputed consecutive differences, rows up to j_max.
std::vector<CheckResult> gap_cells(FibIndex k_lo, FibIndex k_hi, std::uint64_t j_max);

// Block structure of the rank tables: rows F(l)+1..F(l+1) of the A-family
// table repeat the first F(l-1) rows shifted by F(2k+l), and similarly for
// the B-family table with even shifts taken once or twice.
std::vector<CheckResult> z_table_cells(FibIndex k_lo, FibIndex k_hi, FibIndex l_max);
std::vector<CheckResult> cg_table_cells(FibIndex k_lo, FibIndex k_hi, FibIndex l_max);

// First `count` elements of families A, B, C by rank function against the
// scan-everything oracle. Three cells per k.
std::vector<CheckResult> rank_filter_cells(FibIndex k_lo, FibIndex k_hi,
                                           std::uint64_t count);

}  // namespace fibrep::verify

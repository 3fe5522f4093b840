#pragma once

#include <vector>

#include "fibrep/natural.hpp"

namespace fibrep {

// A sum of pairwise nonadjacent Fibonacci numbers F(i) with i >= 2, stored as
// the sorted list of indices. The empty list stands for 0.
struct ZeckendorfDecomposition {
    std::vector<FibIndex> indices;  // strictly increasing, consecutive gaps >= 2

    bool is_valid() const noexcept;

    friend bool operator==(const ZeckendorfDecomposition&,
                           const ZeckendorfDecomposition&) = default;
};

// Greedy decomposition: repeatedly strip the largest Fibonacci number that
// fits. Total on n >= 0; 0 maps to the empty decomposition.
ZeckendorfDecomposition z_decompose(const Natural& n);

// Sum of F(i) over the index list. Throws std::invalid_argument when the list
// violates the representation invariant.
Natural z_value(const ZeckendorfDecomposition& d);

// Whether F(idx) occurs in the decomposition of n. Requires idx >= 2;
// n == 0 has no summands at all.
bool z_contains(const Natural& n, FibIndex idx);

// Smallest index in the decomposition of n. Requires n >= 1.
FibIndex z_min_index(const Natural& n);

}  // namespace fibrep

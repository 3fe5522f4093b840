#pragma once

#include <vector>

#include "fibrep/natural.hpp"

namespace fibrep {

// One summand of an even-index decomposition: coeff copies of F(index).
struct CgTerm {
    FibIndex index;  // even, >= 2
    unsigned coeff;  // 1 or 2

    friend bool operator==(const CgTerm&, const CgTerm&) = default;
};

// A sum n = sum c_i F(2i) with digits c_i in {0, 1, 2} subject to the rule
// that strictly between any two digit-2 positions there is a digit-0
// position. Zero digits are not stored; the empty list stands for 0.
struct ChungGrahamDecomposition {
    std::vector<CgTerm> terms;  // strictly increasing indices

    bool is_valid() const noexcept;

    friend bool operator==(const ChungGrahamDecomposition&,
                           const ChungGrahamDecomposition&) = default;
};

// Greedy decomposition over even-indexed Fibonacci numbers: pick the largest
// even index whose value fits, and take the digit 2 whenever two copies still
// fit (covering the exact-fit boundary). Total on n >= 0.
ChungGrahamDecomposition cg_decompose(const Natural& n);

// Sum of coeff * F(index) over the terms. Throws std::invalid_argument when
// the term list violates the representation invariant.
Natural cg_value(const ChungGrahamDecomposition& d);

// Digit of F(even_idx) in the decomposition of n: 0, 1, or 2.
// Requires even_idx even and >= 2; n == 0 has all digits zero.
unsigned cg_coeff(const Natural& n, FibIndex even_idx);

// Smallest index carrying a nonzero digit. Requires n >= 1.
FibIndex cg_min_index(const Natural& n);

}  // namespace fibrep

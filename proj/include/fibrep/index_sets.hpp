#pragma once

#include <functional>
#include <vector>

#include "fibrep/natural.hpp"

namespace fibrep {

// The four families of positive integers attached to the even-indexed
// Fibonacci number F(2k):
//   A: the smallest Fibonacci summand of n is exactly F(2k)
//   B: the smallest even-index summand of n is F(2k), taken once or twice
//   C: both at once (A intersect B)
//   I: F(2k) occurs in both decompositions of n, not necessarily minimally
enum class SetKind : char { A = 'A', B = 'B', C = 'C', I = 'I' };

struct SetHandle {
    SetKind kind;
    FibIndex k;  // >= 1
};

// j-th smallest element of family A for parameter k, via the closed form
//   F(2k) + #A(j-1) F(2k+1) + #B(j-1) F(2k+2)
// where #A / #B count letters among the first j-1 letters of the infinite
// word from golden_string.hpp. O(1) big-integer operations. Requires j >= 1.
Natural a_element(FibIndex k, const Natural& j);

// j-th smallest element of family B for parameter k, by descending through
// the largest odd-index Fibonacci number below the rank. O(log j) steps.
// Requires j >= 1.
Natural b_element(FibIndex k, const Natural& j);

// n-th smallest element of family C for parameter k, via the closed form
//   n F(2k) + floor((n-1) phi) F(2k+1).
// Requires n >= 1.
Natural c_element(FibIndex k, const Natural& n);

// Element j of the n-th block of family I: the blocks are the runs
// c_element(k, n) + j for 0 <= j < F(2k-1), and they tile the family in
// order. Requires n >= 1 and j within the block.
Natural i_element(FibIndex k, const Natural& n, const Natural& j);

// rank-th smallest element of the family (rank >= 1), any kind.
Natural nth_element(const SetHandle& h, const Natural& rank);

// Membership by actually decomposing n (never by inverting the closed
// forms). Requires n >= 1.
bool member(const SetHandle& h, const Natural& n);

// Gap a_element(k, j+1) - a_element(k, j), read off one letter of the
// infinite word: F(2k+1) after an A, F(2k+2) after a B. Requires j >= 1.
Natural a_gap(FibIndex k, const Natural& j);

// Gap c_element(k, j+1) - c_element(k, j) for j >= 2: F(2k+2) when the
// letter before the j-th B is itself a B, F(2k+3) when it is an A.
Natural c_gap(FibIndex k, const Natural& j);

// Checks the bridge at row j >= 2 of family A: F(2k) has digit >= 1 in the
// even-index decomposition of a_element(k, j) exactly when letter j-1 of the
// infinite word is B, and no smaller even index has a nonzero digit.
bool check_z_to_cg(FibIndex k, const Natural& j);

// Checks the bridge at row j >= 2 of family B: F(2k) is a Fibonacci summand
// of b_element(k, j) exactly when letter j-1 of the infinite word is A, and
// the smallest summand has index >= 2k-2 (>= 2 when k == 1).
bool check_cg_to_z(FibIndex k, const Natural& j);

// Emits (rank, value) for every element <= limit in increasing order; stops
// early when the callback returns false. Emission order is asserted strictly
// increasing as it is produced. limit < 1 emits nothing.
using SetCallback = std::function<bool(std::uint64_t rank, const Natural& value)>;
void for_each_upto(const SetHandle& h, const Natural& limit, const SetCallback& emit);

std::vector<Natural> elements_upto(const SetHandle& h, const Natural& limit);

}  // namespace fibrep

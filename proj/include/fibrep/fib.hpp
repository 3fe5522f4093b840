#pragma once

#include "fibrep/natural.hpp"

namespace fibrep {

// F(n) for n >= 1, with F(1) = F(2) = 1. Values are memoized per thread in an
// append-only table, so the returned reference stays valid for the lifetime
// of the calling thread. Throws std::invalid_argument for n == 0.
const Natural& fib(FibIndex n);

// Largest n with F(n) <= x, ties resolved to the smaller index (so the result
// is never 1, since F(1) = F(2)). Requires x >= 1.
FibIndex fib_index_below(const Natural& x);

// floor(sqrt(x)) by Newton iteration on integers, with a final correction
// step. Requires x >= 0. Debug builds assert s*s <= x < (s+1)*(s+1).
Natural isqrt(const Natural& x);

// floor(n * phi) with phi = (1 + sqrt 5) / 2, computed exactly as
// (n + isqrt(5 n^2)) div 2. No floating point is involved, so the result is
// correct for arbitrarily large n (5 n^2 is never a perfect square for n >= 1,
// hence the floor never sits on a tie). Requires n >= 0.
Natural floor_phi(const Natural& n);

// floor(n / phi) = floor(n * phi) - n, using 1/phi = phi - 1.
Natural floor_inv_phi(const Natural& n);

}  // namespace fibrep

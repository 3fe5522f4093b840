#include "fibrep/fib.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

namespace fibrep {
namespace {

// Per-thread append-only table; entry i holds F(i), slot 0 is unused.
// A deque keeps references stable while the table grows.
std::deque<Natural>& fib_table() {
    thread_local std::deque<Natural> table{0, 1, 1};
    return table;
}

void grow_to(std::deque<Natural>& table, FibIndex n) {
    while (table.size() <= n) {
        table.push_back(table[table.size() - 1] + table[table.size() - 2]);
    }
}

}  // namespace

const Natural& fib(FibIndex n) {
    if (n == 0) {
        throw std::invalid_argument("fib: index must be >= 1");
    }
    auto& table = fib_table();
    grow_to(table, n);
    return table[n];
}

FibIndex fib_index_below(const Natural& x) {
    if (x < 1) {
        throw std::invalid_argument("fib_index_below: argument must be >= 1");
    }
    auto& table = fib_table();
    while (table.back() <= x) {
        grow_to(table, table.size());
    }
    // table[2..] is nondecreasing and strictly increasing from index 2 on;
    // invariant: table[lo] <= x < table[hi].
    FibIndex lo = 2;
    FibIndex hi = table.size() - 1;
    while (lo + 1 < hi) {
        const FibIndex mid = lo + (hi - lo) / 2;
        if (table[mid] <= x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

Natural isqrt(const Natural& x) {
    if (x < 0) {
        throw std::invalid_argument("isqrt: argument must be >= 0");
    }
    if (x == 0) {
        return 0;
    }
    // Start from a power of two at or above sqrt(x); the iteration then
    // decreases monotonically to floor(sqrt(x)).
    const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    Natural s = Natural(1) << static_cast<mp_bitcnt_t>((bits + 1) / 2);
    for (;;) {
        Natural t = (s + x / s) >> 1;
        if (t >= s) {
            break;
        }
        s = std::move(t);
    }
    while (s * s > x) {
        --s;
    }
    assert(s * s <= x && (s + 1) * (s + 1) > x);
    return s;
}

Natural floor_phi(const Natural& n) {
    if (n < 0) {
        throw std::invalid_argument("floor_phi: argument must be >= 0");
    }
    return (n + isqrt(5 * n * n)) / 2;
}

Natural floor_inv_phi(const Natural& n) {
    if (n < 0) {
        throw std::invalid_argument("floor_inv_phi: argument must be >= 0");
    }
    return floor_phi(n) - n;
}

}  // namespace fibrep

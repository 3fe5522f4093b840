#include "fibrep/zeckendorf.hpp"

#include <algorithm>
#include <stdexcept>

#include "fibrep/fib.hpp"

namespace fibrep {

bool ZeckendorfDecomposition::is_valid() const noexcept {
    FibIndex prev = 0;
    for (FibIndex i : indices) {
        if (i < 2) {
            return false;
        }
        if (prev != 0 && i < prev + 2) {
            return false;
        }
        prev = i;
    }
    return true;
}

ZeckendorfDecomposition z_decompose(const Natural& n) {
    if (n < 0) {
        throw std::invalid_argument("z_decompose: argument must be >= 0");
    }
    ZeckendorfDecomposition d;
    Natural rest = n;
    while (rest > 0) {
        const FibIndex i = fib_index_below(rest);
        d.indices.push_back(i);
        rest -= fib(i);
    }
    std::reverse(d.indices.begin(), d.indices.end());
    return d;
}

Natural z_value(const ZeckendorfDecomposition& d) {
    if (!d.is_valid()) {
        throw std::invalid_argument("z_value: index list breaks the nonadjacency rule");
    }
    Natural sum = 0;
    for (FibIndex i : d.indices) {
        sum += fib(i);
    }
    return sum;
}

bool z_contains(const Natural& n, FibIndex idx) {
    if (idx < 2) {
        throw std::invalid_argument("z_contains: index must be >= 2");
    }
    if (n < 0) {
        throw std::invalid_argument("z_contains: argument must be >= 0");
    }
    const ZeckendorfDecomposition d = z_decompose(n);
    return std::binary_search(d.indices.begin(), d.indices.end(), idx);
}

FibIndex z_min_index(const Natural& n) {
    if (n < 1) {
        throw std::invalid_argument("z_min_index: argument must be >= 1");
    }
    return z_decompose(n).indices.front();
}

}  // namespace fibrep

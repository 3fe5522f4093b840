#include "fibrep/chung_graham.hpp"

#include <algorithm>
#include <stdexcept>

#include "fibrep/fib.hpp"

namespace fibrep {

bool ChungGrahamDecomposition::is_valid() const noexcept {
    FibIndex prev = 0;
    for (const CgTerm& t : terms) {
        if (t.index < 2 || t.index % 2 != 0) {
            return false;
        }
        if (t.coeff != 1 && t.coeff != 2) {
            return false;
        }
        if (prev != 0 && t.index <= prev) {
            return false;
        }
        prev = t.index;
    }
    // Between any two digit-2 positions there must be a digit-0 position.
    // Walk the digit string densely; unstored positions are the zeros.
    bool open2 = false;
    FibIndex next_pos = 1;  // digit positions are index / 2
    for (const CgTerm& t : terms) {
        const FibIndex pos = t.index / 2;
        if (pos > next_pos) {
            open2 = false;  // at least one zero digit in between
        }
        if (t.coeff == 2) {
            if (open2) {
                return false;
            }
            open2 = true;
        }
        next_pos = pos + 1;
    }
    return true;
}

ChungGrahamDecomposition cg_decompose(const Natural& n) {
    if (n < 0) {
        throw std::invalid_argument("cg_decompose: argument must be >= 0");
    }
    ChungGrahamDecomposition d;
    Natural rest = n;
    while (rest > 0) {
        FibIndex i = fib_index_below(rest);
        if (i % 2 != 0) {
            --i;  // only even-indexed summands are allowed
        }
        const unsigned c = (2 * fib(i) <= rest) ? 2u : 1u;
        d.terms.push_back({i, c});
        rest -= c * fib(i);
    }
    std::reverse(d.terms.begin(), d.terms.end());
    return d;
}

Natural cg_value(const ChungGrahamDecomposition& d) {
    if (!d.is_valid()) {
        throw std::invalid_argument("cg_value: term list breaks the digit rules");
    }
    Natural sum = 0;
    for (const CgTerm& t : d.terms) {
        sum += t.coeff * fib(t.index);
    }
    return sum;
}

unsigned cg_coeff(const Natural& n, FibIndex even_idx) {
    if (even_idx < 2 || even_idx % 2 != 0) {
        throw std::invalid_argument("cg_coeff: index must be even and >= 2");
    }
    if (n < 0) {
        throw std::invalid_argument("cg_coeff: argument must be >= 0");
    }
    for (const CgTerm& t : cg_decompose(n).terms) {
        if (t.index == even_idx) {
            return t.coeff;
        }
    }
    return 0;
}

FibIndex cg_min_index(const Natural& n) {
    if (n < 1) {
        throw std::invalid_argument("cg_min_index: argument must be >= 1");
    }
    return cg_decompose(n).terms.front().index;
}

}  // namespace fibrep

#include "fibrep/index_sets.hpp"

#include <stdexcept>

#include "fibrep/chung_graham.hpp"
#include "fibrep/fib.hpp"
#include "fibrep/golden_string.hpp"
#include "fibrep/zeckendorf.hpp"

namespace fibrep {
namespace {

void require_k(FibIndex k) {
    if (k < 1) {
        throw std::invalid_argument("family parameter k must be >= 1");
    }
    if (k >= (FibIndex{1} << 62)) {
        throw std::invalid_argument("family parameter k is implausibly large");
    }
}

void require_rank(const Natural& j, const char* who) {
    if (j < 1) {
        throw std::invalid_argument(std::string(who) + ": rank must be >= 1");
    }
}

}  // namespace

Natural a_element(FibIndex k, const Natural& j) {
    require_k(k);
    require_rank(j, "a_element");
    const Natural b = count_b(j - 1);
    const Natural a = j - 1 - b;
    return fib(2 * k) + a * fib(2 * k + 1) + b * fib(2 * k + 2);
}

Natural b_element(FibIndex k, const Natural& j) {
    require_k(k);
    require_rank(j, "b_element");
    // Strip the largest odd-index Fibonacci number F(2l+1) below the rank;
    // the element gains F(2k+2l) once or twice depending on which half of
    // the range F(2l+1) < rank <= F(2l+3) the rank falls into.
    Natural rank = j;
    Natural acc = 0;
    while (rank > 2) {
        FibIndex m = fib_index_below(rank - 1);
        if (m % 2 == 0) {
            --m;
        }
        const FibIndex l = (m - 1) / 2;  // l >= 1
        if (rank <= 2 * fib(2 * l + 1)) {
            acc += fib(2 * k + 2 * l);
            rank -= fib(2 * l + 1);
        } else {
            acc += 2 * fib(2 * k + 2 * l);
            rank -= 2 * fib(2 * l + 1);
        }
    }
    acc += (rank == 2) ? Natural(2 * fib(2 * k)) : fib(2 * k);
    return acc;
}

Natural c_element(FibIndex k, const Natural& n) {
    require_k(k);
    require_rank(n, "c_element");
    return n * fib(2 * k) + floor_phi(n - 1) * fib(2 * k + 1);
}

Natural i_element(FibIndex k, const Natural& n, const Natural& j) {
    require_k(k);
    require_rank(n, "i_element");
    if (j < 0 || j >= fib(2 * k - 1)) {
        throw std::invalid_argument("i_element: block offset out of range");
    }
    return c_element(k, n) + j;
}

Natural nth_element(const SetHandle& h, const Natural& rank) {
    require_k(h.k);
    require_rank(rank, "nth_element");
    switch (h.kind) {
        case SetKind::A:
            return a_element(h.k, rank);
        case SetKind::B:
            return b_element(h.k, rank);
        case SetKind::C:
            return c_element(h.k, rank);
        case SetKind::I: {
            const Natural& block = fib(2 * h.k - 1);
            const Natural n = (rank - 1) / block + 1;
            const Natural j = (rank - 1) % block;
            return i_element(h.k, n, j);
        }
    }
    throw std::invalid_argument("nth_element: unknown family kind");
}

bool member(const SetHandle& h, const Natural& n) {
    require_k(h.k);
    if (n < 1) {
        throw std::invalid_argument("member: argument must be >= 1");
    }
    const FibIndex target = 2 * h.k;
    switch (h.kind) {
        case SetKind::A:
            return z_min_index(n) == target;
        case SetKind::B:
            return cg_min_index(n) == target;
        case SetKind::C:
            return z_min_index(n) == target && cg_min_index(n) == target;
        case SetKind::I:
            return z_contains(n, target) && cg_coeff(n, target) >= 1;
    }
    throw std::invalid_argument("member: unknown family kind");
}

Natural a_gap(FibIndex k, const Natural& j) {
    require_k(k);
    require_rank(j, "a_gap");
    return letter_at(j) == GoldenLetter::A ? fib(2 * k + 1) : fib(2 * k + 2);
}

Natural c_gap(FibIndex k, const Natural& j) {
    require_k(k);
    if (j < 2) {
        throw std::invalid_argument("c_gap: rank must be >= 2");
    }
    const Natural before = b_position(j) - 1;
    return letter_at(before) == GoldenLetter::B ? fib(2 * k + 2) : fib(2 * k + 3);
}

bool check_z_to_cg(FibIndex k, const Natural& j) {
    require_k(k);
    if (j < 2) {
        throw std::invalid_argument("check_z_to_cg: row must be >= 2");
    }
    const Natural p = a_element(k, j);
    const bool has_even_term = cg_coeff(p, 2 * k) >= 1;
    const bool letter_is_b = letter_at(j - 1) == GoldenLetter::B;
    return has_even_term == letter_is_b && cg_min_index(p) >= 2 * k;
}

bool check_cg_to_z(FibIndex k, const Natural& j) {
    require_k(k);
    if (j < 2) {
        throw std::invalid_argument("check_cg_to_z: row must be >= 2");
    }
    const Natural q = b_element(k, j);
    const bool has_summand = z_contains(q, 2 * k);
    const bool letter_is_a = letter_at(j - 1) == GoldenLetter::A;
    const FibIndex floor_idx = (k == 1) ? 2 : 2 * k - 2;
    return has_summand == letter_is_a && z_min_index(q) >= floor_idx;
}

void for_each_upto(const SetHandle& h, const Natural& limit, const SetCallback& emit) {
    require_k(h.k);
    Natural prev = 0;
    if (h.kind == SetKind::I) {
        // Blocks of F(2k-1) consecutive integers; plain nested loops emit the
        // family in order, and the ordering is asserted as it streams out.
        const Natural block = fib(2 * h.k - 1);
        std::uint64_t rank = 0;
        for (Natural n = 1;; ++n) {
            const Natural base = c_element(h.k, n);
            if (base > limit) {
                break;
            }
            if (prev != 0 && base <= prev) {
                throw std::logic_error("for_each_upto: family blocks overlap");
            }
            for (Natural j = 0; j < block; ++j) {
                Natural v = base + j;
                if (v > limit) {
                    break;
                }
                prev = v;
                if (!emit(++rank, v)) {
                    return;
                }
            }
        }
        return;
    }
    for (std::uint64_t rank = 1;; ++rank) {
        Natural v = nth_element(h, Natural(static_cast<unsigned long>(rank)));
        if (v > limit) {
            break;
        }
        if (v <= prev) {
            throw std::logic_error("for_each_upto: ranks out of order");
        }
        prev = v;
        if (!emit(rank, v)) {
            return;
        }
    }
}

std::vector<Natural> elements_upto(const SetHandle& h, const Natural& limit) {
    std::vector<Natural> out;
    for_each_upto(h, limit, [&out](std::uint64_t, const Natural& v) {
        out.push_back(v);
        return true;
    });
    return out;
}

}  // namespace fibrep

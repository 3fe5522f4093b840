#include "fibrep/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "fibrep/fib.hpp"

namespace fibrep::oracle {
namespace {

void warn_beyond(bool beyond, const char* who, const char* bound) {
    if (beyond) {
        std::fprintf(stderr, "fibrep oracle warning: %s called beyond the recommended %s\n",
                     who, bound);
    }
}

// Largest sum reachable with distinct Fibonacci numbers of index <= i (with
// or without the nonadjacency rule the bound F(i+1) - 1 holds for the
// nonadjacent case, which is what the pruning needs).
struct ZSearch {
    std::vector<Natural> reach;  // reach[i] = F(i+1) - 1
    std::vector<FibIndex> picked;
    std::vector<ZeckendorfDecomposition>* out;

    void run(const Natural& remaining, FibIndex i) {
        if (remaining == 0) {
            ZeckendorfDecomposition d;
            d.indices.assign(picked.rbegin(), picked.rend());
            out->push_back(std::move(d));
            return;
        }
        if (i < 2 || remaining > reach[i]) {
            return;
        }
        if (fib(i) <= remaining) {
            picked.push_back(i);
            run(remaining - fib(i), i >= 4 ? i - 2 : 0);
            picked.pop_back();
        }
        run(remaining, i - 1);
    }
};

struct CgSearch {
    std::vector<Natural> reach;  // reach[i] = 2 (F(i+1) - 1), even i
    std::vector<CgTerm> picked;
    std::vector<ChungGrahamDecomposition>* out;

    // open2: a digit 2 sits at a higher position with no digit 0 in between.
    void run(const Natural& remaining, FibIndex i, bool open2) {
        if (remaining == 0) {
            ChungGrahamDecomposition d;
            d.terms.assign(picked.rbegin(), picked.rend());
            out->push_back(std::move(d));
            return;
        }
        if (i < 2 || remaining > reach[i]) {
            return;
        }
        run(remaining, i - 2, false);  // digit 0 here
        if (fib(i) <= remaining) {
            picked.push_back({i, 1});
            run(remaining - fib(i), i - 2, open2);
            picked.pop_back();
        }
        if (!open2 && 2 * fib(i) <= remaining) {
            picked.push_back({i, 2});
            run(remaining - 2 * fib(i), i - 2, true);
            picked.pop_back();
        }
    }
};

}  // namespace

std::vector<ZeckendorfDecomposition> z_all(const Natural& n, FibIndex max_idx) {
    if (n < 0) {
        throw std::invalid_argument("oracle::z_all: argument must be >= 0");
    }
    if (max_idx < 2) {
        throw std::invalid_argument("oracle::z_all: max_idx must be >= 2");
    }
    warn_beyond(max_idx > 45, "z_all", "max_idx of 45");
    ZSearch search;
    search.reach.resize(max_idx + 1);
    for (FibIndex i = 2; i <= max_idx; ++i) {
        search.reach[i] = fib(i + 1) - 1;
    }
    std::vector<ZeckendorfDecomposition> out;
    search.out = &out;
    search.run(n, max_idx);
    return out;
}

std::vector<ChungGrahamDecomposition> cg_all(const Natural& n, FibIndex max_idx) {
    if (n < 0) {
        throw std::invalid_argument("oracle::cg_all: argument must be >= 0");
    }
    if (max_idx < 2 || max_idx % 2 != 0) {
        throw std::invalid_argument("oracle::cg_all: max_idx must be even and >= 2");
    }
    warn_beyond(max_idx > 44, "cg_all", "max_idx of 44");
    CgSearch search;
    search.reach.resize(max_idx + 1);
    for (FibIndex i = 2; i <= max_idx; i += 2) {
        search.reach[i] = 2 * (fib(i + 1) - 1);
    }
    std::vector<ChungGrahamDecomposition> out;
    search.out = &out;
    search.run(n, max_idx, false);
    return out;
}

std::vector<Natural> set_upto(const SetHandle& h, const Natural& limit) {
    warn_beyond(limit > 1000000, "set_upto", "limit of 1e6");
    std::vector<Natural> out;
    for (Natural n = 1; n <= limit; ++n) {
        if (member(h, n)) {
            out.push_back(n);
        }
    }
    return out;
}

std::string prefix_concat(std::uint64_t length, std::uint64_t cap) {
    if (length > cap) {
        throw PrefixCapError(length, cap);
    }
    std::string prev = "B";
    std::string cur = "BA";
    while (cur.size() < length) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(length);
    return cur;
}

GoldenLetter letter(std::uint64_t position, std::uint64_t cap) {
    if (position < 1) {
        throw std::invalid_argument("oracle::letter: positions are 1-based");
    }
    const std::string s = prefix_concat(position, cap);
    return s[position - 1] == 'B' ? GoldenLetter::B : GoldenLetter::A;
}

std::vector<std::uint64_t> b_positions(std::uint64_t count, std::uint64_t cap) {
    // The j-th B sits near j * phi, so a prefix a little longer than that
    // suffices; grow once more in the unlikely case it does not.
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::uint64_t len = count * 2 + 8;
    for (;;) {
        const std::string s = prefix_concat(std::min(len, cap), cap);
        out.clear();
        for (std::uint64_t i = 0; i < s.size() && out.size() < count; ++i) {
            if (s[i] == 'B') {
                out.push_back(i + 1);
            }
        }
        if (out.size() == count) {
            return out;
        }
        if (len >= cap) {
            throw PrefixCapError(len * 2, cap);
        }
        len *= 2;
    }
}

Natural floor_phi_fixed(const Natural& n) {
    if (n < 0) {
        throw std::invalid_argument("oracle::floor_phi_fixed: argument must be >= 0");
    }
    static const Natural phi_fp = [] {
        Natural five_shifted = Natural(5) << 512;
        Natural root;
        mpz_sqrt(root.get_mpz_t(), five_shifted.get_mpz_t());
        return Natural((root + (Natural(1) << 256)) / 2);  // floor(phi * 2^256)
    }();
    return (n * phi_fp) >> 256;
}

}  // namespace fibrep::oracle

#include "fibrep/verify.hpp"

#include <algorithm>
#include <random>
#include <string_view>

#include "fibrep/chung_graham.hpp"
#include "fibrep/fib.hpp"
#include "fibrep/index_sets.hpp"
#include "fibrep/oracle.hpp"
#include "fibrep/zeckendorf.hpp"

namespace fibrep::verify {
namespace {

CheckResult make(std::string name, std::optional<FibIndex> k = std::nullopt) {
    CheckResult c;
    c.check = std::move(name);
    c.k = k;
    return c;
}

// Records the first counterexample; later ones add nothing.
void fail(CheckResult& c, std::string detail) {
    if (c.passed) {
        c.passed = false;
        c.detail = std::move(detail);
    }
}

std::uint64_t fib_u64(FibIndex n) {
    const Natural& f = fib(n);
    if (!f.fits_ulong_p()) {
        throw std::overflow_error("fib_u64: value does not fit in 64 bits");
    }
    return f.get_ui();
}

Natural nat(std::uint64_t v) {
    return Natural(static_cast<unsigned long>(v));
}

bool has_index(const ZeckendorfDecomposition& d, FibIndex idx) {
    return std::binary_search(d.indices.begin(), d.indices.end(), idx);
}

unsigned coeff_of(const ChungGrahamDecomposition& d, FibIndex idx) {
    for (const CgTerm& t : d.terms) {
        if (t.index == idx) {
            return t.coeff;
        }
    }
    return 0;
}

}  // namespace

std::optional<Target> parse_target(std::string_view name) {
    if (name == "all") return Target::All;
    if (name == "main") return Target::Main;
    if (name == "z-to-cg") return Target::ZToCg;
    if (name == "cg-to-z") return Target::CgToZ;
    if (name == "golden") return Target::Golden;
    if (name == "tables") return Target::Tables;
    if (name == "diffs") return Target::Diffs;
    return std::nullopt;
}

std::string_view target_name(Target t) {
    switch (t) {
        case Target::All: return "all";
        case Target::Main: return "main";
        case Target::ZToCg: return "z-to-cg";
        case Target::CgToZ: return "cg-to-z";
        case Target::Golden: return "golden";
        case Target::Tables: return "tables";
        case Target::Diffs: return "diffs";
    }
    return "?";
}

std::vector<CheckResult> golden_structure_cells(std::uint64_t limit, std::uint64_t cap) {
    std::vector<CheckResult> out;
    // One window covers both the fixed structural ranges (longest need:
    // positions up to F(27) - 2) and the letter scans up to `limit`.
    const std::uint64_t want = std::max<std::uint64_t>(limit, fib_u64(27) - 2);
    const std::uint64_t len = std::min(want, cap);
    const GoldenPrefix prefix = golden_prefix(len, cap);
    const std::string_view s(prefix.letters);

    {
        CheckResult c = make("golden-prefix-recursion");
        std::string prev = "B";
        std::string cur = "BA";
        if (len >= 1) {
            ++c.cases;
            if (golden_prefix(1, cap).letters != prev) {
                fail(c, "step 1: prefix of length 1 is not B");
            }
        }
        for (FibIndex n = 2; n <= 25 && cur.size() <= len; ++n) {
            ++c.cases;
            if (golden_prefix(cur.size(), cap).letters != cur) {
                fail(c, "step " + std::to_string(n) + ": prefix differs from concatenation");
            }
            std::string next = cur + prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        out.push_back(std::move(c));
    }

    {
        CheckResult c = make("golden-b-count");
        const std::uint64_t n_max = std::min<std::uint64_t>(limit, len);
        Natural running = 0;
        Natural n = 0;
        ++c.cases;
        if (count_b(0) != 0) {
            fail(c, "count over the empty prefix is nonzero");
        }
        for (std::uint64_t i = 0; i < n_max; ++i) {
            ++n;
            if (s[i] == 'B') {
                ++running;
            }
            ++c.cases;
            if (count_b(n) != running) {
                fail(c, "n=" + std::to_string(i + 1) + ": closed-form count " +
                            to_decimal(count_b(n)) + " != scanned " + to_decimal(running));
                break;
            }
        }
        out.push_back(std::move(c));
    }

    {
        CheckResult c = make("golden-fib-letters");
        for (FibIndex n = 1; n <= 12; ++n) {
            ++c.cases;
            const Natural& even_pos = fib(2 * n);
            const Natural& odd_pos = fib(2 * n + 1);
            if (letter_at(even_pos) != GoldenLetter::B) {
                fail(c, "letter at even-step position F(" + std::to_string(2 * n) + ") is not B");
            }
            if (letter_at(odd_pos) != GoldenLetter::A) {
                fail(c, "letter at odd-step position F(" + std::to_string(2 * n + 1) + ") is not A");
            }
            if (even_pos.fits_ulong_p() && even_pos.get_ui() <= len &&
                prefix.at(even_pos.get_ui()) != GoldenLetter::B) {
                fail(c, "prefix disagrees at position F(" + std::to_string(2 * n) + ")");
            }
        }
        out.push_back(std::move(c));
    }

    {
        CheckResult c = make("golden-segment-shift");
        for (FibIndex n = 2; n <= 24; ++n) {
            const std::uint64_t f_n = fib_u64(n);
            const std::uint64_t f_n1 = fib_u64(n + 1);
            if (f_n1 + f_n > len) {
                break;
            }
            ++c.cases;
            if (s.substr(f_n1, f_n) != s.substr(0, f_n)) {
                fail(c, "n=" + std::to_string(n) + ": shifted segment differs from the prefix");
            }
        }
        out.push_back(std::move(c));
    }

    {
        CheckResult c = make("golden-block-repeat");
        for (FibIndex n = 4; n <= 24; ++n) {
            const std::uint64_t f_n = fib_u64(n);
            if (2 * f_n > len) {
                break;
            }
            ++c.cases;
            if (s.substr(f_n, f_n) != s.substr(0, f_n)) {
                fail(c, "n=" + std::to_string(n) + ": second block differs from the first");
            }
        }
        out.push_back(std::move(c));
    }

    {
        CheckResult c = make("golden-neighbor-letters");
        for (FibIndex n = 2; n <= 12; ++n) {
            ++c.cases;
            const Natural& f = fib(2 * n + 1);
            if (letter_at(2 * f) != GoldenLetter::A) {
                fail(c, "n=" + std::to_string(n) + ": letter at twice F(2n+1) is not A");
            }
            if (letter_at(f - 1) != GoldenLetter::B) {
                fail(c, "n=" + std::to_string(n) + ": letter before F(2n+1) is not B");
            }
        }
        out.push_back(std::move(c));
    }

    {
        CheckResult c = make("golden-tail-copy");
        for (FibIndex n = 4; n <= 24; ++n) {
            const std::uint64_t f_n = fib_u64(n);
            const std::uint64_t start = 2 * fib_u64(n + 1);
            if (start + f_n - 2 > len) {
                break;
            }
            ++c.cases;
            if (s.substr(start, f_n - 2) != s.substr(0, f_n - 2)) {
                fail(c, "n=" + std::to_string(n) + ": tail copy differs from the prefix");
            }
        }
        out.push_back(std::move(c));
    }

    {
        CheckResult c = make("golden-a-then-b");
        const std::uint64_t n_max = std::min<std::uint64_t>(limit, len);
        for (std::uint64_t i = 0; i + 1 < n_max; ++i) {
            ++c.cases;
            if (s[i] == 'A' && s[i + 1] != 'B') {
                fail(c, "positions " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                            ": adjacent A letters");
                break;
            }
        }
        out.push_back(std::move(c));
    }

    return out;
}

CheckResult b_position_cell(std::uint64_t count, std::uint64_t cap) {
    CheckResult c = make("golden-b-positions");
    const std::vector<std::uint64_t> scanned = oracle::b_positions(count, cap);
    for (std::uint64_t j = 1; j <= count; ++j) {
        ++c.cases;
        const Natural pos = b_position(nat(j));
        if (!pos.fits_ulong_p() || pos.get_ui() != scanned[j - 1]) {
            fail(c, "j=" + std::to_string(j) + ": closed form " + to_decimal(pos) +
                        " != scanned " + std::to_string(scanned[j - 1]));
            break;
        }
    }
    return c;
}

CheckResult floor_phi_cell(std::uint64_t n_max, unsigned big_samples) {
    CheckResult c = make("floor-phi-fixed");
    Natural n = 0;
    for (std::uint64_t i = 1; i <= n_max; ++i) {
        ++n;
        ++c.cases;
        if (floor_phi(n) != oracle::floor_phi_fixed(n)) {
            fail(c, "n=" + to_decimal(n) + ": square-root and fixed-point routes differ");
            break;
        }
    }
    Natural base;
    mpz_ui_pow_ui(base.get_mpz_t(), 10, 30);
    std::mt19937_64 rng(0x5eedf1b5u);
    for (unsigned i = 0; i < big_samples; ++i) {
        const Natural off = nat(rng());
        const Natural sample = (i % 2 == 0) ? Natural(base + off) : Natural(base - off);
        ++c.cases;
        if (floor_phi(sample) != oracle::floor_phi_fixed(sample)) {
            fail(c, "n=" + to_decimal(sample) + ": square-root and fixed-point routes differ");
            break;
        }
    }
    return c;
}

std::vector<CheckResult> set_equality_cells(FibIndex k_lo, FibIndex k_hi,
                                            std::uint64_t limit) {
    std::vector<CheckResult> out;
    if (k_lo > k_hi) {
        return out;
    }
    // One pass decomposes each n once; every k then tests membership on the
    // same pair of decompositions.
    std::vector<std::vector<Natural>> found(k_hi - k_lo + 1);
    Natural n = 0;
    for (std::uint64_t i = 1; i <= limit; ++i) {
        ++n;
        const ZeckendorfDecomposition zd = z_decompose(n);
        const ChungGrahamDecomposition cd = cg_decompose(n);
        for (FibIndex k = k_lo; k <= k_hi; ++k) {
            if (has_index(zd, 2 * k) && coeff_of(cd, 2 * k) >= 1) {
                found[k - k_lo].push_back(n);
            }
        }
    }
    for (FibIndex k = k_lo; k <= k_hi; ++k) {
        CheckResult c = make("main-set-equality", k);
        c.cases = limit;
        const std::vector<Natural> ranked =
            elements_upto({SetKind::I, k}, nat(limit));
        const std::vector<Natural>& brute = found[k - k_lo];
        if (ranked.size() != brute.size()) {
            fail(c, "rank functions give " + std::to_string(ranked.size()) +
                        " elements, decomposition filter gives " +
                        std::to_string(brute.size()));
        } else {
            for (std::size_t i = 0; i < ranked.size(); ++i) {
                if (ranked[i] != brute[i]) {
                    fail(c, "element " + std::to_string(i + 1) + ": rank functions give " +
                                to_decimal(ranked[i]) + ", filter gives " +
                                to_decimal(brute[i]));
                    break;
                }
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

CheckResult z_uniqueness_cell(std::uint64_t n_max) {
    CheckResult c = make("zeck-uniqueness");
    Natural n = 0;
    for (std::uint64_t i = 1; i <= n_max; ++i) {
        ++n;
        ++c.cases;
        const auto all = oracle::z_all(n, fib_index_below(n));
        if (all.size() != 1) {
            fail(c, "n=" + to_decimal(n) + ": " + std::to_string(all.size()) +
                        " representations found");
            break;
        }
        if (!(all[0] == z_decompose(n)) || !all[0].is_valid()) {
            fail(c, "n=" + to_decimal(n) + ": search result differs from greedy");
            break;
        }
    }
    return c;
}

CheckResult cg_uniqueness_cell(std::uint64_t n_max) {
    CheckResult c = make("cg-uniqueness");
    Natural n = 0;
    for (std::uint64_t i = 1; i <= n_max; ++i) {
        ++n;
        ++c.cases;
        FibIndex top = fib_index_below(n);
        if (top % 2 != 0) {
            --top;
        }
        const auto all = oracle::cg_all(n, top);
        if (all.size() != 1) {
            fail(c, "n=" + to_decimal(n) + ": " + std::to_string(all.size()) +
                        " representations found");
            break;
        }
        if (!(all[0] == cg_decompose(n)) || !all[0].is_valid()) {
            fail(c, "n=" + to_decimal(n) + ": search result differs from greedy");
            break;
        }
    }
    return c;
}

CheckResult round_trip_cell(std::uint64_t n_max) {
    CheckResult c = make("round-trip");
    Natural n = 0;
    for (std::uint64_t i = 0; i <= n_max; ++i) {
        ++c.cases;
        const ZeckendorfDecomposition zd = z_decompose(n);
        const ChungGrahamDecomposition cd = cg_decompose(n);
        if (!zd.is_valid() || z_value(zd) != n) {
            fail(c, "n=" + to_decimal(n) + ": Fibonacci-summand round trip broke");
            break;
        }
        if (!cd.is_valid() || cg_value(cd) != n) {
            fail(c, "n=" + to_decimal(n) + ": even-index round trip broke");
            break;
        }
        ++n;
    }
    return c;
}

std::vector<CheckResult> split_cells(FibIndex k_lo, FibIndex k_hi, std::uint64_t n_max) {
    std::vector<CheckResult> out;
    for (FibIndex k = k_lo; k <= k_hi; ++k) {
        CheckResult c = make("low-high-split", k);
        Natural n = 0;
        for (std::uint64_t i = 1; i <= n_max; ++i) {
            ++n;
            const ZeckendorfDecomposition zd = z_decompose(n);
            if (!has_index(zd, 2 * k) || zd.indices.front() >= 2 * k) {
                continue;
            }
            ++c.cases;
            Natural low = 0;
            for (FibIndex idx : zd.indices) {
                if (idx >= 2 * k) {
                    break;
                }
                low += fib(idx);
            }
            if (low >= fib(2 * k - 1)) {
                fail(c, "n=" + to_decimal(n) + ": low part " + to_decimal(low) +
                            " reaches F(" + std::to_string(2 * k - 1) + ")");
                break;
            }
            const ChungGrahamDecomposition whole = cg_decompose(n);
            const ChungGrahamDecomposition lo_part = cg_decompose(low);
            const ChungGrahamDecomposition hi_part = cg_decompose(n - low);
            ChungGrahamDecomposition merged;
            std::merge(lo_part.terms.begin(), lo_part.terms.end(), hi_part.terms.begin(),
                       hi_part.terms.end(), std::back_inserter(merged.terms),
                       [](const CgTerm& a, const CgTerm& b) { return a.index < b.index; });
            bool disjoint = true;
            for (std::size_t t = 1; t < merged.terms.size(); ++t) {
                if (merged.terms[t].index <= merged.terms[t - 1].index) {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) {
                fail(c, "n=" + to_decimal(n) + ": the two parts share an index");
                break;
            }
            if (!(merged == whole)) {
                fail(c, "n=" + to_decimal(n) + ": parts do not recombine to the whole");
                break;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CheckResult> bridge_cells(FibIndex k_lo, FibIndex k_hi, std::uint64_t n_max) {
    std::vector<CheckResult> out;
    for (FibIndex k = k_lo; k <= k_hi; ++k) {
        CheckResult c = make("c-rank-b-bridge", k);
        Natural n = 0;
        for (std::uint64_t i = 1; i <= n_max; ++i) {
            ++n;
            ++c.cases;
            if (c_element(k, n + 1) != a_element(k, b_position(n) + 1)) {
                fail(c, "n=" + to_decimal(n) + ": C rank and shifted A rank disagree");
                break;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CheckResult> z_to_cg_cells(FibIndex k_lo, FibIndex k_hi, std::uint64_t j_max) {
    std::vector<CheckResult> out;
    for (FibIndex k = k_lo; k <= k_hi; ++k) {
        CheckResult c = make("zeck-row-cg-term", k);
        Natural j = 1;
        for (std::uint64_t i = 2; i <= j_max; ++i) {
            ++j;
            ++c.cases;
            if (!check_z_to_cg(k, j)) {
                fail(c, "row j=" + to_decimal(j) + " breaks the letter correspondence");
                break;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CheckResult> cg_to_z_cells(FibIndex k_lo, FibIndex k_hi, std::uint64_t j_max) {
    std::vector<CheckResult> out;
    for (FibIndex k = k_lo; k <= k_hi; ++k) {
        CheckResult c = make("cg-row-zeck-term", k);
        Natural j = 1;
        for (std::uint64_t i = 2; i <= j_max; ++i) {
            ++j;
            ++c.cases;
            if (!check_cg_to_z(k, j)) {
                fail(c, "row j=" + to_decimal(j) + " breaks the letter correspondence");
                break;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CheckResult> gap_cells(FibIndex k_lo, FibIndex k_hi, std::uint64_t j_max) {
    std::vector<CheckResult> out;
    for (FibIndex k = k_lo; k <= k_hi; ++k) {
        {
            CheckResult c = make("zeck-gap-letter", k);
            Natural j = 0;
            Natural cur = a_element(k, 1);
            for (std::uint64_t i = 1; i <= j_max; ++i) {
                ++j;
                ++c.cases;
                const Natural next = a_element(k, j + 1);
                if (a_gap(k, j) != next - cur) {
                    fail(c, "j=" + to_decimal(j) + ": letter rule disagrees with the gap " +
                                to_decimal(next - cur));
                    break;
                }
                cur = next;
            }
            out.push_back(std::move(c));
        }
        {
            CheckResult c = make("common-gap-letter", k);
            Natural j = 1;
            Natural cur = c_element(k, 2);
            for (std::uint64_t i = 2; i <= j_max; ++i) {
                ++j;
                ++c.cases;
                const Natural next = c_element(k, j + 1);
                if (c_gap(k, j) != next - cur) {
                    fail(c, "j=" + to_decimal(j) + ": letter rule disagrees with the gap " +
                                to_decimal(next - cur));
                    break;
                }
                cur = next;
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<CheckResult> z_table_cells(FibIndex k_lo, FibIndex k_hi, FibIndex l_max) {
    std::vector<CheckResult> out;
    for (FibIndex k = k_lo; k <= k_hi; ++k) {
        CheckResult c = make("zeck-table-recursion", k);
        for (FibIndex l = 2; l <= l_max; ++l) {
            const std::uint64_t row_lo = fib_u64(l) + 1;
            const std::uint64_t row_hi = fib_u64(l + 1);
            for (std::uint64_t j = row_lo; j <= row_hi; ++j) {
                ++c.cases;
                const Natural here = a_element(k, nat(j));
                const Natural back = a_element(k, nat(j - fib_u64(l)));
                if (here != back + fib(2 * k + l)) {
                    fail(c, "l=" + std::to_string(l) + " j=" + std::to_string(j) +
                                ": block copy misses the shift");
                    break;
                }
                if (z_decompose(here).indices.back() != 2 * k + l) {
                    fail(c, "l=" + std::to_string(l) + " j=" + std::to_string(j) +
                                ": top summand index is not 2k+l");
                    break;
                }
            }
            if (!c.passed) {
                break;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CheckResult> cg_table_cells(FibIndex k_lo, FibIndex k_hi, FibIndex l_max) {
    std::vector<CheckResult> out;
    for (FibIndex k = k_lo; k <= k_hi; ++k) {
        CheckResult c = make("cg-table-recursion", k);
        for (FibIndex l = 1; l <= l_max && c.passed; ++l) {
            const std::uint64_t f_odd = fib_u64(2 * l + 1);  // block being copied
            const std::uint64_t row_hi = fib_u64(2 * l + 3);
            for (std::uint64_t j = f_odd + 1; j <= row_hi; ++j) {
                ++c.cases;
                const bool once = j <= 2 * f_odd;
                const std::uint64_t back_j = once ? j - f_odd : j - 2 * f_odd;
                const unsigned mult = once ? 1 : 2;
                const Natural here = b_element(k, nat(j));
                const Natural back = b_element(k, nat(back_j));
                if (here != back + mult * fib(2 * k + 2 * l)) {
                    fail(c, "l=" + std::to_string(l) + " j=" + std::to_string(j) +
                                ": block copy misses the shift");
                    break;
                }
                const ChungGrahamDecomposition d = cg_decompose(here);
                const CgTerm& top = d.terms.back();
                if (top.index != 2 * k + 2 * l || top.coeff != mult) {
                    fail(c, "l=" + std::to_string(l) + " j=" + std::to_string(j) +
                                ": top term is not the expected multiple of F(2k+2l)");
                    break;
                }
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CheckResult> rank_filter_cells(FibIndex k_lo, FibIndex k_hi,
                                           std::uint64_t count) {
    std::vector<CheckResult> out;
    const SetKind kinds[] = {SetKind::A, SetKind::B, SetKind::C};
    const char* names[] = {"rank-filter-a", "rank-filter-b", "rank-filter-c"};
    for (FibIndex k = k_lo; k <= k_hi; ++k) {
        for (int which = 0; which < 3; ++which) {
            CheckResult c = make(names[which], k);
            const SetHandle h{kinds[which], k};
            const Natural last = nth_element(h, nat(count));
            const std::vector<Natural> scanned = oracle::set_upto(h, last);
            if (scanned.size() != count) {
                fail(c, "scan to " + to_decimal(last) + " finds " +
                            std::to_string(scanned.size()) + " elements, expected " +
                            std::to_string(count));
            }
            for (std::uint64_t j = 1; c.passed && j <= count; ++j) {
                if (nth_element(h, nat(j)) != scanned[j - 1]) {
                    fail(c, "rank " + std::to_string(j) + ": rank function gives " +
                                to_decimal(nth_element(h, nat(j))) + ", scan gives " +
                                to_decimal(scanned[j - 1]));
                }
            }
            c.cases = count;
            out.push_back(std::move(c));
        }
    }
    return out;
}

bool run(Target target, const Options& opts, const ResultSink& sink) {
    bool ok = true;
    const auto emit = [&](CheckResult c) {
        ok = ok && c.passed;
        sink(c);
    };
    const auto emit_all = [&](std::vector<CheckResult> v) {
        for (CheckResult& c : v) {
            emit(std::move(c));
        }
    };
    const auto wants = [target](Target t) { return target == Target::All || target == t; };
    const std::uint64_t limit = opts.limit;

    if (wants(Target::Golden)) {
        emit_all(golden_structure_cells(limit, opts.prefix_cap));
        emit(b_position_cell(std::min<std::uint64_t>(limit, 10000), opts.prefix_cap));
        emit(floor_phi_cell(std::min<std::uint64_t>(limit, 100000), 20));
    }
    if (wants(Target::Main)) {
        emit_all(set_equality_cells(opts.k_lo, opts.k_hi, limit));
        emit(z_uniqueness_cell(std::min<std::uint64_t>(limit, 5000)));
        emit(cg_uniqueness_cell(std::min<std::uint64_t>(limit, 2000)));
        emit(round_trip_cell(limit));
        const FibIndex split_lo = std::max<FibIndex>(opts.k_lo, 2);
        const FibIndex split_hi = std::min<FibIndex>(opts.k_hi, 5);
        if (split_lo <= split_hi) {
            emit_all(split_cells(split_lo, split_hi, std::min<std::uint64_t>(limit, 10000)));
        }
        const FibIndex bridge_hi = std::min<FibIndex>(opts.k_hi, 3);
        if (opts.k_lo <= bridge_hi) {
            emit_all(bridge_cells(opts.k_lo, bridge_hi, std::min<std::uint64_t>(limit, 1000)));
        }
    }
    if (wants(Target::ZToCg)) {
        emit_all(z_to_cg_cells(opts.k_lo, opts.k_hi, limit));
    }
    if (wants(Target::CgToZ)) {
        emit_all(cg_to_z_cells(opts.k_lo, opts.k_hi, limit));
    }
    if (wants(Target::Tables)) {
        emit_all(z_table_cells(opts.k_lo, opts.k_hi, 10));
        emit_all(cg_table_cells(opts.k_lo, opts.k_hi, 8));
        emit_all(rank_filter_cells(opts.k_lo, opts.k_hi, 500));
    }
    if (wants(Target::Diffs)) {
        emit_all(gap_cells(opts.k_lo, opts.k_hi, limit));
    }
    return ok;
}

}  // namespace fibrep::verify

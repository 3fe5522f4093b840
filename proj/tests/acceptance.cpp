// Acceptance gate: one line per criterion, PASS only when the checks succeed
// within the stated wall-clock budget. Exit code is the number of failures.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fibrep/verify.hpp"

namespace {

using fibrep::verify::CheckResult;

struct Criterion {
    std::string description;
    double budget_seconds;
    std::function<bool(std::string& note)> body;
};

bool all_passed(const std::vector<CheckResult>& cells, std::string& note) {
    for (const CheckResult& c : cells) {
        if (!c.passed) {
            note = c.check + (c.k ? " k=" + std::to_string(*c.k) : "") + ": " + c.detail;
            return false;
        }
    }
    if (cells.empty()) {
        note = "no cells ran";
        return false;
    }
    return true;
}

bool run_cli_all(const std::string& bin, std::string& note) {
    const std::string cmd = bin + " verify all --k 1..4 --limit 100000 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        note = "could not launch the CLI";
        return false;
    }
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, got);
    }
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code != 0) {
        note = "CLI exited with code " + std::to_string(code);
        return false;
    }
    if (out.find("FAIL") != std::string::npos) {
        note = "CLI reported a failing check";
        return false;
    }
    if (out.find("PASS") == std::string::npos) {
        note = "CLI produced no check lines";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_bin = argc > 1 ? argv[1] : "";
    namespace v = fibrep::verify;

    const std::vector<Criterion> criteria = {
        {"common-membership sets equal their closed forms (k 1..6, n <= 1e5)", 60.0,
         [](std::string& note) {
             return all_passed(v::set_equality_cells(1, 6, 100000), note);
         }},
        {"exhaustive search finds exactly the greedy representation (z to 5000, even-digit to 2000)",
         120.0,
         [](std::string& note) {
             return all_passed({v::z_uniqueness_cell(5000), v::cg_uniqueness_cell(2000)},
                               note);
         }},
        {"decompose/value round trips with validity on 0..1e6", 60.0,
         [](std::string& note) { return all_passed({v::round_trip_cell(1000000)}, note); }},
        {"infinite-word structure suite (eight items, letter scans to 1e5)", 30.0,
         [](std::string& note) {
             return all_passed(v::golden_structure_cells(100000, fibrep::kDefaultPrefixCap),
                               note);
         }},
        {"A-row even-digit correspondence (k 1..4, rows 2..2584)", 30.0,
         [](std::string& note) { return all_passed(v::z_to_cg_cells(1, 4, 2584), note); }},
        {"B-row Fibonacci-summand correspondence (k 1..4, rows 2..2584)", 30.0,
         [](std::string& note) { return all_passed(v::cg_to_z_cells(1, 4, 2584), note); }},
        {"gap rules keyed by single letters (k 1..4, rows to 1e4)", 10.0,
         [](std::string& note) { return all_passed(v::gap_cells(1, 4, 10000), note); }},
        {"rank-table block recursions (k 1..3, blocks to depth 10/8)", 10.0,
         [](std::string& note) {
             auto cells = v::z_table_cells(1, 3, 10);
             const auto more = v::cg_table_cells(1, 3, 8);
             cells.insert(cells.end(), more.begin(), more.end());
             return all_passed(cells, note);
         }},
        {"floor of n*phi against 256-bit fixed point (n to 1e5 plus 20 near 1e30)", 10.0,
         [](std::string& note) {
             return all_passed({v::floor_phi_cell(100000, 20)}, note);
         }},
        {"B positions against a scanned prefix (j to 1e4)", 5.0,
         [](std::string& note) {
             return all_passed({v::b_position_cell(10000, fibrep::kDefaultPrefixCap)}, note);
         }},
        {"end-to-end CLI: verify all --k 1..4 --limit 100000 exits clean", 300.0,
         [&cli_bin](std::string& note) {
             if (cli_bin.empty()) {
                 note = "no CLI path given (pass it as argv[1])";
                 return false;
             }
             return run_cli_all(cli_bin, note);
         }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        std::string note;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.body(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && elapsed > c.budget_seconds) {
            ok = false;
            note = "over budget";
        }
        if (!ok) {
            ++failures;
        }
        std::printf("%s  [%2zu] %s  (%.1fs of %.0fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    c.description.c_str(), elapsed, c.budget_seconds,
                    note.empty() ? "" : "  -- ", note.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures;
}

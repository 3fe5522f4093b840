#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "fibrep/chung_graham.hpp"
#include "fibrep/golden_string.hpp"
#include "fibrep/index_sets.hpp"
#include "fibrep/natural.hpp"
#include "fibrep/verify.hpp"
#include "fibrep/zeckendorf.hpp"

namespace {

using fibrep::FibIndex;
using fibrep::Natural;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
    std::cerr << "fibrep: " << message << "\n";
    return kExitUsage;
}

struct RenderedTerm {
    FibIndex index;
    unsigned coeff;
};

int run_decompose(const std::string& n_text, const std::string& system, bool json) {
    Natural n;
    try {
        n = fibrep::parse_natural(n_text);
    } catch (const std::invalid_argument&) {
        return usage_error("decompose expects a nonnegative decimal number, got '" + n_text +
                           "'");
    }
    std::vector<RenderedTerm> terms;  // largest index first
    if (system == "zeckendorf") {
        const auto d = fibrep::z_decompose(n);
        for (auto it = d.indices.rbegin(); it != d.indices.rend(); ++it) {
            terms.push_back({*it, 1});
        }
    } else {
        const auto d = fibrep::cg_decompose(n);
        for (auto it = d.terms.rbegin(); it != d.terms.rend(); ++it) {
            terms.push_back({it->index, it->coeff});
        }
    }
    if (json) {
        nlohmann::json out;
        out["n"] = fibrep::to_decimal(n);
        out["system"] = system;
        out["terms"] = nlohmann::json::array();
        for (const RenderedTerm& t : terms) {
            out["terms"].push_back({{"index", t.index}, {"coeff", t.coeff}});
        }
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    std::string rhs;
    if (terms.empty()) {
        rhs = "(empty)";
    } else {
        for (const RenderedTerm& t : terms) {
            if (!rhs.empty()) {
                rhs += " + ";
            }
            if (t.coeff == 2) {
                rhs += "2";
            }
            rhs += "F" + std::to_string(t.index);
        }
    }
    std::cout << fibrep::to_decimal(n) << " = " << rhs << "\n";
    return kExitOk;
}

int run_string(const std::string& prefix_text, const std::string& letter_text,
               const std::string& beta_text, std::uint64_t cap, bool json) {
    const int given = (!prefix_text.empty()) + (!letter_text.empty()) + (!beta_text.empty());
    if (given != 1) {
        return usage_error("string needs exactly one of --prefix, --letter, --beta");
    }
    try {
        if (!prefix_text.empty()) {
            const Natural length = fibrep::parse_natural(prefix_text);
            if (!length.fits_ulong_p()) {
                throw fibrep::PrefixCapError(~std::uint64_t{0}, cap);
            }
            const auto prefix = fibrep::golden_prefix(length.get_ui(), cap);
            if (json) {
                nlohmann::json out;
                out["length"] = prefix.size();
                out["letters"] = prefix.letters;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << prefix.letters << "\n";
            }
        } else if (!letter_text.empty()) {
            const Natural position = fibrep::parse_natural(letter_text);
            if (position < 1) {
                return usage_error("letter positions are 1-based");
            }
            const char l = fibrep::to_char(fibrep::letter_at(position));
            if (json) {
                nlohmann::json out;
                out["position"] = fibrep::to_decimal(position);
                out["letter"] = std::string(1, l);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << l << "\n";
            }
        } else {
            const Natural j = fibrep::parse_natural(beta_text);
            if (j < 1) {
                return usage_error("beta arguments are 1-based");
            }
            const Natural pos = fibrep::b_position(j);
            if (json) {
                nlohmann::json out;
                out["j"] = fibrep::to_decimal(j);
                out["position"] = fibrep::to_decimal(pos);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << fibrep::to_decimal(pos) << "\n";
            }
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(std::string("string: ") + e.what());
    }
    return kExitOk;
}

int run_set(const std::string& kind_text, std::uint64_t k,
            const std::optional<std::uint64_t>& count, const std::string& upto_text,
            bool json) {
    if ((count.has_value()) + (!upto_text.empty()) != 1) {
        return usage_error("set needs exactly one of --count, --upto");
    }
    const fibrep::SetHandle handle{static_cast<fibrep::SetKind>(kind_text[0]), k};
    const auto print = [json](std::uint64_t rank, const Natural& value) {
        if (json) {
            nlohmann::json out;
            out["rank"] = rank;
            out["value"] = fibrep::to_decimal(value);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << fibrep::to_decimal(value) << "\n";
        }
    };
    if (count.has_value()) {
        for (std::uint64_t rank = 1; rank <= *count; ++rank) {
            print(rank, fibrep::nth_element(handle, Natural(static_cast<unsigned long>(rank))));
        }
        return kExitOk;
    }
    Natural limit;
    try {
        limit = fibrep::parse_natural(upto_text);
    } catch (const std::invalid_argument&) {
        return usage_error("set --upto expects a nonnegative decimal number, got '" +
                           upto_text + "'");
    }
    fibrep::for_each_upto(handle, limit, [&print](std::uint64_t rank, const Natural& value) {
        print(rank, value);
        return true;
    });
    return kExitOk;
}

int run_verify(const std::string& target_text, const std::string& k_text,
               std::uint64_t limit, std::uint64_t cap, bool json) {
    const auto target = fibrep::verify::parse_target(target_text);
    if (!target) {
        return usage_error("unknown verify target '" + target_text +
                           "' (expected all, main, z-to-cg, cg-to-z, golden, tables, diffs)");
    }
    fibrep::verify::Options opts;
    opts.limit = limit;
    opts.prefix_cap = cap;
    {
        const auto dots = k_text.find("..");
        try {
            if (dots == std::string::npos) {
                const Natural lone = fibrep::parse_natural(k_text);
                if (!lone.fits_ulong_p()) {
                    return usage_error("--k value out of range");
                }
                opts.k_lo = opts.k_hi = lone.get_ui();
            } else {
                const Natural lo = fibrep::parse_natural(k_text.substr(0, dots));
                const Natural hi = fibrep::parse_natural(k_text.substr(dots + 2));
                if (!lo.fits_ulong_p() || !hi.fits_ulong_p()) {
                    return usage_error("--k range out of range");
                }
                opts.k_lo = lo.get_ui();
                opts.k_hi = hi.get_ui();
            }
        } catch (const std::invalid_argument&) {
            return usage_error("--k expects a value like 2 or a range like 1..4");
        }
        if (opts.k_lo < 1 || opts.k_lo > opts.k_hi) {
            return usage_error("--k range must satisfy 1 <= a <= b");
        }
    }
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    const auto sink = [&](const fibrep::verify::CheckResult& c) {
        ++checks;
        if (!c.passed) {
            ++failures;
        }
        if (json) {
            nlohmann::json out;
            out["check"] = c.check;
            if (c.k) {
                out["k"] = *c.k;
            }
            out["cases"] = c.cases;
            out["status"] = c.passed ? "PASS" : "FAIL";
            if (!c.passed) {
                out["detail"] = c.detail;
            }
            std::cout << out.dump() << "\n";
        } else {
            std::string kcol = c.k ? "k=" + std::to_string(*c.k) : "";
            std::printf("%s  %-24s  %-5s  cases=%llu", c.passed ? "PASS" : "FAIL",
                        c.check.c_str(), kcol.c_str(),
                        static_cast<unsigned long long>(c.cases));
            if (!c.passed) {
                std::printf("  (%s)", c.detail.c_str());
            }
            std::printf("\n");
        }
        std::cout.flush();
    };
    const bool ok = fibrep::verify::run(*target, opts, sink);
    if (!json) {
        std::printf("verify %s: %llu checks, %llu failed\n", target_text.c_str(),
                    static_cast<unsigned long long>(checks),
                    static_cast<unsigned long long>(failures));
    }
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fibonacci numeration toolkit: two decompositions, the infinite A/B word, "
                 "and the integer families attached to even-indexed Fibonacci numbers"};
    app.require_subcommand(1);

    std::string n_text;
    std::string system;
    bool decompose_json = false;
    auto* decompose = app.add_subcommand("decompose", "Write n in one of the two systems");
    decompose->add_option("n", n_text, "nonnegative decimal number of any length")->required();
    decompose->add_option("--system", system, "numeration system")
        ->required()
        ->check(CLI::IsMember({"zeckendorf", "chung-graham"}));
    decompose->add_flag("--json", decompose_json, "one JSON object per line");

    std::string prefix_text;
    std::string letter_text;
    std::string beta_text;
    std::uint64_t string_cap = fibrep::kDefaultPrefixCap;
    bool string_json = false;
    auto* string_cmd = app.add_subcommand("string", "Query the infinite A/B word");
    string_cmd->add_option("--prefix", prefix_text, "print the first L letters");
    string_cmd->add_option("--letter", letter_text, "print the letter at a 1-based position");
    string_cmd->add_option("--beta", beta_text, "print the position of the J-th B");
    string_cmd->add_option("--max-prefix", string_cap, "cap on materialized prefix length");
    string_cmd->add_flag("--json", string_json, "one JSON object per line");

    std::string kind_text;
    std::uint64_t set_k = 0;
    std::optional<std::uint64_t> count;
    std::string upto_text;
    bool set_json = false;
    auto* set_cmd = app.add_subcommand("set", "Enumerate one of the integer families");
    set_cmd->add_option("--kind", kind_text, "family: A, B, C, or I")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C", "I"}));
    set_cmd->add_option("--k", set_k, "family parameter k >= 1")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, ~std::uint64_t{0}));
    set_cmd->add_option("--count", count, "emit the first M elements");
    set_cmd->add_option("--upto", upto_text, "emit all elements <= N");
    set_cmd->add_flag("--json", set_json, "one JSON object per line");

    std::string target_text;
    std::string k_text = "1..4";
    std::uint64_t limit = 100000;
    std::uint64_t verify_cap = fibrep::kDefaultPrefixCap;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check the library against oracles");
    verify_cmd->add_option("target", target_text,
                           "all, main, z-to-cg, cg-to-z, golden, tables, or diffs")
        ->required();
    verify_cmd->add_option("--k", k_text, "k range, e.g. 2 or 1..4");
    verify_cmd->add_option("--limit", limit, "per-check case bound");
    verify_cmd->add_option("--max-prefix", verify_cap, "cap on materialized prefix length");
    verify_cmd->add_flag("--json", verify_json, "one JSON object per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (decompose->parsed()) {
            return run_decompose(n_text, system, decompose_json);
        }
        if (string_cmd->parsed()) {
            return run_string(prefix_text, letter_text, beta_text, string_cap, string_json);
        }
        if (set_cmd->parsed()) {
            return run_set(kind_text, set_k, count, upto_text, set_json);
        }
        if (verify_cmd->parsed()) {
            return run_verify(target_text, k_text, limit, verify_cap, verify_json);
        }
    } catch (const fibrep::PrefixCapError& e) {
        std::cerr << "fibrep: " << e.what() << " (raise --max-prefix to allow it)\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "fibrep: error: " << e.what() << "\n";
        return kExitFailure;
    }
    return usage_error("no subcommand given");
}

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fibrep {

// Arbitrary-precision nonnegative integer. GMP provides the storage and
// arithmetic; functions taking a Natural check nonnegativity where it matters.
using Natural = mpz_class;

// 1-based position in the Fibonacci sequence F1 = F2 = 1.
using FibIndex = std::uint64_t;

// Parses a plain decimal literal of any length. Throws std::invalid_argument
// for anything else (signs, whitespace, empty input, stray characters).
Natural parse_natural(std::string_view text);

std::string to_decimal(const Natural& value);

}  // namespace fibrep

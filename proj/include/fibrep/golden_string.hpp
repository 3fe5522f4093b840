#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fibrep/natural.hpp"

namespace fibrep {

enum class GoldenLetter : char { A = 'A', B = 'B' };

inline char to_char(GoldenLetter l) { return static_cast<char>(l); }

// Default ceiling on materialized prefix length, in letters. Scratch space
// during construction peaks near 2.7x the requested length.
inline constexpr std::uint64_t kDefaultPrefixCap = 10'000'000;

// Thrown when a requested prefix would exceed the configured letter cap.
class PrefixCapError : public std::runtime_error {
  public:
    PrefixCapError(std::uint64_t requested, std::uint64_t cap);

    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t cap() const noexcept { return cap_; }

  private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

// A materialized prefix of the infinite word obtained as the limit of
// W(1) = B, W(2) = BA, W(n) = W(n-1) W(n-2). Positions are 1-based.
struct GoldenPrefix {
    std::string letters;  // 'A' / 'B'

    std::uint64_t size() const noexcept { return letters.size(); }

    // Throws std::out_of_range outside 1..size().
    GoldenLetter at(std::uint64_t position) const;
};

// Builds the first `length` letters by running the concatenation recurrence.
// Throws PrefixCapError when length exceeds cap.
GoldenPrefix golden_prefix(std::uint64_t length, std::uint64_t cap = kDefaultPrefixCap);

// Letter at an arbitrary 1-based position, in O(1) arithmetic: position i
// holds B exactly when the count of B letters grows between prefix lengths
// i-1 and i. Works for positions far beyond any materializable prefix.
GoldenLetter letter_at(const Natural& position);

// Number of B letters among the first n letters, equal to floor((n+1)/phi).
// Requires n >= 0.
Natural count_b(const Natural& n);

// Number of A letters among the first n letters.
Natural count_a(const Natural& n);

// Position of the j-th B letter, equal to floor(j * phi). Requires j >= 1.
Natural b_position(const Natural& j);

}  // namespace fibrep

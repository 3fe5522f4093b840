#include "fibrep/golden_string.hpp"

#include "fibrep/fib.hpp"

namespace fibrep {

PrefixCapError::PrefixCapError(std::uint64_t requested, std::uint64_t cap)
    : std::runtime_error("prefix of " + std::to_string(requested) +
                         " letters exceeds the cap of " + std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

GoldenLetter GoldenPrefix::at(std::uint64_t position) const {
    if (position < 1 || position > letters.size()) {
        throw std::out_of_range("GoldenPrefix::at: position " + std::to_string(position) +
                                " outside 1.." + std::to_string(letters.size()));
    }
    return static_cast<GoldenLetter>(letters[position - 1]);
}

GoldenPrefix golden_prefix(std::uint64_t length, std::uint64_t cap) {
    if (length > cap) {
        throw PrefixCapError(length, cap);
    }
    if (length == 0) {
        return {};
    }
    if (length == 1) {
        return {"B"};
    }
    std::string prev = "B";
    std::string cur = "BA";
    while (cur.size() < length) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(length);
    return {std::move(cur)};
}

GoldenLetter letter_at(const Natural& position) {
    if (position < 1) {
        throw std::invalid_argument("letter_at: positions are 1-based");
    }
    const Natural step = floor_inv_phi(position + 1) - floor_inv_phi(position);
    return step == 1 ? GoldenLetter::B : GoldenLetter::A;
}

Natural count_b(const Natural& n) {
    if (n < 0) {
        throw std::invalid_argument("count_b: argument must be >= 0");
    }
    return floor_inv_phi(n + 1);
}

Natural count_a(const Natural& n) {
    return n - count_b(n);
}

Natural b_position(const Natural& j) {
    if (j < 1) {
        throw std::invalid_argument("b_position: argument must be >= 1");
    }
    return floor_phi(j);
}

}  // namespace fibrep

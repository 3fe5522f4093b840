#include "fibrep/natural.hpp"

#include <stdexcept>

namespace fibrep {

Natural parse_natural(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("parse_natural: empty input");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("parse_natural: not a decimal literal: '" +
                                        std::string(text) + "'");
        }
    }
    return Natural(std::string(text), 10);
}

std::string to_decimal(const Natural& value) {
    return value.get_str();
}

}  // namespace fibrep

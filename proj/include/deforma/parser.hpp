#pragma once

#include "deforma/polyring.hpp"

#include <stdexcept>
#include <string>

namespace deforma {

struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)),
          position(pos) {}
};

struct UnknownVariableError : std::invalid_argument {
    std::string name;
    UnknownVariableError(const std::string& id, std::size_t pos)
        : std::invalid_argument("unknown variable '" + id + "' at position " +
                                std::to_string(pos)),
          name(id) {}
};

// Grammar: integers, rationals p/q, identifiers [a-zA-Z][a-zA-Z0-9_]*,
// operators + - * ^, parentheses. ^ binds tighter than *, * tighter
// than +/-. Implicit multiplication is rejected ("2x" is an error).
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace deforma

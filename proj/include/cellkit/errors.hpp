#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cellkit {

// A configured size/enumeration budget would be exceeded. Budgets are
// refusals, not truncations: no partial result is ever produced.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A check the underlying theory guarantees has failed; this always means an
// implementation bug, never a property of the input.
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Input text rejected by a parser, with the offending offset.
struct SpecParseError : std::invalid_argument {
    SpecParseError(const std::string& msg, std::size_t offset)
        : std::invalid_argument(msg + " at offset " + std::to_string(offset)),
          offset(offset) {}
    std::size_t offset;
};

}  // namespace cellkit

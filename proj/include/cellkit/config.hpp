#pragma once

#include "cellkit/int.hpp"

#include <cstdint>

namespace cellkit {

enum class OutputFormat { Text, Json };

// Budgets are refusals: a computation that would exceed one reports an error
// up front instead of truncating.
struct RunConfig {
    Int prime = 2;
    std::size_t max_order = 128;                  // group order cap
    std::uint64_t homology_basis_budget = 1u << 17;  // max (order-1)^degree
    std::uint64_t hom_enum_budget = 1u << 24;     // max candidate generator-image tuples
    unsigned degree_cap = 3;                      // highest bar degree assembled
    unsigned jobs = 1;
    OutputFormat format = OutputFormat::Text;
};

inline constexpr std::uint64_t kDefaultBasisBudget = 1u << 17;
inline constexpr std::uint64_t kDefaultEnumBudget = 1u << 24;
inline constexpr std::size_t kDefaultMaxOrder = 128;

}  // namespace cellkit

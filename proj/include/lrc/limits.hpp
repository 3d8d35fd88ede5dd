#ifndef LRC_LIMITS_HPP
#define LRC_LIMITS_HPP

#include <cstdint>
#include <stdexcept>

namespace lrc {

// Budgets for exhaustive enumerations.  Exceeding a budget raises
// BudgetExceeded; searches never return silently truncated results.
struct SearchLimits {
    std::uint64_t max_enumeration = 1ull << 22; // codewords / messages / matrices / clique nodes
    std::uint64_t max_subsets = 1ull << 24;     // candidate repair sets per locality query
    double wall_seconds = 300.0;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lrc

#endif

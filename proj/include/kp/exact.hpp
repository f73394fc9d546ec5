#pragma once

#include "kp/core.hpp"

namespace kp {

/// Exact optimum plus one selection achieving it.
struct ExactResult {
    std::int64_t optimum = 0;
    Bits witness;
};

/// Default ceiling on n * (W + 1) dynamic-programming cells. At the limit the
/// per-item decision bitsets for witness recovery occupy 250 MB.
inline constexpr std::uint64_t kDefaultDpCellBudget = 2'000'000'000ULL;

/// Exact optimum by the classic value-maximizing dynamic program over
/// capacities 0..W, with a rolling value row and per-item decision bitsets
/// for witness recovery. Throws BudgetError when n * (W + 1) exceeds
/// cell_budget.
ExactResult dp_optimum(const Instance& instance,
                       std::uint64_t cell_budget = kDefaultDpCellBudget);

/// Value-only variant: same table walk, no decision bitsets and no witness.
/// Memory drops to the W+1 value row; the cell budget still caps the work.
std::int64_t dp_value(const Instance& instance,
                      std::uint64_t cell_budget = kDefaultDpCellBudget);

/// Exhaustive scan of all 2^n selections, n <= 25 (refused otherwise).
/// Ties break toward the lexicographically smallest witness.
ExactResult brute_force(const Instance& instance);

} // namespace kp

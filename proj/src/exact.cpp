#include "kp/exact.hpp"

#include <bit>
#include <vector>

namespace kp {

namespace {

void check_witness(const Instance& instance, const ExactResult& result,
                   const char* who) {
    const Evaluation ev = evaluate(instance, result.witness);
    if (!ev.feasible || ev.value != result.optimum)
        throw std::logic_error(std::string(who) +
                               ": witness does not reproduce the optimum");
}

// Lexicographic order on bit vectors encoded as masks (item i = bit i):
// the first differing item decides, absent wins.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a ^ b;
    if (diff == 0)
        return false;
    const int i = std::countr_zero(diff);
    return ((a >> i) & 1u) == 0;
}

} // namespace

ExactResult dp_optimum(const Instance& instance, std::uint64_t cell_budget) {
    const std::size_t n = instance.size();
    const std::int64_t W = instance.capacity();
    const std::uint64_t columns = static_cast<std::uint64_t>(W) + 1;
    const std::uint64_t cells = static_cast<std::uint64_t>(n) * columns;
    if (cells > cell_budget)
        throw BudgetError("dp_optimum: " + std::to_string(cells) +
                          " cells exceed the budget of " +
                          std::to_string(cell_budget));

    std::vector<std::int64_t> best(columns, 0);
    const std::uint64_t words_per_item = (columns + 63) / 64;
    std::vector<std::uint64_t> taken(words_per_item * n, 0);

    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t w = instance.item(i).weight;
        const std::int64_t v = instance.item(i).profit;
        if (w > W)
            continue; // dead item
        std::uint64_t* row = taken.data() + i * words_per_item;
        for (std::int64_t c = W; c >= w; --c) {
            const std::int64_t candidate = best[c - w] + v;
            if (candidate > best[c]) {
                best[c] = candidate;
                row[static_cast<std::uint64_t>(c) >> 6] |=
                    1ULL << (static_cast<std::uint64_t>(c) & 63);
            }
        }
    }

    ExactResult result;
    result.optimum = best[W];
    result.witness.assign(n, 0);
    std::int64_t c = W;
    for (std::size_t i = n; i-- > 0;) {
        const std::uint64_t* row = taken.data() + i * words_per_item;
        const std::uint64_t uc = static_cast<std::uint64_t>(c);
        if (row[uc >> 6] & (1ULL << (uc & 63))) {
            result.witness[i] = 1;
            c -= instance.item(i).weight;
        }
    }
    check_witness(instance, result, "dp_optimum");
    return result;
}

std::int64_t dp_value(const Instance& instance, std::uint64_t cell_budget) {
    const std::size_t n = instance.size();
    const std::int64_t W = instance.capacity();
    const std::uint64_t columns = static_cast<std::uint64_t>(W) + 1;
    const std::uint64_t cells = static_cast<std::uint64_t>(n) * columns;
    if (cells > cell_budget)
        throw BudgetError("dp_value: " + std::to_string(cells) +
                          " cells exceed the budget of " +
                          std::to_string(cell_budget));

    std::vector<std::int64_t> best(columns, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t w = instance.item(i).weight;
        const std::int64_t v = instance.item(i).profit;
        if (w > W)
            continue;
        for (std::int64_t c = W; c >= w; --c)
            best[c] = std::max(best[c], best[c - w] + v);
    }
    return best[W];
}

ExactResult brute_force(const Instance& instance) {
    const std::size_t n = instance.size();
    if (n > 25)
        throw ContractError("brute_force: refuses n > 25 (got " +
                            std::to_string(n) + ")");
    const std::int64_t W = instance.capacity();

    // Gray-code walk: consecutive subsets differ by one item, so value and
    // weight update in O(1) per subset.
    std::uint32_t gray = 0;
    std::int64_t value = 0, weight = 0;
    std::uint32_t best_mask = 0; // the empty set is feasible with value 0
    std::int64_t best_value = 0;
    const std::uint64_t count = 1ULL << n;
    for (std::uint64_t i = 1; i < count; ++i) {
        const int b = std::countr_zero(i);
        const std::uint32_t bit = 1u << b;
        gray ^= bit;
        if (gray & bit) {
            value += instance.item(static_cast<std::size_t>(b)).profit;
            weight += instance.item(static_cast<std::size_t>(b)).weight;
        } else {
            value -= instance.item(static_cast<std::size_t>(b)).profit;
            weight -= instance.item(static_cast<std::size_t>(b)).weight;
        }
        if (weight <= W &&
            (value > best_value ||
             (value == best_value && mask_lex_less(gray, best_mask)))) {
            best_value = value;
            best_mask = gray;
        }
    }

    ExactResult result;
    result.optimum = best_value;
    result.witness.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        result.witness[i] = (best_mask >> i) & 1u;
    check_witness(instance, result, "brute_force");
    return result;
}

} // namespace kp

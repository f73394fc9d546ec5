#include "kp/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace kp {

void SpannerParams::validate() const {
    if (v < 1)
        throw ContractError("spanner params: v must be >= 1");
    if (m < 1)
        throw ContractError("spanner params: m must be >= 1");
    if (n < 1)
        throw ContractError("spanner params: n must be >= 1");
    if (r < 10)
        throw ContractError("spanner params: r must be >= 10");
    if (!(capacity_ratio > 0.0) || capacity_ratio > 1.0)
        throw ContractError("spanner params: capacity_ratio must be in (0, 1]");
}

Instance::Instance(std::vector<Item> items, std::int64_t capacity,
                   std::optional<GenMeta> meta, bool allow_trivial)
    : items_(std::move(items)), capacity_(capacity), meta_(std::move(meta)) {
    if (items_.empty())
        throw ContractError("instance: needs at least one item");
    if (capacity_ < 0)
        throw ContractError("instance: capacity must be non-negative");
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (items_[i].profit < 1)
            throw ContractError("instance: item " + std::to_string(i) +
                                " has profit < 1");
        if (items_[i].weight < 1)
            throw ContractError("instance: item " + std::to_string(i) +
                                " has weight < 1");
        total_weight_ += items_[i].weight;
    }
    if (!allow_trivial && capacity_ > total_weight_)
        throw ContractError(
            "instance: capacity exceeds total weight, the all-ones selection "
            "is trivially optimal (pass allow_trivial to accept)");

    ratio_order_.resize(items_.size());
    std::iota(ratio_order_.begin(), ratio_order_.end(), std::size_t{0});
    std::sort(ratio_order_.begin(), ratio_order_.end(),
              [this](std::size_t a, std::size_t b) {
                  return pack_order_less(items_[a], a, items_[b], b);
              });
}

Evaluation evaluate(const Instance& instance, const Bits& bits) {
    if (bits.size() != instance.size())
        throw ContractError("evaluate: bit vector length " +
                            std::to_string(bits.size()) +
                            " does not match instance size " +
                            std::to_string(instance.size()));
    Evaluation out;
    const auto& items = instance.items();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            out.value += items[i].profit;
            out.weight += items[i].weight;
        }
    }
    out.feasible = out.weight <= instance.capacity();
    return out;
}

bool pack_order_less(const Item& a, std::size_t ia, const Item& b,
                     std::size_t ib) {
    const __int128 lhs = static_cast<__int128>(a.profit) * b.weight;
    const __int128 rhs = static_cast<__int128>(b.profit) * a.weight;
    if (lhs != rhs)
        return lhs > rhs;
    if (a.weight != b.weight)
        return a.weight < b.weight;
    return ia < ib;
}

GreedyResult greedy_ratio(const Instance& instance) {
    GreedyResult out;
    out.bits.assign(instance.size(), 0);
    std::int64_t weight = 0;
    for (std::size_t i : instance.ratio_order()) {
        if (!instance.fits(i))
            continue;
        const std::int64_t w = instance.item(i).weight;
        if (weight + w <= instance.capacity()) {
            out.bits[i] = 1;
            weight += w;
            out.eval.value += instance.item(i).profit;
        }
    }
    out.eval.weight = weight;
    out.eval.feasible = true;
    return out;
}

GreedyResult greedy_half(const Instance& instance) {
    GreedyResult ratio = greedy_ratio(instance);

    // Best single item that fits, ties toward the lower index.
    bool found = false;
    std::size_t best = 0;
    for (std::size_t i = 0; i < instance.size(); ++i) {
        if (!instance.fits(i))
            continue;
        if (!found || instance.item(i).profit > instance.item(best).profit) {
            best = i;
            found = true;
        }
    }
    if (found && instance.item(best).profit > ratio.eval.value) {
        GreedyResult single;
        single.bits.assign(instance.size(), 0);
        single.bits[best] = 1;
        single.eval = {instance.item(best).profit, instance.item(best).weight,
                       true};
        return single;
    }
    return ratio;
}

std::string bits_to_hex(const Bits& bits) {
    static const char digits[] = "0123456789ABCDEF";
    std::string out;
    out.reserve((bits.size() + 3) / 4);
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        unsigned nibble = 0;
        for (std::size_t j = 0; j < 4 && i + j < bits.size(); ++j)
            if (bits[i + j])
                nibble |= 8u >> j;
        out.push_back(digits[nibble]);
    }
    return out;
}

Bits hex_to_bits(const std::string& hex, std::size_t n) {
    const std::size_t expected = (n + 3) / 4;
    if (hex.size() != expected)
        throw ParseError("hex witness: expected " + std::to_string(expected) +
                         " hex digits for " + std::to_string(n) +
                         " bits, got " + std::to_string(hex.size()));
    Bits bits(n, 0);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        const char c = hex[d];
        unsigned nibble;
        if (c >= '0' && c <= '9')
            nibble = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            nibble = static_cast<unsigned>(c - 'a') + 10;
        else if (c >= 'A' && c <= 'F')
            nibble = static_cast<unsigned>(c - 'A') + 10;
        else
            throw ParseError(std::string("hex witness: invalid digit '") + c +
                             "'");
        for (std::size_t j = 0; j < 4; ++j) {
            const bool set = (nibble & (8u >> j)) != 0;
            const std::size_t i = 4 * d + j;
            if (i < n)
                bits[i] = set ? 1 : 0;
            else if (set)
                throw ParseError("hex witness: nonzero padding bits");
        }
    }
    return bits;
}

} // namespace kp

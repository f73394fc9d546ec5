#include "kp/gen.hpp"

#include <algorithm>
#include <cmath>

namespace kp {

namespace {

Item draw_raw_base(const SpannerParams& params, Rng& rng) {
    const std::int64_t shift = params.r / 10;
    Item raw;
    raw.weight = rng.uniform_i64(1, params.r);
    switch (params.correlation) {
    case Correlation::StronglyCorrelated:
        raw.profit = raw.weight + shift;
        break;
    case Correlation::WeaklyCorrelated:
        raw.profit = rng.uniform_i64(std::max<std::int64_t>(1, raw.weight - shift),
                                     raw.weight + shift);
        break;
    case Correlation::Uncorrelated:
        raw.profit = rng.uniform_i64(1, params.r);
        break;
    }
    return raw;
}

} // namespace

Item normalize_base_item(Item raw, int m) {
    const std::int64_t d = static_cast<std::int64_t>(m) + 1;
    return {std::max<std::int64_t>(1, raw.profit / d),
            std::max<std::int64_t>(1, raw.weight / d)};
}

std::vector<Item> make_spanner_set(const SpannerParams& params, Rng& rng) {
    params.validate();
    std::vector<Item> raw;
    raw.reserve(static_cast<std::size_t>(params.v));
    for (int k = 0; k < params.v; ++k)
        raw.push_back(draw_raw_base(params, rng));
    std::vector<Item> base;
    base.reserve(raw.size());
    for (const Item& item : raw)
        base.push_back(normalize_base_item(item, params.m));
    return base;
}

Instance generate(const SpannerParams& params) {
    params.validate();
    Rng rng(params.seed);
    std::vector<Item> base = make_spanner_set(params, rng);

    std::vector<Item> items;
    items.reserve(static_cast<std::size_t>(params.n));
    std::int64_t total_weight = 0;
    std::int64_t max_weight = 0;
    for (int i = 0; i < params.n; ++i) {
        const std::size_t k =
            rng.uniform(0, static_cast<std::uint64_t>(params.v) - 1);
        const std::int64_t a = rng.uniform_i64(1, params.m);
        const Item item{a * base[k].profit, a * base[k].weight};
        items.push_back(item);
        total_weight += item.weight;
        max_weight = std::max(max_weight, item.weight);
    }

    std::int64_t capacity = static_cast<std::int64_t>(
        std::llround(params.capacity_ratio * static_cast<double>(total_weight)));
    // Non-triviality clamp: the heaviest item must fit and the all-ones
    // selection must not. With n = 1 the two bounds cross; the upper one wins.
    capacity = std::max(capacity, max_weight);
    capacity = std::min(capacity, total_weight - 1);

    GenMeta meta{params, std::move(base), kGeneratorVersion};
    return Instance(std::move(items), capacity, std::move(meta));
}

} // namespace kp

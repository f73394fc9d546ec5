#pragma once

#include "kp/core.hpp"
#include "kp/rng.hpp"

namespace kp {

/// Version tag written into GenMeta; bump on any change to the construction
/// so old instance files stay attributable.
inline constexpr const char* kGeneratorVersion = "kpgen/1";

/// Base-item normalization: floor division of both coordinates by m+1,
/// clamped to >= 1 so coefficients stay valid.
Item normalize_base_item(Item raw, int m);

/// Draws the v base items. Weights are uniform in [1, r]; profits follow the
/// correlation type (strongly correlated: p = w + r/10; weakly: p uniform in
/// [max(1, w - r/10), w + r/10]; uncorrelated: p uniform in [1, r]); then
/// both coordinates are normalized by m+1.
std::vector<Item> make_spanner_set(const SpannerParams& params, Rng& rng);

/// Builds a complete spanner instance: each of the n items is a base item
/// scaled by a uniform multiplier in [1, m]. The capacity is
/// round(capacity_ratio * total weight), clamped into
/// [max item weight, total weight - 1] so the instance is non-trivial.
/// Deterministic in params.seed; provenance is attached as GenMeta.
Instance generate(const SpannerParams& params);

} // namespace kp

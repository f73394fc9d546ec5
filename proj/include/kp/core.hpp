#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kp {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Precondition or invariant violation (bad arguments, invalid instance).
class ContractError : public Error {
  public:
    using Error::Error;
};

/// Malformed input text (instance files, campaign specs, hex strings).
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Well-formed lines but inconsistent structure (header/body mismatch).
class StructureError : public Error {
  public:
    using Error::Error;
};

/// An exact solver refused the problem because it exceeds its memory budget.
class BudgetError : public Error {
  public:
    using Error::Error;
};

/// One object: profit v_i and weight w_i, both integral and >= 1.
struct Item {
    std::int64_t profit = 0;
    std::int64_t weight = 0;

    bool operator==(const Item&) const = default;
};

/// A candidate selection, bit i = take item i. Stored one byte per bit.
using Bits = std::vector<std::uint8_t>;

enum class Correlation { Uncorrelated, WeaklyCorrelated, StronglyCorrelated };

/// Parameters of the spanner instance generator.
///
/// A spanner (v, m) instance is built from a base set of v items drawn in
/// [1, r] and normalized by m+1; the n instance items are integer multiples
/// (factor in [1, m]) of base items. capacity_ratio fixes W relative to the
/// total weight. Equal params (including seed) regenerate the identical
/// instance.
struct SpannerParams {
    int v = 2;
    int m = 10;
    int n = 0;
    std::int64_t r = 0;
    Correlation correlation = Correlation::StronglyCorrelated;
    double capacity_ratio = 0.5;
    std::uint64_t seed = 0;

    /// Throws ContractError unless v >= 1, m >= 1, n >= 1, r >= 10 and
    /// 0 < capacity_ratio <= 1.
    void validate() const;

    bool operator==(const SpannerParams&) const = default;
};

/// Generation provenance attached to a generated instance: the parameters,
/// the realized (normalized) base items, and the generator version string.
struct GenMeta {
    SpannerParams params;
    std::vector<Item> spanner_set;
    std::string generator;

    bool operator==(const GenMeta&) const = default;
};

/// An immutable 0/1 knapsack problem statement.
///
/// Item order is fixed for the lifetime of the instance; solutions are bit
/// vectors over that order. The constructor rejects capacity > total weight
/// (the all-ones vector would be trivially optimal) unless allow_trivial is
/// set. Items heavier than the capacity are kept, to preserve indices, but
/// flagged as never packable (see fits()).
class Instance {
  public:
    Instance(std::vector<Item> items, std::int64_t capacity,
             std::optional<GenMeta> meta = std::nullopt,
             bool allow_trivial = false);

    std::size_t size() const { return items_.size(); }
    const std::vector<Item>& items() const { return items_; }
    const Item& item(std::size_t i) const { return items_[i]; }
    std::int64_t capacity() const { return capacity_; }
    std::int64_t total_weight() const { return total_weight_; }
    const std::optional<GenMeta>& meta() const { return meta_; }

    /// False for dead items (weight > capacity); they can never be packed.
    bool fits(std::size_t i) const { return items_[i].weight <= capacity_; }

    /// Item indices in packing order: profit/weight descending, ties by
    /// smaller weight, then lower index. Includes dead items.
    const std::vector<std::size_t>& ratio_order() const { return ratio_order_; }

    bool operator==(const Instance& other) const {
        return items_ == other.items_ && capacity_ == other.capacity_ &&
               meta_ == other.meta_;
    }

  private:
    std::vector<Item> items_;
    std::int64_t capacity_ = 0;
    std::int64_t total_weight_ = 0;
    std::optional<GenMeta> meta_;
    std::vector<std::size_t> ratio_order_;
};

/// Value and weight of a selection, and whether it satisfies the capacity.
struct Evaluation {
    std::int64_t value = 0;
    std::int64_t weight = 0;
    bool feasible = true;

    bool operator==(const Evaluation&) const = default;
};

/// Sums the selected items' profits and weights; feasible iff weight <= W.
/// Exact integer arithmetic. Throws ContractError on length mismatch.
Evaluation evaluate(const Instance& instance, const Bits& bits);

/// True when item a packs strictly before item b: higher profit/weight ratio
/// first (compared by cross multiplication, so equal ratios are exact), then
/// smaller weight, then lower index.
bool pack_order_less(const Item& a, std::size_t ia, const Item& b,
                     std::size_t ib);

struct GreedyResult {
    Bits bits;
    Evaluation eval;
};

/// Ratio greedy: scan items in packing order, take each one that still fits.
/// Always feasible. This is the classic "greedy estimate" baseline.
GreedyResult greedy_ratio(const Instance& instance);

/// The better of greedy_ratio and the single highest-profit item that fits.
/// Carries the 1/2-approximation guarantee: 2 * value >= optimum.
GreedyResult greedy_half(const Instance& instance);

/// Hex encoding of a bit vector: item i occupies bit (3 - i%4) of hex digit
/// i/4, so "1100" encodes as "C". The last digit is zero padded.
std::string bits_to_hex(const Bits& bits);

/// Inverse of bits_to_hex for a vector of known length n. The string must
/// have exactly ceil(n/4) hex digits and zero padding bits.
Bits hex_to_bits(const std::string& hex, std::size_t n);

} // namespace kp

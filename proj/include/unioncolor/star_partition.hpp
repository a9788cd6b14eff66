#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "unioncolor/label.hpp"

namespace unioncolor {

/// Requested block sizes for a star partition of the subsets of [k].
struct SizeComposition {
    std::vector<std::int64_t> sizes;
    int k = 0;
};

/// Splits the doubled collection A ∪ A' into an i-star and a (2m−i)-star,
/// where A is an m-star over [k−1] and A' adds element k to every set.
/// i must be odd with 1 <= i <= m. Orderings are fixed, so identical inputs
/// give identical outputs.
std::pair<StarSequence, StarSequence> double_split(const StarSequence& a,
                                                   std::int64_t i, int k);

/// Doubles an m-star over [k−1] and appends the singleton {k}, producing a
/// (2m+1)-star. The empty star yields the 1-star [{k}].
StarSequence double_plus_singleton(const StarSequence& a, int k);

/// Doubles an m-star over [k−1] into a 2m-star (the order above without
/// the trailing {k}).
StarSequence double_star(const StarSequence& a, int k);

/// Partitions the nonempty subsets of [k] into stars of the requested
/// sizes, in the requested order. Requires sum(sizes) == 2^k − 1 and
/// k >= 1. Zero-length blocks are allowed. Deterministic.
std::vector<StarSequence> partition(const SizeComposition& comp);

/// Variant covering all of P([k]) including the empty set.
/// Requires sum(sizes) == 2^k and k >= 0.
std::vector<StarSequence> partition_with_empty(const SizeComposition& comp);

}  // namespace unioncolor

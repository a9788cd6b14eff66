#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace unioncolor {

inline constexpr int kMaxColors = 62;

/// A subset of the ground set [k] = {1,...,k}, packed into a 64-bit word
/// (color i <-> bit i-1). Serves both as the color set of an edge and as
/// the union color of a vertex.
class Label {
public:
    Label() = default;
    Label(std::uint64_t bits, int ground_size);

    static Label empty(int ground_size);
    static Label singleton(int element, int ground_size);
    static Label of(std::initializer_list<int> elements, int ground_size);

    std::uint64_t bits() const { return bits_; }
    int ground_size() const { return k_; }
    bool is_empty() const { return bits_ == 0; }
    int count() const;

    bool contains(int element) const;
    bool subset_of(const Label& other) const;
    Label union_with(const Label& other) const;
    Label with(int element) const;

    /// Same element set over a larger ground set.
    Label widened(int ground_size) const;

    std::vector<int> elements() const;

    /// Textual form: ascending elements in braces, e.g. "{1,3}"; "{}" when empty.
    std::string str() const;
    static Label parse(std::string_view text, int ground_size);

    friend bool operator==(const Label&, const Label&) = default;

private:
    std::uint64_t bits_ = 0;
    int k_ = 0;
};

/// An ordered sequence of labels A_1,...,A_m claimed to form an m-star.
using StarSequence = std::vector<Label>;

/// True iff the sequence satisfies the m-star conditions for its length:
/// no condition for m <= 1, A_2 a proper subset of A_1 for m = 2,
/// A_1 = A_2 ∪ A_3 for m = 3, and for m >= 4 the union condition
/// A_1 = A_2 ∪ A_4 together with the chains A_{2i} ⊂ A_1 and
/// A_{2i+1} ⊂ A_{2i} for every index that exists. Entries must be pairwise
/// distinct in all cases. Throws input_error on mixed ground sizes.
bool is_m_star(const StarSequence& seq);

/// True iff the blocks are pairwise disjoint m-stars whose union is every
/// nonempty subset of [k] (every subset including {} when include_empty).
/// Pure predicate: malformed blocks simply yield false.
bool is_forest_partition(const std::vector<StarSequence>& blocks, int k,
                         bool include_empty);

}  // namespace unioncolor

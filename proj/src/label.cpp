#include "unioncolor/label.hpp"

#include <algorithm>
#include <bit>

#include "unioncolor/errors.hpp"

namespace unioncolor {

Label::Label(std::uint64_t bits, int ground_size) : bits_(bits), k_(ground_size) {
    if (ground_size < 0 || ground_size > kMaxColors)
        throw input_error("label: ground size out of range: " + std::to_string(ground_size));
    if (ground_size < 64 && (bits >> ground_size) != 0)
        throw input_error("label: element outside the ground set [" + std::to_string(ground_size) + "]");
}

Label Label::empty(int ground_size) { return Label(0, ground_size); }

Label Label::singleton(int element, int ground_size) {
    return empty(ground_size).with(element);
}

Label Label::of(std::initializer_list<int> elements, int ground_size) {
    Label out = empty(ground_size);
    for (int e : elements) out = out.with(e);
    return out;
}

int Label::count() const { return std::popcount(bits_); }

bool Label::contains(int element) const {
    return element >= 1 && element <= k_ && (bits_ >> (element - 1)) & 1u;
}

bool Label::subset_of(const Label& other) const {
    return (bits_ & ~other.bits_) == 0;
}

Label Label::union_with(const Label& other) const {
    return Label(bits_ | other.bits_, std::max(k_, other.k_));
}

Label Label::with(int element) const {
    if (element < 1 || element > k_)
        throw input_error("label: element " + std::to_string(element) +
                          " outside the ground set [" + std::to_string(k_) + "]");
    return Label(bits_ | (std::uint64_t{1} << (element - 1)), k_);
}

Label Label::widened(int ground_size) const {
    if (ground_size < k_)
        throw input_error("label: cannot shrink the ground set");
    return Label(bits_, ground_size);
}

std::vector<int> Label::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int e = 1; e <= k_; ++e)
        if ((bits_ >> (e - 1)) & 1u) out.push_back(e);
    return out;
}

std::string Label::str() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

Label Label::parse(std::string_view text, int ground_size) {
    auto fail = [&]() -> Label {
        throw input_error("label: cannot parse '" + std::string(text) + "'");
    };
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) return fail();
    text = text.substr(begin, end - begin + 1);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') return fail();
    std::string_view body = text.substr(1, text.size() - 2);
    Label out = empty(ground_size);
    while (!body.empty()) {
        std::size_t comma = body.find(',');
        std::string_view piece = body.substr(0, comma);
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        int value = 0;
        bool any = false;
        for (char c : piece) {
            if (c == ' ' || c == '\t') continue;
            if (c < '0' || c > '9') return fail();
            value = value * 10 + (c - '0');
            any = true;
            if (value > kMaxColors) return fail();
        }
        if (!any) return fail();
        if (value < 1 || value > ground_size)
            throw input_error("label: element " + std::to_string(value) +
                              " outside the ground set [" + std::to_string(ground_size) + "]");
        out = out.with(value);
    }
    return out;
}

bool is_m_star(const StarSequence& seq) {
    const std::size_t m = seq.size();
    if (m == 0) return true;
    const int k = seq[0].ground_size();
    for (const Label& a : seq)
        if (a.ground_size() != k)
            throw input_error("is_m_star: sequence mixes ground sizes");

    std::vector<std::uint64_t> sorted;
    sorted.reserve(m);
    for (const Label& a : seq) sorted.push_back(a.bits());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;

    if (m == 1) return true;
    auto subset = [](const Label& a, const Label& b) {
        return (a.bits() & ~b.bits()) == 0;  // proper once distinctness holds
    };
    if (m == 2) return subset(seq[1], seq[0]);
    if (m == 3) return seq[0].bits() == (seq[1].bits() | seq[2].bits());

    if (seq[0].bits() != (seq[1].bits() | seq[3].bits())) return false;
    for (std::size_t i = 1; 2 * i <= m; ++i) {
        if (!subset(seq[2 * i - 1], seq[0])) return false;
        if (2 * i + 1 <= m && !subset(seq[2 * i], seq[2 * i - 1])) return false;
    }
    return true;
}

bool is_forest_partition(const std::vector<StarSequence>& blocks, int k,
                         bool include_empty) {
    if (k < 0 || k > kMaxColors) return false;
    const std::uint64_t want = include_empty ? (std::uint64_t{1} << k)
                                             : (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> all;
    for (const StarSequence& block : blocks) {
        for (const Label& a : block) {
            if (a.ground_size() != k) return false;
            if (!include_empty && a.is_empty()) return false;
            all.push_back(a.bits());
        }
    }
    if (all.size() != want) return false;
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    for (const StarSequence& block : blocks)
        if (!is_m_star(block)) return false;
    return true;
}

}  // namespace unioncolor

#include "unioncolor/star_partition.hpp"

#include <algorithm>
#include <string>

#include "unioncolor/errors.hpp"

namespace unioncolor {

namespace {

StarSequence widen_all(const StarSequence& a, int k) {
    StarSequence out;
    out.reserve(a.size());
    for (const Label& x : a) out.push_back(x.widened(k));
    return out;
}

StarSequence add_element_all(const StarSequence& a, int k) {
    StarSequence out;
    out.reserve(a.size());
    for (const Label& x : a) out.push_back(x.widened(k).with(k));
    return out;
}

void require_doubling_input(const StarSequence& a, int k, const char* op) {
    if (k < 1 || k > kMaxColors)
        throw input_error(std::string(op) + ": new element k out of range");
    for (const Label& x : a)
        if (x.ground_size() != k - 1)
            throw input_error(std::string(op) + ": input star must live over [" +
                              std::to_string(k - 1) + "]");
    if (!is_m_star(a))
        throw input_error(std::string(op) + ": input is not an m-star");
}

void check_star(const StarSequence& s, std::int64_t want, const char* what) {
    if (static_cast<std::int64_t>(s.size()) != want || !is_m_star(s))
        throw std::logic_error(std::string(what) +
                               ": constructed sequence fails the star conditions");
}

// Doubling order for m >= 2: A'1, A1, Am, A'2, A2, ..., A'{m-1}, A{m-1}, A'm
// with {k} appended when requested. Also covers m <= 1.
StarSequence doubled_order(const StarSequence& a, int k, bool with_singleton) {
    const std::size_t m = a.size();
    StarSequence out;
    out.reserve(2 * m + 1);
    if (m >= 1) {
        const StarSequence w = widen_all(a, k);
        const StarSequence p = add_element_all(a, k);
        if (m == 1) {
            out = {p[0], w[0]};
        } else {
            out = {p[0], w[0], w[m - 1]};
            for (std::size_t j = 1; j + 1 < m; ++j) {
                out.push_back(p[j]);
                out.push_back(w[j]);
            }
            out.push_back(p[m - 1]);
        }
    }
    if (with_singleton) out.push_back(Label::singleton(k, k));
    return out;
}

}  // namespace

std::pair<StarSequence, StarSequence> double_split(const StarSequence& a,
                                                   std::int64_t i, int k) {
    require_doubling_input(a, k, "double_split");
    const std::int64_t m = static_cast<std::int64_t>(a.size());
    if (i % 2 == 0) throw input_error("double_split: i must be odd");
    if (i < 1 || i > m) throw input_error("double_split: i must be within 1..m");

    const StarSequence w = widen_all(a, k);
    const StarSequence p = add_element_all(a, k);
    auto append = [](StarSequence& dst, const StarSequence& src, std::int64_t lo,
                     std::int64_t hi) {
        for (std::int64_t j = lo; j <= hi; ++j)
            dst.push_back(src[static_cast<std::size_t>(j)]);
    };

    StarSequence first, second;
    if (m == 1) {  // i == 1
        first = {w[0]};
        second = {p[0]};
    } else if (m == 2) {  // i == 1
        first = {w[1]};
        second = {p[0], p[1], w[0]};
    } else if (m == 3 && i == 1) {
        first = {w[0]};
        second = {p[0], p[1], w[1], p[2], w[2]};
    } else if (m == 3 && i == 3) {
        first = {w[0], w[1], w[2]};
        second = {p[0], p[1], p[2]};
    } else if (m == 4 && i == 1) {
        first = {w[0]};
        second = {p[0], p[1], p[2], p[3], w[3], w[1], w[2]};
    } else if (m == 4 && i == 3) {
        first = {p[1], p[2], w[1]};
        second = {p[0], w[0], w[2], p[3], w[3]};
    } else if (i == 3) {
        first = {p[1], p[2], w[1]};
        second = {p[0], w[0], w[2]};
        const std::int64_t top = (m % 2 == 0) ? m - 2 : m - 1;
        append(second, p, 3, top);
        append(second, w, 3, top);
        if (m % 2 == 0) {
            second.push_back(p[static_cast<std::size_t>(m - 1)]);
            second.push_back(w[static_cast<std::size_t>(m - 1)]);
        }
    } else {
        append(first, w, 0, i - 1);
        const std::int64_t top = (m % 2 == 0) ? m - 2 : m - 1;
        append(second, p, 0, top);
        append(second, w, i, top);
        if (m % 2 == 0) {
            second.push_back(p[static_cast<std::size_t>(m - 1)]);
            second.push_back(w[static_cast<std::size_t>(m - 1)]);
        }
    }
    check_star(first, i, "double_split (first block)");
    check_star(second, 2 * m - i, "double_split (second block)");
    return {std::move(first), std::move(second)};
}

StarSequence double_plus_singleton(const StarSequence& a, int k) {
    require_doubling_input(a, k, "double_plus_singleton");
    StarSequence out = doubled_order(a, k, true);
    check_star(out, 2 * static_cast<std::int64_t>(a.size()) + 1,
               "double_plus_singleton");
    return out;
}

StarSequence double_star(const StarSequence& a, int k) {
    require_doubling_input(a, k, "double_star");
    StarSequence out = doubled_order(a, k, false);
    check_star(out, 2 * static_cast<std::int64_t>(a.size()), "double_star");
    return out;
}

namespace {

std::vector<StarSequence> partition_impl(const std::vector<std::int64_t>& sizes,
                                         int k, bool with_empty) {
    if (k == 0) {
        std::vector<StarSequence> blocks(sizes.size());
        if (with_empty) {
            for (std::size_t j = 0; j < sizes.size(); ++j) {
                if (sizes[j] == 1) {
                    blocks[j].push_back(Label::empty(0));
                    break;
                }
            }
        }
        return blocks;
    }

    std::vector<std::size_t> odd_at, even_at;
    for (std::size_t j = 0; j < sizes.size(); ++j)
        (sizes[j] % 2 != 0 ? odd_at : even_at).push_back(j);

    // The target sum fixes the parity of the odd-size count: odd in the
    // nonempty-subsets case, even when {} is covered too.
    const bool has_leftover = !with_empty;
    if ((odd_at.size() % 2 != 0) != has_leftover)
        throw std::logic_error("partition: odd-size count has impossible parity");
    const std::size_t pairs = odd_at.size() / 2;

    std::vector<std::int64_t> child_sizes;
    child_sizes.reserve(pairs + (has_leftover ? 1 : 0) + even_at.size());
    for (std::size_t j = 0; j < pairs; ++j)
        child_sizes.push_back((sizes[odd_at[2 * j]] + sizes[odd_at[2 * j + 1]]) / 2);
    if (has_leftover) child_sizes.push_back((sizes[odd_at.back()] - 1) / 2);
    for (std::size_t e : even_at) child_sizes.push_back(sizes[e] / 2);

    const std::vector<StarSequence> child = partition_impl(child_sizes, k - 1, with_empty);

    std::vector<StarSequence> blocks(sizes.size());
    std::size_t c = 0;
    for (std::size_t j = 0; j < pairs; ++j, ++c) {
        const std::int64_t a = sizes[odd_at[2 * j]];
        const std::int64_t b = sizes[odd_at[2 * j + 1]];
        const std::int64_t i = std::min(a, b);
        if (i > static_cast<std::int64_t>(child[c].size()))
            throw std::logic_error("partition: pair split exceeds the doubled star");
        auto [small, large] = double_split(child[c], i, k);
        if (a == i) {
            blocks[odd_at[2 * j]] = std::move(small);
            blocks[odd_at[2 * j + 1]] = std::move(large);
        } else {
            blocks[odd_at[2 * j]] = std::move(large);
            blocks[odd_at[2 * j + 1]] = std::move(small);
        }
    }
    if (has_leftover) {
        blocks[odd_at.back()] = double_plus_singleton(child[c], k);
        ++c;
    }
    for (std::size_t e : even_at) {
        blocks[e] = double_star(child[c], k);
        ++c;
    }
    for (std::size_t j = 0; j < sizes.size(); ++j)
        if (static_cast<std::int64_t>(blocks[j].size()) != sizes[j])
            throw std::logic_error("partition: block length mismatch");
    return blocks;
}

void validate_composition(const SizeComposition& comp, int min_k,
                          std::int64_t want, const char* what) {
    if (comp.k < min_k || comp.k > kMaxColors)
        throw input_error(std::string(what) + ": ground size k out of range");
    std::int64_t sum = 0;
    for (std::int64_t s : comp.sizes) {
        if (s < 0) throw input_error(std::string(what) + ": negative block size");
        if (s > want - sum)
            throw input_error(std::string(what) + ": sizes must sum to " +
                              std::to_string(want));
        sum += s;
    }
    if (sum != want)
        throw input_error(std::string(what) + ": sizes must sum to " +
                          std::to_string(want));
}

}  // namespace

std::vector<StarSequence> partition(const SizeComposition& comp) {
    validate_composition(comp, 1, (std::int64_t{1} << comp.k) - 1, "partition");
    return partition_impl(comp.sizes, comp.k, false);
}

std::vector<StarSequence> partition_with_empty(const SizeComposition& comp) {
    validate_composition(comp, 0, std::int64_t{1} << comp.k, "partition_with_empty");
    return partition_impl(comp.sizes, comp.k, true);
}

}  // namespace unioncolor

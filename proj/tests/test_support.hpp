#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "unioncolor/coloring.hpp"
#include "unioncolor/errors.hpp"
#include "unioncolor/graph.hpp"
#include "unioncolor/label.hpp"

namespace testsupport {

using unioncolor::Edge;
using unioncolor::Graph;
using unioncolor::Label;
using unioncolor::StarSequence;

// Independent restatement of the star conditions over std::set, kept apart
// from the production bitset path on purpose.
inline bool reference_is_m_star(const std::vector<std::set<int>>& seq) {
    const std::size_t m = seq.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (seq[a] == seq[b]) return false;
    if (m <= 1) return true;
    auto proper_subset = [](const std::set<int>& a, const std::set<int>& b) {
        return a != b && std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    auto union_of = [](const std::set<int>& a, const std::set<int>& b) {
        std::set<int> u = a;
        u.insert(b.begin(), b.end());
        return u;
    };
    if (m == 2) return proper_subset(seq[1], seq[0]);
    if (m == 3) return seq[0] == union_of(seq[1], seq[2]);
    if (seq[0] != union_of(seq[1], seq[3])) return false;
    for (std::size_t i = 1; 2 * i <= m; ++i) {
        if (!proper_subset(seq[2 * i - 1], seq[0])) return false;
        if (2 * i + 1 <= m && !proper_subset(seq[2 * i], seq[2 * i - 1])) return false;
    }
    return true;
}

inline std::set<int> to_set(const Label& label) {
    const auto elems = label.elements();
    return std::set<int>(elems.begin(), elems.end());
}

inline std::vector<std::set<int>> to_sets(const StarSequence& seq) {
    std::vector<std::set<int>> out;
    out.reserve(seq.size());
    for (const Label& label : seq) out.push_back(to_set(label));
    return out;
}

// Plain odometer over all assignments of nonempty subsets of [k] to the
// edges; no pruning. Returns the first valid coloring in canonical order.
inline std::optional<std::vector<std::uint64_t>> naive_exists_coloring(
    const Graph& g, int k) {
    const int m = g.edge_count();
    const std::uint64_t top = (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> pick(static_cast<std::size_t>(m), 1);
    if (m == 0) return std::nullopt;
    while (true) {
        std::vector<std::uint64_t> unions(
            static_cast<std::size_t>(g.vertex_count()), 0);
        for (int e = 0; e < m; ++e) {
            unions[static_cast<std::size_t>(g.edge(e).u)] |= pick[static_cast<std::size_t>(e)];
            unions[static_cast<std::size_t>(g.edge(e).v)] |= pick[static_cast<std::size_t>(e)];
        }
        std::vector<std::uint64_t> sorted = unions;
        std::sort(sorted.begin(), sorted.end());
        const bool distinct =
            std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        const bool nonempty = sorted.empty() || sorted.front() != 0;
        if (distinct && nonempty) return pick;
        int pos = m - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == top) {
            pick[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) return std::nullopt;
        ++pick[static_cast<std::size_t>(pos)];
    }
}

// Composition of total into parts, sampled by cutting [0,total] with
// repetition so zero and one sized parts occur naturally.
inline std::vector<std::int64_t> random_composition(std::mt19937_64& rng,
                                                    std::int64_t total,
                                                    int max_parts) {
    std::uniform_int_distribution<int> part_count(1, max_parts);
    const int r = part_count(rng);
    std::vector<std::int64_t> cuts{0, total};
    std::uniform_int_distribution<std::int64_t> cut(0, total);
    for (int i = 0; i + 1 < r; ++i) cuts.push_back(cut(rng));
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::int64_t> sizes;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        sizes.push_back(cuts[i + 1] - cuts[i]);
    return sizes;
}

// A single 1-star with the given legs and direct leaves, vertices numbered
// from base.
inline void append_onestar(std::vector<Edge>& edges, int& base, int legs,
                           int leaves) {
    const int center = base++;
    for (int i = 0; i < legs; ++i) {
        const int u = base++;
        const int v = base++;
        edges.push_back(unioncolor::make_edge(center, u));
        edges.push_back(unioncolor::make_edge(u, v));
    }
    for (int i = 0; i < leaves; ++i)
        edges.push_back(unioncolor::make_edge(center, base++));
}

// Forest of random 1-stars with roughly the requested vertex count.
inline Graph random_onestar_forest(std::mt19937_64& rng, int target_n) {
    std::vector<Edge> edges;
    int base = 0;
    while (base < target_n) {
        int remaining = target_n - base;
        if (remaining < 3) remaining = 3;
        std::uniform_int_distribution<int> order_dist(3, std::min(remaining, 14));
        int m = order_dist(rng);
        if (remaining - m > 0 && remaining - m < 3) m = remaining;  // avoid a stub
        const int max_legs = (m - 3) < (m - 1) / 2 ? (m - 3) : (m - 1) / 2;
        int legs = 0;
        if (max_legs > 0) {
            std::uniform_int_distribution<int> leg_dist(0, max_legs);
            legs = leg_dist(rng);
        }
        if ((m - 1 - 2 * legs) + legs < 2) legs = 0;  // keep the center degree >= 2
        append_onestar(edges, base, legs, m - 1 - 2 * legs);
    }
    return Graph(base, std::move(edges));
}

// Eligible random graph: density cycles through dense, medium and sparse
// regimes; the seed stream keeps resampling deterministic.
inline Graph random_eligible_graph(std::uint64_t seed, int max_n) {
    for (std::uint64_t bump = 0;; ++bump) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + bump);
        std::uniform_int_distribution<int> n_dist(3, max_n);
        const int n = n_dist(rng);
        double p = 0.0;
        switch (rng() % 4) {
            case 0: p = 0.3 + 0.4 * std::uniform_real_distribution<double>(0, 1)(rng); break;
            case 1: p = 3.0 * std::log(n + 1.0) / n; break;
            case 2: p = 2.5 / n; break;
            default: p = 1.2 * std::log(n + 1.0) / n; break;
        }
        if (p > 1.0) p = 1.0;
        try {
            return unioncolor::random_graph(n, p, rng(), 50);
        } catch (const unioncolor::input_error&) {
            continue;  // too sparse to be eligible, redraw deterministically
        }
    }
}

}  // namespace testsupport

#include "unioncolor/oracle.hpp"

#include <chrono>
#include <vector>

#include "unioncolor/errors.hpp"

namespace unioncolor {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
    const Graph& g;
    const int k;
    const std::uint64_t all_labels;
    const std::uint64_t node_limit;
    const Clock::time_point deadline;

    std::vector<std::vector<int>> finish_at;  // vertices completed by each edge
    std::vector<std::uint64_t> vertex_union;
    std::vector<char> used;  // unions already taken by completed vertices
    std::vector<Label> assigned;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    Searcher(const Graph& graph, int colors, const SearchBudget& budget)
        : g(graph),
          k(colors),
          all_labels((std::uint64_t{1} << colors) - 1),
          node_limit(budget.node_limit),
          deadline(Clock::now() +
                   std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(budget.time_limit_seconds))) {
        const int m = g.edge_count();
        finish_at.assign(static_cast<std::size_t>(m), {});
        for (int v = 0; v < g.vertex_count(); ++v) {
            int last = -1;
            for (int w : g.neighbors(v))
                last = std::max(last, *g.edge_id(v, w));
            if (last >= 0) finish_at[static_cast<std::size_t>(last)].push_back(v);
        }
        vertex_union.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        used.assign(std::size_t{1} << colors, 0);
        assigned.assign(static_cast<std::size_t>(m), Label::empty(colors));
    }

    bool dfs(int e) {
        if (e == g.edge_count()) return true;
        const Edge edge = g.edge(e);
        const auto& completes = finish_at[static_cast<std::size_t>(e)];
        for (std::uint64_t bits = 1; bits <= all_labels; ++bits) {
            if (++nodes > node_limit ||
                ((nodes & 4095) == 0 && Clock::now() > deadline)) {
                out_of_budget = true;
                return false;
            }
            const std::uint64_t prev_u = vertex_union[static_cast<std::size_t>(edge.u)];
            const std::uint64_t prev_v = vertex_union[static_cast<std::size_t>(edge.v)];
            vertex_union[static_cast<std::size_t>(edge.u)] = prev_u | bits;
            vertex_union[static_cast<std::size_t>(edge.v)] = prev_v | bits;
            std::size_t marked = 0;
            bool clash = false;
            for (int w : completes) {
                auto& slot = used[vertex_union[static_cast<std::size_t>(w)]];
                if (slot) {
                    clash = true;
                    break;
                }
                slot = 1;
                ++marked;
            }
            if (!clash) {
                assigned[static_cast<std::size_t>(e)] = Label(bits, k);
                if (dfs(e + 1)) return true;
            }
            for (std::size_t j = 0; j < marked; ++j)
                used[vertex_union[static_cast<std::size_t>(completes[j])]] = 0;
            vertex_union[static_cast<std::size_t>(edge.u)] = prev_u;
            vertex_union[static_cast<std::size_t>(edge.v)] = prev_v;
            if (out_of_budget) return false;
        }
        return false;
    }
};

void validate_budget(const SearchBudget& budget) {
    if (budget.max_k < 1 || budget.node_limit == 0 ||
        !(budget.time_limit_seconds > 0))
        throw input_error("search budget: all caps must be positive");
}

}  // namespace

SearchResult exists_coloring(const Graph& g, int k, const SearchBudget& budget) {
    validate_budget(budget);
    if (k < 1) throw input_error("exists_coloring: k must be positive");
    if (k > 24) throw input_error("exists_coloring: k beyond the search scale");
    if (g.vertex_count() == 0 || min_component_order(g) < 3)
        throw eligibility_error("exists_coloring: component of order at most two");

    Searcher searcher(g, k, budget);
    const bool found = searcher.dfs(0);
    SearchResult result;
    result.nodes = searcher.nodes;
    if (found) {
        result.status = SearchStatus::found;
        result.witness = EdgeColoring{k, std::move(searcher.assigned)};
    } else if (searcher.out_of_budget) {
        result.status = SearchStatus::out_of_budget;
    } else {
        result.status = SearchStatus::refuted;
    }
    return result;
}

ExactResult exact_index(const Graph& g, const SearchBudget& budget) {
    validate_budget(budget);
    const int lb = lower_bound_colors(g.vertex_count());
    std::uint64_t total_nodes = 0;
    for (int k = lb; k <= lb + 1; ++k) {
        if (k > budget.max_k)
            throw budget_error("exact_index: color cap below the required range");
        const SearchResult probe = exists_coloring(g, k, budget);
        total_nodes += probe.nodes;
        if (probe.status == SearchStatus::found)
            return ExactResult{k, *probe.witness, total_nodes};
        if (probe.status == SearchStatus::out_of_budget)
            throw budget_error("exact_index: budget exhausted at k=" + std::to_string(k));
    }
    throw std::logic_error(
        "exact_index: refuted one above the lower bound, contradicting the two-value "
        "guarantee");
}

}  // namespace unioncolor

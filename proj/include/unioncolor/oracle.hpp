#pragma once

#include <cstdint>
#include <optional>

#include "unioncolor/coloring.hpp"
#include "unioncolor/graph.hpp"

namespace unioncolor {

/// Caps for the exhaustive search. All fields must be positive.
struct SearchBudget {
    int max_k = kMaxColors;
    std::uint64_t node_limit = 200'000'000;
    double time_limit_seconds = 300.0;
};

enum class SearchStatus { found, refuted, out_of_budget };

struct SearchResult {
    SearchStatus status = SearchStatus::refuted;
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes = 0;
};

/// Exhaustive backtracking search for a union vertex-distinguishing
/// coloring of g over [k]. Edges are assigned in ascending id order and
/// labels in ascending encoding order; a branch is cut as soon as two
/// vertices with all incident edges assigned share a union. The first
/// witness in this canonical order is returned, so results are
/// deterministic. Refutation and budget exhaustion are reported apart.
SearchResult exists_coloring(const Graph& g, int k, const SearchBudget& budget);

struct ExactResult {
    int index = 0;
    EdgeColoring witness;
    std::uint64_t nodes = 0;  // summed over both probes
};

/// Smallest k admitting a coloring. Only the lower bound and the value one
/// above it need probing; a refutation of both would contradict the bound
/// guarantee and raises logic_error. Throws budget_error when a probe runs
/// out of budget or max_k cuts the scan short.
ExactResult exact_index(const Graph& g, const SearchBudget& budget);

}  // namespace unioncolor

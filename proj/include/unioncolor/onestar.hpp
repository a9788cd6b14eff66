#pragma once

#include <utility>
#include <vector>

#include "unioncolor/graph.hpp"

namespace unioncolor {

/// A tree carved out of a larger graph: its vertex set plus the edges kept
/// inside it. Vertex ids refer to the host graph.
struct TreeView {
    std::vector<int> vertices;
    std::vector<Edge> edges;
};

/// Decomposition of a 1-star: the center, legs of length two
/// (center - u - v), and leaves directly adjacent to the center.
struct OneStarAnatomy {
    int center = -1;
    std::vector<std::pair<int, int>> legs;  // (u adjacent to center, leaf v behind u)
    std::vector<int> leaves;

    int order() const {
        return 1 + 2 * static_cast<int>(legs.size()) + static_cast<int>(leaves.size());
    }

    /// center, u1, v1, u2, v2, ..., then the direct leaves. This is the
    /// vertex order the star-sequence coloring maps onto.
    std::vector<int> vertex_order() const;
};

/// True iff the tree is a star on at least three vertices with each edge
/// subdivided at most once. Throws input_error when the view is not a tree.
bool is_onestar(const TreeView& t);

/// Picks the smallest valid center and lists legs and leaves by ascending
/// vertex id. Throws input_error when the tree is not a 1-star.
OneStarAnatomy analyze_onestar(const TreeView& t);

struct SpanningForest {
    std::vector<TreeView> trees;       // ordered by smallest vertex id
    std::vector<char> edge_in_forest;  // indexed by host edge id
};

/// Extracts a spanning forest in which every tree is a 1-star: start from a
/// breadth-first spanning forest, then repeatedly delete the lowest-id
/// forest edge whose removal leaves two trees of order >= 3, until no such
/// edge remains. Every component of g must have order >= 3.
SpanningForest spanning_onestar_forest(const Graph& g);

}  // namespace unioncolor

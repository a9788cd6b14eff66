#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "unioncolor/graph.hpp"
#include "unioncolor/label.hpp"
#include "unioncolor/onestar.hpp"

namespace unioncolor {

/// Total edge coloring over [k]: labels[e] is the color set of edge id e.
struct EdgeColoring {
    int k = 0;
    std::vector<Label> labels;
    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Union color per vertex, indexed by vertex id.
using UnionColoring = std::vector<Label>;

/// Fewest colors any graph on n vertices can hope for: ceil(log2(n+1)),
/// forced by mapping n vertices injectively into the nonempty subsets.
int lower_bound_colors(long long n);

/// Assigns A_2,...,A_m to the edges center-u1, u1-v1, center-u2, u2-v2,
/// ..., then the leaf edges, so the unions along the anatomy's vertex
/// order come out as exactly A_1,...,A_m (checked).
std::vector<std::pair<Edge, Label>> color_onestar(const OneStarAnatomy& anatomy,
                                                  const StarSequence& star);

/// Colors a forest whose components are all 1-stars with exactly
/// ceil(log2(n+1)) colors and an injective union coloring.
EdgeColoring color_forest(const Graph& forest);

/// Colors any graph without a component of order <= 2: the spanning forest
/// of 1-stars is colored as above and every remaining edge receives the
/// extra singleton {k+1}, or the empty set in empty-label mode (which uses
/// ceil(log2 n) colors in total).
EdgeColoring color_graph(const Graph& g, bool allow_empty);

/// Exact union of the incident edge labels per vertex. Isolated vertices
/// get the empty union.
UnionColoring union_vertex_coloring(const Graph& g, const EdgeColoring& c);

struct VerifyReport {
    std::vector<int> empty_label_edges;                 // flagged in standard mode only
    std::vector<std::pair<int, int>> union_collisions;  // vertex pairs, u < v
    std::vector<int> isolated_vertices;
    int colors_used = 0;
    bool valid = false;
};

/// Checks that the union coloring is injective, that no edge carries the
/// empty label unless allowed, and that no vertex is isolated. Counts the
/// colors that actually appear on edges.
VerifyReport verify(const Graph& g, const EdgeColoring& c, bool allow_empty);
void print_report(const VerifyReport& report, std::ostream& out);

/// Coloring file format: header "k <colors> mode <standard|empty>", then
/// one line "u v : {labels}" per edge in ascending (u,v) order.
void write_coloring(const Graph& g, const EdgeColoring& c, bool empty_mode,
                    std::ostream& out);

struct LoadedColoring {
    EdgeColoring coloring;
    bool empty_mode = false;
};
LoadedColoring read_coloring(const Graph& g, std::istream& in);

}  // namespace unioncolor

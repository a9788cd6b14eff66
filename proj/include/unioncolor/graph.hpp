#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace unioncolor {

struct Edge {
    int u = 0, v = 0;  // normalized so that u < v
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes endpoint order; rejects loops.
Edge make_edge(int a, int b);

/// Finite simple undirected graph on vertices 0..n-1. Immutable after
/// construction; edges are kept sorted, so edge ids are stable and
/// ascending in (u,v) order.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    std::optional<int> edge_id(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

/// Order of the smallest component; 0 for the empty graph.
int min_component_order(const Graph& g);

/// Edge-list format: '#' starts a comment, an optional first content line
/// "n <count>" fixes the vertex count, every other line is "u v".
/// The vertex count is 1 + the largest id unless the header raises it.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);
Graph hypercube_graph(int dim);
Graph complete_binary_tree(int n);

/// Erdős–Rényi sample, resampled until no component has order <= 2
/// (at most max_retries attempts). Reproducible from the seed.
Graph random_graph(int n, double edge_probability, std::uint64_t seed,
                   int max_retries = 100);

/// Family dispatch used by the command line front end.
struct GenRequest {
    std::string kind;  // path|cycle|star|complete|hypercube|complete-binary-tree|random
    long long n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};
Graph generate(const GenRequest& req);

}  // namespace unioncolor

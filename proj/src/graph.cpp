#include "unioncolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "unioncolor/errors.hpp"

namespace unioncolor {

namespace {
constexpr long long kMaxVertexId = 50'000'000;
}

Edge make_edge(int a, int b) {
    if (a == b) throw input_error("edge: loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw input_error("graph: negative vertex count");
    for (Edge& e : edges_) {
        if (e.u == e.v)
            throw input_error("graph: loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw input_error("graph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw input_error("graph: duplicate edge");
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    return adj_.at(static_cast<std::size_t>(v));
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

std::optional<int> Graph::edge_id(int u, int v) const {
    const Edge key = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || !(*it == key)) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::deque<int> queue{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

int min_component_order(const Graph& g) {
    int best = 0;
    for (const auto& comp : components(g)) {
        int order = static_cast<int>(comp.size());
        if (best == 0 || order < best) best = order;
    }
    return best;
}

Graph read_graph(std::istream& in) {
    std::string raw;
    int lineno = 0;
    bool saw_content = false;
    long long declared_n = -1;
    long long max_id = -1;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (!saw_content && first == "n") {
            saw_content = true;
            if (!(fields >> declared_n) || declared_n < 0)
                throw parse_error(lineno, "bad vertex-count header");
            std::string extra;
            if (fields >> extra) throw parse_error(lineno, "trailing tokens after header");
            if (declared_n > kMaxVertexId + 1)
                throw parse_error(lineno, "vertex count too large");
            continue;
        }
        saw_content = true;
        long long u = 0, v = 0;
        try {
            std::size_t used = 0;
            u = std::stoll(first, &used);
            if (used != first.size()) throw input_error("");
        } catch (...) {
            throw parse_error(lineno, "expected a vertex id, got '" + first + "'");
        }
        if (!(fields >> v)) throw parse_error(lineno, "expected two vertex ids");
        std::string extra;
        if (fields >> extra) throw parse_error(lineno, "trailing tokens after edge");
        if (u < 0 || v < 0 || u > kMaxVertexId || v > kMaxVertexId)
            throw parse_error(lineno, "vertex id out of range");
        if (u == v) throw parse_error(lineno, "loop edge " + std::to_string(u));
        if (u > v) std::swap(u, v);
        const std::uint64_t key =
            (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
        if (!seen.insert(key).second)
            throw parse_error(lineno, "duplicate edge " + std::to_string(u) + " " +
                                          std::to_string(v));
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        max_id = std::max({max_id, u, v});
    }
    const long long n = std::max(declared_n, max_id + 1);
    return Graph(static_cast<int>(std::max<long long>(n, 0)), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

Graph path_graph(int n) {
    if (n < 1) throw input_error("path: need at least one vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle: length must be at least three");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
    if (n < 2) throw input_error("star: need at least two vertices");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 1) throw input_error("complete: need at least one vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph hypercube_graph(int dim) {
    if (dim < 0 || dim > 20) throw input_error("hypercube: dimension out of range");
    const int n = 1 << dim;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b) {
            const int u = v ^ (1 << b);
            if (v < u) edges.push_back({v, u});
        }
    return Graph(n, std::move(edges));
}

Graph complete_binary_tree(int n) {
    if (n < 1) throw input_error("complete-binary-tree: need at least one vertex");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back(make_edge(i, (i - 1) / 2));
    return Graph(n, std::move(edges));
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed,
                   int max_retries) {
    if (n < 1) throw input_error("random: need at least one vertex");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw input_error("random: edge probability must be in [0,1]");
    if (max_retries < 1) throw input_error("random: retry count must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < edge_probability) edges.push_back({u, v});
        Graph g(n, std::move(edges));
        if (min_component_order(g) >= 3) return g;
    }
    throw input_error("random: no sample without a small component within " +
                      std::to_string(max_retries) + " attempts");
}

Graph generate(const GenRequest& req) {
    const long long n = req.n;
    if (n > kMaxVertexId) throw input_error("generate: size too large");
    const int ni = static_cast<int>(n);
    if (req.kind == "path") return path_graph(ni);
    if (req.kind == "cycle") return cycle_graph(ni);
    if (req.kind == "star") return star_graph(ni);
    if (req.kind == "complete") return complete_graph(ni);
    if (req.kind == "hypercube") return hypercube_graph(ni);
    if (req.kind == "complete-binary-tree") return complete_binary_tree(ni);
    if (req.kind == "random") return random_graph(ni, req.p, req.seed);
    throw input_error("generate: unknown family '" + req.kind + "'");
}

}  // namespace unioncolor

#include "unioncolor/coloring.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "unioncolor/errors.hpp"
#include "unioncolor/star_partition.hpp"

namespace unioncolor {

int lower_bound_colors(long long n) {
    if (n < 1) throw input_error("lower_bound: vertex count must be positive");
    return std::bit_width(static_cast<unsigned long long>(n));
}

namespace {

// smallest k with 2^k >= n
int ceil_log2(long long n) {
    return n <= 1 ? 0 : std::bit_width(static_cast<unsigned long long>(n - 1));
}

}  // namespace

std::vector<std::pair<Edge, Label>> color_onestar(const OneStarAnatomy& anatomy,
                                                  const StarSequence& star) {
    const int m = anatomy.order();
    if (m < 3) throw input_error("color_onestar: tree order must be at least three");
    if (static_cast<int>(star.size()) != m)
        throw input_error("color_onestar: star length must equal the tree order");
    if (!is_m_star(star))
        throw input_error("color_onestar: sequence fails the star conditions");

    std::vector<std::pair<Edge, Label>> out;
    out.reserve(static_cast<std::size_t>(m) - 1);
    std::size_t next = 1;  // star[1] is A_2
    for (const auto& [u, v] : anatomy.legs) {
        out.emplace_back(make_edge(anatomy.center, u), star[next++]);
        out.emplace_back(make_edge(u, v), star[next++]);
    }
    for (int leaf : anatomy.leaves)
        out.emplace_back(make_edge(anatomy.center, leaf), star[next++]);

    // the induced unions along the anatomy order must reproduce the star
    std::unordered_map<int, std::uint64_t> unions;
    for (const auto& [e, label] : out) {
        unions[e.u] |= label.bits();
        unions[e.v] |= label.bits();
    }
    const std::vector<int> order = anatomy.vertex_order();
    for (int i = 0; i < m; ++i)
        if (unions[order[static_cast<std::size_t>(i)]] !=
            star[static_cast<std::size_t>(i)].bits())
            throw std::logic_error("color_onestar: induced unions do not match the star");
    return out;
}

namespace {

std::vector<TreeView> component_trees(const Graph& g) {
    const auto comps = components(g);
    std::vector<int> rep(static_cast<std::size_t>(g.vertex_count()), -1);
    std::unordered_map<int, std::size_t> index;
    std::vector<TreeView> trees;
    trees.reserve(comps.size());
    for (const auto& comp : comps) {
        index.emplace(comp.front(), trees.size());
        trees.push_back(TreeView{comp, {}});
        for (int v : comp) rep[static_cast<std::size_t>(v)] = comp.front();
    }
    for (const Edge& e : g.edges())
        trees[index.at(rep[static_cast<std::size_t>(e.u)])].edges.push_back(e);
    return trees;
}

void sort_by_order_then_id(std::vector<TreeView>& trees) {
    std::stable_sort(trees.begin(), trees.end(),
                     [](const TreeView& a, const TreeView& b) {
                         if (a.vertices.size() != b.vertices.size())
                             return a.vertices.size() < b.vertices.size();
                         return a.vertices.front() < b.vertices.front();
                     });
}

void paint_trees(const Graph& host, const std::vector<TreeView>& trees,
                 const std::vector<StarSequence>& blocks,
                 std::vector<Label>& labels) {
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const OneStarAnatomy anatomy = analyze_onestar(trees[i]);
        for (const auto& [e, label] : color_onestar(anatomy, blocks[i]))
            labels[static_cast<std::size_t>(*host.edge_id(e.u, e.v))] = label;
    }
}

void verify_or_die(const Graph& g, const EdgeColoring& c, bool allow_empty,
                   const char* what) {
    const VerifyReport report = verify(g, c, allow_empty);
    if (!report.valid)
        throw std::logic_error(std::string(what) + ": produced an invalid coloring");
}

}  // namespace

EdgeColoring color_forest(const Graph& forest) {
    if (forest.vertex_count() == 0)
        throw input_error("color_forest: graph has no vertices");
    std::vector<TreeView> trees = component_trees(forest);
    for (const TreeView& t : trees) {
        bool ok = false;
        try {
            ok = is_onestar(t);
        } catch (const input_error&) {
            ok = false;
        }
        if (!ok)
            throw input_error("color_forest: component containing vertex " +
                              std::to_string(t.vertices.front()) + " is not a 1-star");
    }
    sort_by_order_then_id(trees);

    const long long n = forest.vertex_count();
    const int k = lower_bound_colors(n);
    SizeComposition comp;
    comp.k = k;
    for (const TreeView& t : trees)
        comp.sizes.push_back(static_cast<std::int64_t>(t.vertices.size()));
    comp.sizes.push_back(((std::int64_t{1} << k) - 1) - n);  // padding block, unused
    const std::vector<StarSequence> blocks = partition(comp);

    std::vector<Label> labels(static_cast<std::size_t>(forest.edge_count()),
                              Label::empty(k));
    paint_trees(forest, trees, blocks, labels);
    EdgeColoring coloring{k, std::move(labels)};
    verify_or_die(forest, coloring, false, "color_forest");
    return coloring;
}

EdgeColoring color_graph(const Graph& g, bool allow_empty) {
    const SpanningForest forest = spanning_onestar_forest(g);
    std::vector<TreeView> trees = forest.trees;
    sort_by_order_then_id(trees);

    const long long n = g.vertex_count();
    SizeComposition comp;
    for (const TreeView& t : trees)
        comp.sizes.push_back(static_cast<std::int64_t>(t.vertices.size()));
    const int forest_edges = static_cast<int>(n) - static_cast<int>(trees.size());
    const bool has_extra = g.edge_count() > forest_edges;

    if (!allow_empty) {
        const int k = lower_bound_colors(n);
        comp.k = k;
        comp.sizes.push_back(((std::int64_t{1} << k) - 1) - n);
        const std::vector<StarSequence> blocks = partition(comp);
        std::vector<Label> labels(static_cast<std::size_t>(g.edge_count()),
                                  Label::empty(k));
        paint_trees(g, trees, blocks, labels);
        int total = k;
        if (has_extra) {
            total = k + 1;
            for (int e = 0; e < g.edge_count(); ++e) {
                auto& slot = labels[static_cast<std::size_t>(e)];
                slot = forest.edge_in_forest[static_cast<std::size_t>(e)]
                           ? slot.widened(total)
                           : Label::singleton(total, total);
            }
        }
        EdgeColoring coloring{total, std::move(labels)};
        verify_or_die(g, coloring, false, "color_graph");
        return coloring;
    }

    const int k = ceil_log2(n);
    const std::int64_t pad = (std::int64_t{1} << k) - n;
    comp.k = k;
    std::vector<StarSequence> blocks;
    // Steer the empty set into the padding block whenever a pad-sized star
    // can contain it; no 3-star can, and a zero pad leaves nowhere else, so
    // in those two cases {} ends up inside a used block and on one forest
    // edge, which this mode permits.
    const bool empty_in_pad = pad != 0 && pad != 3;
    if (empty_in_pad) {
        comp.sizes.push_back(pad - 1);
        blocks = partition(comp);
        StarSequence& padstar = blocks.back();
        if (padstar.empty())
            padstar = {Label::empty(k)};
        else if (padstar.size() == 1)
            padstar.push_back(Label::empty(k));
        else if (padstar.size() == 3)
            padstar.insert(padstar.begin() + 2, Label::empty(k));
        else
            padstar.push_back(Label::empty(k));
        if (static_cast<std::int64_t>(padstar.size()) != pad || !is_m_star(padstar))
            throw std::logic_error("color_graph: padding block rejected the empty label");
    } else {
        comp.sizes.push_back(pad);
        blocks = partition_with_empty(comp);
    }
    if (!is_forest_partition(blocks, k, true))
        throw std::logic_error("color_graph: blocks do not partition the subsets of [k]");

    std::vector<Label> labels(static_cast<std::size_t>(g.edge_count()),
                              Label::empty(k));
    paint_trees(g, trees, blocks, labels);
    if (empty_in_pad) {
        for (int e = 0; e < g.edge_count(); ++e)
            if (forest.edge_in_forest[static_cast<std::size_t>(e)] &&
                labels[static_cast<std::size_t>(e)].is_empty())
                throw std::logic_error("color_graph: empty label escaped the padding block");
    }
    EdgeColoring coloring{k, std::move(labels)};
    verify_or_die(g, coloring, true, "color_graph");
    return coloring;
}

UnionColoring union_vertex_coloring(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.labels.size()) != g.edge_count())
        throw input_error("union coloring: assignment does not cover every edge");
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Label& label = c.labels[static_cast<std::size_t>(e)];
        if (label.ground_size() != c.k)
            throw input_error("union coloring: label ground size differs from k");
        bits[static_cast<std::size_t>(g.edge(e).u)] |= label.bits();
        bits[static_cast<std::size_t>(g.edge(e).v)] |= label.bits();
    }
    UnionColoring out;
    out.reserve(bits.size());
    for (std::uint64_t b : bits) out.emplace_back(b, c.k);
    return out;
}

VerifyReport verify(const Graph& g, const EdgeColoring& c, bool allow_empty) {
    VerifyReport report;
    const UnionColoring unions = union_vertex_coloring(g, c);

    if (!allow_empty)
        for (int e = 0; e < g.edge_count(); ++e)
            if (c.labels[static_cast<std::size_t>(e)].is_empty())
                report.empty_label_edges.push_back(e);

    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) report.isolated_vertices.push_back(v);

    std::vector<std::pair<std::uint64_t, int>> keyed;
    keyed.reserve(unions.size());
    for (int v = 0; v < g.vertex_count(); ++v)
        keyed.emplace_back(unions[static_cast<std::size_t>(v)].bits(), v);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); ++i)
        for (std::size_t j = i + 1; j < keyed.size() && keyed[j].first == keyed[i].first; ++j)
            report.union_collisions.emplace_back(keyed[i].second, keyed[j].second);
    for (auto& [u, v] : report.union_collisions)
        if (u > v) std::swap(u, v);
    std::sort(report.union_collisions.begin(), report.union_collisions.end());

    std::uint64_t used = 0;
    for (const Label& label : c.labels) used |= label.bits();
    report.colors_used = std::popcount(used);
    report.valid = report.union_collisions.empty() &&
                   report.isolated_vertices.empty() &&
                   report.empty_label_edges.empty();
    return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
    out << "valid=" << (report.valid ? "true" : "false")
        << " colors_used=" << report.colors_used
        << " collisions=" << report.union_collisions.size()
        << " empty_label_edges=" << report.empty_label_edges.size()
        << " isolated=" << report.isolated_vertices.size() << "\n";
    for (const auto& [u, v] : report.union_collisions)
        out << "collision " << u << " " << v << "\n";
    for (int e : report.empty_label_edges) out << "empty-label-edge " << e << "\n";
    for (int v : report.isolated_vertices) out << "isolated " << v << "\n";
}

void write_coloring(const Graph& g, const EdgeColoring& c, bool empty_mode,
                    std::ostream& out) {
    if (static_cast<int>(c.labels.size()) != g.edge_count())
        throw input_error("write_coloring: assignment does not cover every edge");
    out << "k " << c.k << " mode " << (empty_mode ? "empty" : "standard") << "\n";
    for (int e = 0; e < g.edge_count(); ++e)
        out << g.edge(e).u << " " << g.edge(e).v << " : "
            << c.labels[static_cast<std::size_t>(e)].str() << "\n";
}

LoadedColoring read_coloring(const Graph& g, std::istream& in) {
    std::string raw;
    int lineno = 0;
    bool saw_header = false;
    LoadedColoring loaded;
    std::vector<char> covered(static_cast<std::size_t>(g.edge_count()), 0);
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!saw_header) {
            std::istringstream fields(line);
            std::string kw, mode;
            int k = 0;
            if (!(fields >> kw >> k >> mode) || kw != "k")
                throw parse_error(lineno, "expected header 'k <colors> mode <standard|empty>'");
            std::string mode_kw = mode;
            if (mode != "mode" || !(fields >> mode_kw))
                throw parse_error(lineno, "expected header 'k <colors> mode <standard|empty>'");
            if (mode_kw == "standard")
                loaded.empty_mode = false;
            else if (mode_kw == "empty")
                loaded.empty_mode = true;
            else
                throw parse_error(lineno, "unknown mode '" + mode_kw + "'");
            if (k < 0 || k > kMaxColors) throw parse_error(lineno, "color count out of range");
            loaded.coloring.k = k;
            loaded.coloring.labels.assign(static_cast<std::size_t>(g.edge_count()),
                                          Label::empty(k));
            saw_header = true;
            continue;
        }
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error(lineno, "expected 'u v : {labels}'");
        std::istringstream fields(line.substr(0, colon));
        long long u = 0, v = 0;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw parse_error(lineno, "expected 'u v : {labels}'");
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v)
            throw parse_error(lineno, "edge endpoints out of range");
        const auto id = g.edge_id(static_cast<int>(u), static_cast<int>(v));
        if (!id) throw parse_error(lineno, "edge not present in the graph");
        if (covered[static_cast<std::size_t>(*id)])
            throw parse_error(lineno, "edge colored twice");
        covered[static_cast<std::size_t>(*id)] = 1;
        try {
            loaded.coloring.labels[static_cast<std::size_t>(*id)] =
                Label::parse(line.substr(colon + 1), loaded.coloring.k);
        } catch (const input_error& err) {
            throw parse_error(lineno, err.what());
        }
    }
    if (!saw_header) throw input_error("coloring file: missing header");
    for (int e = 0; e < g.edge_count(); ++e)
        if (!covered[static_cast<std::size_t>(e)])
            throw input_error("coloring file: edge " + std::to_string(g.edge(e).u) +
                              " " + std::to_string(g.edge(e).v) + " has no label");
    return loaded;
}

}  // namespace unioncolor

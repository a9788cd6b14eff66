#include "unioncolor/onestar.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "unioncolor/errors.hpp"

namespace unioncolor {

std::vector<int> OneStarAnatomy::vertex_order() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(order()));
    out.push_back(center);
    for (const auto& [u, v] : legs) {
        out.push_back(u);
        out.push_back(v);
    }
    for (int leaf : leaves) out.push_back(leaf);
    return out;
}

namespace {

struct ViewIndex {
    std::unordered_map<int, int> pos;      // vertex id -> local index
    std::vector<std::vector<int>> adj;     // local adjacency by vertex id
    std::vector<int> ids;                  // sorted vertex ids
};

ViewIndex index_view(const TreeView& t) {
    ViewIndex ix;
    ix.ids = t.vertices;
    std::sort(ix.ids.begin(), ix.ids.end());
    if (std::adjacent_find(ix.ids.begin(), ix.ids.end()) != ix.ids.end())
        throw input_error("tree view: repeated vertex");
    ix.pos.reserve(ix.ids.size());
    for (std::size_t i = 0; i < ix.ids.size(); ++i)
        ix.pos.emplace(ix.ids[i], static_cast<int>(i));
    ix.adj.assign(ix.ids.size(), {});
    for (const Edge& e : t.edges) {
        auto iu = ix.pos.find(e.u);
        auto iv = ix.pos.find(e.v);
        if (iu == ix.pos.end() || iv == ix.pos.end())
            throw input_error("tree view: edge endpoint outside the vertex set");
        ix.adj[static_cast<std::size_t>(iu->second)].push_back(e.v);
        ix.adj[static_cast<std::size_t>(iv->second)].push_back(e.u);
    }
    for (auto& nb : ix.adj) std::sort(nb.begin(), nb.end());
    return ix;
}

bool view_connected(const ViewIndex& ix) {
    if (ix.ids.empty()) return true;
    std::vector<char> seen(ix.ids.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        int local = queue.front();
        queue.pop_front();
        for (int w : ix.adj[static_cast<std::size_t>(local)]) {
            int lw = ix.pos.at(w);
            if (seen[static_cast<std::size_t>(lw)]) continue;
            seen[static_cast<std::size_t>(lw)] = 1;
            ++reached;
            queue.push_back(lw);
        }
    }
    return reached == ix.ids.size();
}

void require_tree(const TreeView& t, const ViewIndex& ix) {
    if (t.edges.size() + 1 != t.vertices.size())
        throw input_error("tree view: edge count does not match a tree");
    if (!view_connected(ix)) throw input_error("tree view: not connected");
}

int view_degree(const ViewIndex& ix, int v) {
    return static_cast<int>(ix.adj[static_cast<std::size_t>(ix.pos.at(v))].size());
}

const std::vector<int>& view_neighbors(const ViewIndex& ix, int v) {
    return ix.adj[static_cast<std::size_t>(ix.pos.at(v))];
}

// A valid center has degree >= 2 and every neighbor is either a leaf or a
// degree-2 vertex whose far neighbor is a leaf.
bool valid_center(const ViewIndex& ix, int v) {
    if (view_degree(ix, v) < 2) return false;
    for (int u : view_neighbors(ix, v)) {
        const int du = view_degree(ix, u);
        if (du == 1) continue;
        if (du != 2) return false;
        int far = -1;
        for (int w : view_neighbors(ix, u))
            if (w != v) far = w;
        if (far < 0 || view_degree(ix, far) != 1) return false;
    }
    return true;
}

}  // namespace

bool is_onestar(const TreeView& t) {
    const ViewIndex ix = index_view(t);
    require_tree(t, ix);
    if (ix.ids.size() < 3) return false;
    for (int v : ix.ids)
        if (valid_center(ix, v)) return true;
    return false;
}

OneStarAnatomy analyze_onestar(const TreeView& t) {
    const ViewIndex ix = index_view(t);
    require_tree(t, ix);
    int center = -1;
    if (ix.ids.size() >= 3) {
        for (int v : ix.ids) {
            if (valid_center(ix, v)) {
                center = v;  // ids are ascending, so the first hit is minimal
                break;
            }
        }
    }
    if (center < 0) throw input_error("analyze_onestar: tree is not a 1-star");

    OneStarAnatomy anatomy;
    anatomy.center = center;
    for (int u : view_neighbors(ix, center)) {
        if (view_degree(ix, u) == 1) {
            anatomy.leaves.push_back(u);
        } else {
            int far = -1;
            for (int w : view_neighbors(ix, u))
                if (w != center) far = w;
            anatomy.legs.emplace_back(u, far);
        }
    }
    // neighbors come back ascending, so legs (by u) and leaves are ordered
    return anatomy;
}

SpanningForest spanning_onestar_forest(const Graph& g) {
    if (g.vertex_count() == 0)
        throw eligibility_error("spanning forest: graph has no vertices");
    if (min_component_order(g) < 3)
        throw eligibility_error("spanning forest: component of order at most two");

    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<char> in_forest(static_cast<std::size_t>(m), 0);

    // breadth-first spanning forest from the lowest unvisited vertex,
    // neighbors scanned in ascending order
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int s = 0; s < n; ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            seen[static_cast<std::size_t>(s)] = 1;
            std::deque<int> queue{s};
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int w : g.neighbors(u)) {
                    if (seen[static_cast<std::size_t>(w)]) continue;
                    seen[static_cast<std::size_t>(w)] = 1;
                    in_forest[static_cast<std::size_t>(*g.edge_id(u, w))] = 1;
                    queue.push_back(w);
                }
            }
        }
    }

    // Greedy minimization: delete the lowest-id forest edge whose removal
    // leaves both resulting trees with order >= 3, then rescan.
    std::vector<std::vector<std::pair<int, int>>> fadj(
        static_cast<std::size_t>(n));  // (neighbor, edge id)
    std::vector<int> tree_of(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> below(static_cast<std::size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (true) {
        for (auto& nb : fadj) nb.clear();
        for (int e = 0; e < m; ++e) {
            if (!in_forest[static_cast<std::size_t>(e)]) continue;
            const Edge& ed = g.edge(e);
            fadj[static_cast<std::size_t>(ed.u)].emplace_back(ed.v, e);
            fadj[static_cast<std::size_t>(ed.v)].emplace_back(ed.u, e);
        }
        std::fill(tree_of.begin(), tree_of.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::fill(below.begin(), below.end(), 1);
        order.clear();
        std::vector<int> tree_size;
        for (int s = 0; s < n; ++s) {
            if (tree_of[static_cast<std::size_t>(s)] != -1) continue;
            const int id = static_cast<int>(tree_size.size());
            tree_size.push_back(0);
            std::deque<int> queue{s};
            tree_of[static_cast<std::size_t>(s)] = id;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                order.push_back(u);
                ++tree_size[static_cast<std::size_t>(id)];
                for (auto [w, e] : fadj[static_cast<std::size_t>(u)]) {
                    if (tree_of[static_cast<std::size_t>(w)] != -1) continue;
                    tree_of[static_cast<std::size_t>(w)] = id;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int p = parent[static_cast<std::size_t>(*it)];
            if (p != -1) below[static_cast<std::size_t>(p)] += below[static_cast<std::size_t>(*it)];
        }
        int chosen = -1;
        for (int e = 0; e < m && chosen < 0; ++e) {
            if (!in_forest[static_cast<std::size_t>(e)]) continue;
            const Edge& ed = g.edge(e);
            const int child = parent[static_cast<std::size_t>(ed.v)] == ed.u ? ed.v : ed.u;
            const int side = below[static_cast<std::size_t>(child)];
            const int other =
                tree_size[static_cast<std::size_t>(tree_of[static_cast<std::size_t>(ed.u)])] - side;
            if (side >= 3 && other >= 3) chosen = e;
        }
        if (chosen < 0) break;
        in_forest[static_cast<std::size_t>(chosen)] = 0;
    }

    // package trees by component of the remaining forest
    SpanningForest forest;
    forest.edge_in_forest = in_forest;
    std::vector<Edge> kept;
    for (int e = 0; e < m; ++e)
        if (in_forest[static_cast<std::size_t>(e)]) kept.push_back(g.edge(e));
    Graph fgraph(n, kept);
    std::unordered_map<int, std::size_t> tree_index;
    for (const auto& comp : components(fgraph)) {
        tree_index.emplace(comp.front(), forest.trees.size());
        forest.trees.push_back(TreeView{comp, {}});
    }
    std::vector<int> rep(static_cast<std::size_t>(n));
    for (const TreeView& t : forest.trees)
        for (int v : t.vertices) rep[static_cast<std::size_t>(v)] = t.vertices.front();
    for (const Edge& e : kept)
        forest.trees[tree_index.at(rep[static_cast<std::size_t>(e.u)])].edges.push_back(e);

    for (const TreeView& t : forest.trees)
        if (!is_onestar(t))
            throw std::logic_error("spanning forest: a minimal tree is not a 1-star");
    return forest;
}

}  // namespace unioncolor

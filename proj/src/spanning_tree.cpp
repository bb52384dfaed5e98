#include "levi/spanning_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace levi {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

bool is_spanning_tree(const Graph& g, const SpanningTree& t) {
    const int n = g.order();
    if (n == 0) return t.edge_ids.empty();
    if (static_cast<int>(t.edge_ids.size()) != n - 1) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < t.edge_ids.size(); ++i) {
        const int id = t.edge_ids[i];
        if (id < 0 || id >= g.size()) return false;
        if (i > 0 && t.edge_ids[i - 1] >= id) return false;
        const int a = find_root(parent, g.edges()[id].u);
        const int b = find_root(parent, g.edges()[id].w);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

SpanningTree tree_from_edges(const Graph& g, const std::vector<Edge>& edges) {
    SpanningTree t;
    for (const auto& e : edges) {
        const int id = g.edge_id(e.u, e.w);
        if (id < 0) throw std::invalid_argument("tree edge not present in graph");
        t.edge_ids.push_back(id);
    }
    std::sort(t.edge_ids.begin(), t.edge_ids.end());
    return t;
}

std::vector<Edge> tree_edges(const Graph& g, const SpanningTree& t) {
    std::vector<Edge> out;
    for (int id : t.edge_ids) out.push_back(g.edges()[id]);
    return out;
}

std::vector<int> cotree_edge_ids(const Graph& g, const SpanningTree& t) {
    std::vector<char> in_tree(g.size(), 0);
    for (int id : t.edge_ids) in_tree[id] = 1;
    std::vector<int> out;
    for (int id = 0; id < g.size(); ++id)
        if (!in_tree[id]) out.push_back(id);
    return out;
}

}  // namespace levi

#include "levi/levi_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace levi {

LeviGraph::LeviGraph(int v, Graph graph) : v_(v), graph_(std::move(graph)) {
    if (v <= 0 || graph_.order() != 2 * v)
        throw std::invalid_argument("Levi graph must have 2v vertices");
    if (!is_regular(graph_, 3)) throw std::invalid_argument("Levi graph must be cubic");
    for (const auto& e : graph_.edges())
        if ((e.u < v) == (e.w < v))
            throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.w) +
                                        "} does not join a point to a block");
    if (const int g = girth(graph_); g != 0 && g < 6) throw std::invalid_argument("Levi graph has a 4-cycle");
}

std::vector<int> LeviGraph::color_classes() const {
    std::vector<int> c(order(), 1);
    std::fill(c.begin(), c.begin() + v_, 0);
    return c;
}

LeviGraph levi_graph(const Configuration& cfg) {
    const int v = cfg.points();
    std::vector<Edge> edges;
    edges.reserve(3 * v);
    for (int i = 0; i < v; ++i)
        for (int p : cfg.block(i)) edges.push_back({p, v + i});
    return LeviGraph(v, Graph(2 * v, std::move(edges)));
}

Configuration configuration_from_levi(const LeviGraph& g, bool swap) {
    const int v = g.points();
    std::vector<Block> blocks;
    blocks.reserve(v);
    for (int i = 0; i < v; ++i) {
        const int x = swap ? i : v + i;
        auto nb = g.graph().neighbors(x);
        const int shift = swap ? v : 0;
        blocks.push_back({nb[0] - shift, nb[1] - shift, nb[2] - shift});
    }
    return validate_configuration(v, std::move(blocks));
}

LeviGraph swap_colors(const LeviGraph& g) {
    const int v = g.points();
    std::vector<int> perm(2 * v);
    for (int x = 0; x < 2 * v; ++x) perm[x] = x < v ? x + v : x - v;
    return LeviGraph(v, relabel(g.graph(), perm));
}

}  // namespace levi

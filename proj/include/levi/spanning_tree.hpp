#pragma once

#include <vector>

#include "levi/graph.hpp"

namespace levi {

/// Edge subset of a graph, held as sorted edge ids (see Graph::edges()).
struct SpanningTree {
    std::vector<int> edge_ids;

    bool operator==(const SpanningTree&) const = default;
};

/// Acyclic, connected and covering all vertices.
bool is_spanning_tree(const Graph& g, const SpanningTree& t);

/// Throws std::invalid_argument when an edge is not in g.
SpanningTree tree_from_edges(const Graph& g, const std::vector<Edge>& edges);
std::vector<Edge> tree_edges(const Graph& g, const SpanningTree& t);

/// Edge ids not in t.
std::vector<int> cotree_edge_ids(const Graph& g, const SpanningTree& t);

}  // namespace levi

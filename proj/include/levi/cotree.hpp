#pragma once

#include <vector>

#include "levi/levi_graph.hpp"
#include "levi/spanning_tree.hpp"

namespace levi {

struct CotreeComponent {
    std::vector<int> vertices;  // sorted
    std::vector<int> edge_ids;  // sorted
    int edge_count() const { return static_cast<int>(edge_ids.size()); }
};

/// Connected components of the co-tree edge set (components without edges
/// are omitted), ordered by smallest vertex, plus the co-tree valency of
/// every vertex.
struct CotreeReport {
    std::vector<CotreeComponent> components;
    std::vector<int> valency;

    bool all_even() const;
    int odd_components() const;
};

/// Throws std::invalid_argument when t does not span g.
CotreeReport cotree_report(const Graph& g, const SpanningTree& t);

/// Every point vertex has even co-tree valency.
bool points_even_in_cotree(const LeviGraph& g, const SpanningTree& t);

}  // namespace levi

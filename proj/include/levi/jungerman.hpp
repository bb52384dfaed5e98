#pragma once

#include <cstdint>
#include <optional>

#include "levi/graph.hpp"
#include "levi/spanning_tree.hpp"

namespace levi {

enum class SearchStatus { Found, Refuted, Unknown };

const char* to_string(SearchStatus s);

/// Outcome of a search for a spanning tree whose co-tree components all have
/// an even number of edges.
struct JungermanResult {
    SearchStatus status = SearchStatus::Unknown;
    std::optional<SpanningTree> tree;
    std::uint64_t nodes = 0;  // search nodes or local-search iterations used
};

/// Exhaustive include/exclude search over spanning trees (edges decided in id
/// order). A co-tree component whose vertices have no undecided edges left is
/// final, and an odd final component prunes the branch. Refuted is returned
/// only when the whole space was covered; hitting `node_limit` gives Unknown.
/// Requires a connected graph.
JungermanResult jungerman_bruteforce(const Graph& g, std::uint64_t node_limit = 50'000'000);

/// Randomised local search: random Kruskal trees improved by tree/co-tree
/// edge exchanges that do not increase the number of odd co-tree
/// components, restarting on stagnation. One-sided: never returns Refuted.
JungermanResult jungerman_search(const Graph& g, std::uint64_t budget, std::uint64_t seed = 0);

/// Number of odd-size co-tree components.
int odd_cotree_components(const Graph& g, const SpanningTree& t);

}  // namespace levi

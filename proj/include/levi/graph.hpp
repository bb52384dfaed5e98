#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace levi {

using Permutation = std::vector<int>;

struct Edge {
    int u = 0;
    int w = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph.
///
/// Neighbour lists are sorted. Each vertex u owns degree(u) darts
/// numbered offsets()[u] .. offsets()[u+1]-1, the slot order following the
/// sorted neighbour order, so dart(u, i) points from u to neighbors(u)[i].
/// Edges are stored with u < w and sorted lexicographically; edge ids index
/// into edges().
class Graph {
public:
    Graph() : offset_{0} {}
    Graph(int order, std::vector<Edge> edges);

    int order() const { return static_cast<int>(offset_.size()) - 1; }
    int size() const { return static_cast<int>(edges_.size()); }

    std::span<const int> neighbors(int u) const {
        return {adj_.data() + offset_[u], adj_.data() + offset_[u + 1]};
    }
    int degree(int u) const { return offset_[u + 1] - offset_[u]; }
    bool has_edge(int u, int w) const { return edge_id(u, w) >= 0; }
    /// Index of edge {u, w} in edges(), or -1.
    int edge_id(int u, int w) const;
    const std::vector<Edge>& edges() const { return edges_; }

    int dart_count() const { return static_cast<int>(adj_.size()); }
    int dart(int u, int slot) const { return offset_[u] + slot; }
    int tail(int d) const { return tail_[d]; }
    int head(int d) const { return adj_[d]; }
    int reverse(int d) const { return rev_[d]; }
    int dart_edge(int d) const { return dart_edge_[d]; }
    int slot(int d) const { return d - offset_[tail_[d]]; }

    std::span<const int> offsets() const { return offset_; }
    std::span<const int> adjacency() const { return adj_; }

    bool operator==(const Graph& other) const {
        return offset_ == other.offset_ && adj_ == other.adj_;
    }

private:
    std::vector<int> offset_;
    std::vector<int> adj_;
    std::vector<int> tail_;
    std::vector<int> rev_;
    std::vector<int> dart_edge_;
    std::vector<Edge> edges_;
};

/// Component index per vertex, components numbered in order of their
/// smallest vertex.
std::vector<int> component_labels(const Graph& g, int* count = nullptr);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Length of a shortest cycle, or 0 for a forest.
int girth(const Graph& g);
bool is_regular(const Graph& g, int degree);

/// Graph with vertex x renamed to perm[x].
Graph relabel(const Graph& g, std::span<const int> perm);

/// graph6 encoding, without the optional ">>graph6<<" header.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace levi

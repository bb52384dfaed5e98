#pragma once

#include "levi/configuration.hpp"
#include "levi/graph.hpp"

namespace levi {

enum class Color { Point, Block };

/// Point-block incidence graph of a v_3.
///
/// Vertices 0..v-1 are points, v..2v-1 are blocks. The graph is cubic,
/// bipartite between the two colour classes and has girth at least 6.
class LeviGraph {
public:
    /// Validates the invariants; throws std::invalid_argument otherwise.
    LeviGraph(int v, Graph graph);

    int points() const { return v_; }
    int order() const { return graph_.order(); }
    const Graph& graph() const { return graph_; }
    bool is_point(int x) const { return x < v_; }
    Color color(int x) const { return x < v_ ? Color::Point : Color::Block; }
    int block_vertex(int block_index) const { return v_ + block_index; }

    /// 0 for points, 1 for blocks.
    std::vector<int> color_classes() const;

private:
    int v_;
    Graph graph_;
};

/// Points keep their numbers, block i becomes vertex v + i.
LeviGraph levi_graph(const Configuration& cfg);

/// Reads the configuration back. With swap_colors the block vertices become
/// the points, i.e. the result is the dual.
Configuration configuration_from_levi(const LeviGraph& g, bool swap_colors = false);

/// The same graph with the colour classes exchanged (blocks first).
LeviGraph swap_colors(const LeviGraph& g);

}  // namespace levi

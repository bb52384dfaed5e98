#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "levi/configuration.hpp"
#include "levi/levi_graph.hpp"

namespace levi {

/// Blocks {m, m+1, m+3} mod 7 in order m = 0..6.
Configuration fano();
LeviGraph heawood();

/// The Pappus configuration 9_3.
Configuration pappus();

/// Cyclic configuration generated by {0, 1, 3}: blocks {m, m+1, m+3} mod v.
/// Requires odd v >= 7.
Configuration cyclic_config(int v);

/// Explicit point set whose induced Levi subgraph with all blocks is a
/// spanning tree of those vertices (|S| = (v-1)/2), for cyclic_config(v).
std::vector<int> cyclic_dominating_set(int v);

/// Disjoint union; points and blocks of b are shifted by a.points().
Configuration disjoint_union(const Configuration& a, const Configuration& b);

/// Which Levi edge to cut in each source: (point, block index).
struct StitchPlan {
    std::array<std::pair<int, int>, 3> deleted;
};

struct StitchResult {
    Configuration configuration;
    StitchPlan plan;
    std::vector<std::string> warnings;
    /// Vertex offsets of the three sources inside the stitched Levi graph:
    /// points of source i start at point_offset[i], blocks at v + point_offset[i].
    std::array<int, 3> point_offset{};
};

/// Default plan: each source's lexicographically first Levi edge, i.e.
/// point 0 with the lowest-indexed block through it.
StitchPlan default_stitch_plan(const Configuration& c1, const Configuration& c2, const Configuration& c3);

/// Cut one point-block incidence in each source and reconnect the freed
/// point of source i to the freed block of source i+1 (cyclically).
StitchResult stitch(const Configuration& c1, const Configuration& c2, const Configuration& c3,
                    std::optional<StitchPlan> plan = std::nullopt);

/// Martinetti step: blocks x = {x1,x2,x3} and y = {y1,y2,y3} are replaced by
/// {x1,y1,z}, {x2,x3,z}, {y2,y3,z} with z the new point v.
struct MartinettiStep {
    int x_block = 0;
    int y_block = 0;
    int x1 = 0;
    int y1 = 0;
};

/// Throws std::invalid_argument if the step does not apply.
Configuration martinetti_extend(const Configuration& cfg, const MartinettiStep& step);

struct Reduction {
    int z = 0;                  // removed point
    MartinettiStep step;        // re-extending parent with this step gives cfg back (z renamed)
    Configuration parent;
};

/// All reverse Martinetti steps producing a valid (v-1)_3. The pairing of
/// z's neighbours is enumerated in a fixed order: the block through z kept
/// as {x1, y1, z} runs over z's star in increasing block index, and x1 is
/// taken before y1 in increasing point order.
std::vector<Reduction> martinetti_reductions(const Configuration& cfg);

bool is_reducible(const Configuration& cfg);

}  // namespace levi

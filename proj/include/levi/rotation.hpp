#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "levi/graph.hpp"

namespace levi {

/// Cyclic order of the darts around every vertex, stored as a successor
/// permutation on darts: next(d) is the dart following d around tail(d).
class RotationSystem {
public:
    /// Validates that `next` cycles exactly through the darts of each vertex.
    RotationSystem(const Graph& g, std::vector<int> next);

    /// Slot order at every vertex (dart i -> i+1 mod degree).
    static RotationSystem identity(const Graph& g);

    /// One flip bit per vertex: 0 keeps slot order, 1 reverses it. For
    /// cubic graphs the two values give both rotations at the vertex.
    static RotationSystem from_flips(const Graph& g, std::span<const std::uint8_t> flips);

    /// Explicit cyclic neighbour order per vertex.
    static RotationSystem from_neighbor_cycles(const Graph& g, const std::vector<std::vector<int>>& cycles);

    int next(int dart) const { return next_[dart]; }
    std::span<const int> successors() const { return next_; }

    /// Every vertex rotation inverted (the mirror embedding).
    RotationSystem reversed() const;

    /// Neighbour cycle at u starting from its smallest neighbour.
    std::vector<int> neighbor_cycle(const Graph& g, int u) const;

private:
    RotationSystem() = default;
    std::vector<int> next_;
};

struct FaceTrace {
    /// Closed dart walks, each starting at its smallest dart; faces ordered
    /// by that dart.
    std::vector<std::vector<int>> faces;
    int genus = 0;
};

/// Faces of the orientable embedding given by `rot`; the face successor of
/// dart d is rot.next(reverse(d)). Genus comes from Euler's formula, summed
/// over components.
FaceTrace trace_faces(const Graph& g, const RotationSystem& rot);

/// Number of faces only.
int count_faces(const Graph& g, const RotationSystem& rot);

/// Genus from Euler's formula for a graph with the given face count.
int euler_genus(const Graph& g, int faces);

}  // namespace levi

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "levi/jungerman.hpp"
#include "levi/levi_graph.hpp"
#include "levi/rotation.hpp"

namespace levi {

/// A triple orientation is one bit per block: 0 orders the block's points
/// cyclically ascending (the block vertex's slot order), 1 descending. It
/// is stored as the rotation at the block vertex.
using Orientation = std::vector<std::uint8_t>;

struct RotationSearchResult {
    /// Found: `rotation` has one face. Refuted: no point rotations give one
    /// face for this orientation (proof by exhaustion). Unknown: refused
    /// because v exceeds the limit.
    SearchStatus status = SearchStatus::Unknown;
    std::optional<RotationSystem> rotation;
    std::uint64_t nodes = 0;
};

/// Exhaustive search over the 2^v point-vertex rotations with the block
/// rotations fixed by `orientation`. Points are decided in breadth-first
/// order from vertex 0, flip 0 before flip 1; a branch dies as soon as a
/// face closes without covering every dart.
RotationSearchResult find_single_face_rotation(const LeviGraph& g, std::span<const std::uint8_t> orientation,
                                               int exhaustive_limit = 19);

struct OrientationSurvey {
    /// True when every orientation was settled (Found or Refuted).
    bool complete = false;
    std::uint64_t orientations_checked = 0;  // block 0 bit fixed to 0
    std::uint64_t embeddable = 0;            // of those checked
    /// First orientation (in counting order) without a single-face rotation.
    std::optional<Orientation> first_failure;
    /// Witness for the all-zero orientation, when one exists.
    std::optional<RotationSystem> witness;
};

/// Runs the search for all 2^(v-1) orientations with block 0 bit 0; the
/// others are their global reversals (reverse every rotation). Orientation
/// number m has bit i of m as the bit of block i + 1.
OrientationSurvey survey_orientations(const LeviGraph& g, int exhaustive_limit = 19);

/// Rotation system on the Levi graph whose block rotations realise the
/// orientation and whose point rotations are given by flips.
RotationSystem rotation_from_bits(const LeviGraph& g, std::span<const std::uint8_t> point_flips,
                                  std::span<const std::uint8_t> orientation);

/// The orientation a rotation system induces on the blocks.
Orientation induced_orientation(const LeviGraph& g, const RotationSystem& rot);

}  // namespace levi

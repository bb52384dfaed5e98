#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "levi/configuration.hpp"
#include "levi/rotation.hpp"

namespace cli {

struct DrawOptions {
    std::uint64_t seed = 0;
    /// Adds a face list traced from this rotation.
    std::optional<levi::RotationSystem> rotation;
    /// Embedded verbatim in <metadata>.
    std::string metadata;
};

/// Levi graph as SVG: black points, white blocks. Graphs with a ring cut get
/// one sector per part; everything else a seeded spring layout.
std::string draw_svg(const levi::Configuration& cfg, const DrawOptions& options);

}  // namespace cli

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "levi/configuration.hpp"
#include "levi/dominating.hpp"
#include "levi/ring_cut.hpp"
#include "levi/rotation_search.hpp"

namespace levi {

enum class VerdictStatus { EveryOrientation, SomeOrientation, NoOrientation, Unknown };

const char* to_string(VerdictStatus s);

struct VerdictPolicy {
    bool use_dominating_set = true;
    std::uint64_t dominating_budget = 100'000'000;
    bool use_ring_cut = true;
    /// Largest v for the exhaustive orientation survey.
    int exhaustive_limit = 19;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Unknown;
    std::string method;  // "dominating_tree", "ring_cut", "orientation_survey" or "none"
    std::optional<DominatingTreeCertificate> dominating;
    std::optional<RingCutCertificate> ring_cut;
    std::optional<OrientationSurvey> survey;
    std::string note;
};

/// Certificate-first pipeline: a dominating-set tree proves every
/// orientation embeddable, a ring cut proves none is, and otherwise all
/// orientations are searched when v is small enough. Unknown is returned
/// rather than a guess. Throws std::invalid_argument for even v or a
/// disconnected configuration.
Verdict verdict(const Configuration& cfg, const VerdictPolicy& policy = {});

}  // namespace levi

#pragma once

#include <optional>
#include <vector>

#include "levi/automorphism.hpp"
#include "levi/configuration.hpp"

namespace levi {

/// The structural properties counted in the configuration census.
struct Predicates {
    bool self_dual = false;
    bool self_polar = false;
    bool point_transitive = false;
    bool cyclic = false;
    bool flag_transitive = false;
    /// Inclusive reading: transitive on unordered flags under automorphisms
    /// and anti-automorphisms, whether or not also flag-transitive.
    bool weakly_flag_transitive = false;
    bool blocking_set_free = false;
    bool connected = false;
};

Predicates predicates(const Configuration& cfg);
Predicates predicates(const Configuration& cfg, const AutGroupInfo& group);

/// A colour-swapping automorphism of order two, as a vertex permutation of
/// the Levi graph.
std::optional<Permutation> find_polarity(const Configuration& cfg);

/// A colour-preserving automorphism whose point action is one v-cycle.
std::optional<Permutation> find_cyclic_automorphism(const Configuration& cfg);

/// Lexicographically least blocking set, comparing membership words
/// position by position with members ordered before non-members. The
/// complement of a blocking set is again one.
std::optional<std::vector<int>> find_blocking_set(const Configuration& cfg);

bool is_blocking_set(const Configuration& cfg, const std::vector<int>& points);

}  // namespace levi

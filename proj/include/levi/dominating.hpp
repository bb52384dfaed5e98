#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levi/configuration.hpp"
#include "levi/levi_graph.hpp"
#include "levi/spanning_tree.hpp"

namespace levi {

/// Point set S of size (v-1)/2 meeting every block such that S together with
/// all blocks induces a tree in the Levi graph, and that tree completed to a
/// spanning tree by hanging every other point on its lowest-index block.
struct DominatingTreeCertificate {
    std::vector<int> s;  // sorted
    SpanningTree tree;
};

/// Checks S and builds the completed tree. Returns an error message instead
/// when S fails (wrong size, a block missed, induced subgraph not a tree).
struct DominatingCheck {
    std::optional<DominatingTreeCertificate> certificate;
    std::string error;
};
DominatingCheck check_dominating_set(const Configuration& cfg, const std::vector<int>& s);

/// Independent re-verification of a full certificate.
bool validate_dominating_certificate(const Configuration& cfg, const DominatingTreeCertificate& cert);

enum class DominatingSearchStatus { Found, Exhausted, BudgetExceeded };

const char* to_string(DominatingSearchStatus s);

struct DominatingSearchResult {
    DominatingSearchStatus status = DominatingSearchStatus::Exhausted;
    std::optional<DominatingTreeCertificate> certificate;
    std::uint64_t nodes = 0;
};

/// Tries the greedy set first (repeatedly the point meeting most uncovered
/// blocks, lowest index on ties), then all (v-1)/2-subsets in lexicographic
/// order, pruning on block coverage and on cycles in the induced subgraph.
/// Requires odd v.
DominatingSearchResult find_dominating_certificate(const Configuration& cfg, std::uint64_t node_budget = 100'000'000);

}  // namespace levi

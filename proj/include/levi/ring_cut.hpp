#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "levi/graph.hpp"

namespace levi {

struct RingPart {
    std::vector<int> vertices;  // sorted
    int n = 0;                  // vertices
    int m = 0;                  // edges inside the part
    int cycle_rank() const { return m - n + 1; }
};

/// Three edges whose removal leaves exactly three connected parts joined in
/// a ring, each part of odd cycle rank. Such a graph has no spanning tree
/// with all co-tree components even: any tree keeps two ring edges, and
/// then some part keeps an odd number of co-tree edges to itself.
struct RingCutCertificate {
    /// Parts ordered by smallest vertex; edges[i] joins parts i and i+1 mod 3.
    std::array<int, 3> edge_ids{};
    std::array<RingPart, 3> parts;
};

/// First ring cut with edge ids in lexicographic order. Only triples all of
/// whose pairs are 2-edge cuts are examined.
std::optional<RingCutCertificate> ring_cut_certificate(const Graph& g);

/// Empty string when the certificate is valid for g, else the reason.
std::string check_ring_cut(const Graph& g, const RingCutCertificate& cert);

}  // namespace levi

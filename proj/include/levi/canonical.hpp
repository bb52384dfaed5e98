#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "levi/graph.hpp"
#include "levi/levi_graph.hpp"

namespace levi {

/// Canonical encoding of a (vertex-coloured) graph. Equal certificates mean
/// isomorphic inputs, colours included.
using Certificate = std::vector<std::uint32_t>;

struct CertificateHash {
    std::size_t operator()(const Certificate& c) const noexcept;
};

/// Compressed adjacency (CSR) of a simple undirected graph.
struct AdjacencyView {
    int n = 0;
    std::span<const int> offsets;    // n + 1 entries
    std::span<const int> neighbors;  // offsets[n] entries
};

AdjacencyView view_of(const Graph& g);

struct CanonicalForm {
    Certificate certificate;
    /// labeling[i] is the vertex placed at canonical position i.
    std::vector<int> labeling;
    /// position[x] is the canonical position of vertex x.
    std::vector<int> position;
    /// Generators of the colour-preserving automorphism group.
    std::vector<Permutation> generators;
};

/// Individualisation-refinement search. `colors` gives the initial vertex
/// partition (cells ordered by colour value); empty means uniform.
CanonicalForm canonical_form(AdjacencyView g, std::span<const int> colors = {});
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});

/// With respect_colors the point/block classes are fixed cells and points
/// take the low canonical positions; otherwise the search may exchange them.
CanonicalForm canonical_form(const LeviGraph& g, bool respect_colors);

/// relabel(g, form.position).
Graph canonical_graph(const Graph& g, const CanonicalForm& form);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Orbits of the group generated by `gens` on {0..n-1}: representative
/// (smallest member) per point.
std::vector<int> orbit_representatives(int n, const std::vector<Permutation>& gens);

}  // namespace levi

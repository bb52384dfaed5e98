#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "levi/graph.hpp"
#include "levi/levi_graph.hpp"

namespace levi {

/// Permutation group given by generators, with a base and strong generating
/// set built by deterministic Schreier-Sims. Meant for small degrees.
class PermutationGroup {
public:
    PermutationGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::uint64_t order() const;
    bool contains(const Permutation& p) const;

    /// Visits every element; stops early when `visit` returns false.
    void for_each_element(const std::function<bool(const Permutation&)>& visit) const;

private:
    struct Level {
        int base_point = 0;
        std::vector<Permutation> strong;    // generators fixing earlier base points
        std::vector<int> orbit;             // orbit of base_point
        std::vector<Permutation> transversal;  // indexed by point; empty if not in orbit
    };

    void rebuild_orbit(std::size_t level);
    std::vector<Permutation> strong_generators_from(std::size_t level) const;
    // Returns (residue, level at which sifting stopped).
    std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;
    void add_strong_generator(std::size_t level, const Permutation& p);

    int degree_;
    std::vector<Permutation> generators_;
    std::vector<Level> levels_;
};

Permutation compose(const Permutation& first, const Permutation& second);
Permutation inverse(const Permutation& p);
bool is_identity(const Permutation& p);
bool is_automorphism(const Graph& g, const Permutation& p);

enum class ColorAction { Preserve, Swap };

/// Backtracking over all automorphisms of a Levi graph that preserve or swap
/// the colour classes. With `involutions_only` only maps of order at most two
/// are produced. Stops when `visit` returns false; returns false in that
/// case, true when the search ran to completion.
bool enumerate_automorphisms(const LeviGraph& g, ColorAction action, bool involutions_only,
                             const std::function<bool(const Permutation&)>& visit);

/// Automorphism group of a Levi graph.
struct AutGroupInfo {
    /// Generators of the full group (colour classes may be exchanged).
    std::vector<Permutation> generators;
    /// Generators of the colour-preserving subgroup Aut(X).
    std::vector<Permutation> color_preserving_generators;
    std::uint64_t order = 1;
    std::uint64_t color_preserving_order = 1;
    /// Orbit representative per point / block vertex / edge under Aut(X).
    std::vector<int> point_orbits;
    std::vector<int> block_orbits;
    std::vector<int> flag_orbits;
    /// Orbit representative per edge under the full group.
    std::vector<int> unordered_flag_orbits;

    int point_orbit_count() const;
    int flag_orbit_count() const;
    int unordered_flag_orbit_count() const;
};

AutGroupInfo aut_group(const LeviGraph& g);

/// Orbit representative (smallest edge id) per edge under the group
/// generated by `gens`.
std::vector<int> edge_orbits(const Graph& g, const std::vector<Permutation>& gens);

}  // namespace levi

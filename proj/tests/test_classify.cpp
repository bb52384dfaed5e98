#include <random>

#include "doctest.h"
#include "levi/automorphism.hpp"
#include "levi/canonical.hpp"
#include "levi/construct.hpp"
#include "levi/predicates.hpp"
#include "oracles.hpp"

using namespace levi;

namespace {

oracle::Blocks blocks_of(const Configuration& c) { return {c.blocks().begin(), c.blocks().end()}; }

std::vector<int> colors_of(int v) {
    std::vector<int> c(2 * v, 0);
    std::fill(c.begin() + v, c.end(), 1);
    return c;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(1);
    for (const auto& c : {fano(), pappus(), cyclic_config(9), cyclic_config(11)}) {
        const auto g = levi_graph(c);
        const auto base = canonical_form(g, true);
        const auto base_free = canonical_form(g, false);
        for (int trial = 0; trial < 100; ++trial) {
            const auto perm = oracle::random_colored_permutation(c.points(), rng);
            const LeviGraph h(c.points(), relabel(g.graph(), perm));
            CHECK(canonical_form(h, true).certificate == base.certificate);
            const auto any = oracle::random_permutation(g.order(), rng);
            CHECK(canonical_form(relabel(g.graph(), any)).certificate == base_free.certificate);
        }
    }
}

TEST_CASE("canonical relabeling reproduces the certificate graph") {
    std::mt19937_64 rng(2);
    const auto g = levi_graph(pappus()).graph();
    const auto f1 = canonical_form(g);
    const auto h = relabel(g, oracle::random_permutation(g.order(), rng));
    const auto f2 = canonical_form(h);
    CHECK(canonical_graph(g, f1) == canonical_graph(h, f2));
    for (int x = 0; x < g.order(); ++x) CHECK(f1.labeling[f1.position[x]] == x);
}

TEST_CASE("Pappus and cyclic 9_3 Levi graphs differ") {
    const auto a = canonical_form(levi_graph(pappus()), true).certificate;
    const auto b = canonical_form(levi_graph(cyclic_config(9)), true).certificate;
    CHECK(a != b);
    CHECK_FALSE(are_isomorphic(levi_graph(pappus()).graph(), levi_graph(cyclic_config(9)).graph()));
}

TEST_CASE("colour-respecting and free canonical forms on Heawood") {
    const auto g = heawood();
    const auto fixed = canonical_form(g, true);
    const auto free = canonical_form(g, false);
    CHECK(PermutationGroup(14, fixed.generators).order() == 168);
    CHECK(PermutationGroup(14, free.generators).order() == 336);
    // fixed colours: points take positions 0..6
    for (int x = 0; x < 7; ++x) CHECK(fixed.position[x] < 7);
}

TEST_CASE("group orders match brute-force automorphism counts") {
    for (const auto& c : {fano(), pappus(), cyclic_config(9)}) {
        const int v = c.points();
        const auto a = oracle::levi_matrix(v, blocks_of(c));
        const auto info = aut_group(levi_graph(c));
        CHECK(static_cast<long>(info.order) == oracle::count_automorphisms(a));
        CHECK(static_cast<long>(info.color_preserving_order) == oracle::count_automorphisms(a, colors_of(v)));
        for (const auto& p : info.generators) CHECK(is_automorphism(levi_graph(c).graph(), p));
        const auto index = info.order / info.color_preserving_order;
        CHECK((index == 1 || index == 2));
    }
    const auto info = aut_group(heawood());
    CHECK(info.order == 336);
    CHECK(info.color_preserving_order == 168);
    CHECK(info.flag_orbit_count() == 1);
}

TEST_CASE("Pappus is point-transitive") {
    const auto info = aut_group(levi_graph(pappus()));
    CHECK(info.point_orbit_count() == 1);
    CHECK(info.color_preserving_order == 108);
}

TEST_CASE("permutation group membership and enumeration") {
    const auto info = aut_group(heawood());
    const PermutationGroup grp(14, info.color_preserving_generators);
    long seen = 0;
    grp.for_each_element([&](const Permutation& p) {
        CHECK(grp.contains(p));
        ++seen;
        return true;
    });
    CHECK(seen == 168);
    long counted = 0;
    enumerate_automorphisms(heawood(), ColorAction::Preserve, false, [&](const Permutation& p) {
        CHECK(grp.contains(p));
        ++counted;
        return true;
    });
    CHECK(counted == 168);
    long swaps = 0;
    enumerate_automorphisms(heawood(), ColorAction::Swap, false, [&](const Permutation&) { return ++swaps, true; });
    CHECK(swaps == 168);
}

TEST_CASE("cyclic 9_3 Levi graph is vertex-transitive but not the Pappus graph") {
    const auto g = levi_graph(cyclic_config(9));
    const auto info = aut_group(g);
    const auto reps = orbit_representatives(18, info.generators);
    CHECK(std::all_of(reps.begin(), reps.end(), [](int r) { return r == 0; }));
    CHECK_FALSE(are_isomorphic(g.graph(), levi_graph(pappus()).graph()));
}

TEST_CASE("Fano predicates") {
    const auto p = predicates(fano());
    CHECK(p.self_dual);
    CHECK(p.self_polar);
    CHECK(p.point_transitive);
    CHECK(p.cyclic);
    CHECK(p.flag_transitive);
    CHECK(p.weakly_flag_transitive);
    CHECK(p.blocking_set_free);
    CHECK(p.connected);
}

TEST_CASE("polarity and cyclic witnesses are genuine") {
    for (const auto& c : {fano(), cyclic_config(9), cyclic_config(13)}) {
        const auto g = levi_graph(c);
        const auto pol = find_polarity(c);
        REQUIRE(pol.has_value());
        CHECK(is_automorphism(g.graph(), *pol));
        CHECK(is_identity(compose(*pol, *pol)));
        CHECK(g.is_point((*pol)[0]) == false);
        const auto cyc = find_cyclic_automorphism(c);
        REQUIRE(cyc.has_value());
        CHECK(is_automorphism(g.graph(), *cyc));
    }
}

TEST_CASE("blocking sets") {
    CHECK_FALSE(find_blocking_set(fano()).has_value());
    const auto s = find_blocking_set(pappus());
    REQUIRE(s.has_value());
    CHECK(is_blocking_set(pappus(), *s));
    std::vector<int> complement;
    for (int p = 0; p < 9; ++p)
        if (std::find(s->begin(), s->end(), p) == s->end()) complement.push_back(p);
    CHECK(is_blocking_set(pappus(), complement));
    // lexicographically least word with members first: point 0 is a member
    CHECK(s->front() == 0);
}

TEST_CASE("predicate implications on the small census") {
    for (const auto& c : {fano(), pappus(), cyclic_config(9), cyclic_config(11), cyclic_config(13)}) {
        const auto p = predicates(c);
        if (p.self_polar) CHECK(p.self_dual);
        if (p.flag_transitive) CHECK(p.weakly_flag_transitive);
        if (p.cyclic) CHECK(p.point_transitive);
    }
    const auto p = predicates(pappus());
    CHECK(p.point_transitive);
    CHECK_FALSE(p.cyclic);
    CHECK(p.self_dual);
}

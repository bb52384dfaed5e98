#include <numeric>
#include <random>

#include "doctest.h"
#include "levi/certificate.hpp"
#include "levi/construct.hpp"
#include "levi/cotree.hpp"
#include "levi/dominating.hpp"
#include "levi/jungerman.hpp"
#include "levi/ring_cut.hpp"
#include "levi/rotation_search.hpp"
#include "levi/verdict.hpp"
#include "oracles.hpp"

using namespace levi;

namespace {

SpanningTree kruskal_with(const Graph& g, std::vector<int> first) {
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int id = 0; id < g.size(); ++id) first.push_back(id);
    SpanningTree t;
    for (int id : first) {
        const int a = find(g.edges()[id].u), b = find(g.edges()[id].w);
        if (a == b) continue;
        parent[a] = b;
        t.edge_ids.push_back(id);
    }
    std::sort(t.edge_ids.begin(), t.edge_ids.end());
    return t;
}

}  // namespace

TEST_CASE("co-tree report") {
    const auto g = heawood().graph();
    const auto t = kruskal_with(g, {});
    const auto report = cotree_report(g, t);
    int total = 0;
    for (const auto& c : report.components) total += c.edge_count();
    CHECK(total == 8);
    for (int x = 0; x < 14; ++x) CHECK(report.valency[x] <= 3);
    SpanningTree bad = t;
    bad.edge_ids.pop_back();
    CHECK_THROWS_AS(cotree_report(g, bad), std::invalid_argument);
}

TEST_CASE("trees through two ring edges of the stitched 21_3 leave an odd part") {
    const auto c = stitch(fano(), fano(), fano()).configuration;
    const auto g = levi_graph(c).graph();
    const auto cut = ring_cut_certificate(g);
    REQUIRE(cut.has_value());
    // edges 0 and 2 both touch part 0
    const auto t = kruskal_with(g, {cut->edge_ids[0], cut->edge_ids[2]});
    const auto report = cotree_report(g, t);
    const auto& part0 = cut->parts[0].vertices;
    bool odd_inside = false;
    for (const auto& comp : report.components) {
        const bool inside = std::all_of(comp.vertices.begin(), comp.vertices.end(), [&](int x) {
            return std::binary_search(part0.begin(), part0.end(), x);
        });
        odd_inside |= inside && comp.edge_count() % 2 == 1;
    }
    CHECK(odd_inside);
}

TEST_CASE("Jungerman bruteforce agrees with subset enumeration") {
    // C6: one co-tree edge, never even
    std::vector<Edge> c6;
    for (int i = 0; i < 6; ++i) c6.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6)});
    const Graph cycle(6, c6);
    CHECK(jungerman_bruteforce(cycle).status == SearchStatus::Refuted);
    CHECK(oracle::count_jungerman_trees(6, oracle::pairs_of(cycle)) == 0);

    const auto h = heawood().graph();
    const auto r = jungerman_bruteforce(h);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(odd_cotree_components(h, *r.tree) == 0);
    CHECK(oracle::count_jungerman_trees(14, oracle::pairs_of(h)) > 0);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        const auto g = oracle::random_connected_graph(n, 1 + static_cast<int>(rng() % 5), rng);
        const long oracle_count = oracle::count_jungerman_trees(n, oracle::pairs_of(g));
        const auto b = jungerman_bruteforce(g);
        CHECK(b.status == (oracle_count > 0 ? SearchStatus::Found : SearchStatus::Refuted));
        if (b.tree) CHECK(odd_cotree_components(g, *b.tree) == 0);
    }
}

TEST_CASE("Pappus Levi graph has a Jungerman tree") {
    const auto r = jungerman_bruteforce(levi_graph(pappus()).graph());
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(odd_cotree_components(levi_graph(pappus()).graph(), *r.tree) == 0);
}

TEST_CASE("node limit gives Unknown, never a refutation") {
    const auto r = jungerman_bruteforce(levi_graph(stitch(fano(), fano(), fano()).configuration).graph(), 1000);
    CHECK(r.status == SearchStatus::Unknown);
}

TEST_CASE("Jungerman local search") {
    const auto h = heawood().graph();
    const auto r = jungerman_search(h, 10'000, 0);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(odd_cotree_components(h, *r.tree) == 0);
    // deterministic for a fixed seed
    CHECK(jungerman_search(h, 10'000, 0).tree == r.tree);

    const auto stitched = levi_graph(stitch(fano(), fano(), fano()).configuration).graph();
    CHECK(jungerman_search(stitched, 20'000, 0).status == SearchStatus::Unknown);
}

TEST_CASE("local search agrees with bruteforce on random graphs") {
    std::mt19937_64 rng(2024);
    int found = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 11);
        const auto g = oracle::random_connected_graph(n, static_cast<int>(rng() % 9), rng);
        CAPTURE(trial);
        const auto exact = jungerman_bruteforce(g);
        REQUIRE(exact.status != SearchStatus::Unknown);
        const auto local = jungerman_search(g, 20'000, 0);
        CHECK((local.status == SearchStatus::Found) == (exact.status == SearchStatus::Found));
        CHECK(local.status != SearchStatus::Refuted);
        found += exact.status == SearchStatus::Found;
    }
    // both outcomes are represented
    CHECK(found > 5);
    CHECK(found < 45);
}

TEST_CASE("dominating-set certificates") {
    const auto r9 = find_dominating_certificate(cyclic_config(9));
    REQUIRE(r9.certificate.has_value());
    CHECK(r9.certificate->s == std::vector<int>{0, 1, 4, 5});
    CHECK(validate_dominating_certificate(cyclic_config(9), *r9.certificate));
    CHECK(points_even_in_cotree(levi_graph(cyclic_config(9)), r9.certificate->tree));

    const auto r11 = find_dominating_certificate(cyclic_config(11));
    REQUIRE(r11.certificate.has_value());
    CHECK(validate_dominating_certificate(cyclic_config(11), *r11.certificate));
    const auto explicit11 = check_dominating_set(cyclic_config(11), {0, 2, 4, 6, 10});
    REQUIRE(explicit11.certificate.has_value());
    CHECK(validate_dominating_certificate(cyclic_config(11), *explicit11.certificate));

    for (const auto& c : {fano(), pappus(), cyclic_config(13)}) {
        const auto r = find_dominating_certificate(c);
        REQUIRE(r.status == DominatingSearchStatus::Found);
        CHECK(validate_dominating_certificate(c, *r.certificate));
        const auto report = cotree_report(levi_graph(c).graph(), r.certificate->tree);
        CHECK(report.all_even());
        for (int p = 0; p < c.points(); ++p) CHECK((report.valency[p] == 0 || report.valency[p] == 2));
    }
    CHECK_THROWS(find_dominating_certificate(disjoint_union(fano(), fano())));
}

TEST_CASE("the stitched 21_3 has no dominating-set certificate") {
    const auto c = stitch(fano(), fano(), fano()).configuration;
    CHECK(find_dominating_certificate(c).status == DominatingSearchStatus::Exhausted);
}

TEST_CASE("explicit sets for cyclic configurations validate up to v = 99") {
    for (int v = 7; v <= 99; v += 2) {
        const auto c = cyclic_config(v);
        const auto check = check_dominating_set(c, cyclic_dominating_set(v));
        REQUIRE_MESSAGE(check.certificate.has_value(), "v = " << v << ": " << check.error);
        CHECK(validate_dominating_certificate(c, *check.certificate));
    }
}

TEST_CASE("even point valency check matches co-tree valencies") {
    const auto g = heawood();
    std::mt19937_64 rng(3);
    int rejected = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> order(21);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const auto t = kruskal_with(g.graph(), order);
        const auto report = cotree_report(g.graph(), t);
        bool even = true;
        for (int p = 0; p < 7; ++p) even &= report.valency[p] % 2 == 0;
        CHECK(points_even_in_cotree(g, t) == even);
        if (even) CHECK(report.all_even());
        rejected += !even;
    }
    CHECK(rejected > 0);
}

TEST_CASE("single-face rotations") {
    const auto g = heawood();
    const auto survey = survey_orientations(g);
    CHECK(survey.complete);
    CHECK(survey.orientations_checked == 64);
    CHECK(survey.embeddable == 64);
    REQUIRE(survey.witness.has_value());
    CHECK(trace_faces(g.graph(), *survey.witness).genus == 4);

    Orientation o(7, 0);
    o[3] = 1;
    const auto r = find_single_face_rotation(g, o);
    REQUIRE(r.rotation.has_value());
    CHECK(induced_orientation(g, *r.rotation) == o);
    CHECK(count_faces(g.graph(), *r.rotation) == 1);
    // reversal flips every block bit
    Orientation flipped = o;
    for (auto& b : flipped) b ^= 1;
    CHECK(induced_orientation(g, r.rotation->reversed()) == flipped);

    const auto big = levi_graph(stitch(fano(), fano(), fano()).configuration);
    CHECK(find_single_face_rotation(big, Orientation(21, 0)).status == SearchStatus::Unknown);
    const auto forced = find_single_face_rotation(big, Orientation(21, 0), 21);
    CHECK(forced.status == SearchStatus::Refuted);
}

TEST_CASE("ring cuts") {
    const auto c = stitch(fano(), fano(), fano()).configuration;
    const auto g = levi_graph(c).graph();
    const auto cut = ring_cut_certificate(g);
    REQUIRE(cut.has_value());
    for (const auto& p : cut->parts) {
        CHECK(p.n == 14);
        CHECK(p.m == 20);
    }
    CHECK(check_ring_cut(g, *cut).empty());
    auto tampered = *cut;
    tampered.parts[0].m = 21;
    CHECK_FALSE(check_ring_cut(g, tampered).empty());

    CHECK_FALSE(ring_cut_certificate(heawood().graph()).has_value());
    CHECK(ring_cut_certificate(levi_graph(stitch(cyclic_config(9), fano(), fano()).configuration).graph()).has_value());
    CHECK(ring_cut_certificate(levi_graph(stitch(cyclic_config(11), fano(), fano()).configuration).graph()).has_value());
}

TEST_CASE("ring cut presence implies exhaustive refutation on toy graphs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = oracle::toy_ring_graph(rng);
        CHECK(g.order() <= 14);
        const auto cut = ring_cut_certificate(g);
        REQUIRE(cut.has_value());
        CHECK(jungerman_bruteforce(g).status == SearchStatus::Refuted);
        CHECK(oracle::count_jungerman_trees(g.order(), oracle::pairs_of(g)) == 0);
    }
}

TEST_CASE("verdicts") {
    const auto f = verdict(fano());
    CHECK(f.status == VerdictStatus::EveryOrientation);
    CHECK(f.method == "dominating_tree");
    const auto s = verdict(stitch(fano(), fano(), fano()).configuration);
    CHECK(s.status == VerdictStatus::NoOrientation);
    CHECK(s.method == "ring_cut");
    CHECK_THROWS_AS(verdict(disjoint_union(fano(), fano())), std::invalid_argument);

    // without certificates the survey decides small cases
    VerdictPolicy survey_only;
    survey_only.use_dominating_set = false;
    survey_only.use_ring_cut = false;
    const auto p = verdict(pappus(), survey_only);
    CHECK(p.method == "orientation_survey");
    CHECK(p.status == VerdictStatus::EveryOrientation);
}

TEST_CASE("certificate documents re-verify") {
    const auto cfg = cyclic_config(9);
    const auto cert = *find_dominating_certificate(cfg).certificate;
    auto doc = certificate_json(cfg, cert);
    CHECK(check_certificate(doc).ok);
    CHECK(doc["self_check"]["all_components_even"] == true);
    doc["s"][0] = 2;
    CHECK_FALSE(check_certificate(doc).ok);

    const auto st = stitch(fano(), fano(), fano()).configuration;
    auto ring = certificate_json(st, *ring_cut_certificate(levi_graph(st).graph()));
    CHECK(check_certificate(ring).ok);
    ring["ring_edges"][0] = ring["ring_edges"][1];
    CHECK_FALSE(check_certificate(ring).ok);

    const auto rot = *survey_orientations(heawood()).witness;
    auto rdoc = certificate_json(fano(), rot);
    CHECK(check_certificate(rdoc).ok);
    CHECK(rdoc["self_check"]["faces"] == 1);
    auto stated = rdoc;
    stated["self_check"]["genus"] = 3;
    CHECK_FALSE(check_certificate(stated).ok);
    rdoc["rotation"][0][0] = rdoc["rotation"][0][1];
    CHECK_FALSE(check_certificate(rdoc).ok);

    const auto jt = jungerman_bruteforce(levi_graph(pappus()).graph()).tree;
    CHECK(check_certificate(jungerman_certificate_json(pappus(), *jt)).ok);

    CHECK_FALSE(check_certificate(nlohmann::json{{"kind", "mystery"}}).ok);
}

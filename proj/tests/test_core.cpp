#include <random>
#include <set>

#include "doctest.h"
#include "levi/canonical.hpp"
#include "levi/configuration.hpp"
#include "levi/construct.hpp"
#include "levi/graph.hpp"
#include "levi/levi_graph.hpp"
#include "levi/rotation.hpp"
#include "levi/spanning_tree.hpp"
#include "oracles.hpp"

using namespace levi;

namespace {

oracle::Blocks blocks_of(const Configuration& c) { return {c.blocks().begin(), c.blocks().end()}; }

RotationSystem random_rotation(const Graph& g, std::mt19937_64& rng) {
    std::vector<std::uint8_t> flips(g.order());
    for (auto& f : flips) f = rng() & 1;
    return RotationSystem::from_flips(g, flips);
}

}  // namespace

TEST_CASE("Fano blocks validate") {
    const auto c = validate_configuration(7, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {0, 4, 5}, {1, 5, 6}, {0, 2, 6}});
    CHECK(c.points() == 7);
    CHECK(c == fano());
    CHECK(oracle::is_v3(7, blocks_of(c)));
}

TEST_CASE("validation reports each violation kind") {
    auto report = check_configuration(7, std::vector<Block>{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 0}, {6, 1, 2}});
    CHECK(report.has(ViolationKind::DuplicatePair));
    CHECK_FALSE(report.ok());

    report = check_configuration(7, std::vector<Block>{{0, 1, 3}, {1, 2, 4}});
    CHECK(report.has(ViolationKind::BlockCount));
    CHECK(report.has(ViolationKind::PointValency));

    report = check_configuration(3, std::vector<Block>{{0, 0, 1}, {0, 1, 2}, {0, 1, 7}});
    CHECK(report.has(ViolationKind::RepeatedPointInBlock));
    CHECK(report.has(ViolationKind::IndexOutOfRange));

    CHECK(check_configuration(0, std::vector<Block>{}).has(ViolationKind::NonPositiveOrder));
    CHECK_THROWS_AS(validate_configuration(7, {{0, 1, 2}, {0, 1, 3}}), InvalidConfiguration);
}

TEST_CASE("text format round trip and strict parsing") {
    const auto c = cyclic_config(11);
    const auto text = format_configuration(c);
    const auto back = parse_configuration(text);
    CHECK(back.normalized() == c.normalized());
    CHECK(parse_configuration("# comment\n7\n0 1 3\n1 2 4 # trailing\n2 3 5\n3 4 6\n0 4 5\n1 5 6\n0 2 6\n") == fano());
    CHECK_THROWS(parse_configuration("7\n0 1 3\n"));
    CHECK_THROWS(parse_configuration("7\n0 1\n1 2 4\n2 3 5\n3 4 6\n0 4 5\n1 5 6\n0 2 6\n"));
    CHECK_THROWS(parse_configuration("seven\n"));
}

TEST_CASE("Levi graph of Fano is the Heawood graph") {
    const auto g = heawood();
    CHECK(g.order() == 14);
    CHECK(g.graph().size() == 21);
    CHECK(girth(g.graph()) == 6);
    CHECK(is_regular(g.graph(), 3));
    CHECK(is_connected(g.graph()));
    for (const auto& e : g.graph().edges()) CHECK(g.is_point(e.u) != g.is_point(e.w));
    // reference string from an independent graph6 writer
    CHECK(to_graph6(g.graph()) == "M???E`gL?sP_P_g_?");
}

TEST_CASE("graph6 size headers and round trip") {
    CHECK(to_graph6(Graph(3, {{0, 1}, {1, 2}})) == "Bg");
    std::vector<Edge> cycle;
    for (int i = 0; i < 70; ++i) cycle.push_back({i, (i + 1) % 70});
    const Graph c70(70, cycle);
    CHECK(to_graph6(c70).substr(0, 12) == "~?@EhCGGC@?G");
    CHECK(from_graph6(to_graph6(c70)) == c70);
    CHECK(from_graph6(">>graph6<<M???E`gL?sP_P_g_?\n") == heawood().graph());
    CHECK_THROWS(from_graph6("M???E`g"));
}

TEST_CASE("Levi graph invariants over the small census") {
    for (const auto& c : {fano(), pappus(), cyclic_config(9), cyclic_config(11), cyclic_config(13)}) {
        const auto g = levi_graph(c);
        const int v = c.points();
        CHECK(g.order() == 2 * v);
        CHECK(g.graph().size() == 3 * v);
        CHECK(girth(g.graph()) >= 6);
        CHECK(g.graph().size() - g.order() + 1 == v + 1);
        for (int i = 0; i < v; ++i)
            for (int p : c.block(i)) CHECK(g.graph().has_edge(p, v + i));
        CHECK(configuration_from_levi(g) == c);
    }
}

TEST_CASE("LeviGraph rejects 4-cycles and wrong degrees") {
    // K_{3,3}: cubic bipartite but girth 4
    std::vector<Edge> k33;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) k33.push_back({a, b});
    CHECK_THROWS_AS(LeviGraph(3, Graph(6, k33)), std::invalid_argument);
    CHECK_THROWS_AS(LeviGraph(2, Graph(4, {{0, 2}, {1, 3}})), std::invalid_argument);
}

TEST_CASE("associated graph") {
    const auto k7 = associated_graph(fano());
    CHECK(k7.size() == 21);
    CHECK(is_regular(k7, 6));

    // circulant on Z_9 with connection set {1,2,3}
    std::set<Edge> expected;
    for (int x = 0; x < 9; ++x)
        for (int d : {1, 2, 3}) expected.insert({std::min(x, (x + d) % 9), std::max(x, (x + d) % 9)});
    const auto g9 = associated_graph(cyclic_config(9));
    CHECK(std::set<Edge>(g9.edges().begin(), g9.edges().end()) == expected);

    const auto two = disjoint_union(fano(), fano());
    const auto g14 = associated_graph(two);
    CHECK(component_count(g14) == 2);
    CHECK(g14.size() == 42);
    CHECK_FALSE(is_connected(two));
    CHECK(is_connected(fano()));
}

TEST_CASE("dual is an involution") {
    for (const auto& c : {fano(), pappus(), cyclic_config(13)}) {
        const auto d = dual(c);
        CHECK(oracle::is_v3(c.points(), blocks_of(d)));
        CHECK(dual(d) == c);
    }
    CHECK(are_isomorphic(levi_graph(dual(fano())).graph(), heawood().graph()));
}

TEST_CASE("face tracing invariants on random rotations") {
    std::mt19937_64 rng(7);
    for (const auto& c : {fano(), cyclic_config(9), cyclic_config(11)}) {
        const auto g = levi_graph(c).graph();
        const int v = c.points();
        for (int trial = 0; trial < 200; ++trial) {
            const auto rot = random_rotation(g, rng);
            const auto trace = trace_faces(g, rot);
            std::vector<int> seen(g.dart_count(), 0);
            std::size_t total = 0;
            for (const auto& f : trace.faces) {
                total += f.size();
                for (int d : f) ++seen[d];
                CHECK(f.front() == *std::min_element(f.begin(), f.end()));
            }
            CHECK(total == static_cast<std::size_t>(6 * v));
            CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
            const int faces = static_cast<int>(trace.faces.size());
            CHECK(faces % 2 == v % 2);
            CHECK(2 - 2 * trace.genus == 2 * v - 3 * v + faces);
            CHECK(trace.genus >= 0);
            CHECK(trace.genus <= (v + 1) / 2);
            // independent tracer on neighbour cycles
            std::vector<std::vector<int>> cycles(g.order());
            for (int u = 0; u < g.order(); ++u) cycles[u] = rot.neighbor_cycle(g, u);
            CHECK(oracle::count_faces(cycles) == faces);
            CHECK(count_faces(g, rot.reversed()) == faces);
        }
    }
}

TEST_CASE("Heawood torus embedding and single-face embedding") {
    const auto g = heawood().graph();
    bool torus = false, single = false;
    std::vector<std::uint8_t> flips(14);
    for (int mask = 0; mask < (1 << 14) && !(torus && single); ++mask) {
        for (int i = 0; i < 14; ++i) flips[i] = (mask >> i) & 1;
        const auto trace = trace_faces(g, RotationSystem::from_flips(g, flips));
        if (trace.faces.size() == 7) {
            torus = true;
            CHECK(trace.genus == 1);
        }
        if (trace.faces.size() == 1) {
            single = true;
            CHECK(trace.genus == 4);
        }
    }
    CHECK(torus);
    CHECK(single);
}

TEST_CASE("rotation validation") {
    const auto g = heawood().graph();
    auto next = RotationSystem::identity(g).successors();
    std::vector<int> bad(next.begin(), next.end());
    std::swap(bad[0], bad[3]);
    CHECK_THROWS(RotationSystem(g, bad));
    std::vector<std::vector<int>> cycles(14);
    for (int u = 0; u < 14; ++u) cycles[u] = {g.neighbors(u).begin(), g.neighbors(u).end()};
    CHECK(RotationSystem::from_neighbor_cycles(g, cycles).successors().size() == 42);
}

TEST_CASE("spanning tree helpers") {
    const auto g = heawood().graph();
    std::vector<Edge> bfs;
    std::vector<int> seen(14, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (int w : g.neighbors(queue[h]))
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
                bfs.push_back({std::min(queue[h], w), std::max(queue[h], w)});
            }
    const auto t = tree_from_edges(g, bfs);
    CHECK(is_spanning_tree(g, t));
    CHECK(cotree_edge_ids(g, t).size() == 8);
    auto broken = t;
    broken.edge_ids.pop_back();
    CHECK_FALSE(is_spanning_tree(g, broken));
    CHECK_THROWS(tree_from_edges(g, {{0, 1}}));
}

TEST_CASE("hand-entered 21_3 edge list is valid") {
    const auto g = oracle::ring21_reference();
    const auto c = configuration_from_levi(g);
    CHECK(oracle::is_v3(21, blocks_of(c)));
    CHECK(is_connected(c));
}

// Certificate re-verification. Deliberately limited to the core data model so
// a certificate does not vouch for itself through the code that produced it.
#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "levi/certificate.hpp"
#include "levi/configuration.hpp"
#include "levi/levi_graph.hpp"
#include "levi/rotation.hpp"
#include "levi/spanning_tree.hpp"

namespace levi {

using nlohmann::json;

namespace {

struct Dsu {
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    std::vector<int> parent;
};

std::vector<Edge> read_edges(const json& j) {
    std::vector<Edge> out;
    for (const auto& e : j) {
        const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        out.push_back({std::min(a, b), std::max(a, b)});
    }
    return out;
}

// Spanning tree with every co-tree component even; fills `problems`.
void check_tree(const LeviGraph& g, const std::vector<Edge>& edges, bool points_even, const json* stated,
                std::vector<std::string>& problems) {
    SpanningTree t;
    try {
        t = tree_from_edges(g.graph(), edges);
    } catch (const std::exception& e) {
        problems.push_back(e.what());
        return;
    }
    if (!is_spanning_tree(g.graph(), t)) {
        problems.push_back("tree edges do not form a spanning tree");
        return;
    }
    const auto cotree = cotree_edge_ids(g.graph(), t);
    Dsu dsu(g.order());
    std::vector<int> valency(g.order(), 0);
    for (int id : cotree) {
        const auto& e = g.graph().edges()[id];
        dsu.unite(e.u, e.w);
        ++valency[e.u];
        ++valency[e.w];
    }
    std::map<int, int> size;
    for (int id : cotree) ++size[dsu.find(g.graph().edges()[id].u)];
    if (stated && stated->value("cotree_edge_count", -1) != static_cast<int>(cotree.size()))
        problems.push_back("self_check disagrees with the co-tree size");
    for (const auto& [root, count] : size)
        if (count % 2 != 0) problems.push_back("co-tree component with an odd number of edges");
    if (points_even)
        for (int p = 0; p < g.points(); ++p)
            if (valency[p] % 2 != 0) problems.push_back("point " + std::to_string(p) + " has odd co-tree valency");
}

void check_dominating(const Configuration& cfg, const LeviGraph& g, const json& doc, std::vector<std::string>& problems) {
    const int v = cfg.points();
    const auto s = doc.at("s").get<std::vector<int>>();
    if (static_cast<int>(s.size()) * 2 != v - 1) problems.push_back("|S| is not (v-1)/2");
    std::set<int> in_s(s.begin(), s.end());
    if (in_s.size() != s.size()) problems.push_back("S repeats a point");
    for (int b = 0; b < v; ++b) {
        const auto& blk = cfg.block(b);
        if (!in_s.count(blk[0]) && !in_s.count(blk[1]) && !in_s.count(blk[2]))
            problems.push_back("block " + std::to_string(b) + " misses S");
    }
    // S with all blocks must induce a tree
    Dsu dsu(2 * v);
    int induced_edges = 0;
    for (int p : s) {
        if (p < 0 || p >= v) {
            problems.push_back("S point out of range");
            return;
        }
        for (int w : g.graph().neighbors(p)) {
            ++induced_edges;
            if (!dsu.unite(p, w)) problems.push_back("S with the blocks induces a cycle");
        }
    }
    if (induced_edges != static_cast<int>(s.size()) + v - 1) problems.push_back("induced subgraph is not a tree");
    const auto edges = read_edges(doc.at("tree_edges"));
    for (int p : s)
        for (int w : g.graph().neighbors(p))
            if (std::find(edges.begin(), edges.end(), Edge{p, w}) == edges.end())
                problems.push_back("tree omits an edge induced by S");
    check_tree(g, edges, true, doc.contains("self_check") ? &doc.at("self_check") : nullptr, problems);
}

void check_ring(const LeviGraph& g, const json& doc, std::vector<std::string>& problems) {
    const auto ring = read_edges(doc.at("ring_edges"));
    if (ring.size() != 3) {
        problems.push_back("need three ring edges");
        return;
    }
    for (const auto& e : ring)
        if (!g.graph().has_edge(e.u, e.w)) problems.push_back("ring edge not in graph");
    if (!problems.empty()) return;
    Dsu dsu(g.order());
    for (const auto& e : g.graph().edges())
        if (std::find(ring.begin(), ring.end(), e) == ring.end()) dsu.unite(e.u, e.w);
    std::map<int, int> part_of_root;
    std::vector<int> part(g.order());
    for (int x = 0; x < g.order(); ++x) {
        auto [it, fresh] = part_of_root.emplace(dsu.find(x), static_cast<int>(part_of_root.size()));
        part[x] = it->second;
    }
    if (part_of_root.size() != 3) {
        problems.push_back("removing the ring edges leaves " + std::to_string(part_of_root.size()) + " parts");
        return;
    }
    std::set<std::pair<int, int>> joined;
    for (const auto& e : ring) {
        const int a = part[e.u], b = part[e.w];
        if (a == b) problems.push_back("ring edge inside one part");
        joined.insert(std::minmax(a, b));
    }
    if (joined.size() != 3) problems.push_back("ring edges do not join the parts cyclically");
    std::vector<int> n(3, 0), m(3, 0);
    for (int x = 0; x < g.order(); ++x) ++n[part[x]];
    for (const auto& e : g.graph().edges())
        if (part[e.u] == part[e.w]) ++m[part[e.u]];
    for (int i = 0; i < 3; ++i)
        if ((m[i] - n[i] + 1) % 2 == 0) problems.push_back("a part has even cycle rank");
    const int total_rank = g.graph().size() - g.order() + 1;
    if (doc.at("self_check").value("total_cycle_rank", -1) != total_rank)
        problems.push_back("self_check disagrees with the cycle rank");
    // the listed parts must agree with the recomputed ones
    const auto& listed = doc.at("parts");
    if (listed.size() != 3) problems.push_back("need three parts");
    for (const auto& p : listed) {
        const auto verts = p.at("vertices").get<std::vector<int>>();
        if (verts.empty() || verts.front() < 0 || verts.front() >= g.order()) {
            problems.push_back("bad part");
            continue;
        }
        const int k = part[verts.front()];
        if (static_cast<int>(verts.size()) != n[k] || p.at("n").get<int>() != n[k] || p.at("m").get<int>() != m[k])
            problems.push_back("listed part counts differ from the graph");
        for (int x : verts)
            if (x < 0 || x >= g.order() || part[x] != k) problems.push_back("listed part is not a component");
    }
}

void check_rotation(const Configuration& cfg, const LeviGraph& g, const json& doc, std::vector<std::string>& problems) {
    std::vector<std::vector<int>> cycles;
    for (const auto& c : doc.at("rotation")) cycles.push_back(c.get<std::vector<int>>());
    try {
        const auto rot = RotationSystem::from_neighbor_cycles(g.graph(), cycles);
        const auto trace = trace_faces(g.graph(), rot);
        if (trace.faces.size() != 1) problems.push_back("rotation has " + std::to_string(trace.faces.size()) + " faces");
        if (trace.genus != (cfg.points() + 1) / 2) problems.push_back("genus is not (v+1)/2");
        const auto& stated = doc.at("self_check");
        if (stated.value("faces", -1) != static_cast<int>(trace.faces.size()) || stated.value("genus", -1) != trace.genus)
            problems.push_back("self_check disagrees with the traced faces");
    } catch (const std::exception& e) {
        problems.push_back(e.what());
    }
}

}  // namespace

CertificateCheck check_certificate(const json& doc) {
    CertificateCheck out;
    try {
        out.kind = doc.at("kind").get<std::string>();
        const Configuration cfg = configuration_from_json(doc.at("configuration"));
        const LeviGraph g = levi_graph(cfg);
        if (out.kind == "dominating_tree")
            check_dominating(cfg, g, doc, out.problems);
        else if (out.kind == "jungerman_tree")
            check_tree(g, read_edges(doc.at("tree_edges")), false,
                       doc.contains("self_check") ? &doc.at("self_check") : nullptr, out.problems);
        else if (out.kind == "ring_cut")
            check_ring(g, doc, out.problems);
        else if (out.kind == "rotation")
            check_rotation(cfg, g, doc, out.problems);
        else
            out.problems.push_back("unknown certificate kind '" + out.kind + "'");
    } catch (const std::exception& e) {
        out.problems.push_back(e.what());
    }
    out.ok = out.problems.empty();
    return out;
}

}  // namespace levi

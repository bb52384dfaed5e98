#include "levi/certificate.hpp"

#include "levi/cotree.hpp"
#include "levi/levi_graph.hpp"

namespace levi {

using nlohmann::json;

json configuration_json(const Configuration& cfg) {
    json blocks = json::array();
    for (const auto& b : cfg.blocks()) blocks.push_back({b[0], b[1], b[2]});
    return {{"v", cfg.points()}, {"blocks", blocks}};
}

Configuration configuration_from_json(const json& j) {
    std::vector<Block> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back({b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>()});
    return validate_configuration(j.at("v").get<int>(), std::move(blocks));
}

namespace {

json edge_list(const Graph& g, const std::vector<int>& ids) {
    json out = json::array();
    for (int id : ids) out.push_back({g.edges()[id].u, g.edges()[id].w});
    return out;
}

json tree_self_check(const LeviGraph& g, const SpanningTree& t) {
    const auto report = cotree_report(g.graph(), t);
    json sizes = json::array();
    for (const auto& c : report.components) sizes.push_back(c.edge_count());
    std::vector<int> point_valency(report.valency.begin(), report.valency.begin() + g.points());
    return {{"vertices", g.order()},
            {"tree_edge_count", t.edge_ids.size()},
            {"cotree_edge_count", g.graph().size() - static_cast<int>(t.edge_ids.size())},
            {"cotree_component_edge_counts", sizes},
            {"cotree_point_valencies", point_valency},
            {"all_components_even", report.all_even()}};
}

}  // namespace

json certificate_json(const Configuration& cfg, const DominatingTreeCertificate& cert) {
    const LeviGraph g = levi_graph(cfg);
    json check = tree_self_check(g, cert.tree);
    check["s_size"] = cert.s.size();
    return {{"kind", "dominating_tree"},
            {"configuration", configuration_json(cfg)},
            {"s", cert.s},
            {"tree_edges", edge_list(g.graph(), cert.tree.edge_ids)},
            {"self_check", check}};
}

json jungerman_certificate_json(const Configuration& cfg, const SpanningTree& tree) {
    const LeviGraph g = levi_graph(cfg);
    return {{"kind", "jungerman_tree"},
            {"configuration", configuration_json(cfg)},
            {"tree_edges", edge_list(g.graph(), tree.edge_ids)},
            {"self_check", tree_self_check(g, tree)}};
}

json certificate_json(const Configuration& cfg, const RingCutCertificate& cert) {
    const LeviGraph g = levi_graph(cfg);
    json parts = json::array();
    json ranks = json::array();
    for (const auto& p : cert.parts) {
        parts.push_back({{"vertices", p.vertices}, {"n", p.n}, {"m", p.m}});
        ranks.push_back(p.cycle_rank());
    }
    const std::vector<int> ids(cert.edge_ids.begin(), cert.edge_ids.end());
    return {{"kind", "ring_cut"},
            {"configuration", configuration_json(cfg)},
            {"ring_edges", edge_list(g.graph(), ids)},
            {"parts", parts},
            {"self_check", {{"part_cycle_ranks", ranks}, {"total_cycle_rank", g.graph().size() - g.order() + 1}}}};
}

json certificate_json(const Configuration& cfg, const RotationSystem& rot) {
    const LeviGraph g = levi_graph(cfg);
    json cycles = json::array();
    for (int u = 0; u < g.order(); ++u) cycles.push_back(rot.neighbor_cycle(g.graph(), u));
    const auto trace = trace_faces(g.graph(), rot);
    return {{"kind", "rotation"},
            {"configuration", configuration_json(cfg)},
            {"rotation", cycles},
            {"self_check", {{"faces", trace.faces.size()}, {"genus", trace.genus}}}};
}

}  // namespace levi

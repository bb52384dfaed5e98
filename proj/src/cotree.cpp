#include "levi/cotree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace levi {

bool CotreeReport::all_even() const { return odd_components() == 0; }

int CotreeReport::odd_components() const {
    return static_cast<int>(
        std::count_if(components.begin(), components.end(), [](const auto& c) { return c.edge_count() % 2 == 1; }));
}

CotreeReport cotree_report(const Graph& g, const SpanningTree& t) {
    if (!is_spanning_tree(g, t)) throw std::invalid_argument("edge set is not a spanning tree");
    const int n = g.order();
    CotreeReport report;
    report.valency.assign(n, 0);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const auto cotree = cotree_edge_ids(g, t);
    for (int id : cotree) {
        const auto& e = g.edges()[id];
        ++report.valency[e.u];
        ++report.valency[e.w];
        const int a = find(e.u), b = find(e.w);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::size_t> index;  // root -> component slot
    for (int x = 0; x < n; ++x) {
        if (report.valency[x] == 0) continue;
        const int r = find(x);
        auto [it, fresh] = index.emplace(r, report.components.size());
        if (fresh) report.components.emplace_back();
        report.components[it->second].vertices.push_back(x);
    }
    for (int id : cotree) report.components[index.at(find(g.edges()[id].u))].edge_ids.push_back(id);
    return report;
}

bool points_even_in_cotree(const LeviGraph& g, const SpanningTree& t) {
    const auto report = cotree_report(g.graph(), t);
    for (int p = 0; p < g.points(); ++p)
        if (report.valency[p] % 2 != 0) return false;
    return true;
}

}  // namespace levi

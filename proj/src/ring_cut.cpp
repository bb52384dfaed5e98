#include "levi/ring_cut.hpp"

#include <algorithm>
#include <numeric>

namespace levi {

namespace {

// Component label per vertex with the given edges removed; labels follow
// the smallest vertex.
std::vector<int> labels_without(const Graph& g, std::span<const int> removed, int* count) {
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int id = 0; id < g.size(); ++id) {
        if (std::find(removed.begin(), removed.end(), id) != removed.end()) continue;
        const int a = find(g.edges()[id].u), b = find(g.edges()[id].w);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> label(g.order(), -1), root_label(g.order(), -1);
    int next = 0;
    for (int x = 0; x < g.order(); ++x) {
        const int r = find(x);
        if (root_label[r] < 0) root_label[r] = next++;
        label[x] = root_label[r];
    }
    if (count) *count = next;
    return label;
}

std::optional<RingCutCertificate> build(const Graph& g, std::array<int, 3> ids) {
    int parts = 0;
    const auto label = labels_without(g, ids, &parts);
    if (parts != 3) return std::nullopt;
    RingCutCertificate cert;
    std::array<bool, 3> joined{};  // pair (i, i+1)
    std::array<int, 3> by_pair{-1, -1, -1};
    for (int id : ids) {
        const int a = label[g.edges()[id].u], b = label[g.edges()[id].w];
        if (a == b) return std::nullopt;
        const int lo = std::min(a, b), hi = std::max(a, b);
        const int pair = (lo == 0 && hi == 2) ? 2 : lo;  // (0,1)->0, (1,2)->1, (0,2)->2
        if (joined[pair]) return std::nullopt;
        joined[pair] = true;
        by_pair[pair] = id;
    }
    cert.edge_ids = by_pair;
    for (int x = 0; x < g.order(); ++x) {
        cert.parts[label[x]].vertices.push_back(x);
        ++cert.parts[label[x]].n;
    }
    for (int id = 0; id < g.size(); ++id) {
        const int a = label[g.edges()[id].u];
        if (a == label[g.edges()[id].w]) ++cert.parts[a].m;
    }
    for (const auto& p : cert.parts)
        if (p.cycle_rank() % 2 == 0) return std::nullopt;
    return cert;
}

}  // namespace

std::optional<RingCutCertificate> ring_cut_certificate(const Graph& g) {
    const int m = g.size();
    if (!is_connected(g) || m < 3) return std::nullopt;
    std::vector<std::vector<char>> cut(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int comps = 0;
            const std::array<int, 2> pair{a, b};
            labels_without(g, pair, &comps);
            cut[a][b] = comps > 1;
        }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (!cut[a][b]) continue;
            for (int c = b + 1; c < m; ++c) {
                if (!cut[a][c] || !cut[b][c]) continue;
                if (auto cert = build(g, {a, b, c})) return cert;
            }
        }
    return std::nullopt;
}

std::string check_ring_cut(const Graph& g, const RingCutCertificate& cert) {
    for (int id : cert.edge_ids)
        if (id < 0 || id >= g.size()) return "edge id out of range";
    auto ids = cert.edge_ids;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return "repeated edge";
    const auto fresh = build(g, cert.edge_ids);
    if (!fresh) return "edges do not cut the graph into three odd parts joined in a ring";
    for (int i = 0; i < 3; ++i) {
        const auto& a = fresh->parts[i];
        const auto& b = cert.parts[i];
        if (a.vertices != b.vertices || a.n != b.n || a.m != b.m) return "part " + std::to_string(i) + " mismatch";
        if (fresh->edge_ids[i] != cert.edge_ids[i]) return "ring edge order mismatch";
    }
    return {};
}

}  // namespace levi

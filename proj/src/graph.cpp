#include "levi/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace levi {

Graph::Graph(int order, std::vector<Edge> edges) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
    for (auto& e : edges) {
        if (e.u < 0 || e.w < 0 || e.u >= order || e.w >= order)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.w) throw std::invalid_argument("loops are not allowed");
        if (e.u > e.w) std::swap(e.u, e.w);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("parallel edges are not allowed");
    edges_ = std::move(edges);

    std::vector<int> deg(order, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.w];
    }
    offset_.assign(order + 1, 0);
    for (int u = 0; u < order; ++u) offset_[u + 1] = offset_[u] + deg[u];
    adj_.resize(offset_[order]);
    std::vector<int> fill(offset_.begin(), offset_.end() - 1);
    for (const auto& e : edges_) {
        adj_[fill[e.u]++] = e.w;
        adj_[fill[e.w]++] = e.u;
    }
    for (int u = 0; u < order; ++u) std::sort(adj_.begin() + offset_[u], adj_.begin() + offset_[u + 1]);

    tail_.resize(adj_.size());
    rev_.resize(adj_.size());
    dart_edge_.resize(adj_.size());
    for (int u = 0; u < order; ++u)
        for (int d = offset_[u]; d < offset_[u + 1]; ++d) tail_[d] = u;
    for (int d = 0; d < dart_count(); ++d) {
        const int u = tail_[d];
        const int w = adj_[d];
        auto it = std::lower_bound(adj_.begin() + offset_[w], adj_.begin() + offset_[w + 1], u);
        rev_[d] = static_cast<int>(it - adj_.begin());
        dart_edge_[d] = edge_id(u, w);
    }
}

int Graph::edge_id(int u, int w) const {
    if (u > w) std::swap(u, w);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, w});
    if (it == edges_.end() || *it != Edge{u, w}) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> component_labels(const Graph& g, int* count) {
    const int n = g.order();
    std::vector<int> label(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    if (count) *count = next;
    return label;
}

int component_count(const Graph& g) {
    int c = 0;
    component_labels(g, &c);
    return c;
}

bool is_connected(const Graph& g) { return g.order() == 0 || component_count(g) == 1; }

int girth(const Graph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        queue.assign(1, s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

bool is_regular(const Graph& g, int degree) {
    for (int u = 0; u < g.order(); ++u)
        if (g.degree(u) != degree) return false;
    return true;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.w]});
    return Graph(g.order(), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    auto byte = [&](std::size_t i) {
        if (i >= text.size()) throw std::invalid_argument("graph6: truncated input");
        const int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
        return c - 63;
    };
    long long n = 0;
    std::size_t pos = 0;
    if (byte(0) != 63) {
        n = byte(0);
        pos = 1;
    } else if (byte(1) != 63) {
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte(i);
        pos = 4;
    } else {
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte(i);
        pos = 8;
    }
    if (n > std::numeric_limits<int>::max()) throw std::invalid_argument("graph6: order too large");
    const long long pairs = n * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() != expected) throw std::invalid_argument("graph6: length does not match order");

    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = byte(pos + static_cast<std::size_t>(k / 6));
            if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace levi

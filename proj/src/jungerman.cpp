#include "levi/jungerman.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "levi/cotree.hpp"

namespace levi {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Refuted: return "refuted";
        case SearchStatus::Unknown: return "unknown";
    }
    return "?";
}

int odd_cotree_components(const Graph& g, const SpanningTree& t) { return cotree_report(g, t).odd_components(); }

namespace {

// Union-find without path compression so that every write can be rolled back.
class UndoDsu {
public:
    explicit UndoDsu(int n) : parent_(n), size_(n, 1), edges_(n, 0), open_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    int edges(int root) const { return edges_[root]; }
    int open(int root) const { return open_[root]; }

    void set_open(int root, int value) { write(open_, root, value); }

    /// Merges the classes of a and b and charges one edge to the result.
    int unite_with_edge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            if (size_[a] < size_[b]) std::swap(a, b);
            write(parent_, b, a);
            write(size_, a, size_[a] + size_[b]);
            write(edges_, a, edges_[a] + edges_[b]);
            write(open_, a, open_[a] + open_[b]);
        }
        write(edges_, a, edges_[a] + 1);
        return a;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        write(parent_, b, a);
        write(size_, a, size_[a] + size_[b]);
    }

    std::size_t mark() const { return log_.size(); }
    void rollback(std::size_t mark) {
        while (log_.size() > mark) {
            auto [slot, old] = log_.back();
            *slot = old;
            log_.pop_back();
        }
    }

private:
    void write(std::vector<int>& field, int i, int value) {
        log_.emplace_back(&field[i], field[i]);
        field[i] = value;
    }

    std::vector<int> parent_, size_, edges_, open_;
    std::vector<std::pair<int*, int>> log_;
};

class Bruteforce {
public:
    Bruteforce(const Graph& g, std::uint64_t limit) : g_(g), limit_(limit), tree_(g.order()), cotree_(g.order()) {
        in_tree_.assign(g.size(), 0);
        for (int x = 0; x < g.order(); ++x) cotree_.set_open(x, g.degree(x));
    }

    JungermanResult run() {
        JungermanResult r;
        if (!is_connected(g_)) throw std::invalid_argument("jungerman_bruteforce needs a connected graph");
        const bool found = rec(0);
        r.nodes = nodes_;
        if (found) {
            r.status = SearchStatus::Found;
            SpanningTree t;
            for (int id = 0; id < g_.size(); ++id)
                if (in_tree_[id]) t.edge_ids.push_back(id);
            r.tree = std::move(t);
        } else {
            r.status = aborted_ ? SearchStatus::Unknown : SearchStatus::Refuted;
        }
        return r;
    }

private:
    bool odd_final(int x) const {
        const int r = cotree_.find(x);
        return cotree_.open(r) == 0 && cotree_.edges(r) % 2 == 1;
    }

    // Included edges plus undecided edges (ids >= from) still connect g.
    bool connected_without(int skip) const {
        std::vector<int> parent(g_.order());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int comps = g_.order();
        for (int id = 0; id < g_.size(); ++id) {
            if (id == skip || (id < skip && !in_tree_[id])) continue;
            const int a = find(g_.edges()[id].u), b = find(g_.edges()[id].w);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        return comps == 1;
    }

    bool rec(int i) {
        if (++nodes_ > limit_) {
            aborted_ = true;
            return false;
        }
        if (i == g_.size()) return true;
        const auto [u, w] = g_.edges()[i];

        const auto mark_t = tree_.mark();
        const auto mark_c = cotree_.mark();
        auto close_ends = [&] {
            const int ru = cotree_.find(u);
            cotree_.set_open(ru, cotree_.open(ru) - 1);
            const int rw = cotree_.find(w);
            cotree_.set_open(rw, cotree_.open(rw) - 1);
        };

        if (tree_.find(u) != tree_.find(w)) {
            tree_.unite(u, w);
            in_tree_[i] = 1;
            close_ends();
            if (!odd_final(u) && !odd_final(w) && rec(i + 1)) return true;
            in_tree_[i] = 0;
            tree_.rollback(mark_t);
            cotree_.rollback(mark_c);
            if (aborted_) return false;
        }
        if (connected_without(i)) {
            close_ends();
            cotree_.unite_with_edge(u, w);
            if (!odd_final(u) && rec(i + 1)) return true;
            cotree_.rollback(mark_c);
        }
        return false;
    }

    const Graph& g_;
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    UndoDsu tree_;
    UndoDsu cotree_;
    std::vector<char> in_tree_;
};

SpanningTree random_kruskal(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> ids(g.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    SpanningTree t;
    for (int id : ids) {
        const int a = find(g.edges()[id].u), b = find(g.edges()[id].w);
        if (a == b) continue;
        parent[a] = b;
        t.edge_ids.push_back(id);
    }
    std::sort(t.edge_ids.begin(), t.edge_ids.end());
    return t;
}

// Edge ids on the tree path between a and b.
std::vector<int> tree_path(const Graph& g, const std::vector<char>& in_tree, int a, int b) {
    std::vector<int> via(g.order(), -1);  // edge id used to reach the vertex
    std::vector<int> queue{a};
    via[a] = -2;
    for (std::size_t h = 0; h < queue.size() && via[b] == -1; ++h) {
        const int x = queue[h];
        for (int s = 0; s < g.degree(x); ++s) {
            const int d = g.dart(x, s);
            const int id = g.dart_edge(d);
            const int y = g.head(d);
            if (!in_tree[id] || via[y] != -1) continue;
            via[y] = id;
            queue.push_back(y);
        }
    }
    std::vector<int> path;
    for (int x = b; x != a;) {
        const int id = via[x];
        path.push_back(id);
        const auto& e = g.edges()[id];
        x = e.u == x ? e.w : e.u;
    }
    return path;
}

}  // namespace

JungermanResult jungerman_bruteforce(const Graph& g, std::uint64_t node_limit) {
    return Bruteforce(g, node_limit).run();
}

JungermanResult jungerman_search(const Graph& g, std::uint64_t budget, std::uint64_t seed) {
    if (!is_connected(g)) throw std::invalid_argument("jungerman_search needs a connected graph");
    JungermanResult r;
    std::mt19937_64 rng(seed);
    const std::uint64_t stall_limit = 50 + 4 * static_cast<std::uint64_t>(g.size());
    while (r.nodes < budget) {
        SpanningTree t = random_kruskal(g, rng);
        int score = odd_cotree_components(g, t);
        std::uint64_t stall = 0;
        while (true) {
            if (score == 0) {
                r.status = SearchStatus::Found;
                r.tree = std::move(t);
                return r;
            }
            if (r.nodes >= budget || stall >= stall_limit) break;
            ++r.nodes;
            ++stall;
            const auto cotree = cotree_edge_ids(g, t);
            if (cotree.empty()) break;
            const int f = cotree[rng() % cotree.size()];
            std::vector<char> in_tree(g.size(), 0);
            for (int id : t.edge_ids) in_tree[id] = 1;
            const auto path = tree_path(g, in_tree, g.edges()[f].u, g.edges()[f].w);
            const int e = path[rng() % path.size()];
            SpanningTree next = t;
            std::replace(next.edge_ids.begin(), next.edge_ids.end(), e, f);
            std::sort(next.edge_ids.begin(), next.edge_ids.end());
            const int next_score = odd_cotree_components(g, next);
            if (next_score <= score) {
                if (next_score < score) stall = 0;
                t = std::move(next);
                score = next_score;
            }
        }
    }
    return r;
}

}  // namespace levi

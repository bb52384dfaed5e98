#include "levi/dominating.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "levi/cotree.hpp"

namespace levi {

const char* to_string(DominatingSearchStatus s) {
    switch (s) {
        case DominatingSearchStatus::Found: return "found";
        case DominatingSearchStatus::Exhausted: return "exhausted";
        case DominatingSearchStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

DominatingCheck check_dominating_set(const Configuration& cfg, const std::vector<int>& s) {
    const int v = cfg.points();
    DominatingCheck out;
    if (v % 2 == 0) {
        out.error = "v is even";
        return out;
    }
    if (static_cast<int>(s.size()) != (v - 1) / 2) {
        out.error = "S must have (v-1)/2 points";
        return out;
    }
    std::vector<char> in_s(v, 0);
    for (int p : s) {
        if (p < 0 || p >= v || in_s[p]) {
            out.error = "S has a repeated or out-of-range point";
            return out;
        }
        in_s[p] = 1;
    }
    for (int b = 0; b < v; ++b) {
        const auto& blk = cfg.block(b);
        if (!in_s[blk[0]] && !in_s[blk[1]] && !in_s[blk[2]]) {
            out.error = "block " + std::to_string(b) + " contains no point of S";
            return out;
        }
    }
    const LeviGraph lg = levi_graph(cfg);
    const Graph& g = lg.graph();
    std::vector<int> parent(2 * v);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<Edge> edges;
    for (int p = 0; p < v; ++p) {
        const auto star = cfg.star(p);
        if (!in_s[p]) {
            edges.push_back({p, v + star[0]});
            continue;
        }
        for (int b : star) {
            const int a = find(p), c = find(v + b);
            if (a == c) {
                out.error = "S together with the blocks induces a cycle";
                return out;
            }
            parent[a] = c;
            edges.push_back({p, v + b});
        }
    }
    DominatingTreeCertificate cert;
    cert.s = s;
    std::sort(cert.s.begin(), cert.s.end());
    cert.tree = tree_from_edges(g, edges);
    if (!is_spanning_tree(g, cert.tree)) {
        out.error = "completed edge set is not a spanning tree";
        return out;
    }
    out.certificate = std::move(cert);
    return out;
}

bool validate_dominating_certificate(const Configuration& cfg, const DominatingTreeCertificate& cert) {
    const auto check = check_dominating_set(cfg, cert.s);
    if (!check.certificate || check.certificate->tree != cert.tree) return false;
    const LeviGraph g = levi_graph(cfg);
    if (!points_even_in_cotree(g, cert.tree)) return false;
    return cotree_report(g.graph(), cert.tree).all_even();
}

namespace {

class SubsetSearch {
public:
    SubsetSearch(const Configuration& cfg, std::uint64_t budget)
        : cfg_(cfg), v_(cfg.points()), k_((v_ - 1) / 2), budget_(budget), parent_(v_), cover_(v_, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    DominatingSearchResult run() {
        DominatingSearchResult r;
        if (rec(0)) {
            r.status = DominatingSearchStatus::Found;
            r.certificate = check_dominating_set(cfg_, chosen_).certificate;
        } else {
            r.status = aborted_ ? DominatingSearchStatus::BudgetExceeded : DominatingSearchStatus::Exhausted;
        }
        r.nodes = nodes_;
        return r;
    }

private:
    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool rec(int next) {
        if (++nodes_ > budget_) {
            aborted_ = true;
            return false;
        }
        const int remaining = k_ - static_cast<int>(chosen_.size());
        if (remaining == 0) return uncovered_ == 0;
        if (3 * remaining < uncovered_) return false;
        for (int p = next; p <= v_ - remaining; ++p) {
            const auto star = cfg_.star(p);
            const int r0 = find(star[0]), r1 = find(star[1]), r2 = find(star[2]);
            if (r0 == r1 || r0 == r2 || r1 == r2) continue;
            // blocks form the DSU universe; the point merges its three blocks
            const std::size_t mark = log_.size();
            link(r1, r0);
            link(r2, r0);
            for (int b : star)
                if (cover_[b]++ == 0) --uncovered_;
            chosen_.push_back(p);
            if (rec(p + 1)) return true;
            chosen_.pop_back();
            for (int b : star)
                if (--cover_[b] == 0) ++uncovered_;
            while (log_.size() > mark) {
                parent_[log_.back()] = log_.back();
                log_.pop_back();
            }
            if (aborted_) return false;
        }
        return false;
    }

    void link(int child, int root) {
        parent_[child] = root;
        log_.push_back(child);
    }

    const Configuration& cfg_;
    int v_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<int> parent_;
    std::vector<int> log_;
    std::vector<int> cover_;
    int uncovered_ = v_;
    std::vector<int> chosen_;
};

std::vector<int> greedy_set(const Configuration& cfg) {
    const int v = cfg.points();
    std::vector<char> covered(v, 0), taken(v, 0);
    std::vector<int> s;
    while (static_cast<int>(s.size()) < (v - 1) / 2) {
        int best = -1, best_gain = -1;
        for (int p = 0; p < v; ++p) {
            if (taken[p]) continue;
            int gain = 0;
            for (int b : cfg.star(p)) gain += !covered[b];
            if (gain > best_gain) {
                best = p;
                best_gain = gain;
            }
        }
        taken[best] = 1;
        s.push_back(best);
        for (int b : cfg.star(best)) covered[b] = 1;
    }
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

DominatingSearchResult find_dominating_certificate(const Configuration& cfg, std::uint64_t node_budget) {
    if (cfg.points() % 2 == 0) throw std::invalid_argument("find_dominating_certificate needs odd v");
    if (auto greedy = check_dominating_set(cfg, greedy_set(cfg)); greedy.certificate) {
        DominatingSearchResult r;
        r.status = DominatingSearchStatus::Found;
        r.certificate = std::move(greedy.certificate);
        r.nodes = 1;
        return r;
    }
    return SubsetSearch(cfg, node_budget).run();
}

}  // namespace levi

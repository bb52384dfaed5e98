#include "levi/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace levi {

std::size_t CertificateHash::operator()(const Certificate& c) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ c.size();
    for (auto x : c) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h);
}

AdjacencyView view_of(const Graph& g) { return {g.order(), g.offsets(), g.adjacency()}; }

std::vector<int> orbit_representatives(int n, const std::vector<Permutation>& gens) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens)
        for (int x = 0; x < n; ++x) {
            int a = find(x), b = find(g[x]);
            if (a == b) continue;
            if (a < b) std::swap(a, b);
            parent[a] = b;
        }
    std::vector<int> rep(n);
    for (int x = 0; x < n; ++x) rep[x] = find(x);
    return rep;
}

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 4);
    return h * 0xbf58476d1ce4e5b9ULL;
}

// Ordered partition of the vertex set. Cells are contiguous ranges of `lab`;
// a cell is named by its start index.
struct Partition {
    std::vector<int> lab;       // position -> vertex
    std::vector<int> inv;       // vertex -> position
    std::vector<int> start;     // vertex -> start of its cell
    std::vector<int> cell_end;  // cell start -> one past its end
    int cells = 0;
};

class Search {
public:
    Search(AdjacencyView g, std::span<const int> colors) : g_(g), n_(g.n) {
        if (static_cast<int>(g.offsets.size()) != n_ + 1) throw std::invalid_argument("bad adjacency view");
        count_.assign(n_, 0);
        in_queue_.assign(n_, 0);
        Partition p;
        p.lab.resize(n_);
        std::iota(p.lab.begin(), p.lab.end(), 0);
        std::vector<int> col(n_, 0);
        if (!colors.empty()) {
            if (static_cast<int>(colors.size()) != n_) throw std::invalid_argument("colour vector size mismatch");
            col.assign(colors.begin(), colors.end());
        }
        std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) { return col[a] < col[b]; });
        p.inv.resize(n_);
        p.start.resize(n_);
        p.cell_end.assign(n_, 0);
        std::vector<int> initial_cells;
        for (int i = 0; i < n_;) {
            int j = i;
            while (j < n_ && col[p.lab[j]] == col[p.lab[i]]) ++j;
            for (int k = i; k < j; ++k) p.start[p.lab[k]] = i;
            p.cell_end[i] = j;
            prefix_.push_back(static_cast<std::uint32_t>(col[p.lab[i]]));
            prefix_.push_back(static_cast<std::uint32_t>(j - i));
            initial_cells.push_back(i);
            ++p.cells;
            i = j;
        }
        for (int i = 0; i < n_; ++i) p.inv[p.lab[i]] = i;
        root_ = std::move(p);
        root_hash_ = refine(root_, initial_cells);
    }

    CanonicalForm run() {
        CanonicalForm out;
        if (n_ == 0) {
            out.certificate = {0};
            return out;
        }
        path_.assign(n_ + 1, -1);
        cur_inv_.assign(n_ + 2, 0);
        eq_first_.assign(n_ + 2, 1);
        cmp_best_.assign(n_ + 2, 0);
        cur_inv_[0] = root_hash_;
        visit(0, root_);
        out.certificate = best_cert_;
        out.labeling = best_lab_;
        out.position.resize(n_);
        for (int i = 0; i < n_; ++i) out.position[best_lab_[i]] = i;
        out.generators = std::move(generators_);
        return out;
    }

private:
    std::uint64_t refine(Partition& p, const std::vector<int>& seeds) {
        std::uint64_t h = 0;
        std::vector<int> queue(seeds.begin(), seeds.end());
        for (int s : queue) in_queue_[s] = 1;
        std::vector<int> members, touched, touched_cells;
        std::size_t head = 0;
        while (head < queue.size() && p.cells < n_) {
            const int s = queue[head++];
            in_queue_[s] = 0;
            members.assign(p.lab.begin() + s, p.lab.begin() + p.cell_end[s]);
            touched.clear();
            for (int w : members)
                for (int k = g_.offsets[w]; k < g_.offsets[w + 1]; ++k) {
                    const int u = g_.neighbors[k];
                    if (count_[u]++ == 0) touched.push_back(u);
                }
            touched_cells.clear();
            for (int u : touched) touched_cells.push_back(p.start[u]);
            std::sort(touched_cells.begin(), touched_cells.end());
            touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());
            for (int x : touched_cells) {
                const int e = p.cell_end[x];
                if (e - x == 1) continue;
                auto first = p.lab.begin() + x;
                auto last = p.lab.begin() + e;
                const int c0 = count_[*first];
                if (std::all_of(first, last, [&](int a) { return count_[a] == c0; })) continue;
                std::sort(first, last, [&](int a, int b) { return count_[a] < count_[b]; });
                h = mix(mix(h, static_cast<std::uint64_t>(s)), static_cast<std::uint64_t>(x));
                const bool was_queued = in_queue_[x] != 0;
                int frag = x;
                int fragments = 0;
                while (frag < e) {
                    int fe = frag;
                    const int c = count_[p.lab[frag]];
                    while (fe < e && count_[p.lab[fe]] == c) ++fe;
                    for (int k = frag; k < fe; ++k) {
                        p.start[p.lab[k]] = frag;
                        p.inv[p.lab[k]] = k;
                    }
                    p.cell_end[frag] = fe;
                    h = mix(mix(h, static_cast<std::uint64_t>(fe - frag)), static_cast<std::uint64_t>(c));
                    if (!(was_queued && frag == x) && !in_queue_[frag]) {
                        in_queue_[frag] = 1;
                        queue.push_back(frag);
                    }
                    ++fragments;
                    frag = fe;
                }
                p.cells += fragments - 1;
            }
            for (int u : touched) count_[u] = 0;
        }
        for (std::size_t i = head; i < queue.size(); ++i) in_queue_[queue[i]] = 0;
        return mix(h, static_cast<std::uint64_t>(p.cells));
    }

    void individualize(Partition& p, int w) {
        const int s = p.start[w];
        const int e = p.cell_end[s];
        const int pos = p.inv[w];
        std::swap(p.lab[s], p.lab[pos]);
        p.inv[p.lab[pos]] = pos;
        p.inv[w] = s;
        for (int k = s + 1; k < e; ++k) p.start[p.lab[k]] = s + 1;
        p.cell_end[s] = s + 1;
        p.cell_end[s + 1] = e;
        ++p.cells;
    }

    int target_cell(const Partition& p) const {
        int best = -1;
        int best_size = n_ + 1;
        for (int s = 0; s < n_; s = p.cell_end[s]) {
            const int size = p.cell_end[s] - s;
            if (size > 1 && size < best_size) {
                best = s;
                best_size = size;
            }
        }
        return best;
    }

    Certificate certificate_of(const Partition& p) const {
        Certificate cert;
        cert.reserve(prefix_.size() + 1 + n_ + g_.neighbors.size());
        cert.push_back(static_cast<std::uint32_t>(n_));
        cert.insert(cert.end(), prefix_.begin(), prefix_.end());
        std::vector<int> row;
        for (int i = 0; i < n_; ++i) {
            const int x = p.lab[i];
            row.clear();
            for (int k = g_.offsets[x]; k < g_.offsets[x + 1]; ++k) row.push_back(p.inv[g_.neighbors[k]]);
            std::sort(row.begin(), row.end());
            cert.push_back(static_cast<std::uint32_t>(row.size()));
            for (int r : row) cert.push_back(static_cast<std::uint32_t>(r));
        }
        return cert;
    }

    void record_automorphism(const std::vector<int>& from_lab, const std::vector<int>& to_lab) {
        Permutation gamma(n_);
        for (int i = 0; i < n_; ++i) gamma[from_lab[i]] = to_lab[i];
        bool identity = true;
        for (int x = 0; x < n_; ++x)
            if (gamma[x] != x) identity = false;
        if (!identity) generators_.push_back(std::move(gamma));
    }

    int divergence(const std::vector<int>& other_path, int depth) const {
        for (int j = 0; j < depth; ++j)
            if (path_[j] != other_path[j]) return j;
        return depth;
    }

    int leaf(int level, const Partition& p) {
        Certificate cert = certificate_of(p);
        if (!have_first_) {
            have_first_ = true;
            first_cert_ = cert;
            first_lab_ = p.lab;
            first_path_.assign(path_.begin(), path_.begin() + level);
            first_inv_.assign(cur_inv_.begin(), cur_inv_.begin() + level + 1);
            best_cert_ = std::move(cert);
            best_lab_ = p.lab;
            best_path_ = first_path_;
            best_inv_ = first_inv_;
            return level;
        }
        if (eq_first_[level] && level == static_cast<int>(first_path_.size()) && cert == first_cert_) {
            record_automorphism(first_lab_, p.lab);
            return divergence(first_path_, level);
        }
        const int cmp = cmp_best_[level];
        if (cmp > 0 || (cmp == 0 && cert > best_cert_)) {
            best_cert_ = std::move(cert);
            best_lab_ = p.lab;
            best_path_.assign(path_.begin(), path_.begin() + level);
            best_inv_.assign(cur_inv_.begin(), cur_inv_.begin() + level + 1);
            for (int j = 0; j <= level; ++j) cmp_best_[j] = 0;
            return level;
        }
        if (cmp == 0 && cert == best_cert_) {
            record_automorphism(best_lab_, p.lab);
            return divergence(best_path_, level);
        }
        return level;
    }

    int visit(int level, const Partition& p) {
        if (p.cells == n_) return leaf(level, p);
        const int s = target_cell(p);
        const std::vector<int> cell(p.lab.begin() + s, p.lab.begin() + p.cell_end[s]);
        std::vector<int> explored;
        std::size_t gens_seen = static_cast<std::size_t>(-1);
        std::vector<int> rep;

        for (int w : cell) {
            if (!explored.empty() && !generators_.empty()) {
                if (gens_seen != generators_.size()) {
                    std::vector<Permutation> stab;
                    for (const auto& g : generators_) {
                        bool fixes = true;
                        for (int j = 0; j < level && fixes; ++j)
                            if (g[path_[j]] != path_[j]) fixes = false;
                        if (fixes) stab.push_back(g);
                    }
                    rep = orbit_representatives(n_, stab);
                    gens_seen = generators_.size();
                }
                const int rw = rep[w];
                if (std::any_of(explored.begin(), explored.end(), [&](int x) { return rep[x] == rw; })) continue;
            }

            Partition child = p;
            individualize(child, w);
            const std::uint64_t h = refine(child, {child.start[w]});
            path_[level] = w;
            cur_inv_[level + 1] = h;

            const bool first_known = have_first_;
            bool eqf = false;
            int cmpb = 0;
            if (first_known) {
                eqf = eq_first_[level] && level + 1 < static_cast<int>(first_inv_.size()) && h == first_inv_[level + 1];
                cmpb = cmp_best_[level];
                if (cmpb == 0) {
                    if (level + 1 >= static_cast<int>(best_inv_.size()))
                        cmpb = 1;
                    else if (h < best_inv_[level + 1])
                        cmpb = -1;
                    else if (h > best_inv_[level + 1])
                        cmpb = 1;
                }
                if (!eqf && cmpb < 0) {
                    explored.push_back(w);
                    continue;
                }
            } else {
                eqf = true;
            }
            eq_first_[level + 1] = eqf;
            cmp_best_[level + 1] = cmpb;
            explored.push_back(w);

            const int back = visit(level + 1, child);
            if (back < level) return back;
        }
        return level;
    }

    AdjacencyView g_;
    int n_;
    std::vector<int> count_;
    std::vector<char> in_queue_;
    std::vector<std::uint32_t> prefix_;
    Partition root_;
    std::uint64_t root_hash_ = 0;

    std::vector<int> path_;
    std::vector<std::uint64_t> cur_inv_;
    std::vector<char> eq_first_;
    std::vector<int> cmp_best_;

    bool have_first_ = false;
    Certificate first_cert_, best_cert_;
    std::vector<int> first_lab_, best_lab_;
    std::vector<int> first_path_, best_path_;
    std::vector<std::uint64_t> first_inv_, best_inv_;
    std::vector<Permutation> generators_;
};

}  // namespace

CanonicalForm canonical_form(AdjacencyView g, std::span<const int> colors) { return Search(g, colors).run(); }

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) { return canonical_form(view_of(g), colors); }

CanonicalForm canonical_form(const LeviGraph& g, bool respect_colors) {
    if (respect_colors) {
        const auto colors = g.color_classes();
        return canonical_form(g.graph(), colors);
    }
    return canonical_form(g.graph());
}

Graph canonical_graph(const Graph& g, const CanonicalForm& form) { return relabel(g, form.position); }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace levi

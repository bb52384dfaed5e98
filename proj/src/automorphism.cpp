#include "levi/automorphism.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "levi/canonical.hpp"

namespace levi {

Permutation compose(const Permutation& first, const Permutation& second) {
    Permutation out(first.size());
    for (std::size_t x = 0; x < first.size(); ++x) out[x] = second[first[x]];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<int>(x);
    return out;
}

bool is_identity(const Permutation& p) {
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p[x] != static_cast<int>(x)) return false;
    return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (static_cast<int>(p.size()) != g.order()) return false;
    std::vector<char> hit(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= g.order() || hit[x]) return false;
        hit[x] = 1;
    }
    for (const auto& e : g.edges())
        if (!g.has_edge(p[e.u], p[e.w])) return false;
    return true;
}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
    std::vector<Permutation> nontrivial;
    for (const auto& g : generators_) {
        if (static_cast<int>(g.size()) != degree_) throw std::invalid_argument("generator degree mismatch");
        if (!is_identity(g)) nontrivial.push_back(g);
    }
    if (nontrivial.empty()) return;
    for (const auto& g : nontrivial) {
        for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(i);
        auto [residue, level] = sift(g, 0);
        if (!is_identity(residue)) add_strong_generator(level, residue);
    }
    // Close under Schreier generators until every one sifts to the identity.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = levels_.size(); i-- > 0 && !changed;) {
            for (std::size_t j = i; j < levels_.size(); ++j) rebuild_orbit(j);
            const auto strong = strong_generators_from(i);
            const auto orbit = levels_[i].orbit;
            for (int x : orbit) {
                for (const auto& s : strong) {
                    const Permutation& ux = levels_[i].transversal[x];
                    const Permutation& usx = levels_[i].transversal[s[x]];
                    Permutation schreier = compose(compose(ux, s), inverse(usx));
                    auto [residue, level] = sift(std::move(schreier), i + 1);
                    if (!is_identity(residue)) {
                        add_strong_generator(level, residue);
                        changed = true;
                        break;
                    }
                }
                if (changed) break;
            }
        }
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(i);
}

void PermutationGroup::add_strong_generator(std::size_t level, const Permutation& p) {
    if (level == levels_.size()) {
        Level l;
        for (int x = 0; x < degree_; ++x)
            if (p[x] != x) {
                l.base_point = x;
                break;
            }
        levels_.push_back(std::move(l));
    }
    levels_[level].strong.push_back(p);
    for (std::size_t i = 0; i <= level; ++i) rebuild_orbit(i);
}

std::vector<Permutation> PermutationGroup::strong_generators_from(std::size_t level) const {
    std::vector<Permutation> out;
    for (std::size_t j = level; j < levels_.size(); ++j)
        out.insert(out.end(), levels_[j].strong.begin(), levels_[j].strong.end());
    return out;
}

void PermutationGroup::rebuild_orbit(std::size_t level) {
    Level& l = levels_[level];
    const auto strong = strong_generators_from(level);
    l.transversal.assign(degree_, {});
    Permutation id(degree_);
    std::iota(id.begin(), id.end(), 0);
    l.transversal[l.base_point] = id;
    l.orbit.assign(1, l.base_point);
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
        const int x = l.orbit[k];
        for (const auto& s : strong) {
            const int y = s[x];
            if (!l.transversal[y].empty()) continue;
            l.transversal[y] = compose(l.transversal[x], s);
            l.orbit.push_back(y);
        }
    }
}

std::pair<Permutation, std::size_t> PermutationGroup::sift(Permutation p, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
        const int x = p[levels_[l].base_point];
        const auto& u = levels_[l].transversal[x];
        if (u.empty()) return {std::move(p), l};
        p = compose(p, inverse(u));
    }
    return {std::move(p), levels_.size()};
}

std::uint64_t PermutationGroup::order() const {
    std::uint64_t order = 1;
    for (const auto& l : levels_) {
        const auto k = static_cast<std::uint64_t>(l.orbit.size());
        if (order > std::numeric_limits<std::uint64_t>::max() / k) throw std::overflow_error("group order overflows");
        order *= k;
    }
    return order;
}

bool PermutationGroup::contains(const Permutation& p) const {
    if (static_cast<int>(p.size()) != degree_) return false;
    return is_identity(sift(p, 0).first);
}

void PermutationGroup::for_each_element(const std::function<bool(const Permutation&)>& visit) const {
    Permutation id(degree_);
    std::iota(id.begin(), id.end(), 0);
    std::function<bool(int, const Permutation&)> rec = [&](int level, const Permutation& acc) -> bool {
        if (level < 0) return visit(acc);
        const Level& l = levels_[level];
        for (int x : l.orbit)
            if (!rec(level - 1, compose(acc, l.transversal[x]))) return false;
        return true;
    };
    rec(static_cast<int>(levels_.size()) - 1, id);
}

bool enumerate_automorphisms(const LeviGraph& lg, ColorAction action, bool involutions_only,
                             const std::function<bool(const Permutation&)>& visit) {
    const Graph& g = lg.graph();
    const int n = g.order();
    // BFS order covering every component; parent = -1 marks a new root.
    std::vector<int> order, parent(n, -2);
    for (int r = 0; r < n; ++r) {
        if (parent[r] != -2) continue;
        parent[r] = -1;
        std::size_t head = order.size();
        order.push_back(r);
        while (head < order.size()) {
            const int u = order[head++];
            for (int w : g.neighbors(u))
                if (parent[w] == -2) {
                    parent[w] = u;
                    order.push_back(w);
                }
        }
    }
    Permutation img(n, -1), pre(n, -1);
    auto target_ok = [&](int x, int y) {
        const bool same = lg.is_point(x) == lg.is_point(y);
        return action == ColorAction::Preserve ? same : !same;
    };
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);

    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) return visit(img);
        const int x = order[i];
        std::span<const int> candidates = parent[x] >= 0 ? g.neighbors(img[parent[x]]) : std::span<const int>(all);
        for (int y : candidates) {
            if (pre[y] >= 0 || !target_ok(x, y) || g.degree(y) != g.degree(x)) continue;
            if (involutions_only) {
                if (pre[x] >= 0 && pre[x] != y) continue;
                if (img[y] >= 0 && img[y] != x) continue;
            }
            bool consistent = true;
            for (int z : g.neighbors(x))
                if (img[z] >= 0 && !g.has_edge(img[z], y)) {
                    consistent = false;
                    break;
                }
            if (!consistent) continue;
            img[x] = y;
            pre[y] = x;
            const bool go_on = rec(i + 1);
            img[x] = -1;
            pre[y] = -1;
            if (!go_on) return false;
        }
        return true;
    };
    return rec(0);
}

std::vector<int> edge_orbits(const Graph& g, const std::vector<Permutation>& gens) {
    const int m = g.size();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : gens)
        for (int id = 0; id < m; ++id) {
            const auto& e = g.edges()[id];
            int a = find(id), b = find(g.edge_id(p[e.u], p[e.w]));
            if (a == b) continue;
            if (a < b) std::swap(a, b);
            parent[a] = b;
        }
    std::vector<int> rep(m);
    for (int id = 0; id < m; ++id) rep[id] = find(id);
    return rep;
}

namespace {

int distinct(const std::vector<int>& reps) { return static_cast<int>(std::set<int>(reps.begin(), reps.end()).size()); }

}  // namespace

int AutGroupInfo::point_orbit_count() const { return distinct(point_orbits); }
int AutGroupInfo::flag_orbit_count() const { return distinct(flag_orbits); }
int AutGroupInfo::unordered_flag_orbit_count() const { return distinct(unordered_flag_orbits); }

AutGroupInfo aut_group(const LeviGraph& g) {
    AutGroupInfo info;
    const int n = g.order();
    const int v = g.points();
    info.generators = canonical_form(g, false).generators;
    info.color_preserving_generators = canonical_form(g, true).generators;
    info.order = PermutationGroup(n, info.generators).order();
    info.color_preserving_order = PermutationGroup(n, info.color_preserving_generators).order();
    const auto reps = orbit_representatives(n, info.color_preserving_generators);
    info.point_orbits.assign(reps.begin(), reps.begin() + v);
    info.block_orbits.assign(reps.begin() + v, reps.end());
    info.flag_orbits = edge_orbits(g.graph(), info.color_preserving_generators);
    info.unordered_flag_orbits = edge_orbits(g.graph(), info.generators);
    return info;
}

}  // namespace levi

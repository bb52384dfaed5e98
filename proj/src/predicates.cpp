#include "levi/predicates.hpp"

#include <functional>

#include "levi/levi_graph.hpp"

namespace levi {

std::optional<Permutation> find_polarity(const Configuration& cfg) {
    std::optional<Permutation> found;
    enumerate_automorphisms(levi_graph(cfg), ColorAction::Swap, true, [&](const Permutation& p) {
        found = p;
        return false;
    });
    return found;
}

namespace {

bool is_single_point_cycle(const Permutation& p, int v) {
    int x = 0;
    int length = 0;
    do {
        x = p[x];
        ++length;
    } while (x != 0 && length <= v);
    return length == v;
}

bool has_color_swap(const LeviGraph& g) {
    bool found = false;
    enumerate_automorphisms(g, ColorAction::Swap, false, [&](const Permutation&) {
        found = true;
        return false;
    });
    return found;
}

}  // namespace

std::optional<Permutation> find_cyclic_automorphism(const Configuration& cfg) {
    std::optional<Permutation> found;
    const int v = cfg.points();
    enumerate_automorphisms(levi_graph(cfg), ColorAction::Preserve, false, [&](const Permutation& p) {
        if (!is_single_point_cycle(p, v)) return true;
        found = p;
        return false;
    });
    return found;
}

bool is_blocking_set(const Configuration& cfg, const std::vector<int>& points) {
    std::vector<char> in(cfg.points(), 0);
    for (int p : points) {
        if (p < 0 || p >= cfg.points()) return false;
        in[p] = 1;
    }
    for (const auto& b : cfg.blocks()) {
        const int members = in[b[0]] + in[b[1]] + in[b[2]];
        if (members == 0 || members == 3) return false;
    }
    return true;
}

std::optional<std::vector<int>> find_blocking_set(const Configuration& cfg) {
    const int v = cfg.points();
    std::vector<int> state(v, -1);  // 1 member, 0 non-member
    auto block_ok = [&](int bi) {
        const auto& b = cfg.block(bi);
        const int a = state[b[0]], c = state[b[1]], d = state[b[2]];
        if (a < 0 || c < 0 || d < 0) return true;
        return !(a == c && c == d);
    };
    std::function<bool(int)> rec = [&](int p) -> bool {
        if (p == v) return true;
        for (int value : {1, 0}) {
            state[p] = value;
            bool ok = true;
            for (int bi : cfg.star(p))
                if (!block_ok(bi)) {
                    ok = false;
                    break;
                }
            if (ok && rec(p + 1)) return true;
        }
        state[p] = -1;
        return false;
    };
    if (!rec(0)) return std::nullopt;
    std::vector<int> members;
    for (int p = 0; p < v; ++p)
        if (state[p] == 1) members.push_back(p);
    return members;
}

Predicates predicates(const Configuration& cfg, const AutGroupInfo& group) {
    Predicates out;
    const LeviGraph g = levi_graph(cfg);
    out.connected = is_connected(g.graph());
    out.self_dual = has_color_swap(g);
    out.self_polar = out.self_dual && find_polarity(cfg).has_value();
    out.point_transitive = group.point_orbit_count() == 1;
    out.cyclic = out.point_transitive && find_cyclic_automorphism(cfg).has_value();
    out.flag_transitive = group.flag_orbit_count() == 1;
    out.weakly_flag_transitive = group.unordered_flag_orbit_count() == 1;
    out.blocking_set_free = !find_blocking_set(cfg).has_value();
    return out;
}

Predicates predicates(const Configuration& cfg) { return predicates(cfg, aut_group(levi_graph(cfg))); }

}  // namespace levi

#include "levi/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace levi {

Configuration fano() { return cyclic_config(7); }

LeviGraph heawood() { return levi_graph(fano()); }

Configuration pappus() {
    // Points A B C on one line, a b c on another, X Y Z the cross joins.
    return validate_configuration(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 4, 6}, {1, 3, 6},
                                      {0, 5, 7}, {2, 3, 7}, {1, 5, 8}, {2, 4, 8}});
}

Configuration cyclic_config(int v) {
    if (v < 7 || v % 2 == 0) throw std::invalid_argument("cyclic_config needs odd v >= 7");
    std::vector<Block> blocks;
    for (int m = 0; m < v; ++m) blocks.push_back({m, (m + 1) % v, (m + 3) % v});
    return validate_configuration(v, std::move(blocks));
}

std::vector<int> cyclic_dominating_set(int v) {
    if (v < 7 || v % 2 == 0) throw std::invalid_argument("cyclic_dominating_set needs odd v >= 7");
    std::vector<int> s;
    if (v % 4 == 1) {
        for (int i = 0; i <= (v - 5) / 4; ++i) {
            s.push_back(4 * i);
            s.push_back(4 * i + 1);
        }
    } else {
        for (int i = 0; i <= (v - 1) / 2; ++i)
            if (i != (v - 3) / 2) s.push_back(2 * i);
    }
    return s;
}

Configuration disjoint_union(const Configuration& a, const Configuration& b) {
    std::vector<Block> blocks(a.blocks().begin(), a.blocks().end());
    const int shift = a.points();
    for (const auto& blk : b.blocks()) blocks.push_back({blk[0] + shift, blk[1] + shift, blk[2] + shift});
    return validate_configuration(a.points() + b.points(), std::move(blocks));
}

StitchPlan default_stitch_plan(const Configuration& c1, const Configuration& c2, const Configuration& c3) {
    StitchPlan plan;
    const Configuration* src[3] = {&c1, &c2, &c3};
    for (int i = 0; i < 3; ++i) plan.deleted[i] = {0, src[i]->star(0)[0]};
    return plan;
}

StitchResult stitch(const Configuration& c1, const Configuration& c2, const Configuration& c3,
                    std::optional<StitchPlan> plan) {
    const Configuration* src[3] = {&c1, &c2, &c3};
    StitchResult result{c1, plan.value_or(default_stitch_plan(c1, c2, c3)), {}, {}};
    int total = 0;
    for (int i = 0; i < 3; ++i) {
        if (!is_connected(*src[i]))
            throw std::invalid_argument("stitch source " + std::to_string(i + 1) + " is disconnected");
        const auto [p, b] = result.plan.deleted[i];
        if (b < 0 || b >= src[i]->points() || p < 0 || p >= src[i]->points())
            throw std::invalid_argument("stitch plan index out of range");
        const auto& blk = src[i]->block(b);
        if (std::find(blk.begin(), blk.end(), p) == blk.end())
            throw std::invalid_argument("stitch plan edge is not an incidence of source " + std::to_string(i + 1));
        if (src[i]->points() % 2 == 0)
            result.warnings.push_back("source " + std::to_string(i + 1) +
                                      " has even order; its part will not have odd cycle rank");
        result.point_offset[i] = total;
        total += src[i]->points();
    }
    std::vector<Block> blocks;
    blocks.reserve(total);
    for (int i = 0; i < 3; ++i) {
        const int off = result.point_offset[i];
        const int prev = (i + 2) % 3;
        const int incoming = result.point_offset[prev] + result.plan.deleted[prev].first;
        for (int bi = 0; bi < src[i]->points(); ++bi) {
            Block blk = src[i]->block(bi);
            for (int& p : blk) {
                if (bi == result.plan.deleted[i].second && p == result.plan.deleted[i].first)
                    p = incoming;
                else
                    p += off;
            }
            blocks.push_back(blk);
        }
    }
    result.configuration = validate_configuration(total, std::move(blocks));
    return result;
}

Configuration martinetti_extend(const Configuration& cfg, const MartinettiStep& step) {
    const int v = cfg.points();
    if (step.x_block < 0 || step.x_block >= v || step.y_block < 0 || step.y_block >= v || step.x_block == step.y_block)
        throw std::invalid_argument("Martinetti step needs two distinct blocks");
    const Block& x = cfg.block(step.x_block);
    const Block& y = cfg.block(step.y_block);
    for (int p : x)
        if (std::find(y.begin(), y.end(), p) != y.end())
            throw std::invalid_argument("Martinetti step blocks are not disjoint");
    if (std::find(x.begin(), x.end(), step.x1) == x.end() || std::find(y.begin(), y.end(), step.y1) == y.end())
        throw std::invalid_argument("x1 / y1 must lie in the chosen blocks");
    for (int bi : cfg.star(step.x1)) {
        const auto& b = cfg.block(bi);
        if (std::find(b.begin(), b.end(), step.y1) != b.end())
            throw std::invalid_argument("pair {x1, y1} already lies in a block");
    }
    std::vector<int> xr, yr;
    for (int p : x)
        if (p != step.x1) xr.push_back(p);
    for (int p : y)
        if (p != step.y1) yr.push_back(p);
    const int z = v;
    std::vector<Block> blocks;
    for (int bi = 0; bi < v; ++bi)
        if (bi != step.x_block && bi != step.y_block) blocks.push_back(cfg.block(bi));
    blocks.push_back({step.x1, step.y1, z});
    blocks.push_back({xr[0], xr[1], z});
    blocks.push_back({yr[0], yr[1], z});
    return validate_configuration(v + 1, std::move(blocks));
}

std::vector<Reduction> martinetti_reductions(const Configuration& cfg) {
    const int v = cfg.points();
    std::vector<Reduction> out;
    if (v < 8) return out;
    for (int z = 0; z < v; ++z) {
        const auto star = cfg.star(z);
        auto others = [&](int bi) {
            std::vector<int> r;
            for (int p : cfg.block(bi))
                if (p != z) r.push_back(p);
            return r;  // increasing
        };
        auto rename = [&](int p) { return p > z ? p - 1 : p; };
        for (int k = 0; k < 3; ++k) {
            const auto kept = others(star[k]);
            const int a = star[(k + 1) % 3] < star[(k + 2) % 3] ? star[(k + 1) % 3] : star[(k + 2) % 3];
            const int b = star[(k + 1) % 3] < star[(k + 2) % 3] ? star[(k + 2) % 3] : star[(k + 1) % 3];
            const auto pa = others(a);
            const auto pb = others(b);
            for (int swap = 0; swap < 2; ++swap) {
                const int x1 = kept[0];
                const int y1 = kept[1];
                const auto& xpair = swap ? pb : pa;
                const auto& ypair = swap ? pa : pb;
                std::vector<Block> blocks;
                for (int bi = 0; bi < v; ++bi) {
                    if (bi == star[0] || bi == star[1] || bi == star[2]) continue;
                    const auto& blk = cfg.block(bi);
                    blocks.push_back({rename(blk[0]), rename(blk[1]), rename(blk[2])});
                }
                blocks.push_back({rename(x1), rename(xpair[0]), rename(xpair[1])});
                blocks.push_back({rename(y1), rename(ypair[0]), rename(ypair[1])});
                if (!check_configuration(v - 1, blocks).ok()) continue;
                const int nb = static_cast<int>(blocks.size());
                out.push_back({z, MartinettiStep{nb - 2, nb - 1, rename(x1), rename(y1)},
                               validate_configuration(v - 1, std::move(blocks))});
            }
        }
    }
    return out;
}

bool is_reducible(const Configuration& cfg) { return !martinetti_reductions(cfg).empty(); }

}  // namespace levi

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "levi/canonical.hpp"
#include "levi/enumerate.hpp"

namespace levi {

namespace {

constexpr int kMax = kMaxGeneratorOrder;
constexpr int kCheckpointVersion = 1;

// k points on v blocks. Blocks 0..m-1 carry at least one point, blocks
// m..v-1 are still empty; the empty ones are interchangeable and never
// enter a canonical labelling.
struct Partial {
    int v = 0;
    int k = 0;
    int m = 0;
    std::array<std::uint8_t, kMax> deg{};
    std::array<std::array<std::int8_t, 3>, kMax> pts{};
    std::array<std::uint32_t, kMax> mask{};
    std::array<std::array<std::int8_t, 3>, kMax> blocks{};
};

Partial add_point(const Partial& p, const std::array<int, 3>& bl) {
    Partial c = p;
    const int q = c.k++;
    for (int i = 0; i < 3; ++i) {
        const int b = bl[i];
        c.pts[b][c.deg[b]++] = static_cast<std::int8_t>(q);
        c.mask[b] |= std::uint32_t{1} << q;
        c.blocks[q][i] = static_cast<std::int8_t>(b);
        if (b >= c.m) c.m = b + 1;
    }
    return c;
}

// Coloured incidence graph: points 0..k-1 then non-empty blocks.
struct Csr {
    std::vector<int> offsets, neighbors, colors;
};

Csr csr_of(const Partial& p) {
    Csr g;
    const int n = p.k + p.m;
    g.offsets.reserve(n + 1);
    g.offsets.push_back(0);
    for (int q = 0; q < p.k; ++q) {
        std::array<int, 3> nb{p.k + p.blocks[q][0], p.k + p.blocks[q][1], p.k + p.blocks[q][2]};
        std::sort(nb.begin(), nb.end());
        g.neighbors.insert(g.neighbors.end(), nb.begin(), nb.end());
        g.offsets.push_back(static_cast<int>(g.neighbors.size()));
        g.colors.push_back(0);
    }
    for (int b = 0; b < p.m; ++b) {
        std::array<int, 3> nb{};
        for (int i = 0; i < p.deg[b]; ++i) nb[i] = p.pts[b][i];
        std::sort(nb.begin(), nb.begin() + p.deg[b]);
        g.neighbors.insert(g.neighbors.end(), nb.begin(), nb.begin() + p.deg[b]);
        g.offsets.push_back(static_cast<int>(g.neighbors.size()));
        g.colors.push_back(1);
    }
    return g;
}

CanonicalForm canonical_of(const Partial& p) {
    const Csr g = csr_of(p);
    return canonical_form(AdjacencyView{p.k + p.m, g.offsets, g.neighbors}, g.colors);
}

// Every unfilled block needs 2*deficit distinct unfilled partners sharing no
// point with it, since each future point through it brings two new blocks.
bool feasible(const Partial& p) {
    const int remaining = p.v - p.k;
    for (int b = 0; b < p.v; ++b) {
        const int deficit = 3 - p.deg[b];
        if (deficit == 0) continue;
        if (deficit > remaining) return false;
        if (b >= p.m) {
            // an empty block is compatible with every other unfilled block
            int open = 0;
            for (int c = 0; c < p.v; ++c) open += c != b && p.deg[c] < 3;
            if (open < 2 * deficit) return false;
            continue;
        }
        int partners = 0;
        for (int c = 0; c < p.v && partners < 2 * deficit; ++c)
            partners += c != b && p.deg[c] < 3 && (p.mask[b] & p.mask[c]) == 0;
        if (partners < 2 * deficit) return false;
    }
    return true;
}

// Cheap isomorphism invariant of a point inside a partial configuration.
std::vector<int> point_invariants(const Partial& c) {
    std::vector<int> a(c.k, 0), f(c.k, 0);
    for (int q = 0; q < c.k; ++q)
        for (int b : c.blocks[q]) a[q] += c.deg[b] * c.deg[b];
    for (int q = 0; q < c.k; ++q) {
        int s = 0;
        for (int b : c.blocks[q])
            for (int i = 0; i < c.deg[b]; ++i)
                if (c.pts[b][i] != q) s += a[c.pts[b][i]];
        f[q] = a[q] * 4096 + s;
    }
    return f;
}

struct Candidate {
    std::array<int, 3> blocks;
    std::uint32_t used_mask;  // non-empty blocks used, for orbit lookup
    int empties;
};

std::vector<Candidate> candidates(const Partial& p) {
    std::vector<int> open;
    for (int b = 0; b < p.m; ++b)
        if (p.deg[b] < 3) open.push_back(b);
    std::vector<Candidate> out;
    const int n = static_cast<int>(open.size());
    for (int j = 0; j <= 3 && j <= p.v - p.m; ++j) {
        const int need = 3 - j;
        auto push = [&](std::array<int, 3> bl, std::uint32_t used) {
            for (int e = 0; e < j; ++e) bl[need + e] = p.m + e;
            out.push_back({bl, used, j});
        };
        if (need == 0) {
            push({}, 0);
        } else if (need == 1) {
            for (int x = 0; x < n; ++x) push({open[x]}, std::uint32_t{1} << open[x]);
        } else if (need == 2) {
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    if ((p.mask[open[x]] & p.mask[open[y]]) == 0)
                        push({open[x], open[y]}, (std::uint32_t{1} << open[x]) | (std::uint32_t{1} << open[y]));
        } else {
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    if (p.mask[open[x]] & p.mask[open[y]]) continue;
                    for (int z = y + 1; z < n; ++z)
                        if ((p.mask[open[z]] & (p.mask[open[x]] | p.mask[open[y]])) == 0)
                            push({open[x], open[y], open[z]}, (std::uint32_t{1} << open[x]) |
                                                                  (std::uint32_t{1} << open[y]) |
                                                                  (std::uint32_t{1} << open[z]));
                }
        }
    }
    return out;
}

// First candidate of every orbit of the parent's automorphism group.
std::vector<int> orbit_leaders(const Partial& p, const std::vector<Candidate>& cand,
                               const std::vector<Permutation>& gens) {
    const int n = static_cast<int>(cand.size());
    std::vector<int> leaders;
    if (gens.empty()) {
        leaders.resize(n);
        for (int i = 0; i < n; ++i) leaders[i] = i;
        return leaders;
    }
    std::unordered_map<std::uint64_t, int> index;
    auto key = [](std::uint32_t used, int empties) { return (std::uint64_t{used} << 2) | static_cast<std::uint64_t>(empties); };
    for (int i = 0; i < n; ++i) index.emplace(key(cand[i].used_mask, cand[i].empties), i);
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i) {
            std::uint32_t image = 0;
            for (int b = 0; b < p.m; ++b)
                if (cand[i].used_mask >> b & 1) image |= std::uint32_t{1} << (g[p.k + b] - p.k);
            const int j = index.at(key(image, cand[i].empties));
            int a = find(i), c = find(j);
            if (a == c) continue;
            if (a < c) std::swap(a, c);
            parent[a] = c;
        }
    for (int i = 0; i < n; ++i)
        if (find(i) == i) leaders.push_back(i);
    return leaders;
}

Configuration to_configuration(const Partial& p) {
    std::vector<Block> blocks(p.v);
    for (int b = 0; b < p.v; ++b) {
        blocks[b] = {p.pts[b][0], p.pts[b][1], p.pts[b][2]};
        std::sort(blocks[b].begin(), blocks[b].end());
    }
    return validate_configuration(p.v, std::move(blocks));
}

class Generator {
public:
    Generator(int v, const GenerationOptions& o, std::atomic<std::uint64_t>& nodes)
        : v_(v), opt_(o), nodes_(nodes) {}

    // Children of p that pass the canonical-parent test; the child's
    // automorphism generators are kept when they were computed anyway.
    void children(const Partial& p, const std::vector<Permutation>* parent_gens,
                  const std::function<void(const Partial&, std::optional<CanonicalForm>)>& take) {
        std::vector<Permutation> gens_storage;
        if (!parent_gens) {
            if (p.k > 0) {
                ++canonical_calls;
                gens_storage = canonical_of(p).generators;
            }
            parent_gens = &gens_storage;
        }
        const auto cand = candidates(p);
        for (int i : orbit_leaders(p, cand, *parent_gens)) {
            const Partial c = add_point(p, cand[i].blocks);
            if (!feasible(c)) continue;
            std::optional<CanonicalForm> form;
            if (!accept(c, form)) continue;
            take(c, std::move(form));
        }
    }

    bool over_budget() const { return opt_.node_budget && nodes_.load(std::memory_order_relaxed) > opt_.node_budget; }

    // Depth-first from `root`; returns false when the budget stopped it.
    bool run(const Partial& root, const std::optional<CanonicalForm>& root_form,
             std::vector<Configuration>& out) {
        if (root.k == v_) {
            emit(root, out);
            return true;
        }
        bool ok = true;
        const std::vector<Permutation>* gens = root_form ? &root_form->generators : nullptr;
        children(root, gens, [&](const Partial& c, std::optional<CanonicalForm> form) {
            if (!ok) return;
            nodes_.fetch_add(1, std::memory_order_relaxed);
            if (over_budget()) {
                ok = false;
                return;
            }
            ok = run(c, form, out);
        });
        return ok;
    }

    std::uint64_t canonical_calls = 0;

private:
    bool accept(const Partial& c, std::optional<CanonicalForm>& form) {
        const int p = c.k - 1;
        const auto f = point_invariants(c);
        const int best = *std::max_element(f.begin(), f.end());
        if (f[p] < best) return false;
        if (std::count(f.begin(), f.end(), best) == 1) return true;
        ++canonical_calls;
        form = canonical_of(c);
        int chosen = -1;
        for (int q = 0; q < c.k; ++q)
            if (f[q] == best && (chosen < 0 || form->position[q] > form->position[chosen])) chosen = q;
        if (chosen == p) return true;
        const auto reps = orbit_representatives(c.k + c.m, form->generators);
        return reps[p] == reps[chosen];
    }

    void emit(const Partial& p, std::vector<Configuration>& out) {
        Configuration cfg = to_configuration(p);
        if (opt_.connected_only && !is_connected(cfg)) return;
        out.push_back(std::move(cfg));
    }

    int v_;
    const GenerationOptions& opt_;
    std::atomic<std::uint64_t>& nodes_;
};

struct Unit {
    Partial node;
    std::optional<CanonicalForm> form;
};

std::vector<Unit> frontier(int v, int level, Generator& gen) {
    Partial root;
    root.v = v;
    std::vector<Unit> current{{root, std::nullopt}};
    for (int depth = 0; depth < level; ++depth) {
        std::vector<Unit> next;
        for (const auto& u : current)
            gen.children(u.node, u.form ? &u.form->generators : nullptr,
                         [&](const Partial& c, std::optional<CanonicalForm> form) { next.push_back({c, std::move(form)}); });
        current = std::move(next);
    }
    return current;
}

int choose_split_level(int v, Generator& gen) {
    int level = 1;
    while (level < v - 1 && frontier(v, level, gen).size() < 64) ++level;
    return level;
}

nlohmann::json flatten(const std::vector<Configuration>& configs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : configs) {
        std::vector<int> flat;
        for (const auto& b : c.blocks()) flat.insert(flat.end(), b.begin(), b.end());
        arr.push_back(flat);
    }
    return arr;
}

std::vector<Configuration> unflatten(int v, const nlohmann::json& arr) {
    std::vector<Configuration> out;
    for (const auto& row : arr) {
        const auto flat = row.get<std::vector<int>>();
        if (static_cast<int>(flat.size()) != 3 * v) throw std::runtime_error("checkpoint entry has the wrong length");
        std::vector<Block> blocks(v);
        for (int b = 0; b < v; ++b) blocks[b] = {flat[3 * b], flat[3 * b + 1], flat[3 * b + 2]};
        out.push_back(validate_configuration(v, std::move(blocks)));
    }
    return out;
}

class Checkpoint {
public:
    Checkpoint(std::string path, int v, int level, int units, bool connected_only)
        : path_(std::move(path)) {
        doc_ = {{"format", "levi-generation-checkpoint"},
                {"version", kCheckpointVersion},
                {"v", v},
                {"split_level", level},
                {"units_total", units},
                {"connected_only", connected_only},
                {"units", nlohmann::json::object()}};
        if (path_.empty() || !std::filesystem::exists(path_)) return;
        std::ifstream in(path_);
        const auto old = nlohmann::json::parse(in);
        for (const char* field : {"format", "version", "v", "split_level", "units_total", "connected_only"})
            if (old.at(field) != doc_.at(field))
                throw std::runtime_error(std::string("checkpoint does not match this run (") + field + ")");
        doc_["units"] = old.at("units");
    }

    std::optional<nlohmann::json> done(int unit) const {
        const auto key = std::to_string(unit);
        if (!doc_["units"].contains(key)) return std::nullopt;
        return doc_["units"][key];
    }

    void record(int unit, const std::vector<Configuration>& configs) {
        if (path_.empty()) return;
        std::lock_guard lock(mutex_);
        doc_["units"][std::to_string(unit)] = flatten(configs);
        const std::string tmp = path_ + ".tmp";
        {
            std::ofstream out(tmp);
            out << doc_.dump() << '\n';
        }
        std::filesystem::rename(tmp, path_);
    }

private:
    std::string path_;
    nlohmann::json doc_;
    std::mutex mutex_;
};

}  // namespace

GenerationStats generate_configurations(int v, const GenerationOptions& options,
                                        const std::function<void(const Configuration&)>& visit) {
    if (v < 7 || v > kMax) throw std::invalid_argument("generator supports 7 <= v <= " + std::to_string(kMax));
    const auto start = std::chrono::steady_clock::now();
    GenerationStats stats;
    std::atomic<std::uint64_t> nodes{0};
    Generator setup(v, options, nodes);
    const int level = options.split_level >= 0 ? std::min(options.split_level, v - 1) : choose_split_level(v, setup);
    auto units = frontier(v, level, setup);
    stats.split_level = level;
    stats.units_total = static_cast<int>(units.size());

    Checkpoint checkpoint(options.checkpoint_path, v, level, stats.units_total, options.connected_only);
    std::vector<std::optional<std::vector<Configuration>>> results(units.size());
    for (std::size_t i = 0; i < units.size(); ++i)
        if (auto saved = checkpoint.done(static_cast<int>(i))) {
            results[i] = unflatten(v, *saved);
            ++stats.units_resumed;
        }

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> calls{setup.canonical_calls};
    std::atomic<bool> incomplete{false};
    auto worker = [&] {
        Generator gen(v, options, nodes);
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= units.size()) break;
            if (results[i]) continue;
            std::vector<Configuration> out;
            if (!gen.run(units[i].node, units[i].form, out)) {
                incomplete = true;
                break;
            }
            checkpoint.record(static_cast<int>(i), out);
            results[i] = std::move(out);
        }
        calls += gen.canonical_calls;
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& r : results) {
        if (!r) {
            stats.complete = false;
            continue;
        }
        for (const auto& c : *r) {
            ++stats.emitted;
            visit(c);
        }
    }
    stats.complete = stats.complete && !incomplete;
    stats.nodes = nodes.load();
    stats.canonical_calls = calls.load();
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return stats;
}

}  // namespace levi

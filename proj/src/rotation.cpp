#include "levi/rotation.hpp"

#include <algorithm>
#include <stdexcept>

namespace levi {

RotationSystem::RotationSystem(const Graph& g, std::vector<int> next) : next_(std::move(next)) {
    if (static_cast<int>(next_.size()) != g.dart_count()) throw std::invalid_argument("rotation size mismatch");
    for (int u = 0; u < g.order(); ++u) {
        const int deg = g.degree(u);
        if (deg == 0) continue;
        const int first = g.dart(u, 0);
        int d = first;
        int steps = 0;
        do {
            if (d < 0 || d >= g.dart_count() || g.tail(d) != u)
                throw std::invalid_argument("rotation leaves the darts of a vertex");
            d = next_[d];
            ++steps;
        } while (d != first && steps <= deg);
        if (d != first || steps != deg) throw std::invalid_argument("rotation is not a single cycle at a vertex");
    }
}

RotationSystem RotationSystem::identity(const Graph& g) {
    RotationSystem rot;
    rot.next_.resize(g.dart_count());
    for (int u = 0; u < g.order(); ++u) {
        const int deg = g.degree(u);
        for (int i = 0; i < deg; ++i) rot.next_[g.dart(u, i)] = g.dart(u, (i + 1) % deg);
    }
    return rot;
}

RotationSystem RotationSystem::from_flips(const Graph& g, std::span<const std::uint8_t> flips) {
    if (static_cast<int>(flips.size()) != g.order()) throw std::invalid_argument("one flip bit per vertex expected");
    RotationSystem rot;
    rot.next_.resize(g.dart_count());
    for (int u = 0; u < g.order(); ++u) {
        const int deg = g.degree(u);
        for (int i = 0; i < deg; ++i) {
            const int j = flips[u] ? (i + deg - 1) % deg : (i + 1) % deg;
            rot.next_[g.dart(u, i)] = g.dart(u, j);
        }
    }
    return rot;
}

RotationSystem RotationSystem::from_neighbor_cycles(const Graph& g, const std::vector<std::vector<int>>& cycles) {
    if (static_cast<int>(cycles.size()) != g.order()) throw std::invalid_argument("one neighbour cycle per vertex expected");
    std::vector<int> next(g.dart_count(), -1);
    for (int u = 0; u < g.order(); ++u) {
        const auto& cyc = cycles[u];
        if (static_cast<int>(cyc.size()) != g.degree(u)) throw std::invalid_argument("neighbour cycle has wrong length");
        auto slot_of = [&](int w) {
            auto nb = g.neighbors(u);
            auto it = std::lower_bound(nb.begin(), nb.end(), w);
            if (it == nb.end() || *it != w) throw std::invalid_argument("neighbour cycle names a non-neighbour");
            return static_cast<int>(it - nb.begin());
        };
        for (std::size_t i = 0; i < cyc.size(); ++i)
            next[g.dart(u, slot_of(cyc[i]))] = g.dart(u, slot_of(cyc[(i + 1) % cyc.size()]));
    }
    return RotationSystem(g, std::move(next));
}

RotationSystem RotationSystem::reversed() const {
    RotationSystem rot;
    rot.next_.resize(next_.size());
    for (std::size_t d = 0; d < next_.size(); ++d) rot.next_[next_[d]] = static_cast<int>(d);
    return rot;
}

std::vector<int> RotationSystem::neighbor_cycle(const Graph& g, int u) const {
    std::vector<int> cycle;
    if (g.degree(u) == 0) return cycle;
    int d = g.dart(u, 0);
    do {
        cycle.push_back(g.head(d));
        d = next_[d];
    } while (d != g.dart(u, 0));
    return cycle;
}

int euler_genus(const Graph& g, int faces) {
    int components = 0;
    component_labels(g, &components);
    // isolated vertices are spheres on their own and carry no face
    int isolated = 0;
    for (int u = 0; u < g.order(); ++u)
        if (g.degree(u) == 0) ++isolated;
    const int twice = 2 * components - g.order() + g.size() - faces - isolated;
    if (twice < 0 || twice % 2 != 0) throw std::logic_error("face count inconsistent with Euler's formula");
    return twice / 2;
}

FaceTrace trace_faces(const Graph& g, const RotationSystem& rot) {
    FaceTrace trace;
    std::vector<char> seen(g.dart_count(), 0);
    for (int start = 0; start < g.dart_count(); ++start) {
        if (seen[start]) continue;
        std::vector<int> face;
        int d = start;
        do {
            seen[d] = 1;
            face.push_back(d);
            d = rot.next(g.reverse(d));
        } while (d != start);
        trace.faces.push_back(std::move(face));
    }
    trace.genus = euler_genus(g, static_cast<int>(trace.faces.size()));
    return trace;
}

int count_faces(const Graph& g, const RotationSystem& rot) {
    std::vector<char> seen(g.dart_count(), 0);
    int faces = 0;
    for (int start = 0; start < g.dart_count(); ++start) {
        if (seen[start]) continue;
        ++faces;
        int d = start;
        do {
            seen[d] = 1;
            d = rot.next(g.reverse(d));
        } while (d != start);
    }
    return faces;
}

}  // namespace levi

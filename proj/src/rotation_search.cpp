#include "levi/rotation_search.hpp"

#include <stdexcept>

namespace levi {

namespace {

void set_rotation(const Graph& g, std::vector<int>& next, int x, std::uint8_t flip) {
    const int base = g.dart(x, 0);
    if (flip == 0) {
        next[base] = base + 1;
        next[base + 1] = base + 2;
        next[base + 2] = base;
    } else {
        next[base] = base + 2;
        next[base + 2] = base + 1;
        next[base + 1] = base;
    }
}

class FaceSearch {
public:
    FaceSearch(const LeviGraph& g, std::span<const std::uint8_t> orientation)
        : g_(g.graph()), next_(g.graph().dart_count(), -1), assigned_(g.order(), 0) {
        const int v = g.points();
        for (int b = 0; b < v; ++b) {
            set_rotation(g_, next_, v + b, orientation[b]);
            assigned_[v + b] = 1;
        }
        // breadth-first order on points
        std::vector<char> seen(g.order(), 0);
        for (int root = 0; root < g.order(); ++root) {
            if (seen[root]) continue;
            std::vector<int> queue{root};
            seen[root] = 1;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                const int x = queue[h];
                if (g.is_point(x)) order_.push_back(x);
                for (int y : g_.neighbors(x))
                    if (!seen[y]) {
                        seen[y] = 1;
                        queue.push_back(y);
                    }
            }
        }
    }

    bool rec(std::size_t i) {
        ++nodes_;
        if (i == order_.size()) return face_length(0) == g_.dart_count();
        const int u = order_[i];
        assigned_[u] = 1;
        for (std::uint8_t flip : {0, 1}) {
            set_rotation(g_, next_, u, flip);
            bool ok = true;
            for (int s = 0; s < 3 && ok; ++s) {
                const int into = g_.reverse(g_.dart(u, s));
                const int len = face_length(into);
                ok = len < 0 || len == g_.dart_count();
            }
            if (ok && rec(i + 1)) return true;
        }
        assigned_[u] = 0;
        return false;
    }

    std::vector<int> take_rotation() { return next_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // Length of the face through d, or -1 if it runs into an undecided vertex.
    int face_length(int d) const {
        int cur = d;
        int len = 0;
        do {
            const int h = g_.head(cur);
            if (!assigned_[h]) return -1;
            cur = next_[g_.reverse(cur)];
            ++len;
        } while (cur != d);
        return len;
    }

    const Graph& g_;
    std::vector<int> next_;
    std::vector<char> assigned_;
    std::vector<int> order_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

RotationSystem rotation_from_bits(const LeviGraph& g, std::span<const std::uint8_t> point_flips,
                                  std::span<const std::uint8_t> orientation) {
    const int v = g.points();
    if (static_cast<int>(point_flips.size()) != v || static_cast<int>(orientation.size()) != v)
        throw std::invalid_argument("need one bit per point and per block");
    std::vector<std::uint8_t> flips(point_flips.begin(), point_flips.end());
    flips.insert(flips.end(), orientation.begin(), orientation.end());
    return RotationSystem::from_flips(g.graph(), flips);
}

Orientation induced_orientation(const LeviGraph& g, const RotationSystem& rot) {
    const int v = g.points();
    Orientation o(v);
    for (int b = 0; b < v; ++b) {
        const int base = g.graph().dart(v + b, 0);
        o[b] = rot.next(base) == base + 1 ? 0 : 1;
    }
    return o;
}

RotationSearchResult find_single_face_rotation(const LeviGraph& g, std::span<const std::uint8_t> orientation,
                                               int exhaustive_limit) {
    if (static_cast<int>(orientation.size()) != g.points())
        throw std::invalid_argument("orientation needs one bit per block");
    RotationSearchResult r;
    if (g.points() > exhaustive_limit) return r;
    FaceSearch search(g, orientation);
    const bool found = search.rec(0);
    r.nodes = search.nodes();
    if (found) {
        r.status = SearchStatus::Found;
        r.rotation = RotationSystem(g.graph(), search.take_rotation());
    } else {
        r.status = SearchStatus::Refuted;
    }
    return r;
}

OrientationSurvey survey_orientations(const LeviGraph& g, int exhaustive_limit) {
    OrientationSurvey s;
    const int v = g.points();
    if (v > exhaustive_limit || v > 40) return s;
    Orientation o(v, 0);
    const std::uint64_t total = std::uint64_t{1} << (v - 1);
    for (std::uint64_t m = 0; m < total; ++m) {
        for (int b = 1; b < v; ++b) o[b] = (m >> (b - 1)) & 1;
        const auto r = find_single_face_rotation(g, o, exhaustive_limit);
        ++s.orientations_checked;
        if (r.status == SearchStatus::Found) {
            ++s.embeddable;
            if (m == 0) s.witness = r.rotation;
        } else if (!s.first_failure) {
            s.first_failure = o;
        }
    }
    s.complete = true;
    return s;
}

}  // namespace levi

#include "draw.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "levi/levi_graph.hpp"
#include "levi/ring_cut.hpp"

namespace cli {

namespace {

struct Point {
    double x = 0, y = 0;
};

// Fruchterman-Reingold on the listed vertices, result scaled into a disc of
// radius 1 around the origin.
std::vector<Point> spring(const levi::Graph& g, const std::vector<int>& vertices, std::mt19937_64& rng) {
    const int n = static_cast<int>(vertices.size());
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < n; ++i) local[vertices[i]] = i;
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    std::vector<Point> pos(n);
    for (int i = 0; i < n; ++i) {
        const double a = 2 * std::numbers::pi * i / n;
        pos[i] = {std::cos(a) + jitter(rng), std::sin(a) + jitter(rng)};
    }
    const double k = std::sqrt(4.0 / std::max(n, 1));
    double temperature = 0.2;
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<Point> disp(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
                const double d = std::max(std::hypot(dx, dy), 1e-4);
                const double f = k * k / d;
                disp[i].x += dx / d * f;
                disp[i].y += dy / d * f;
                disp[j].x -= dx / d * f;
                disp[j].y -= dy / d * f;
            }
        for (const auto& e : g.edges()) {
            const int a = local[e.u], b = local[e.w];
            if (a < 0 || b < 0) continue;
            const double dx = pos[a].x - pos[b].x, dy = pos[a].y - pos[b].y;
            const double d = std::max(std::hypot(dx, dy), 1e-4);
            const double f = d * d / k;
            disp[a].x -= dx / d * f;
            disp[a].y -= dy / d * f;
            disp[b].x += dx / d * f;
            disp[b].y += dy / d * f;
        }
        for (int i = 0; i < n; ++i) {
            const double d = std::max(std::hypot(disp[i].x, disp[i].y), 1e-9);
            const double step = std::min(d, temperature);
            pos[i].x += disp[i].x / d * step;
            pos[i].y += disp[i].y / d * step;
        }
        temperature *= 0.985;
    }
    Point c;
    for (const auto& p : pos) {
        c.x += p.x / n;
        c.y += p.y / n;
    }
    double r = 1e-9;
    for (auto& p : pos) {
        p.x -= c.x;
        p.y -= c.y;
        r = std::max(r, std::hypot(p.x, p.y));
    }
    for (auto& p : pos) {
        p.x /= r;
        p.y /= r;
    }
    return pos;
}

}  // namespace

std::string draw_svg(const levi::Configuration& cfg, const DrawOptions& options) {
    const levi::LeviGraph lg = levi::levi_graph(cfg);
    const levi::Graph& g = lg.graph();
    const int v = cfg.points();
    std::mt19937_64 rng(options.seed);
    std::vector<Point> pos(g.order());

    const double size = 800, centre = size / 2;
    if (const auto ring = levi::ring_cut_certificate(g)) {
        for (int i = 0; i < 3; ++i) {
            const auto& part = ring->parts[i].vertices;
            const auto local = spring(g, part, rng);
            const double a = -std::numbers::pi / 2 + 2 * std::numbers::pi * i / 3;
            const Point c{centre + 0.52 * centre * std::cos(a), centre + 0.52 * centre * std::sin(a)};
            for (std::size_t j = 0; j < part.size(); ++j)
                pos[part[j]] = {c.x + 0.36 * centre * local[j].x, c.y + 0.36 * centre * local[j].y};
        }
    } else {
        std::vector<int> all(g.order());
        for (int x = 0; x < g.order(); ++x) all[x] = x;
        const auto local = spring(g, all, rng);
        for (int x = 0; x < g.order(); ++x) pos[x] = {centre + 0.88 * centre * local[x].x, centre + 0.88 * centre * local[x].y};
    }

    std::vector<std::string> face_lines;
    if (options.rotation) {
        const auto trace = levi::trace_faces(g, *options.rotation);
        face_lines.push_back("faces: " + std::to_string(trace.faces.size()) + ", genus: " + std::to_string(trace.genus));
        for (std::size_t f = 0; f < trace.faces.size(); ++f) {
            std::string line = "face " + std::to_string(f) + ":";
            for (int d : trace.faces[f]) line += " " + std::to_string(g.tail(d));
            face_lines.push_back(line);
        }
    }

    const double height = size + 16.0 * face_lines.size();
    std::ostringstream svg;
    svg.setf(std::ios::fixed);
    svg.precision(2);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << size << ' ' << height << "\">\n";
    if (!options.metadata.empty()) svg << "<metadata><![CDATA[" << options.metadata << "]]></metadata>\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g stroke=\"#444\" stroke-width=\"1.2\">\n";
    for (const auto& e : g.edges())
        svg << "<line x1=\"" << pos[e.u].x << "\" y1=\"" << pos[e.u].y << "\" x2=\"" << pos[e.w].x << "\" y2=\""
            << pos[e.w].y << "\"/>\n";
    svg << "</g>\n<g stroke=\"black\" stroke-width=\"1.5\">\n";
    for (int x = 0; x < g.order(); ++x) {
        const bool point = x < v;
        svg << "<circle class=\"" << (point ? "point" : "block") << "\" cx=\"" << pos[x].x << "\" cy=\"" << pos[x].y
            << "\" r=\"6\" fill=\"" << (point ? "black" : "white") << "\"><title>";
        if (point) {
            svg << "point " << x;
        } else {
            const auto& b = cfg.block(x - v);
            svg << "block " << x - v << " {" << b[0] << ',' << b[1] << ',' << b[2] << '}';
        }
        svg << "</title></circle>\n";
    }
    svg << "</g>\n";
    for (std::size_t i = 0; i < face_lines.size(); ++i)
        svg << "<text class=\"face\" x=\"8\" y=\"" << size + 14.0 * (i + 1) << "\" font-family=\"monospace\" font-size=\"11\">"
            << face_lines[i] << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace cli

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "levi/canonical.hpp"
#include "levi/enumerate.hpp"
#include "levi/predicates.hpp"

namespace levi {

GenerationStats generate_levi_graphs(int v, const GenerationOptions& options,
                                     const std::function<void(const LeviGraph&)>& visit) {
    GenerationOptions connected = options;
    connected.connected_only = true;
    std::uint64_t graphs = 0;
    auto stats = generate_configurations(v, connected, [&](const Configuration& cfg) {
        const LeviGraph g = levi_graph(cfg);
        const auto form = canonical_form(g, true);
        const auto other = canonical_form(levi_graph(dual(cfg)), true);
        if (other.certificate < form.certificate) return;
        ++graphs;
        visit(LeviGraph(v, canonical_graph(g.graph(), form)));
    });
    stats.emitted = graphs;
    return stats;
}

std::vector<Configuration> configs_from_graph(const LeviGraph& g) {
    const auto a = canonical_form(g, true);
    const auto b = canonical_form(swap_colors(g), true);
    std::vector<Configuration> out{configuration_from_levi(g)};
    if (a.certificate != b.certificate) out.push_back(configuration_from_levi(g, true));
    return out;
}

namespace {

std::uint64_t multichoose(std::uint64_t n, int k) {
    // C(n + k - 1, k), exact in 64 bits for the sizes used here
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n + i - 1) / i;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t partitions(int rest, int max_part, int parts, const std::map<int, std::uint64_t>& a) {
    if (rest == 0) return parts >= 2 ? 1 : 0;
    std::uint64_t total = 0;
    for (int s = std::min(rest, max_part); s >= 7; --s)
        for (int m = 1; m * s <= rest; ++m) {
            const int left = rest - m * s;
            if (left != 0 && left < 7) continue;
            const auto it = a.find(s);
            if (it == a.end()) throw std::out_of_range("missing connected count for v = " + std::to_string(s));
            const std::uint64_t ways = multichoose(it->second, m);
            if (ways) total += ways * partitions(left, s - 1, parts + m, a);
        }
    return total;
}

}  // namespace

std::uint64_t count_disconnected(int v, const std::map<int, std::uint64_t>& connected_counts) {
    return partitions(v, v - 7, 0, connected_counts);
}

TableRow table_row(int v, const GenerationOptions& options, GenerationStats* stats) {
    GenerationOptions all = options;
    all.connected_only = false;
    TableRow row;
    row.v = v;
    std::uint64_t connected_self_dual = 0;
    const auto run = generate_configurations(v, all, [&](const Configuration& cfg) {
        const Predicates p = predicates(cfg);
        ++row.a;
        row.b += p.self_dual;
        row.c += p.self_polar;
        row.d += p.point_transitive;
        row.e += p.cyclic;
        row.f += p.flag_transitive;
        row.g += p.weakly_flag_transitive;
        row.h += p.connected && p.blocking_set_free;
        row.i += !p.connected;
        connected_self_dual += p.connected && p.self_dual;
    });
    row.graphs = connected_self_dual + (row.a - row.i - connected_self_dual) / 2;
    row.partial = !run.complete;
    if (stats) *stats = run;
    return row;
}

namespace {

std::vector<std::uint64_t> fields(const TableRow& r) {
    return {r.a, r.b, r.c, r.d, r.e, r.f, r.g, r.h, r.i, r.graphs};
}

}  // namespace

std::string format_table(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << std::setw(3) << "v";
    for (const char* h : {"a", "b", "c", "d", "e", "f", "g", "h", "i", "graphs"}) out << std::setw(9) << h;
    out << '\n';
    for (const auto& r : rows) {
        out << std::setw(3) << r.v;
        for (auto x : fields(r)) out << std::setw(9) << x;
        if (r.partial) out << "  (partial)";
        out << '\n';
    }
    return out.str();
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "v,a,b,c,d,e,f,g,h,i,graphs,partial\n";
    for (const auto& r : rows) {
        out << r.v;
        for (auto x : fields(r)) out << ',' << x;
        out << ',' << (r.partial ? 1 : 0) << '\n';
    }
    return out.str();
}

std::vector<TableRow> parse_table_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<TableRow> rows;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line.rfind("v,", 0) == 0) continue;
        }
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::uint64_t> cells;
        while (std::getline(ls, cell, ',')) {
            std::size_t used = 0;
            cells.push_back(std::stoull(cell, &used));
            if (used != cell.size()) throw std::invalid_argument("bad table cell: " + cell);
        }
        if (cells.size() != 12) throw std::invalid_argument("table row needs 12 cells: " + line);
        TableRow r;
        r.v = static_cast<int>(cells[0]);
        std::uint64_t* dst[] = {&r.a, &r.b, &r.c, &r.d, &r.e, &r.f, &r.g, &r.h, &r.i, &r.graphs};
        for (int k = 0; k < 10; ++k) *dst[k] = cells[k + 1];
        r.partial = cells[11] != 0;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace levi

#include "levi/configuration.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "levi/levi_graph.hpp"

namespace levi {

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::NonPositiveOrder: return "non_positive_order";
        case ViolationKind::IndexOutOfRange: return "index_out_of_range";
        case ViolationKind::RepeatedPointInBlock: return "repeated_point_in_block";
        case ViolationKind::DuplicatePair: return "duplicate_pair";
        case ViolationKind::PointValency: return "point_valency";
        case ViolationKind::BlockCount: return "block_count";
    }
    return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& x) { return x.kind == kind; });
}

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto& x : violations) {
        if (!out.empty()) out += "; ";
        out += x.message;
    }
    return out.empty() ? "ok" : out;
}

InvalidConfiguration::InvalidConfiguration(ValidationReport report)
    : std::runtime_error("invalid configuration: " + report.summary()), report_(std::move(report)) {}

ValidationReport check_configuration(int v, std::span<const Block> blocks) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, std::string msg, std::vector<int> pts = {}) {
        report.violations.push_back({kind, std::move(msg), std::move(pts)});
    };
    if (v <= 0) {
        add(ViolationKind::NonPositiveOrder, "point count must be positive");
        return report;
    }
    if (static_cast<int>(blocks.size()) != v)
        add(ViolationKind::BlockCount,
            "expected " + std::to_string(v) + " blocks, got " + std::to_string(blocks.size()));

    std::vector<int> valency(v, 0);
    std::map<std::pair<int, int>, int> pair_owner;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Block b = blocks[i];
        bool in_range = true;
        for (int p : b)
            if (p < 0 || p >= v) in_range = false;
        if (!in_range) {
            add(ViolationKind::IndexOutOfRange, "block " + std::to_string(i) + " references a point outside [0, v)");
            continue;
        }
        std::sort(b.begin(), b.end());
        if (b[0] == b[1] || b[1] == b[2]) {
            add(ViolationKind::RepeatedPointInBlock, "block " + std::to_string(i) + " repeats a point");
            continue;
        }
        for (int p : b) ++valency[p];
        for (int x = 0; x < 3; ++x)
            for (int y = x + 1; y < 3; ++y) {
                auto [it, inserted] = pair_owner.emplace(std::pair{b[x], b[y]}, static_cast<int>(i));
                if (!inserted)
                    add(ViolationKind::DuplicatePair,
                        "pair {" + std::to_string(b[x]) + "," + std::to_string(b[y]) + "} lies in blocks " +
                            std::to_string(it->second) + " and " + std::to_string(i),
                        {b[x], b[y]});
            }
    }
    for (int p = 0; p < v; ++p)
        if (valency[p] != 3)
            add(ViolationKind::PointValency,
                "point " + std::to_string(p) + " lies in " + std::to_string(valency[p]) + " blocks", {p});
    return report;
}

Configuration validate_configuration(int v, std::vector<Block> blocks) {
    auto report = check_configuration(v, blocks);
    if (!report.ok()) throw InvalidConfiguration(std::move(report));
    Configuration cfg;
    cfg.v_ = v;
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    cfg.blocks_ = std::move(blocks);
    cfg.stars_.assign(v, {});
    std::vector<int> fill(v, 0);
    for (int i = 0; i < v; ++i)
        for (int p : cfg.blocks_[i]) cfg.stars_[p][fill[p]++] = i;
    return cfg;
}

Configuration Configuration::normalized() const {
    std::vector<Block> sorted(blocks_.begin(), blocks_.end());
    std::sort(sorted.begin(), sorted.end());
    return validate_configuration(v_, std::move(sorted));
}

Configuration dual(const Configuration& cfg) {
    std::vector<Block> blocks;
    blocks.reserve(cfg.points());
    for (int p = 0; p < cfg.points(); ++p) blocks.push_back(cfg.star(p));
    return validate_configuration(cfg.points(), std::move(blocks));
}

Graph associated_graph(const Configuration& cfg) {
    std::vector<Edge> edges;
    for (const auto& b : cfg.blocks()) {
        edges.push_back({b[0], b[1]});
        edges.push_back({b[0], b[2]});
        edges.push_back({b[1], b[2]});
    }
    return Graph(cfg.points(), std::move(edges));
}

bool is_connected(const Configuration& cfg) { return is_connected(levi_graph(cfg).graph()); }

Configuration relabel_points(const Configuration& cfg, std::span<const int> perm) {
    std::vector<Block> blocks;
    for (const auto& b : cfg.blocks()) blocks.push_back({perm[b[0]], perm[b[1]], perm[b[2]]});
    return validate_configuration(cfg.points(), std::move(blocks));
}

Configuration parse_configuration(std::istream& in) {
    std::optional<int> v;
    std::vector<Block> blocks;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<int> numbers;
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                const int x = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                numbers.push_back(x);
            } catch (const std::exception&) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": not an integer: " + tok);
            }
        }
        if (numbers.empty()) continue;
        if (!v) {
            if (numbers.size() != 1)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": expected the point count alone");
            v = numbers[0];
        } else {
            if (numbers.size() != 3)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": expected three point indices");
            blocks.push_back({numbers[0], numbers[1], numbers[2]});
        }
    }
    if (!v) throw std::invalid_argument("empty configuration file");
    return validate_configuration(*v, std::move(blocks));
}

Configuration parse_configuration(const std::string& text) {
    std::istringstream in(text);
    return parse_configuration(in);
}

Configuration read_configuration_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_configuration(in);
}

std::string format_configuration(const Configuration& cfg) {
    std::vector<Block> sorted(cfg.blocks().begin(), cfg.blocks().end());
    std::sort(sorted.begin(), sorted.end());
    std::string out = std::to_string(cfg.points()) + "\n";
    for (const auto& b : sorted)
        out += std::to_string(b[0]) + " " + std::to_string(b[1]) + " " + std::to_string(b[2]) + "\n";
    return out;
}

}  // namespace levi

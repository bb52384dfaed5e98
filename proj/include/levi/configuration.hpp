#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "levi/graph.hpp"

namespace levi {

using Block = std::array<int, 3>;

enum class ViolationKind {
    NonPositiveOrder,
    IndexOutOfRange,
    RepeatedPointInBlock,
    DuplicatePair,
    PointValency,
    BlockCount,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string message;
    /// Points involved (the pair for DuplicatePair, the point for PointValency).
    std::vector<int> points;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(ViolationKind kind) const;
    std::string summary() const;
};

class InvalidConfiguration : public std::runtime_error {
public:
    explicit InvalidConfiguration(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// A symmetric configuration v_3: v points, v blocks of three points, each
/// point on three blocks, each pair of points on at most one block.
///
/// Instances only come out of validate_configuration() and the operations
/// below, so the invariants always hold. Blocks keep their input order and
/// are stored as sorted triples.
class Configuration {
public:
    int points() const { return v_; }
    std::span<const Block> blocks() const { return blocks_; }
    const Block& block(int i) const { return blocks_[i]; }

    /// Indices of the three blocks through point p, ascending.
    std::array<int, 3> star(int p) const { return stars_[p]; }

    /// Same blocks, sorted lexicographically.
    Configuration normalized() const;

    bool operator==(const Configuration& other) const {
        return v_ == other.v_ && blocks_ == other.blocks_;
    }

private:
    friend Configuration validate_configuration(int v, std::vector<Block> blocks);
    int v_ = 0;
    std::vector<Block> blocks_;
    std::vector<std::array<int, 3>> stars_;
};

ValidationReport check_configuration(int v, std::span<const Block> blocks);

/// Throws InvalidConfiguration carrying the full report.
Configuration validate_configuration(int v, std::vector<Block> blocks);

/// Points and blocks swapped: block i of the result is the star of point i,
/// whose entries are block indices of cfg.
Configuration dual(const Configuration& cfg);

/// Simple graph on the points; uv is an edge iff u and v share a block.
Graph associated_graph(const Configuration& cfg);

/// Connectivity of the Levi graph.
bool is_connected(const Configuration& cfg);

/// Image under a point relabelling p -> perm[p]; block order is kept.
Configuration relabel_points(const Configuration& cfg, std::span<const int> perm);

/// Text format: first line v, then v lines of three point indices. `#`
/// starts a comment; blank lines are ignored.
Configuration parse_configuration(std::istream& in);
Configuration parse_configuration(const std::string& text);
Configuration read_configuration_file(const std::string& path);

/// Canonical text: blocks sorted lexicographically, one per line.
std::string format_configuration(const Configuration& cfg);

}  // namespace levi

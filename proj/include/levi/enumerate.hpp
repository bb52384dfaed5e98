#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "levi/configuration.hpp"
#include "levi/levi_graph.hpp"

namespace levi {

/// Largest order the generator's bit masks support.
inline constexpr int kMaxGeneratorOrder = 32;

struct GenerationOptions {
    /// Worker threads for independent work units. Output order does not
    /// depend on it.
    int jobs = 1;
    /// Depth (number of points) at which the search tree is cut into work
    /// units; negative picks the smallest depth giving at least 64 units.
    int split_level = -1;
    /// JSON checkpoint: completed units are recorded here and skipped when
    /// the file already exists for the same v and split level.
    std::string checkpoint_path;
    /// Stop after this many search nodes (0 = no limit); the run is then
    /// reported incomplete.
    std::uint64_t node_budget = 0;
    /// Drop configurations with a disconnected Levi graph.
    bool connected_only = true;
};

struct GenerationStats {
    bool complete = true;
    std::uint64_t nodes = 0;            // partial configurations accepted
    std::uint64_t canonical_calls = 0;  // canonical labellings computed
    std::uint64_t emitted = 0;
    int split_level = 0;
    int units_total = 0;
    int units_resumed = 0;  // taken from the checkpoint
    double seconds = 0;
};

/// Every v_3 configuration exactly once up to isomorphism (points and blocks
/// not interchangeable), by canonical augmentation one point at a time; see
/// README for the parent rule. Configurations arrive in a fixed order for a
/// given v and split level.
GenerationStats generate_configurations(int v, const GenerationOptions& options,
                                        const std::function<void(const Configuration&)>& visit);

/// One canonical Levi graph per isomorphism class of connected cubic
/// bipartite girth >= 6 graphs on 2v vertices. Each class is reported through
/// the configuration or dual with the smaller certificate, relabelled
/// canonically.
GenerationStats generate_levi_graphs(int v, const GenerationOptions& options,
                                     const std::function<void(const LeviGraph&)>& visit);

/// The configurations carried by a Levi graph: one when some automorphism
/// exchanges the colour classes, otherwise the configuration and its dual.
std::vector<Configuration> configs_from_graph(const LeviGraph& g);

/// One row of the census. a..g count all configurations (disconnected ones
/// included): a all, b self-dual, c self-polar, d point-transitive, e cyclic,
/// f flag-transitive, g weakly flag-transitive. h counts connected
/// blocking-set free ones and i the disconnected ones. `graphs` is the number
/// of connected Levi graphs.
struct TableRow {
    int v = 0;
    std::uint64_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0, g = 0, h = 0, i = 0;
    std::uint64_t graphs = 0;
    bool partial = false;

    bool operator==(const TableRow&) const = default;
};

/// Runs the generator and classifies every configuration. Partial when the
/// node budget ran out.
TableRow table_row(int v, const GenerationOptions& options = {}, GenerationStats* stats = nullptr);

/// Multisets of at least two connected configurations with orders summing
/// to v, given a(v') for 7 <= v' <= v - 7. Throws std::out_of_range when a
/// needed count is missing.
std::uint64_t count_disconnected(int v, const std::map<int, std::uint64_t>& connected_counts);

std::string format_table(const std::vector<TableRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);
std::vector<TableRow> parse_table_csv(const std::string& text);

}  // namespace levi

// levi: command-line front end for the configuration library.
//
// Exit codes: 0 success, 2 usage, 3 budget exhausted or verdict unknown,
// 4 invalid input.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "draw.hpp"
#include "json.hpp"
#include "levi/automorphism.hpp"
#include "levi/canonical.hpp"
#include "levi/certificate.hpp"
#include "levi/construct.hpp"
#include "levi/enumerate.hpp"
#include "levi/predicates.hpp"
#include "levi/verdict.hpp"
#include "levi/version.hpp"
#include "manifest.hpp"

using nlohmann::json;

namespace {

constexpr int kUsage = 2;
constexpr int kUnknown = 3;
constexpr int kInvalid = 4;

struct Failure {
    int code;
    std::string message;
};

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO); }

std::string paint(const std::string& text, const char* code) {
    return use_color() ? std::string("\033[") + code + "m" + text + "\033[0m" : text;
}

levi::Configuration load_configuration(const std::string& path) {
    try {
        return levi::read_configuration_file(path);
    } catch (const std::exception& e) {
        throw Failure{kInvalid, path + ": " + e.what()};
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{kInvalid, "cannot open " + path};
    try {
        return json::parse(in);
    } catch (const std::exception& e) {
        throw Failure{kInvalid, path + ": " + e.what()};
    }
}

// Named families or a configuration file.
levi::Configuration load_source(const std::string& spec, cli::Manifest& manifest) {
    if (spec == "fano") return levi::fano();
    if (spec == "pappus") return levi::pappus();
    if (spec.rfind("cyclic:", 0) == 0) {
        try {
            return levi::cyclic_config(std::stoi(spec.substr(7)));
        } catch (const std::exception& e) {
            throw Failure{kUsage, "bad source " + spec + ": " + e.what()};
        }
    }
    auto cfg = load_configuration(spec);
    manifest.input(spec);
    return cfg;
}

void write_text(const std::string& path, const std::string& text, const cli::Manifest& manifest) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Failure{1, "cannot write " + path};
    out << text;
    manifest.write_sidecar(path);
}

void write_json(const std::string& path, json doc, const cli::Manifest& manifest) {
    doc["manifest"] = manifest.json();
    const std::string text = doc.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Failure{1, "cannot write " + path};
    out << text;
}

struct Common {
    std::uint64_t seed = 0;
    int jobs = 1;
};

int cmd_generate(const Common& common, int v, const std::string& out, const std::string& checkpoint, int split,
                 std::uint64_t budget) {
    cli::Manifest manifest("generate", common.seed);
    manifest.parameter("v", v);
    manifest.parameter("jobs", common.jobs);
    manifest.parameter("split_level", split);
    manifest.parameter("node_budget", budget);
    levi::GenerationOptions o;
    o.jobs = common.jobs;
    o.split_level = split;
    o.checkpoint_path = checkpoint;
    o.node_budget = budget;
    std::ostringstream text;
    std::uint64_t configs = 0;
    const auto stats = levi::generate_levi_graphs(v, o, [&](const levi::LeviGraph& g) {
        text << levi::to_graph6(g.graph()) << '\n';
        configs += levi::configs_from_graph(g).size();
    });
    write_text(out, text.str(), manifest);
    std::cerr << "v = " << v << ": " << stats.emitted << " graphs, " << configs << " connected configurations";
    if (!stats.complete) {
        std::cerr << ' ' << paint("(incomplete: node budget exhausted)", "33") << '\n';
        return kUnknown;
    }
    std::cerr << " (" << stats.seconds << " s)\n";
    return 0;
}

int cmd_table(const Common& common, int from, int to, bool csv, const std::string& out, std::uint64_t budget) {
    if (from > to) throw Failure{kUsage, "--from must not exceed the last order"};
    cli::Manifest manifest("table", common.seed);
    manifest.parameter("from", from);
    manifest.parameter("to", to);
    manifest.parameter("jobs", common.jobs);
    manifest.parameter("node_budget", budget);
    levi::GenerationOptions o;
    o.jobs = common.jobs;
    o.node_budget = budget;
    std::vector<levi::TableRow> rows;
    bool partial = false;
    for (int v = from; v <= to; ++v) {
        levi::GenerationStats stats;
        rows.push_back(levi::table_row(v, o, &stats));
        partial |= rows.back().partial;
        std::cerr << "row " << v << ": " << stats.seconds << " s\n";
    }
    write_text(out, csv ? levi::table_csv(rows) : levi::format_table(rows), manifest);
    return partial ? kUnknown : 0;
}

std::string verdict_key(levi::VerdictStatus s) {
    switch (s) {
        case levi::VerdictStatus::EveryOrientation: return "every_orientation";
        case levi::VerdictStatus::SomeOrientation: return "some_orientation";
        case levi::VerdictStatus::NoOrientation: return "no_orientation";
        case levi::VerdictStatus::Unknown: return "unknown";
    }
    return "unknown";
}

int cmd_verdict(const Common& common, const std::string& file, const std::string& out, const levi::VerdictPolicy& policy) {
    cli::Manifest manifest("verdict", common.seed);
    manifest.parameter("exhaustive_limit", policy.exhaustive_limit);
    manifest.parameter("dominating_budget", policy.dominating_budget);
    manifest.parameter("use_dominating_set", policy.use_dominating_set);
    manifest.parameter("use_ring_cut", policy.use_ring_cut);
    const auto cfg = load_configuration(file);
    manifest.input(file);
    if (cfg.points() % 2 == 0)
        throw Failure{kInvalid, "v = " + std::to_string(cfg.points()) +
                                    " is even; an upper embedding needs an odd number of points"};
    if (!levi::is_connected(cfg)) throw Failure{kInvalid, "configuration is disconnected"};

    const auto result = levi::verdict(cfg, policy);
    json doc = {{"verdict", verdict_key(result.status)}, {"method", result.method}, {"note", result.note}};
    if (result.dominating) doc["certificate"] = levi::certificate_json(cfg, *result.dominating);
    if (result.ring_cut) doc["certificate"] = levi::certificate_json(cfg, *result.ring_cut);
    if (result.survey) {
        const auto& s = *result.survey;
        doc["survey"] = {{"complete", s.complete},
                         {"orientations_checked", s.orientations_checked},
                         {"embeddable", s.embeddable}};
        if (s.first_failure) doc["survey"]["first_failure"] = *s.first_failure;
        if (s.witness) doc["certificate"] = levi::certificate_json(cfg, *s.witness);
    }
    write_json(out, doc, manifest);

    const char* color = result.status == levi::VerdictStatus::EveryOrientation ? "32"
                        : result.status == levi::VerdictStatus::NoOrientation  ? "31"
                                                                               : "33";
    std::cerr << paint(levi::to_string(result.status), color) << " (" << result.method << ")\n";
    return result.status == levi::VerdictStatus::Unknown ? kUnknown : 0;
}

int cmd_classify(const Common& common, const std::string& file, const std::string& out) {
    cli::Manifest manifest("classify", common.seed);
    const auto cfg = load_configuration(file);
    manifest.input(file);
    const auto g = levi::levi_graph(cfg);
    const auto group = levi::aut_group(g);
    const auto p = levi::predicates(cfg, group);
    json doc = {{"v", cfg.points()},
                {"graph6", levi::to_graph6(g.graph())},
                {"canonical_graph6", levi::to_graph6(levi::canonical_graph(g.graph(), levi::canonical_form(g, true)))},
                {"automorphisms", group.color_preserving_order},
                {"automorphisms_and_anti", group.order},
                {"point_orbits", group.point_orbit_count()},
                {"flag_orbits", group.flag_orbit_count()},
                {"connected", p.connected},
                {"self_dual", p.self_dual},
                {"self_polar", p.self_polar},
                {"point_transitive", p.point_transitive},
                {"cyclic", p.cyclic},
                {"flag_transitive", p.flag_transitive},
                {"weakly_flag_transitive", p.weakly_flag_transitive},
                {"blocking_set_free", p.blocking_set_free},
                {"martinetti_reducible", levi::is_reducible(cfg)}};
    if (auto s = levi::find_blocking_set(cfg)) doc["blocking_set"] = *s;
    write_json(out, doc, manifest);
    return 0;
}

int cmd_check(const std::string& file) {
    json doc = load_json(file);
    if (!doc.contains("kind") && doc.contains("certificate")) doc = doc["certificate"];
    const auto r = levi::check_certificate(doc);
    if (r.ok) {
        std::cout << paint("ok", "32") << ": " << r.kind << " certificate verified\n";
        return 0;
    }
    std::cout << paint("invalid", "31") << ": " << (r.kind.empty() ? "unknown kind" : r.kind) << '\n';
    for (const auto& problem : r.problems) std::cout << "  " << problem << '\n';
    return kInvalid;
}

int cmd_draw(const Common& common, const std::string& file, const std::string& out, const std::string& rotation_file) {
    cli::Manifest manifest("draw", common.seed);
    const auto cfg = load_configuration(file);
    manifest.input(file);
    cli::DrawOptions options;
    options.seed = common.seed;
    if (!rotation_file.empty()) {
        json doc = load_json(rotation_file);
        manifest.input(rotation_file);
        if (!doc.contains("kind") && doc.contains("certificate")) doc = doc["certificate"];
        if (!doc.contains("rotation")) throw Failure{kInvalid, rotation_file + ": no rotation"};
        try {
            const auto g = levi::levi_graph(cfg);
            options.rotation = levi::RotationSystem::from_neighbor_cycles(
                g.graph(), doc["rotation"].get<std::vector<std::vector<int>>>());
        } catch (const std::exception& e) {
            throw Failure{kInvalid, rotation_file + ": " + e.what()};
        }
    }
    options.metadata = manifest.json().dump();
    const std::string svg = cli::draw_svg(cfg, options);
    if (out.empty() || out == "-") {
        std::cout << svg;
    } else {
        std::ofstream f(out);
        if (!f) throw Failure{1, "cannot write " + out};
        f << svg;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric configurations v_3: enumeration, classification and upper embeddability."};
    app.set_version_flag("--version", levi::kVersion);
    app.require_subcommand(1);
    Common common;
    app.add_option("--seed", common.seed, "Seed for randomised steps (layout)")->capture_default_str();
    app.add_option("--jobs", common.jobs, "Worker threads for generation")->check(CLI::PositiveNumber)->capture_default_str();

    std::function<int()> action;

    // generate
    auto* gen = app.add_subcommand("generate", "Connected Levi graphs of order 2v as graph6, one per class");
    int gen_v = 0, gen_split = -1;
    std::string gen_out, gen_ckpt;
    std::uint64_t gen_budget = 0;
    gen->add_option("v", gen_v, "Number of points")->required()->check(CLI::Range(7, levi::kMaxGeneratorOrder));
    gen->add_option("-o,--out", gen_out, "Output file (graph6 lines); a manifest sidecar is written next to it");
    gen->add_option("--checkpoint", gen_ckpt, "Checkpoint file for resumable runs");
    gen->add_option("--split-level", gen_split, "Depth of the work-unit split (-1 = automatic)");
    gen->add_option("--budget", gen_budget, "Search node budget (0 = unlimited)");
    gen->callback([&] { action = [&] { return cmd_generate(common, gen_v, gen_out, gen_ckpt, gen_split, gen_budget); }; });

    // table
    auto* tab = app.add_subcommand("table", "Census rows for orders from..v");
    int tab_to = 0, tab_from = 7;
    bool tab_csv = false;
    std::string tab_out;
    std::uint64_t tab_budget = 0;
    tab->add_option("v", tab_to, "Last order")->required()->check(CLI::Range(7, levi::kMaxGeneratorOrder));
    tab->add_option("--from", tab_from, "First order")->check(CLI::Range(7, levi::kMaxGeneratorOrder))->capture_default_str();
    tab->add_flag("--csv", tab_csv, "CSV instead of aligned text");
    tab->add_option("-o,--out", tab_out, "Output file; a manifest sidecar is written next to it");
    tab->add_option("--budget", tab_budget, "Search node budget per row (0 = unlimited)");
    tab->callback([&] { action = [&] { return cmd_table(common, tab_from, tab_to, tab_csv, tab_out, tab_budget); }; });

    // verdict
    auto* ver = app.add_subcommand("verdict", "Upper-embeddability verdict with certificate (JSON)");
    std::string ver_file, ver_out;
    levi::VerdictPolicy policy;
    bool no_dominating = false, no_ring = false;
    ver->add_option("config", ver_file, "Configuration file")->required();
    ver->add_option("-o,--out", ver_out, "Output JSON file");
    ver->add_option("--exhaustive-limit", policy.exhaustive_limit, "Largest v for the orientation survey")->capture_default_str();
    ver->add_option("--dominating-budget", policy.dominating_budget, "Node budget for the dominating-set search")->capture_default_str();
    ver->add_flag("--no-dominating", no_dominating, "Skip the dominating-set certificate");
    ver->add_flag("--no-ring-cut", no_ring, "Skip the ring-cut certificate");
    ver->callback([&] {
        action = [&] {
            policy.use_dominating_set = !no_dominating;
            policy.use_ring_cut = !no_ring;
            return cmd_verdict(common, ver_file, ver_out, policy);
        };
    });

    // construct
    auto* con = app.add_subcommand("construct", "Build a configuration (text format)");
    con->require_subcommand(1);
    std::string con_out;
    con->add_option("-o,--out", con_out, "Output file; a manifest sidecar is written next to it");
    auto emit = [&](const std::string& family, json params, const levi::Configuration& cfg, cli::Manifest& m) {
        m.parameter("family", family);
        for (auto& [k, val] : params.items()) m.parameter(k, val);
        write_text(con_out, levi::format_configuration(cfg), m);
        return 0;
    };
    con->add_subcommand("fano", "The Fano plane 7_3")->callback([&] {
        action = [&] {
            cli::Manifest m("construct", common.seed);
            return emit("fano", json::object(), levi::fano(), m);
        };
    });
    con->add_subcommand("pappus", "The Pappus configuration 9_3")->callback([&] {
        action = [&] {
            cli::Manifest m("construct", common.seed);
            return emit("pappus", json::object(), levi::pappus(), m);
        };
    });
    int cyc_v = 0;
    auto* cyc = con->add_subcommand("cyclic", "Cyclic configuration generated by {0,1,3}");
    cyc->add_option("v", cyc_v, "Odd order >= 7")->required()->check(CLI::Range(7, 1 << 20));
    cyc->callback([&] {
        action = [&] {
            if (cyc_v % 2 == 0) throw Failure{kUsage, "cyclic needs odd v"};
            cli::Manifest m("construct", common.seed);
            return emit("cyclic", {{"v", cyc_v}}, levi::cyclic_config(cyc_v), m);
        };
    });
    std::vector<std::string> stitch_sources;
    std::string stitch_plan;
    auto* sti = con->add_subcommand("stitch", "Join three configurations in a ring (sources: fano, pappus, cyclic:V or a file)");
    sti->add_option("sources", stitch_sources, "Three sources")->required()->expected(3);
    sti->add_option("--plan", stitch_plan, "JSON file {\"deleted\": [[point, block] x3]}");
    sti->callback([&] {
        action = [&] {
            cli::Manifest m("construct", common.seed);
            const auto a = load_source(stitch_sources[0], m);
            const auto b = load_source(stitch_sources[1], m);
            const auto c = load_source(stitch_sources[2], m);
            std::optional<levi::StitchPlan> plan;
            if (!stitch_plan.empty()) {
                const json j = load_json(stitch_plan);
                m.input(stitch_plan);
                try {
                    levi::StitchPlan p;
                    for (int i = 0; i < 3; ++i) p.deleted[i] = {j.at("deleted").at(i).at(0), j.at("deleted").at(i).at(1)};
                    plan = p;
                } catch (const std::exception& e) {
                    throw Failure{kInvalid, stitch_plan + ": " + e.what()};
                }
            }
            levi::StitchResult r = [&] {
                try {
                    return levi::stitch(a, b, c, plan);
                } catch (const std::invalid_argument& e) {
                    throw Failure{kInvalid, e.what()};
                }
            }();
            for (const auto& w : r.warnings) std::cerr << paint("warning", "33") << ": " << w << '\n';
            json deleted = json::array();
            for (const auto& [p, blk] : r.plan.deleted) deleted.push_back({p, blk});
            return emit("stitch", {{"sources", stitch_sources}, {"deleted", deleted}}, r.configuration, m);
        };
    });
    std::string mar_file;
    levi::MartinettiStep step;
    auto* mar = con->add_subcommand("martinetti", "Martinetti extension by one point");
    mar->add_option("config", mar_file, "Source configuration (file or family name)")->required();
    mar->add_option("--x-block", step.x_block, "Index of block x")->required();
    mar->add_option("--y-block", step.y_block, "Index of block y")->required();
    mar->add_option("--x1", step.x1, "Point of x joined to z with y1")->required();
    mar->add_option("--y1", step.y1, "Point of y joined to z with x1")->required();
    mar->callback([&] {
        action = [&] {
            cli::Manifest m("construct", common.seed);
            const auto src = load_source(mar_file, m);
            try {
                return emit("martinetti",
                            {{"source", mar_file}, {"x_block", step.x_block}, {"y_block", step.y_block}, {"x1", step.x1}, {"y1", step.y1}},
                            levi::martinetti_extend(src, step), m);
            } catch (const std::invalid_argument& e) {
                throw Failure{kInvalid, e.what()};
            }
        };
    });
    std::vector<std::string> union_sources;
    auto* uni = con->add_subcommand("union", "Disjoint union of two configurations");
    uni->add_option("sources", union_sources, "Two sources")->required()->expected(2);
    uni->callback([&] {
        action = [&] {
            cli::Manifest m("construct", common.seed);
            const auto a = load_source(union_sources[0], m);
            const auto b = load_source(union_sources[1], m);
            return emit("union", {{"sources", union_sources}}, levi::disjoint_union(a, b), m);
        };
    });

    // draw
    auto* drw = app.add_subcommand("draw", "SVG drawing of the Levi graph");
    std::string drw_file, drw_out, drw_rot;
    drw->add_option("config", drw_file, "Configuration file")->required();
    drw->add_option("-o,--out", drw_out, "Output SVG");
    drw->add_option("--rotation", drw_rot, "Rotation certificate (or verdict JSON) whose faces are listed");
    drw->callback([&] { action = [&] { return cmd_draw(common, drw_file, drw_out, drw_rot); }; });

    // classify
    auto* cls = app.add_subcommand("classify", "Automorphism group and census predicates (JSON)");
    std::string cls_file, cls_out;
    cls->add_option("config", cls_file, "Configuration file")->required();
    cls->add_option("-o,--out", cls_out, "Output JSON file");
    cls->callback([&] { action = [&] { return cmd_classify(common, cls_file, cls_out); }; });

    // check
    auto* chk = app.add_subcommand("check", "Re-verify a certificate or verdict JSON document");
    std::string chk_file;
    chk->add_option("certificate", chk_file, "JSON file")->required();
    chk->callback([&] { action = [&] { return cmd_check(chk_file); }; });

    // options of a parent command (--seed, construct -o) may follow a subcommand
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* inner : sub->get_subcommands({})) inner->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    try {
        return action();
    } catch (const Failure& f) {
        std::cerr << paint("error", "31") << ": " << f.message << '\n';
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << paint("error", "31") << ": " << e.what() << '\n';
        return 1;
    }
}

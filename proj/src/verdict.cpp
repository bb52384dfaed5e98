#include "levi/verdict.hpp"

#include <stdexcept>

namespace levi {

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::EveryOrientation: return "EveryOrientation";
        case VerdictStatus::SomeOrientation: return "SomeOrientation";
        case VerdictStatus::NoOrientation: return "NoOrientation";
        case VerdictStatus::Unknown: return "Unknown";
    }
    return "?";
}

Verdict verdict(const Configuration& cfg, const VerdictPolicy& policy) {
    const int v = cfg.points();
    if (v % 2 == 0)
        throw std::invalid_argument("v = " + std::to_string(v) + " is even; a single outer face needs odd v");
    if (!is_connected(cfg)) throw std::invalid_argument("configuration is disconnected");

    Verdict out;
    if (policy.use_dominating_set) {
        const auto search = find_dominating_certificate(cfg, policy.dominating_budget);
        if (search.certificate) {
            out.status = VerdictStatus::EveryOrientation;
            out.method = "dominating_tree";
            out.dominating = search.certificate;
            return out;
        }
        out.note = std::string("dominating-set search ") + to_string(search.status);
    }

    const LeviGraph g = levi_graph(cfg);
    if (policy.use_ring_cut) {
        if (auto cut = ring_cut_certificate(g.graph())) {
            out.status = VerdictStatus::NoOrientation;
            out.method = "ring_cut";
            out.ring_cut = std::move(cut);
            return out;
        }
    }
    if (v <= policy.exhaustive_limit) {
        auto survey = survey_orientations(g, policy.exhaustive_limit);
        if (survey.complete) {
            out.method = "orientation_survey";
            if (survey.embeddable == survey.orientations_checked)
                out.status = VerdictStatus::EveryOrientation;
            else if (survey.embeddable == 0)
                out.status = VerdictStatus::NoOrientation;
            else
                out.status = VerdictStatus::SomeOrientation;
            out.survey = std::move(survey);
            return out;
        }
    }
    out.method = "none";
    out.status = VerdictStatus::Unknown;
    return out;
}

}  // namespace levi

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "levi/configuration.hpp"
#include "levi/dominating.hpp"
#include "levi/ring_cut.hpp"
#include "levi/rotation.hpp"
#include "levi/spanning_tree.hpp"

namespace levi {

// JSON certificate documents. Vertices use the Levi numbering: points
// 0..v-1, block i is vertex v+i. Every document carries the configuration
// and a "self_check" object with the counts and parities a reader can
// recompute by hand.

nlohmann::json configuration_json(const Configuration& cfg);
Configuration configuration_from_json(const nlohmann::json& j);

nlohmann::json certificate_json(const Configuration& cfg, const DominatingTreeCertificate& cert);
nlohmann::json jungerman_certificate_json(const Configuration& cfg, const SpanningTree& tree);
nlohmann::json certificate_json(const Configuration& cfg, const RingCutCertificate& cert);
nlohmann::json certificate_json(const Configuration& cfg, const RotationSystem& rot);

struct CertificateCheck {
    bool ok = false;
    std::string kind;
    std::vector<std::string> problems;
};

/// Re-verifies a certificate document from scratch. Uses only the core data
/// model (configurations, Levi graphs, spanning trees, face tracing).
CertificateCheck check_certificate(const nlohmann::json& doc);

}  // namespace levi

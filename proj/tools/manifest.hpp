#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

std::string sha256_file(const std::string& path);

/// Provenance record attached to every output file.
class Manifest {
public:
    Manifest(std::string subcommand, std::uint64_t seed);

    void parameter(const std::string& key, nlohmann::json value) { params_[key] = std::move(value); }
    void input(const std::string& path) { inputs_[path] = sha256_file(path); }

    nlohmann::json json() const;

    /// Writes `<path>.manifest.json` next to a non-JSON output.
    void write_sidecar(const std::string& path) const;

private:
    std::string subcommand_;
    std::uint64_t seed_;
    nlohmann::json params_ = nlohmann::json::object();
    nlohmann::json inputs_ = nlohmann::json::object();
    std::chrono::steady_clock::time_point start_;
    std::string started_at_;
};

}  // namespace cli

#include "manifest.hpp"

#include <openssl/evp.h>

#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "levi/version.hpp"

namespace cli {

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 14];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
    return hex.str();
}

Manifest::Manifest(std::string subcommand, std::uint64_t seed)
    : subcommand_(std::move(subcommand)), seed_(seed), start_(std::chrono::steady_clock::now()) {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream s;
    s << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    started_at_ = s.str();
}

nlohmann::json Manifest::json() const {
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return {{"subcommand", subcommand_}, {"parameters", params_}, {"seed", seed_},
            {"version", levi::kVersion}, {"inputs", inputs_}, {"started_at", started_at_},
            {"wall_seconds", wall}};
}

void Manifest::write_sidecar(const std::string& path) const {
    std::ofstream out(path + ".manifest.json");
    if (!out) throw std::runtime_error("cannot write " + path + ".manifest.json");
    out << json().dump(2) << '\n';
}

}  // namespace cli

#include "nestgb/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nestgb/errors.hpp"

namespace nestgb {

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [path, digest] : inputs) in[path] = digest;
    j["inputs"] = in;
    j["basis_size"] = basis_size;
    nlohmann::ordered_json v = nlohmann::ordered_json::object();
    for (const auto& [name, verdict] : verdicts) v[name] = verdict;
    j["verdicts"] = v;
    j["wall_ms"] = wall_ms;
    return j.dump(2);
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(std::string_view bytes) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    return std::string(hex);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return digest_hex(buf.str());
}

}  // namespace nestgb

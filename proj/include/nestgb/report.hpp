#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nestgb {

// What a CLI run did: command echo, input digests, basis size, verdicts for
// every verification requested, wall time.  Everything except wall_ms is
// deterministic given inputs and seed.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // path -> digest
    std::size_t basis_size = 0;
    std::vector<std::pair<std::string, std::string>> verdicts;
    double wall_ms = 0.0;

    std::string to_json() const;
};

std::uint64_t fnv1a(std::string_view bytes);
std::string digest_hex(std::string_view bytes);
std::string file_digest(const std::string& path);  // fnv1a of the file bytes, hex

}  // namespace nestgb

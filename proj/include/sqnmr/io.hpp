#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sqnmr {

// shortest decimal that round-trips to the same 64-bit float
std::string format_double(double x);

// all-numeric CSV; header names carry the units. writes bytes verbatim (no \r)
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

// <subcommand>_manifest.json (hyphens become underscores): echoes the resolved
// config, the physical constants used, and size + content hash of each output
void write_manifest(const std::string& out_dir, const std::string& subcommand,
                    const nlohmann::json& config_echo, const std::vector<std::string>& files);

} // namespace sqnmr

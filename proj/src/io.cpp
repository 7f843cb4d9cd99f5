#include "sqnmr/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sqnmr/constants.hpp"

namespace sqnmr {

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::string body;
    for (std::size_t k = 0; k < header.size(); ++k) {
        if (k) body += ',';
        body += header[k];
    }
    body += '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::runtime_error("write_csv: row width does not match header");
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) body += ',';
            body += format_double(row[k]);
        }
        body += '\n';
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[k] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read back output: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

void write_manifest(const std::string& out_dir, const std::string& subcommand,
                    const nlohmann::json& config_echo, const std::vector<std::string>& files) {
    nlohmann::json m;
    m["subcommand"] = subcommand;
    m["config"] = config_echo;
    m["constants"]["hbar_J_s"] = hbar;
    m["constants"]["k_B_J_per_K"] = k_B;
    m["outputs"] = nlohmann::json::object();
    for (const std::string& f : files) {
        const std::string bytes = slurp(out_dir + "/" + f);
        m["outputs"][f]["bytes"] = bytes.size();
        m["outputs"][f]["fnv1a64"] = fnv1a64_hex(bytes);
    }
    std::string name = subcommand;
    for (char& c : name)
        if (c == '-') c = '_';
    const std::string path = out_dir + "/" + name + "_manifest.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    const std::string text = m.dump(2) + "\n"; // keys sorted: byte-stable
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace sqnmr

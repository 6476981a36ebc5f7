#pragma once

#include "adsum/arith/factor.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace adsum::cli {

struct RunConfig {
    std::string command;
    std::string target;  // verify: progression | pair | correlation | difference
    std::vector<std::uint64_t> h{1}, k{2}, l{2}, x, q;
    std::vector<RationalExponent> A{RationalExponent(1, 2)}, B;
    int digits = 30;
    std::uint64_t P = 1000000, Q = 1000000;
    std::filesystem::path cache_dir;
    std::string format = "csv";
    unsigned threads = 1;
    std::filesystem::path out;
    std::uint64_t grid_limit = 4096;

    std::size_t grid_size() const;
};

// "1e4..1e7" is a decade range, "1..20" an integer range, "1,2,6" a list; combinations by comma.
std::vector<std::uint64_t> parse_int_list(const std::string& text);
std::vector<RationalExponent> parse_rational_list(const std::string& text);

// Flat key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& file);

// Builds and validates the config from merged key/value settings.
RunConfig make_config(const std::string& command, const std::map<std::string, std::string>& kv);

// Config echoed as "# key=value" lines at the top of every report.
std::string describe(const RunConfig& c);

}  // namespace adsum::cli

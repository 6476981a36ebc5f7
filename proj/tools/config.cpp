#include "config.hpp"

#include "adsum/errors.hpp"

#include <charconv>
#include <fstream>
#include <set>

namespace adsum::cli {

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto p = s.find(sep, start);
        out.push_back(trim(s.substr(start, p == std::string::npos ? std::string::npos : p - start)));
        if (p == std::string::npos) break;
        start = p + 1;
    }
    return out;
}

// integers written plainly or as 1e6 / 3e5
std::uint64_t parse_count(const std::string& t) {
    auto e = t.find_first_of("eE");
    std::uint64_t mant = 0, ex = 0;
    auto num = [&](const std::string& s, std::uint64_t& v) {
        auto r = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size()) fail(ErrorKind::config, "not an integer: " + t);
    };
    num(t.substr(0, e), mant);
    if (e == std::string::npos) return mant;
    num(t.substr(e + 1), ex);
    if (ex > 19) fail(ErrorKind::range, "integer too large: " + t);
    for (std::uint64_t i = 0; i < ex; ++i) {
        if (mant > UINT64_MAX / 10) fail(ErrorKind::range, "integer too large: " + t);
        mant *= 10;
    }
    return mant;
}

}  // namespace

std::vector<std::uint64_t> parse_int_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (auto& item : split(text, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_count(item));
            continue;
        }
        auto lo_s = item.substr(0, dots), hi_s = item.substr(dots + 2);
        std::uint64_t lo = parse_count(lo_s), hi = parse_count(hi_s);
        if (lo > hi) fail(ErrorKind::config, "empty range: " + item);
        bool decades = lo_s.find_first_of("eE") != std::string::npos || hi_s.find_first_of("eE") != std::string::npos;
        if (decades) {
            if (lo == 0) fail(ErrorKind::config, "decade range must start above 0: " + item);
            for (std::uint64_t v = lo; v <= hi; v *= 10) {
                out.push_back(v);
                if (v > UINT64_MAX / 10) break;
            }
        } else {
            if (hi - lo > 1000000) fail(ErrorKind::config, "range too long: " + item);
            for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
        }
    }
    return out;
}

std::vector<RationalExponent> parse_rational_list(const std::string& text) {
    std::vector<RationalExponent> out;
    for (auto& item : split(text, ',')) out.push_back(RationalExponent::parse(item));
    return out;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) fail(ErrorKind::config, "cannot read config file " + file.string());
    std::map<std::string, std::string> kv;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) fail(ErrorKind::config, file.string() + ":" + std::to_string(n) + ": expected key=value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::size_t RunConfig::grid_size() const {
    std::size_t n = 1;
    for (std::size_t s : {h.size(), k.size(), l.size(), A.size(), std::max<std::size_t>(1, B.size()),
                          std::max<std::size_t>(1, q.size())})
        n *= std::max<std::size_t>(1, s);
    return n;
}

RunConfig make_config(const std::string& command, const std::map<std::string, std::string>& kv) {
    static const std::set<std::string> known{"target", "h", "k", "l", "A", "B", "x", "q", "digits", "P",
                                             "Q", "cache", "format", "threads", "out", "grid_limit"};
    for (auto& [key, value] : kv)
        if (!known.count(key)) fail(ErrorKind::config, "unknown setting: " + key);
    RunConfig c;
    c.command = command;
    auto get = [&](const char* key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    if (auto v = get("target")) c.target = *v;
    if (auto v = get("h")) c.h = parse_int_list(*v);
    if (auto v = get("k")) c.k = parse_int_list(*v);
    if (auto v = get("l")) c.l = parse_int_list(*v);
    if (auto v = get("x")) c.x = parse_int_list(*v);
    if (auto v = get("q")) c.q = parse_int_list(*v);
    if (auto v = get("A")) c.A = parse_rational_list(*v);
    if (auto v = get("B")) c.B = parse_rational_list(*v);
    if (auto v = get("digits")) c.digits = int(parse_int_list(*v).at(0));
    if (auto v = get("P")) c.P = parse_int_list(*v).at(0);
    if (auto v = get("Q")) c.Q = parse_int_list(*v).at(0);
    if (auto v = get("cache")) c.cache_dir = *v;
    if (auto v = get("format")) c.format = *v;
    if (auto v = get("threads")) c.threads = unsigned(parse_int_list(*v).at(0));
    if (auto v = get("out")) c.out = *v;
    if (auto v = get("grid_limit")) c.grid_limit = parse_int_list(*v).at(0);

    if (c.format != "csv" && c.format != "json") fail(ErrorKind::config, "format must be csv or json");
    if (c.digits < 1 || c.digits > 33) fail(ErrorKind::precision, "digits must lie in 1..33 (binary128)");
    if (c.threads < 1 || c.threads > 256) fail(ErrorKind::config, "threads must lie in 1..256");
    for (auto v : c.h)
        if (v == 0) fail(ErrorKind::domain, "h must be >= 1");
    for (auto v : c.k)
        if (v == 0 || v > 12) fail(ErrorKind::domain, "k must lie in 1..12");
    for (auto v : c.l)
        if (v == 0 || v > 12) fail(ErrorKind::domain, "l must lie in 1..12");
    if (c.grid_size() > c.grid_limit) fail(ErrorKind::config, "parameter grid exceeds grid_limit");
    return c;
}

std::string describe(const RunConfig& c) {
    auto ints = [](const std::vector<std::uint64_t>& v) {
        std::string s;
        for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
    };
    auto rats = [](const std::vector<RationalExponent>& v) {
        std::string s;
        for (auto& x : v) s += (s.empty() ? "" : ",") + x.str();
        return s;
    };
    std::string s = "# command=" + c.command + "\n";
    if (!c.target.empty()) s += "# target=" + c.target + "\n";
    s += "# h=" + ints(c.h) + "\n# k=" + ints(c.k) + "\n# l=" + ints(c.l) + "\n# A=" + rats(c.A) + "\n";
    if (!c.B.empty()) s += "# B=" + rats(c.B) + "\n";
    if (!c.x.empty()) s += "# x=" + ints(c.x) + "\n";
    if (!c.q.empty()) s += "# q=" + ints(c.q) + "\n";
    s += "# P=" + std::to_string(c.P) + "\n# Q=" + std::to_string(c.Q) + "\n# digits=" + std::to_string(c.digits) + "\n";
    return s;
}

}  // namespace adsum::cli

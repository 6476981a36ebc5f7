#include "adsum/io/export.hpp"

#include "adsum/errors.hpp"

namespace adsum {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::config, std::string("json: missing field ") + key);
    return j.at(key);
}

}  // namespace

Real real_parse(const std::string& text) {
    try {
        return Real(text);
    } catch (const std::exception&) {
        fail(ErrorKind::config, "not a real number: " + text);
    }
}

Json to_json(const Jet2& g) {
    Json rows = Json::array();
    for (int i = 0; i <= g.order_s(); ++i) {
        Json row = Json::array();
        for (int j = 0; j <= g.order_w(); ++j) row.push_back(to_string(g(i, j), real_exact_digits));
        rows.push_back(row);
    }
    return rows;
}

Jet2 jet_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) fail(ErrorKind::config, "json: bad jet");
    int S = int(j.size()) - 1, W = int(j[0].size()) - 1;
    Jet2 g(S, W);
    for (int i = 0; i <= S; ++i) {
        if (!j[i].is_array() || int(j[i].size()) != W + 1) fail(ErrorKind::config, "json: ragged jet");
        for (int k = 0; k <= W; ++k) g(i, k) = real_parse(j[i][k].get<std::string>());
    }
    return g;
}

Json to_json(const SingularSeries& s) {
    Json j;
    j["k"] = s.k;
    j["l"] = s.l;
    j["h"] = s.h.value;
    j["C"] = to_string(s.C, real_exact_digits);
    j["f"] = to_string(s.f, real_exact_digits);
    j["partials"] = to_json(s.partials);
    j["Q"] = s.Q;
    j["P"] = s.P;
    j["tail_bound"] = to_string(s.tail_bound, 6);
    j["source"] = s.source;
    return j;
}

SingularSeries singular_series_from_json(const Json& j) {
    SingularSeries s;
    s.k = need(j, "k").get<unsigned>();
    s.l = need(j, "l").get<unsigned>();
    s.h = factorize(need(j, "h").get<std::uint64_t>());
    s.C = real_parse(need(j, "C").get<std::string>());
    s.f = real_parse(need(j, "f").get<std::string>());
    s.partials = jet_from_json(need(j, "partials"));
    s.Q = need(j, "Q").get<std::uint64_t>();
    s.P = need(j, "P").get<std::uint64_t>();
    s.tail_bound = real_parse(need(j, "tail_bound").get<std::string>());
    if (j.contains("source")) s.source = j["source"].get<std::string>();
    return s;
}

Json to_json(const AsymptoticPolynomial& p) {
    Json j;
    j["A"] = p.A.str();
    j["h"] = p.h;
    j["k"] = p.k;
    j["l"] = p.l;
    Json c = Json::array();
    for (auto& v : p.coeffs) c.push_back(to_string(v, real_exact_digits));
    j["coeffs"] = c;
    Json prov = Json::array();
    for (std::size_t d = 0; d < p.provenance.size(); ++d)
        for (auto& t : p.provenance[d])
            prov.push_back({{"degree", d}, {"kind", std::string(1, t.kind)}, {"m", t.m}, {"n", t.n},
                            {"contribution", to_string(t.contribution, real_exact_digits)}});
    j["provenance"] = prov;
    j["out_of_proven_range"] = p.out_of_proven_range;
    j["source"] = p.source;
    j["truncation"] = p.truncation;
    j["tail_bound"] = to_string(p.tail_bound, 6);
    return j;
}

AsymptoticPolynomial polynomial_from_json(const Json& j) {
    AsymptoticPolynomial p;
    p.A = RationalExponent::parse(need(j, "A").get<std::string>());
    p.h = need(j, "h").get<std::uint64_t>();
    p.k = need(j, "k").get<unsigned>();
    p.l = need(j, "l").get<unsigned>();
    for (auto& v : need(j, "coeffs")) p.coeffs.push_back(real_parse(v.get<std::string>()));
    p.provenance.assign(p.coeffs.size(), {});
    for (auto& t : need(j, "provenance")) {
        auto d = need(t, "degree").get<std::size_t>();
        if (d >= p.coeffs.size()) fail(ErrorKind::config, "json: provenance degree out of range");
        auto kind = need(t, "kind").get<std::string>();
        p.provenance[d].push_back({kind.empty() ? 'b' : kind[0], need(t, "m").get<unsigned>(), need(t, "n").get<unsigned>(),
                                   real_parse(need(t, "contribution").get<std::string>())});
    }
    p.out_of_proven_range = need(j, "out_of_proven_range").get<bool>();
    p.source = need(j, "source").get<std::string>();
    p.truncation = need(j, "truncation").get<std::uint64_t>();
    p.tail_bound = real_parse(need(j, "tail_bound").get<std::string>());
    return p;
}

std::string coefficient_csv(const std::vector<AsymptoticPolynomial>& polys) {
    unsigned maxdeg = 0;
    for (auto& p : polys) maxdeg = std::max(maxdeg, p.degree());
    std::string s = "h,k,l,A,source,truncation,tail_bound,out_of_proven_range";
    for (unsigned d = 0; d <= maxdeg; ++d) s += ",c" + std::to_string(d);
    s += "\n";
    for (auto& p : polys) {
        s += std::to_string(p.h) + "," + std::to_string(p.k) + "," + std::to_string(p.l) + "," + p.A.str() + "," + p.source +
             "," + std::to_string(p.truncation) + "," + to_string(p.tail_bound, 6) + "," + (p.out_of_proven_range ? "1" : "0");
        for (unsigned d = 0; d <= maxdeg; ++d) s += "," + (d < p.coeffs.size() ? to_string(p.coeffs[d]) : std::string());
        s += "\n";
    }
    return s;
}

}  // namespace adsum

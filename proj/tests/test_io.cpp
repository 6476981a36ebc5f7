#include "adsum/errors.hpp"
#include "adsum/io/export.hpp"
#include "config.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace adsum;

TEST_CASE("singular series json round trip") {
    SingularSeries s;
    s.k = 3;
    s.l = 2;
    s.h = factorize(12);
    s.C = singular_C(3, 2, 10000).value;
    s.f = singular_f(s.h, 3, 2);
    s.partials = euler_product_jet(s.h, 3, 2, default_orders(3, 2), 10000).value;
    s.P = 10000;
    s.tail_bound = Real(1e-12);
    s.source = "euler";
    auto j = to_json(s);
    CHECK(j["C"].is_string());
    auto t = singular_series_from_json(Json::parse(j.dump()));
    CHECK(t.C == s.C);
    CHECK(t.f == s.f);
    CHECK(t.h.value == 12);
    CHECK(t.partials.data() == s.partials.data());
    CHECK_THROWS_AS(singular_series_from_json(Json::parse("{\"k\":2}")), Error);
}

TEST_CASE("polynomial json round trip and csv") {
    PolynomialOptions opt;
    opt.P = 10000;
    auto p = main_polynomial(RationalExponent(1, 3), 2, 3, 2, opt);
    auto q = polynomial_from_json(Json::parse(to_json(p).dump()));
    CHECK(q.coeffs == p.coeffs);
    CHECK(q.A == p.A);
    REQUIRE(q.provenance.size() == p.provenance.size());
    for (std::size_t d = 0; d < p.provenance.size(); ++d) CHECK(q.provenance[d].size() == p.provenance[d].size());
    auto csv = coefficient_csv({p});
    CHECK(csv.rfind("h,k,l,A,source,truncation,tail_bound,out_of_proven_range,c0,c1,c2,c3\n2,3,2,1/3,euler,10000,", 0) == 0);
    CHECK_THROWS_AS(real_parse("abc"), Error);
}

TEST_CASE("config lists and files") {
    using namespace adsum::cli;
    CHECK(parse_int_list("1e4..1e7") == std::vector<std::uint64_t>{10000, 100000, 1000000, 10000000});
    CHECK(parse_int_list("1..4,9") == std::vector<std::uint64_t>{1, 2, 3, 4, 9});
    CHECK(parse_int_list("3e5") == std::vector<std::uint64_t>{300000});
    CHECK_THROWS_AS(parse_int_list("5..2"), Error);
    CHECK_THROWS_AS(parse_int_list("1.5"), Error);
    CHECK_THROWS_AS(parse_rational_list("0.5"), Error);
    auto file = std::filesystem::temp_directory_path() / "adsum_unit.cfg";
    {
        std::ofstream f(file);
        f << "# grid\nh = 1..3\nA = 1/2, 1/3\nx=1e4..1e5\n";
    }
    auto kv = read_config_file(file);
    auto c = make_config("verify", kv);
    CHECK(c.h.size() == 3);
    CHECK(c.A.size() == 2);
    CHECK(c.x.size() == 2);
    CHECK(describe(c).find("# A=1/2,1/3\n") != std::string::npos);
    kv["bogus"] = "1";
    CHECK_THROWS_AS(make_config("verify", kv), Error);
    kv.erase("bogus");
    kv["h"] = "1..100";
    kv["k"] = "1..12";
    kv["l"] = "1..2";
    CHECK_THROWS_AS(make_config("verify", kv), Error);
    std::filesystem::remove(file);
}

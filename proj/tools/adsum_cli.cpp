#include "config.hpp"

#include "adsum/arith/divisor_table.hpp"
#include "adsum/asym/asym.hpp"
#include "adsum/errors.hpp"
#include "adsum/io/export.hpp"
#include "adsum/oracle/oracle.hpp"
#include "adsum/parallel.hpp"
#include "adsum/series/zeta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace adsum;
using adsum::cli::RunConfig;

namespace {

const RationalExponent unit_exponent(1, 1);

std::string num(const Real& v, const RunConfig& c) { return to_string(v, c.digits); }

std::vector<std::uint64_t> need_x(const RunConfig& c) {
    if (c.x.empty()) fail(ErrorKind::config, c.command + ": x is required");
    auto xs = c.x;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::string run_sieve(const RunConfig& c) {
    auto xs = need_x(c);
    std::string s = "k,hi,sum,max,cache_file\n";
    for (auto k : c.k) {
        auto t = c.cache_dir.empty() ? sieve_dk(unsigned(k), 1, xs.back(), SieveOptions{false})
                                     : cached_sieve_dk(unsigned(k), 1, xs.back(), c.cache_dir);
        std::uint64_t sum = 0;
        for (auto v : t.values) sum += v;
        s += std::to_string(k) + "," + std::to_string(xs.back()) + "," + std::to_string(sum) + "," +
             std::to_string(t.max_value()) + "," +
             (c.cache_dir.empty() ? std::string("-") : table_cache_name(unsigned(k), 1, xs.back())) + "\n";
    }
    return s;
}

std::string run_constants(const RunConfig& c) {
    Json arr = Json::array();
    std::string s = "h,k,l,C,f,Cf,P,tail_bound\n";
    for (auto k : c.k)
        for (auto l : c.l)
            for (auto h : c.h) {
                auto C = singular_C(unsigned(k), unsigned(l), c.P);
                auto hf = factorize(h);
                Real f = singular_f(hf, unsigned(k), unsigned(l));
                if (c.format == "json") {
                    SingularSeries ss;
                    ss.k = unsigned(k);
                    ss.l = unsigned(l);
                    ss.h = hf;
                    ss.C = C.value;
                    ss.f = f;
                    auto jet = euler_product_jet(hf, unsigned(k), unsigned(l), default_orders(unsigned(k), unsigned(l)), c.P);
                    ss.partials = jet.value;
                    ss.P = c.P;
                    ss.tail_bound = std::max(C.tail_bound, jet.tail_bound);
                    ss.source = "euler";
                    arr.push_back(to_json(ss));
                } else {
                    s += std::to_string(h) + "," + std::to_string(k) + "," + std::to_string(l) + "," + num(C.value, c) + "," +
                         num(f, c) + "," + num(C.value * f, c) + "," + std::to_string(c.P) + "," + to_string(C.tail_bound, 4) +
                         "\n";
                }
            }
    if (c.format == "json") return arr.dump(2) + "\n";
    // zeta-power tables per k
    const auto& st = stieltjes_default();
    std::set<std::uint64_t> ks(c.k.begin(), c.k.end());
    for (auto k : ks) {
        int N = int(k) + 4;
        auto a = zeta_power_taylor(int(k), N);
        auto cc = c_coeffs(int(k), N);
        s += "\nn,gamma_n,a_n(" + std::to_string(k) + "),c_n(" + std::to_string(k) + ")\n";
        for (int n = 0; n <= N; ++n)
            s += std::to_string(n) + "," + num(st.gammas[n], c) + "," + num(a[n], c) + "," + num(cc[n], c) + "\n";
    }
    return s;
}

std::vector<AsymptoticPolynomial> polynomials(const RunConfig& c) {
    std::vector<AsymptoticPolynomial> out;
    PolynomialOptions opt;
    opt.P = c.P;
    opt.Q = c.Q;
    for (auto k : c.k)
        for (auto l : c.l)
            for (auto& A : c.A)
                for (auto h : c.h) out.push_back(main_polynomial(A, h, unsigned(k), unsigned(l), opt));
    return out;
}

std::string run_polynomial(const RunConfig& c) {
    auto ps = polynomials(c);
    if (c.format == "csv") return coefficient_csv(ps);
    Json arr = Json::array();
    for (auto& p : ps) arr.push_back(to_json(p));
    return arr.dump(2) + "\n";
}

std::string run_predict(const RunConfig& c) {
    std::string s = "h,k,l,theta_k,theta_k_value,conjecture_leading,proven_lower_bound,P\n";
    for (auto k : c.k)
        for (auto l : c.l)
            for (auto h : c.h) {
                auto th = theta_exponent(unsigned(k), Rational(0));
                s += std::to_string(h) + "," + std::to_string(k) + "," + std::to_string(l) + "," +
                     std::to_string(th.numerator()) + "/" + std::to_string(th.denominator()) + "," +
                     num(Real(th.numerator()) / Real(th.denominator()), c) + "," +
                     num(conjecture_leading(h, unsigned(k), unsigned(l), c.P), c) + "," +
                     num(proven_lower_bound(h, unsigned(k), unsigned(l), c.P), c) + "," + std::to_string(c.P) + "\n";
            }
    return s;
}

std::string run_verify(const RunConfig& c) {
    auto xs = need_x(c);
    std::string s;
    if (c.target == "correlation") {
        for (auto k : c.k)
            for (auto l : c.l)
                for (auto& A : c.A)
                    for (auto h : c.h) {
                        auto P = main_polynomial(A, h, unsigned(k), unsigned(l), PolynomialOptions{false, c.P, c.Q});
                        auto rs = brute_correlation_series(h, unsigned(k), unsigned(l), unit_exponent, A, xs);
                        ComparisonReport rep;
                        for (auto& r : rs) rep.add(r.x, r.value, Real(r.x) * P.evaluate(log(Real(r.x))));
                        s += "# h=" + std::to_string(h) + " k=" + std::to_string(k) + " l=" + std::to_string(l) + " A=" +
                             A.str() + " tail_bound=" + to_string(P.tail_bound, 4) +
                             (P.out_of_proven_range ? " out_of_proven_range" : "") + "\n" + rep.csv();
                    }
    } else if (c.target == "pair") {
        if (c.B.empty()) fail(ErrorKind::config, "pair needs B");
        for (auto k : c.k)
            for (auto l : c.l)
                for (auto& A : c.A)
                    for (auto& B : c.B)
                        for (auto h : c.h) {
                            auto lead = partial_pair_leading(h, unsigned(k), unsigned(l), A, B, c.P);
                            auto rs = brute_correlation_series(h, unsigned(k), unsigned(l), A, B, xs);
                            ComparisonReport rep;
                            for (auto& r : rs)
                                rep.add(r.x, r.value, lead.coefficient * Real(r.x) * pow(log(Real(r.x)), int(k + l) - 2));
                            s += "# h=" + std::to_string(h) + " k=" + std::to_string(k) + " l=" + std::to_string(l) + " A=" +
                                 A.str() + " B=" + B.str() + " leading_only" +
                                 (lead.out_of_proven_range ? " out_of_proven_range" : "") + "\n" + rep.csv();
                        }
    } else if (c.target == "progression") {
        if (c.q.empty()) fail(ErrorKind::config, "progression needs q");
        for (auto k : c.k)
            for (auto& A : c.A)
                for (auto q : c.q)
                    for (auto h : c.h) {
                        ComparisonReport rep;
                        bool flagged = false;
                        for (auto x : xs) {
                            auto m = ap_main_term(x, q, h, unsigned(k), A);
                            flagged = m.flagged;
                            rep.add(x, brute_ap_sum(x, q, h, unsigned(k), A), m.value);
                        }
                        s += "# k=" + std::to_string(k) + " A=" + A.str() + " q=" + std::to_string(q) + " h=" + std::to_string(h) +
                             (flagged ? " h_divisible_by_q" : "") + "\n" + rep.csv();
                    }
    } else if (c.target == "difference") {
        if (c.B.empty()) fail(ErrorKind::config, "difference needs B");
        for (auto k : c.k)
            for (auto l : c.l)
                for (auto& A : c.A)
                    for (auto& B : c.B)
                        for (auto h : c.h) {
                            Real lead = bounded_difference_leading(h, unsigned(k), unsigned(l), A, B, c.P);
                            auto full = brute_correlation_series(h, unsigned(k), unsigned(l), A, unit_exponent, xs);
                            auto part = brute_correlation_series(h, unsigned(k), unsigned(l), A, B, xs);
                            Real scale = pow(Real(B.b) / Real(B.a), int(l) - 1);
                            s += "# h=" + std::to_string(h) + " k=" + std::to_string(k) + " l=" + std::to_string(l) + " A=" +
                                 A.str() + " B=" + B.str() + " predicted_leading=" + to_string(lead, 6) + "\n";
                            s += "x,observed,normalized\n";
                            for (std::size_t i = 0; i < xs.size(); ++i) {
                                Real obs = real_from(full[i].value) - scale * real_from(part[i].value);
                                Real norm = obs / (Real(xs[i]) * pow(log(Real(xs[i])), int(k + l) - 2));
                                s += std::to_string(xs[i]) + "," + num(obs, c) + "," + num(norm, c) + "\n";
                            }
                        }
    } else {
        fail(ErrorKind::config, "verify target must be progression, pair, correlation or difference");
    }
    return s;
}

std::string run_estermann(const RunConfig& c, bool& consistent) {
    std::string s = "h,coeff,closed,dirichlet,euler,tail_bound,agree\n";
    consistent = true;
    const char* names[3] = {"xlog2x", "xlogx", "x"};
    for (auto h : c.h) {
        auto r = estermann_coeffs(h, c.Q, c.P, false);
        bool ok = r.agrees(Real(1e-8));
        consistent = consistent && ok;
        for (int i = 0; i < 3; ++i)
            s += std::to_string(h) + "," + names[i] + "," + num(r.closed[i], c) + "," + num(r.assembled[i], c) + "," +
                 num(r.assembled_euler[i], c) + "," + to_string(r.tail_bound, 4) + "," + (ok ? "1" : "0") + "\n";
    }
    if (!consistent) s += "# tolerance max(1e-8, tail_bound) exceeded\n";
    return s;
}

std::string run_distribution(const RunConfig& c) {
    auto xs = need_x(c);
    std::string s;
    for (auto k : c.k)
        for (auto& A : c.A)
            for (auto x : xs) {
                auto e = empirical_distribution(unsigned(k), A, x);
                s += "# k=" + std::to_string(k) + " A=" + A.str() + " x=" + std::to_string(x) + " mean=" + num(e.mean, c) +
                     " mean_exact=" + e.mean_exact + " diffb_residual=" + num(e.diffb_residual, c) + "\n";
                s += "bin_upper,empirical_cdf,limit_cdf\n";
                std::uint64_t cum = 0;
                unsigned bins = unsigned(e.histogram.size());
                for (unsigned b = 0; b < bins; ++b) {
                    cum += e.histogram[b];
                    Real u = Real(b + 1) / Real(bins);
                    s += num(u, c) + "," + num(Real(cum) / Real(x), c) + "," +
                         (k >= 2 ? num(bareikis_cdf(unsigned(k), u), c) : std::string("-")) + "\n";
                }
            }
    return s;
}

void emit(const RunConfig& c, const std::string& body) {
    std::string text = c.format == "json" ? body : cli::describe(c) + body;
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) fail(ErrorKind::config, "cannot write " + c.out.string());
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adsum: additive divisor sums, singular series and asymptotic polynomials"};
    // -h is taken by the shift option
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    std::map<std::string, std::map<std::string, std::string>> given;
    std::map<std::string, std::string> config_files;
    const std::vector<std::pair<std::string, std::string>> keys{
        {"h", "shifts, e.g. 1..20 or 1,2,6"}, {"k", "k values"},        {"l", "l values"},
        {"A", "exponents a/b"},                {"B", "exponents a/b"},  {"x", "cutoffs, e.g. 1e4..1e7"},
        {"q", "moduli"},                       {"P", "prime cutoff"},    {"Q", "Dirichlet truncation"},
        {"digits", "output digits"},           {"cache", "cache dir"},   {"format", "csv or json"},
        {"threads", "worker threads"},         {"out", "output file"},   {"grid_limit", "max grid size"}};
    const std::vector<std::pair<std::string, std::string>> commands{
        {"sieve", "build or load a cached d_k table"},
        {"constants", "singular series constants and zeta-power tables"},
        {"polynomial", "main-term polynomial with provenance"},
        {"predict", "leading-term predictions and exponents of distribution"},
        {"verify", "brute force against predictions"},
        {"estermann", "two-route check of the k = l = 2 coefficients"},
        {"distribution", "partial divisor ratio distribution"}};
    std::map<std::string, std::string> target;
    for (auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        if (name == "verify") sub->add_option("target", target[name], "progression|pair|correlation|difference")->required();
        sub->add_option("--config", config_files[name], "key=value config file");
        for (auto& [key, khelp] : keys) sub->add_option("--" + key, given[name][key], khelp);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        auto* sub = app.get_subcommands().front();
        std::string name = sub->get_name();
        std::map<std::string, std::string> kv;
        if (!config_files[name].empty()) kv = cli::read_config_file(config_files[name]);
        for (auto& [key, khelp] : keys)
            if (sub->count("--" + key)) kv[key] = given[name][key];
        if (name == "verify") kv["target"] = target[name];
        RunConfig c = cli::make_config(name, kv);
        set_thread_count(c.threads);
        bool consistent = true;
        std::string body;
        if (name == "sieve") body = run_sieve(c);
        else if (name == "constants") body = run_constants(c);
        else if (name == "polynomial") body = run_polynomial(c);
        else if (name == "predict") body = run_predict(c);
        else if (name == "verify") body = run_verify(c);
        else if (name == "estermann") body = run_estermann(c, consistent);
        else body = run_distribution(c);
        emit(c, body);
        if (!consistent) {
            std::cerr << "adsum: consistency error: route disagreement\n";
            return exit_code(ErrorKind::consistency);
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "adsum: " << kind_name(e.kind()) << " error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::bad_alloc&) {
        std::cerr << "adsum: resource error: out of memory\n";
        return exit_code(ErrorKind::resource);
    } catch (const std::exception& e) {
        std::cerr << "adsum: " << e.what() << "\n";
        return 1;
    }
}

// Command line front end: element construction, identity verification,
// dimension tables, and micro-benchmarks for the q-shuffle algebra library.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage error.
// QSHUFFLE_CACHE_LIMIT caps the shuffle memo cache (total cached terms).

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qshuffle/qshuffle.hpp"

using namespace qshuffle;

namespace {

Element element_by_kind(const std::string& kind, int n) {
    if (kind == "catalan") return catalan_element(n);
    if (kind == "xcy") return x_catalan_y(n);
    if (kind == "damiani-a0") return damiani_closed_form(DamianiKind::alpha0, n);
    if (kind == "damiani-a1") return damiani_closed_form(DamianiKind::alpha1, n);
    if (kind == "damiani-d") return damiani_closed_form(DamianiKind::delta, n);
    if (kind == "beck") return beck_closed_form(n);
    if (kind == "gtilde") return alternating_word(AltFamily::Gtilde, n);
    if (kind == "g") return alternating_word(AltFamily::G, n);
    if (kind == "w") return n >= 1 ? alternating_word(AltFamily::Wplus, n)
                                   : alternating_word(AltFamily::Wminus, -n);
    throw std::invalid_argument("unknown element kind '" + kind +
                                "' (expected catalan, xcy, damiani-a0, damiani-a1, damiani-d, "
                                "beck, gtilde, w, g)");
}

Rational q0_from_string(const std::string& s) {
    Rational q0 = parse_rational(s);
    if (q0 == 0 || q0 == 1 || q0 == -1)
        throw std::invalid_argument("q0 must avoid {0, 1, -1}");
    return q0;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int run_element(const std::string& kind, int n, const std::string& format) {
    OutputFormat fmt = parse_output_format(format);
    Element e = element_by_kind(kind, n);
    switch (fmt) {
        case OutputFormat::text: std::cout << render_text(e) << "\n"; break;
        case OutputFormat::latex: std::cout << render_latex(e) << "\n"; break;
        case OutputFormat::json: std::cout << element_to_json(e).dump(2) << "\n"; break;
    }
    return 0;
}

int run_verify(int degree, const std::string& q0_str, const std::string& only_csv,
               const std::vector<std::string>& extras, const std::string& format) {
    SuiteParams params;
    params.degree = degree;
    params.q0 = q0_from_string(q0_str);

    // "--only none" runs just the --extra assertions
    bool extras_only = only_csv == "none";
    if (extras_only && extras.empty())
        throw std::invalid_argument("--only none requires at least one --extra");
    if (!extras_only) {
        params.only = split_csv(only_csv);
        auto ids = check_ids();
        for (const auto& id : params.only)
            if (std::find(ids.begin(), ids.end(), id) == ids.end())
                throw std::invalid_argument("unknown check id '" + id + "'");
    }

    VerificationReport report;
    report.params = params;
    if (!extras_only) report = run_suite(params);

    int extra_index = 0;
    for (const std::string& assertion : extras) {
        auto eq = assertion.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--extra expects <lhs>=<rhs>, got '" + assertion + "'");
        IdentityCheck check;
        check.id = "extra-" + std::to_string(++extra_index);
        check.bound = degree;
        auto start = std::chrono::steady_clock::now();
        Element lhs = parse_element(assertion.substr(0, eq));
        Element rhs = parse_element(assertion.substr(eq + 1));
        check.pass = lhs == rhs;
        if (!check.pass) check.witness = lhs - rhs;
        check.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(check));
    }

    if (parse_output_format(format) == OutputFormat::json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "pass " : "FAIL ") << std::left << std::setw(18) << c.id
                      << std::right << " bound=" << std::setw(2) << c.bound << "  " << std::fixed
                      << std::setprecision(1) << std::setw(8) << c.elapsed_ms << " ms";
            if (!c.pass) {
                std::cout << "  " << c.detail;
                if (c.witness) std::cout << "  witness: " << render_text(*c.witness);
            }
            std::cout << "\n";
        }
        std::cout << report.passed() << "/" << report.checks.size() << " checks passed\n";
    }
    return report.all_pass() ? 0 : 1;
}

int run_dims(int degree, const std::string& q0_str, const std::string& format) {
    Rational q0 = q0_from_string(q0_str);
    auto rows = dims_table(degree, q0);
    bool all_consistent = true;
    for (const auto& r : rows) all_consistent = all_consistent && r.consistent;

    if (parse_output_format(format) == OutputFormat::json) {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back(json{{"n", r.n},
                                 {"dim_V", r.dim_v.str()},
                                 {"dim_J", r.dim_j},
                                 {"dim_U", r.dim_u.str()},
                                 {"damiani", r.damiani_count},
                                 {"beck", r.beck_count},
                                 {"xcy", r.xcy_count},
                                 {"alternating", r.alternating_count},
                                 {"consistent", r.consistent}});
        std::cout << json{{"q0", rational_str(q0)}, {"rows", jrows}}.dump(2) << "\n";
    } else {
        std::cout << std::setw(3) << "n" << std::setw(8) << "dim V" << std::setw(8) << "dim J"
                  << std::setw(8) << "dim U" << std::setw(9) << "damiani" << std::setw(6) << "beck"
                  << std::setw(5) << "xcy" << std::setw(13) << "alternating" << "  agree\n";
        for (const auto& r : rows) {
            std::cout << std::setw(3) << r.n << std::setw(8) << r.dim_v.str() << std::setw(8)
                      << r.dim_j << std::setw(8) << r.dim_u.str() << std::setw(9) << r.damiani_count
                      << std::setw(6) << r.beck_count << std::setw(5) << r.xcy_count
                      << std::setw(13) << r.alternating_count << "  "
                      << (r.consistent ? "yes" : "NO") << "\n";
        }
    }
    return all_consistent ? 0 : 1;
}

int run_bench(int degree) {
    auto timed = [](const std::string& label, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        fn();
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cout << std::left << std::setw(44) << label << std::fixed << std::setprecision(1)
                  << std::setw(10) << ms << " ms\n";
    };
    ShuffleCache::instance().clear();
    timed("catalan_element(8)", [] { catalan_element(8); });
    Element c4 = catalan_element(4);
    timed("C_4 * C_4 (cold cache)", [&] { shuffle_mul(c4, c4); });
    timed("C_4 * C_4 (warm cache)", [&] { shuffle_mul(c4, c4); });
    timed("beck(" + std::to_string(degree) + ") from the generating function",
          [&] { beck(degree); });
    timed("beck_closed_form(" + std::to_string(degree) + ")", [&] { beck_closed_form(degree); });
    timed("ideal rank at degree 8", [] { dim_ideal(8); });
    timed("pbw_independence_check(damiani, 6)", [] { pbw_independence_check(PBWBasis::damiani, 6); });
    timed("run_suite(degree 3)", [] {
        SuiteParams p;
        p.degree = 3;
        run_suite(p);
    });
    std::cout << "shuffle cache: " << ShuffleCache::instance().entries() << " entries, "
              << ShuffleCache::instance().stored_terms() << " cached terms\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact computations in the q-shuffle realization of the positive part of quantum "
        "affine sl2: Catalan elements, Damiani/Beck/alternating PBW families, and an "
        "identity verification suite.\n"
        "Set QSHUFFLE_CACHE_LIMIT to cap the shuffle memo cache (total cached terms)."};
    app.require_subcommand(1);

    std::string kind, element_format = "text", verify_format = "text", dims_format = "text";
    std::string verify_q0 = "2", dims_q0 = "2", only_csv;
    std::vector<std::string> extras;
    int n = 0, degree = 5, bench_degree = 5, dims_degree = 8;

    CLI::App* element = app.add_subcommand("element", "print a named element");
    element->add_option("kind", kind,
                        "catalan | xcy | damiani-a0 | damiani-a1 | damiani-d | beck | gtilde | w | g")
        ->required();
    element->add_option("n", n, "index within the family")->required();
    element->add_option("--format", element_format, "text | json | latex")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "run the identity verification suite");
    verify->add_option("--degree,-N", degree, "series truncation degree")->capture_default_str();
    verify->add_option("--q0", verify_q0, "specialization point (rational, not 0/1/-1)")
        ->capture_default_str();
    verify->add_option("--only", only_csv, "comma-separated check ids, or 'none' with --extra");
    verify->add_option("--extra", extras, "ad-hoc identity <lhs>=<rhs> in element syntax");
    verify->add_option("--format", verify_format, "text | json")->capture_default_str();

    CLI::App* dims = app.add_subcommand("dims", "graded dimension and monomial-count table");
    dims->add_option("--degree,-N", dims_degree, "largest degree")->capture_default_str();
    dims->add_option("--q0", dims_q0, "specialization point")->capture_default_str();
    dims->add_option("--format", dims_format, "text | json")->capture_default_str();

    CLI::App* bench = app.add_subcommand("bench", "micro-benchmarks of the hot paths");
    bench->add_option("--degree,-N", bench_degree, "index for the Beck benchmarks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(element)) return run_element(kind, n, element_format);
        if (app.got_subcommand(verify)) {
            if (degree < 1) throw std::invalid_argument("--degree must be >= 1");
            return run_verify(degree, verify_q0, only_csv, extras, verify_format);
        }
        if (app.got_subcommand(dims)) {
            if (dims_degree < 0) throw std::invalid_argument("--degree must be >= 0");
            return run_dims(dims_degree, dims_q0, dims_format);
        }
        if (app.got_subcommand(bench)) return run_bench(bench_degree);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

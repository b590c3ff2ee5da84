// Command-line front end: sharp-bound evaluation, coefficient maps, the
// sharpness search, region scans and the polynomial certificates.
//
// Exit codes: 0 success, 1 failed check, 2 usage error, 3 inadmissible
// Schwarz coefficients, 4 bound exceeded inside the region.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankel_lab/hankel_lab.hpp"

namespace {

using namespace hankel_lab;
using json = nlohmann::ordered_json;

enum exit_code : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_inadmissible = 3,
    exit_bound_violation = 4,
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct global_options {
    bool json = false;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
};

json to_json(cplx z)
{
    return json::array({z.real(), z.imag()});
}

json to_json(const schwarz_coeffs& c)
{
    return {{"c1", to_json(c.c1)}, {"c2", to_json(c.c2)}, {"c3", to_json(c.c3)}};
}

json to_json(const coefficient_triple& a)
{
    return {{"a2", to_json(a.a2)}, {"a3", to_json(a.a3)}, {"a4", to_json(a.a4)}};
}

json to_json(const proof_intermediates& q)
{
    return {{"mu", q.mu}, {"nu", q.nu}, {"mu1", q.mu1}, {"nu1", q.nu1},
            {"A", q.quad}, {"B", q.quartic}, {"F0", q.k}};
}

class_params make_params(double alpha, double gamma)
{
    try {
        return {alpha, gamma};
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

std::string fmt_complex(cplx z)
{
    return format_real(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + format_real(std::abs(z.imag())) + "i";
}

void print_line(const std::string& key, const std::string& value)
{
    std::printf("%-20s %s\n", key.c_str(), value.c_str());
}

const char* boolstr(bool b)
{
    return b ? "true" : "false";
}

int run_bound(const global_options& g, double alpha, double gamma)
{
    const class_params p = make_params(alpha, gamma);
    const bool region = in_theorem_region(p);
    if (!region) {
        std::cerr << "warning: (alpha, gamma) outside the sharp-bound region; value is exploratory\n";
    }
    const auto q = compute_intermediates(p);
    if (g.json) {
        json out{{"alpha", alpha}, {"gamma", gamma}, {"bound", bound(p)}, {"in_region", region},
                 {"gamma_max", region_gamma_max(alpha)}, {"intermediates", to_json(q)},
                 {"ineq30", endpoint_dominance_holds(p)}};
        std::cout << out.dump() << '\n';
        return exit_ok;
    }
    print_line("alpha", format_real(alpha));
    print_line("gamma", format_real(gamma));
    print_line("bound", format_real(bound(p)));
    print_line("in_region", boolstr(region));
    print_line("gamma_max", format_real(region_gamma_max(alpha)));
    print_line("mu", format_real(q.mu));
    print_line("nu", format_real(q.nu));
    print_line("mu1", format_real(q.mu1));
    print_line("nu1", format_real(q.nu1));
    print_line("A", format_real(q.quad));
    print_line("B", format_real(q.quartic));
    print_line("F0", format_real(q.k));
    print_line("ineq30", boolstr(endpoint_dominance_holds(p)));
    return exit_ok;
}

int run_coeffs(const global_options& g, double alpha, double gamma, const std::string& literal)
{
    const class_params p = make_params(alpha, gamma);
    std::vector<cplx> cs;
    try {
        cs = parse_complex_list(literal);
    } catch (const std::invalid_argument& e) {
        throw usage_error(std::string("--c: ") + e.what());
    }
    if (cs.size() != 3) {
        throw usage_error("--c expects exactly three comma-separated values");
    }
    const schwarz_coeffs c{cs[0], cs[1], cs[2]};
    if (!validate_coeffs(c)) {
        std::cerr << "error: (c1, c2, c3) is not the coefficient triple of any Schwarz function\n";
        return exit_inadmissible;
    }

    const coefficient_triple closed = closed_form_coefficients(p, c);
    const coefficient_triple solved = solve_coefficients(p, omega_series(c));
    const double discrepancy = std::max({std::abs(closed.a2 - solved.a2), std::abs(closed.a3 - solved.a3),
                                         std::abs(closed.a4 - solved.a4)});
    const cplx h = h22(closed);

    if (g.json) {
        json out{{"alpha", alpha}, {"gamma", gamma}, {"c", to_json(c)},
                 {"closed_form", to_json(closed)}, {"solver", to_json(solved)},
                 {"max_discrepancy", discrepancy}, {"h22", to_json(h)}, {"abs_h22", std::abs(h)},
                 {"bound", bound(p)}, {"in_region", in_theorem_region(p)}};
        std::cout << out.dump() << '\n';
        return exit_ok;
    }
    print_line("a2 (closed form)", fmt_complex(closed.a2));
    print_line("a3 (closed form)", fmt_complex(closed.a3));
    print_line("a4 (closed form)", fmt_complex(closed.a4));
    print_line("a2 (solver)", fmt_complex(solved.a2));
    print_line("a3 (solver)", fmt_complex(solved.a3));
    print_line("a4 (solver)", fmt_complex(solved.a4));
    print_line("max_discrepancy", format_real(discrepancy));
    print_line("H2(2)", fmt_complex(h));
    print_line("|H2(2)|", format_real(std::abs(h)));
    print_line("bound", format_real(bound(p)));
    return exit_ok;
}

json report_json(const class_params& p, const search_config& cfg, const search_report& r)
{
    return {
        {"alpha", p.alpha()},
        {"gamma", p.gamma()},
        {"config", {{"restarts", cfg.restarts}, {"max_iterations", cfg.max_iterations},
                    {"tolerance", cfg.tolerance}, {"seed", cfg.seed}}},
        {"best_schur", {{"g0", to_json(r.best_schur.g0)}, {"g1", to_json(r.best_schur.g1)},
                        {"g2", to_json(r.best_schur.g2)}}},
        {"best_coeffs", to_json(r.best_coeffs)},
        {"best_triple", to_json(r.best_triple)},
        {"attained", r.attained},
        {"theoretical", r.theoretical},
        {"gap", r.gap},
        {"in_region", r.in_region},
        {"exploratory", !r.in_region},
        {"iterations_used", r.iterations_used},
        {"restarts_converged", r.restarts_converged},
    };
}

int run_search(const global_options& g, double alpha, double gamma, std::size_t restarts, std::size_t iterations)
{
    const class_params p = make_params(alpha, gamma);
    search_config cfg;
    cfg.restarts = restarts;
    cfg.max_iterations = iterations;
    cfg.tolerance = g.tolerance;
    cfg.seed = g.seed;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    const search_report r = maximize_h22(p, cfg);
    std::cout << report_json(p, cfg, r).dump() << '\n';
    if (r.in_region && r.gap < -1e-8) {
        std::cerr << "error: attained value exceeds the bound inside the region (gap " << format_real(r.gap) << ")\n";
        return exit_bound_violation;
    }
    if (r.in_region && r.gap > 1e-5) {
        std::cerr << "warning: search stopped short of the bound (gap " << format_real(r.gap) << ")\n";
    }
    return exit_ok;
}

int run_scan(const global_options& g, const std::string& alpha_spec, const std::string& gamma_spec, bool with_search,
             std::size_t restarts, std::size_t iterations)
{
    real_range range;
    std::optional<double> fixed_gamma;
    try {
        range = parse_range(alpha_spec);
        if (gamma_spec != "max") {
            fixed_gamma = parse_real(gamma_spec);
        }
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }

    search_config cfg;
    cfg.restarts = restarts;
    cfg.max_iterations = iterations;
    cfg.tolerance = g.tolerance;
    cfg.seed = g.seed;

    // Validate every row before writing anything so a bad range never
    // produces a partial table.
    std::vector<class_params> rows;
    for (std::size_t k = 0; k < range.count(); ++k) {
        const double a = range.at(k);
        rows.push_back(make_params(a, fixed_gamma ? *fixed_gamma : region_gamma_max(a)));
    }
    if (with_search) {
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
    }

    std::cout << "alpha,gamma,in_region,bound,attained,gap,A,B,nu1,ineq30\n";
    for (const class_params& p : rows) {
        const auto q = compute_intermediates(p);
        std::string attained;
        std::string gap;
        if (with_search) {
            const search_report r = maximize_h22(p, cfg);
            attained = format_real(r.attained);
            gap = format_real(r.gap);
        }
        std::cout << format_real(p.alpha()) << ',' << format_real(p.gamma()) << ','
                  << boolstr(in_theorem_region(p)) << ',' << format_real(bound(p)) << ',' << attained << ','
                  << gap << ',' << format_real(q.quad) << ',' << format_real(q.quartic) << ','
                  << format_real(q.nu1) << ',' << boolstr(endpoint_dominance_holds(p)) << '\n';
    }
    return exit_ok;
}

int run_phi(const global_options& g, double step)
{
    margin_certificate cert;
    try {
        cert = certify_margin(step);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    const char* verdict = cert.pass() ? "PASS" : "FAIL";
    if (g.json) {
        json out{{"step", cert.step}, {"points", cert.points}, {"min_phi1", cert.min_value},
                 {"argmin_t", cert.argmin}, {"max_phi1_second", cert.max_d2},
                 {"phi1_prime_at_0", cert.d1_at_0}, {"phi1_prime_at_2", cert.d1_at_2},
                 {"phi1_prime_sign_changes", cert.d1_sign_changes},
                 {"nonnegative", cert.nonnegative()}, {"concave", cert.concave()},
                 {"single_peak", cert.single_peak()}, {"verdict", verdict}};
        std::cout << out.dump() << '\n';
    } else {
        print_line("step", format_real(cert.step));
        print_line("min phi1", format_real(cert.min_value) + " at t=" + format_real(cert.argmin) +
                                   (cert.nonnegative() ? "  PASS" : "  FAIL"));
        print_line("max phi1''", format_real(cert.max_d2) + (cert.concave() ? "  PASS" : "  FAIL"));
        print_line("phi1'(0)", format_real(cert.d1_at_0));
        print_line("phi1'(2)", format_real(cert.d1_at_2));
        print_line("phi1' sign changes", std::to_string(cert.d1_sign_changes) + (cert.single_peak() ? "  PASS" : "  FAIL"));
        print_line("verdict", verdict);
    }
    return cert.pass() ? exit_ok : exit_check_failed;
}

int run_selftest_cmd(const global_options& g)
{
    selftest_options opt;
    opt.seed = g.seed;
    const auto results = run_selftest(opt);
    if (g.json) {
        json suites = json::array();
        for (const auto& r : results) {
            suites.push_back({{"name", r.name}, {"passed", r.passed}, {"worst", r.worst}, {"detail", r.detail}});
        }
        std::cout << json{{"suites", suites}, {"passed", all_passed(results)}}.dump() << '\n';
    } else {
        for (const auto& r : results) {
            std::printf("%s %-22s %s  (%s)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                        format_real(r.worst).c_str(), r.detail.c_str());
        }
    }
    return all_passed(results) ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Second Hankel determinant workbench"};
    app.require_subcommand(1);
    app.fallthrough();

    global_options g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_option("--seed", g.seed, "Seed for randomized commands");
    app.add_option("--tolerance", g.tolerance, "Search convergence tolerance");

    double alpha = 0.0;
    double gamma = 0.0;

    auto* bound_cmd = app.add_subcommand("bound", "Sharp bound, region membership and proof intermediates");
    bound_cmd->add_option("--alpha", alpha)->required();
    bound_cmd->add_option("--gamma", gamma)->required();

    std::string c_literal;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "Coefficients a2..a4 and H2(2) for given c1..c3");
    coeffs_cmd->add_option("--alpha", alpha)->required();
    coeffs_cmd->add_option("--gamma", gamma)->required();
    coeffs_cmd->add_option("--c", c_literal, "c1,c2,c3 as re+imi literals")->required();

    std::size_t restarts = 64;
    std::size_t iterations = 500;
    auto* search_cmd = app.add_subcommand("search", "Maximize |H2(2)| over the Schwarz class");
    search_cmd->add_option("--alpha", alpha)->required();
    search_cmd->add_option("--gamma", gamma)->required();
    search_cmd->add_option("--restarts", restarts);
    search_cmd->add_option("--max-iterations", iterations);

    std::string alpha_range;
    std::string gamma_mode = "max";
    bool with_search = false;
    auto* scan_cmd = app.add_subcommand("scan", "CSV table over an alpha range");
    scan_cmd->add_option("--alpha", alpha_range, "lo:hi:step")->required();
    scan_cmd->add_option("--gamma", gamma_mode, "fixed value or 'max'");
    scan_cmd->add_flag("--search", with_search, "Run the maximizer for each row");
    scan_cmd->add_option("--restarts", restarts);
    scan_cmd->add_option("--max-iterations", iterations);

    double step = 1e-4;
    auto* phi_cmd = app.add_subcommand("phi", "Grid certification of the margin polynomial");
    phi_cmd->add_option("--step", step);

    auto* selftest_cmd = app.add_subcommand("selftest", "Reduced invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*bound_cmd) {
            return run_bound(g, alpha, gamma);
        }
        if (*coeffs_cmd) {
            return run_coeffs(g, alpha, gamma, c_literal);
        }
        if (*search_cmd) {
            return run_search(g, alpha, gamma, restarts, iterations);
        }
        if (*scan_cmd) {
            return run_scan(g, alpha_range, gamma_mode, with_search, restarts, iterations);
        }
        if (*phi_cmd) {
            return run_phi(g, step);
        }
        if (*selftest_cmd) {
            return run_selftest_cmd(g);
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

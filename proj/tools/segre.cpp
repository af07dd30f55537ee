#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "segre/checks.hpp"
#include "segre/fit.hpp"
#include "segre/table.hpp"

namespace {

using namespace segre;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

struct SuiteStats {
    int run = 0;
    int failed = 0;

    void record(const CheckResult& r) {
        ++run;
        if (!r.ok()) {
            ++failed;
            std::cout << "FAIL " << r.failure->describe() << "\n";
        }
    }
    void record(bool ok, const std::string& what) {
        ++run;
        if (!ok) {
            ++failed;
            std::cout << "FAIL " << what << "\n";
        }
    }
    int finish(const std::string& suite) const {
        std::cout << suite << ": " << (run - failed) << "/" << run << " checks passed\n";
        return failed ? 1 : 0;
    }
};

int cmd_integrals(const RunConfig& cfg, const std::string& output_path) {
    IntegralTable table = compute_table(cfg);
    const std::string rendered = render_table(table);
    if (output_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << output_path << "\n";
            return 1;
        }
        out << rendered;
    }
    return 0;
}

int verify_vanishing(int n_max, int threads) {
    OpConfig cfg;
    cfg.threads = threads;
    IntegralEngine engine(cfg);
    SuiteStats stats;
    for (int n = 1; n <= n_max; ++n) {
        const DPoly poly = engine.integral_poly(n);
        const bool ok = poly.eval_at(Rational(3)).is_zero();
        stats.record(ok, "vanishing n=" + std::to_string(n) + ": value " +
                             poly.eval_at(Rational(3)).to_string() +
                             " (poly " + poly.to_string() + ")");
    }
    return stats.finish("vanishing");
}

int verify_main_theorem(int k_max, int m_max, int n_max) {
    SuiteStats stats;
    for (int k = 1; k <= k_max; ++k) {
        for (int m = 1; m <= m_max; ++m) {
            for (int n = k; n <= n_max; ++n) {
                stats.record(check_main_theorem(k, m, n));
            }
        }
    }
    return stats.finish("main-theorem");
}

int verify_wkmain(int k_max, int m_max, int n_max) {
    SuiteStats stats;
    for (int k = 0; k <= k_max; ++k) {
        for (int m = 1; m <= m_max; ++m) {
            for (int n = 1; n <= n_max; ++n) {
                stats.record(check_wkmain(k, m, n));
            }
        }
    }
    return stats.finish("wkmain");
}

int verify_xi(int k_max, int m_max, int n_max, int prefix_len_max) {
    SuiteStats stats;
    std::vector<std::vector<int>> prefixes = {{}};
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (static_cast<int>(prefixes[i].size()) >= prefix_len_max) continue;
        for (int j = 0; j <= 3; ++j) {
            auto q = prefixes[i];
            q.push_back(j);
            prefixes.push_back(std::move(q));
        }
    }
    for (int k = 0; k <= k_max; ++k) {
        for (int m = 1; m <= m_max; ++m) {
            for (int n = 1; n <= n_max; ++n) {
                for (const auto& p : prefixes) {
                    stats.record(check_xi(k, m, n, p));
                }
            }
        }
    }
    return stats.finish("xi");
}

int verify_chains(int k_max, int m_max, int n_max) {
    SuiteStats stats;
    for (int k = 1; k <= k_max; ++k) {
        for (int r = k + 1; r <= 3 * k; ++r) {
            for (int m = 0; m <= m_max; ++m) {
                for (int n = k; n <= n_max; ++n) {
                    stats.record(check_chain_vanishing(k, r, m, n));
                }
            }
        }
    }
    return stats.finish("chains");
}

int verify_identities(int combi_k_max, int combi2_k_max) {
    SuiteStats stats;
    for (int k = 1; k <= combi_k_max; ++k) {
        for (int M = 0; M < k; ++M) {
            stats.record(lemma_combi(k, M),
                         "combi k=" + std::to_string(k) + " M=" + std::to_string(M));
        }
    }
    const std::vector<std::pair<std::string, std::function<Rational(int)>>> thetas = {
        {"1", [](int) { return Rational(1); }},
        {"a+1", [](int a) { return Rational(a + 1); }},
        {"a^2", [](int a) { return Rational(static_cast<long>(a) * a); }},
    };
    std::vector<Rational> ns;
    for (int i = 0; i <= combi2_k_max; ++i) ns.push_back(Rational(i));
    ns.push_back(Rational(1, 2));
    ns.push_back(Rational(3, 2));
    for (int k = 0; k <= combi2_k_max; ++k) {
        for (const Rational& N : ns) {
            for (int m = 0; m <= 5; ++m) {
                for (int a = 0; a <= 3; ++a) {
                    for (const auto& [name, fn] : thetas) {
                        stats.record(lemma_combi2(a, N, m, k, fn),
                                     "combi2 k=" + std::to_string(k) + " N=" + N.to_string() +
                                         " m=" + std::to_string(m) + " a=" +
                                         std::to_string(a) + " theta=" + name);
                    }
                }
            }
        }
    }
    return stats.finish("identities");
}

int series_closed_form(const std::string& c2, const std::string& c1sq,
                       const std::string& c1k, int order) {
    const PowerSeries s =
        rank_zero_closed_form(Rational::from_string(c2), Rational::from_string(c1sq),
                        Rational::from_string(c1k), order);
    for (int i = 0; i <= order; ++i) {
        std::cout << (i ? ", " : "") << s.coeff(i).to_string();
    }
    std::cout << "\n";
    return 0;
}

int series_compare(int d, int order, int threads) {
    OpConfig cfg;
    cfg.d = DPoly(Rational(d));
    cfg.threads = threads;
    IntegralEngine engine(cfg);
    const PowerSeries closed =
        rank_zero_closed_form(Rational(static_cast<long>(d) * d), Rational(static_cast<long>(d) * d),
                        Rational(-3L * d), order);
    bool all_equal = true;
    for (int n = 0; n <= order; ++n) {
        const Rational lhs = engine.integral_poly(n).eval_at(Rational(d));
        const Rational rhs = closed.coeff(n);
        const bool ok = lhs == rhs;
        all_equal = all_equal && ok;
        std::cout << "n=" << n << ": recursion " << lhs.to_string() << ", closed form "
                  << rhs.to_string() << (ok ? "" : "  << MISMATCH") << "\n";
    }
    std::cout << (all_equal ? "equal\n" : "MISMATCH\n");
    return all_equal ? 0 : 1;
}

int series_fit(const std::string& d_list, int order) {
    const std::vector<int> ds = parse_int_list(d_list);
    IntegralEngine engine;
    const auto value = [&](int n, int d) {
        return engine.integral_poly(n).eval_at(Rational(d));
    };
    const UniversalFit fit = fit_universal_exponents(ds, order, value);
    std::cout << "Q(z) = " << fit.q.to_string() << "\n";
    std::cout << "L(z) = " << fit.l.to_string() << "\n";
    std::cout << "C(z) = " << fit.c.to_string() << "\n";

    bool ok = true;
    if (fit.l != fit.q.scaled(Rational(-3))) {
        std::cout << "FAIL: L != -3*Q\n";
        ok = false;
    }
    if (fit.c != PowerSeries(SeriesVar::z, order)) {
        std::cout << "FAIL: C != 0\n";
        ok = false;
    }
    // Q against the elementary closed form
    PowerSeries one_plus_t(SeriesVar::t, order);
    one_plus_t.set_coeff(0, Rational(1));
    one_plus_t.set_coeff(1, Rational(1));
    PowerSeries one_plus_2t(SeriesVar::t, order);
    one_plus_2t.set_coeff(0, Rational(1));
    one_plus_2t.set_coeff(1, Rational(2));
    const PowerSeries q_target =
        (one_plus_t.log().scaled(Rational(-1)) + one_plus_2t.log().scaled(Rational(1, 2)))
            .compose(t_of_z(order));
    if (fit.q != q_target) {
        std::cout << "FAIL: Q != -log(1+t) + (1/2)log(1+2t)\n";
        ok = false;
    }
    std::cout << (ok ? "fit consistent: L = -3Q, C = 0\n" : "fit inconsistent\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Segre integrals of rank-zero tautological classes on "
                 "Hilbert schemes of plane points"};
    app.require_subcommand(1);

    // integrals
    auto* integrals = app.add_subcommand("integrals", "Compute the integral table");
    RunConfig run;
    std::string d_mode = "symbolic";
    std::string format = "text";
    std::string output_path;
    integrals->add_option("--n-max", run.n_max, "Largest number of points")->required();
    integrals->add_option("--d", d_mode,
                          "'symbolic' or a comma list of integer curve degrees");
    integrals->add_option("--threads", run.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    integrals->add_flag("--pruning,!--no-pruning", run.pruning,
                        "Dimension-vanishing pruning (default on)");
    integrals->add_flag("--theta1-rule,!--no-theta1-rule", run.theta1_rule,
                        "Kill index-1 theta factors (default off)");
    integrals->add_option("--cache-dir", run.cache_dir,
                          "Persistent cache directory (SEGRE_CACHE_DIR also honored)");
    integrals->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    integrals->add_option("--output", output_path, "Write the table to a file");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    int v_n_max = 4, v_threads = 1;
    auto* vanishing = verify->add_subcommand("vanishing", "Integrals vanish at d = 3");
    vanishing->add_option("--n-max", v_n_max, "Largest n");
    vanishing->add_option("--threads", v_threads, "Worker threads")
        ->check(CLI::PositiveNumber);

    int mt_k = 2, mt_m = 4, mt_n = 4;
    auto* main_thm =
        verify->add_subcommand("main-theorem", "Weight-k chain sums are (d-3)-divisible");
    main_thm->add_option("--k-max", mt_k, "Largest chain length");
    main_thm->add_option("--m-max", mt_m, "Largest S-index");
    main_thm->add_option("--n-max", mt_n, "Largest level");

    int wk_k = 2, wk_m = 6, wk_n = 5;
    auto* wkmain = verify->add_subcommand(
        "wkmain", "Special chain combination, incl. the d(d-3) refinement");
    wkmain->add_option("--k-max", wk_k, "Largest k");
    wkmain->add_option("--m-max", wk_m, "Largest S-index");
    wkmain->add_option("--n-max", wk_n, "Largest level");

    int xi_k = 1, xi_m = 5, xi_n = 5, xi_prefix = 1;
    auto* xi = verify->add_subcommand("xi", "Commutator combination divisibility");
    xi->add_option("--k-max", xi_k, "Largest degree parameter");
    xi->add_option("--m-max", xi_m, "Largest S-index");
    xi->add_option("--n-max", xi_n, "Largest level");
    xi->add_option("--prefix-len-max", xi_prefix, "Largest Ad prefix length");

    int ch_k = 3, ch_m = 6, ch_n = 5;
    auto* chains =
        verify->add_subcommand("chains", "Over-weighted chains vanish identically");
    chains->add_option("--k-max", ch_k, "Largest chain length");
    chains->add_option("--m-max", ch_m, "Largest S-index");
    chains->add_option("--n-max", ch_n, "Largest level");

    int id_combi = 10, id_combi2 = 3;
    auto* identities =
        verify->add_subcommand("identities", "Combinatorial identities, brute force");
    identities->add_option("--combi-k-max", id_combi, "Binomial-sum identity bound");
    identities->add_option("--combi2-k-max", id_combi2, "Product identity bound");

    // series
    auto* series = app.add_subcommand("series", "Closed-form generating series");
    series->require_subcommand(1);
    std::string s_c2 = "0", s_c1sq = "0", s_c1k = "0", s_dlist = "1,2,4,5";
    int s_order = 5, s_d = 2, s_threads = 1;
    auto* closed = series->add_subcommand("closed-form", "Print the closed-form series");
    closed->add_option("--c2", s_c2, "c2 of the class")->required();
    closed->add_option("--c1sq", s_c1sq, "c1^2 of the class")->required();
    closed->add_option("--c1k", s_c1k, "c1.K of the class")->required();
    closed->add_option("--order", s_order, "Truncation order")->check(CLI::PositiveNumber);

    auto* compare =
        series->add_subcommand("compare", "Recursion integrals vs. closed form");
    compare->add_option("--d", s_d, "Curve degree")->required();
    compare->add_option("--order", s_order, "Truncation order")->check(CLI::PositiveNumber);
    compare->add_option("--threads", s_threads, "Worker threads")
        ->check(CLI::PositiveNumber);

    auto* fit = series->add_subcommand("fit", "Fit the universal log-combinations");
    fit->add_option("--d-list", s_dlist, "Comma list of curve degrees");
    fit->add_option("--order", s_order, "Truncation order")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, bad parameters exit 2
    }

    try {
        if (*integrals) {
            if (run.cache_dir.empty()) {
                if (const char* env = std::getenv("SEGRE_CACHE_DIR")) run.cache_dir = env;
            }
            if (d_mode != "symbolic") {
                run.fixed_d = parse_int_list(d_mode);
                if (run.fixed_d.empty()) {
                    std::cerr << "--d expects 'symbolic' or a comma list of integers\n";
                    return 2;
                }
            }
            run.format = *parse_format(format);
            return cmd_integrals(run, output_path);
        }
        if (*vanishing) return verify_vanishing(v_n_max, v_threads);
        if (*main_thm) return verify_main_theorem(mt_k, mt_m, mt_n);
        if (*wkmain) return verify_wkmain(wk_k, wk_m, wk_n);
        if (*xi) return verify_xi(xi_k, xi_m, xi_n, xi_prefix);
        if (*chains) return verify_chains(ch_k, ch_m, ch_n);
        if (*identities) return verify_identities(id_combi, id_combi2);
        if (*closed) return series_closed_form(s_c2, s_c1sq, s_c1k, s_order);
        if (*compare) return series_compare(s_d, s_order, s_threads);
        if (*fit) return series_fit(s_dlist, s_order);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

// Command-line front end: verify / rates / simulate / sweep / report.
// Exit codes: 0 success, 1 verification or assertion failure, 2 usage or
// capacity error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>

#include "holelab/ensemble.hpp"
#include "holelab/exact.hpp"
#include "holelab/indices.hpp"
#include "holelab/montecarlo.hpp"
#include "holelab/quadrature.hpp"
#include "holelab/rates.hpp"
#include "holelab/record.hpp"
#include "holelab/rng.hpp"
#include "holelab/zeros.hpp"

namespace fs = std::filesystem;
using holelab::record::Json;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HOLE_LAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw std::invalid_argument("HOLE_LAB_SEED is not an integer");
        }
    }
    return 1;
}

long long parse_trials(const std::string& s) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size() || !(v >= 1) || v > 9.2e18 || v != std::floor(v))
            throw std::invalid_argument("");
        return static_cast<long long>(v);
    } catch (...) {
        throw std::invalid_argument("--trials must be a positive integer (1e6 ok)");
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty N list");
    return out;
}

void emit(const Json& record, const std::string& out_dir, const std::string& stem) {
    std::cout << record.dump(2) << std::endl;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ofstream f(fs::path(out_dir) / (stem + ".json"));
        f << record.dump(2) << '\n';
    }
}

// Deterministic distinct integers for one verification instance.
std::vector<long long> distinct_values(std::uint64_t seed, std::uint64_t instance,
                                       std::uint64_t axis, int count, int span) {
    std::vector<long long> pool;
    pool.reserve(2 * span + 1);
    for (int v = -span; v <= span; ++v) pool.push_back(v);
    std::vector<long long> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const auto bits = holelab::rng::threefry2x64(
            seed, (instance << 16) ^ axis, static_cast<std::uint64_t>(i), 0x5eed);
        const size_t pick = bits.lo % pool.size();
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<long long>(pick));
    }
    return out;
}

holelab::exact::XiAssignment random_xi(int m, int N, std::uint64_t seed,
                                       std::uint64_t instance) {
    holelab::exact::XiAssignment xi;
    const int span = std::max(9, N + 3);
    for (int i = 0; i < m; ++i)
        xi.values.push_back(distinct_values(seed, instance, i, N + 1, span));
    return xi;
}

// ---- verify scopes ---------------------------------------------------------

bool verify_indices(Json& out, int m_max, int n_max) {
    using namespace holelab::indices;
    bool ok = true;
    Json checks = Json::array();

    for (int m = 1; m <= std::min(m_max, 5); ++m) {
        for (int N = 0; N <= n_max; ++N) {
            for (int axis = 1; axis <= m; ++axis) {
                long long sum = 0;
                for (int v = 0; v <= N; ++v) sum += ordered_slice_count(m, N, axis, v);
                if (sum != binom_ll(N + m, m)) {
                    ok = false;
                    checks.push_back({{"check", "partition"},
                                      {"m", m},
                                      {"N", N},
                                      {"axis", axis},
                                      {"pass", false}});
                }
            }
        }
    }
    checks.push_back({{"check", "partition"},
                      {"grid", "m<=" + std::to_string(std::min(m_max, 5)) +
                                   ", N<=" + std::to_string(n_max)},
                      {"pass", ok}});

    bool size_ok = true, sigma_ok = true;
    for (int m = 1; m <= std::min(m_max, 3); ++m) {
        for (int N = 0; N <= std::min(n_max, 8); ++N) {
            const auto lam = enumerate_multi(m, N);
            const auto gam = enumerate_ordered(m, N);
            if (static_cast<long long>(lam.size()) != binom_ll(N + m, m) ||
                lam.size() != gam.size())
                size_ok = false;
            std::vector<MultiIndex> image;
            image.reserve(gam.size());
            for (const auto& J : gam) image.push_back(ordered_to_multi(J));
            auto sorted = image;
            std::sort(sorted.begin(), sorted.end(),
                      [](const MultiIndex& a, const MultiIndex& b) { return a.k < b.k; });
            if (std::unique(sorted.begin(), sorted.end()) != sorted.end())
                sigma_ok = false;
            for (const auto& K : image)
                if (std::find(lam.begin(), lam.end(), K) == lam.end()) sigma_ok = false;
        }
    }
    checks.push_back({{"check", "enumeration sizes"}, {"pass", size_ok}});
    checks.push_back({{"check", "difference map bijective"}, {"pass", sigma_ok}});
    ok = ok && size_ok && sigma_ok;

    bool tau_ok = true;
    for (int p = 1; p <= 8; ++p) {
        for (int N : {p - 1, 17, 100, 200}) {
            if (N < p - 1) continue;
            const auto a = interleaved_assignment(N, p);
            if (!a.is_permutation()) tau_ok = false;
            for (int j = 0; j <= N; ++j)
                if (a.displacement(j) > 2LL * p * p) tau_ok = false;
        }
    }
    checks.push_back({{"check", "interleaving permutation and bound"}, {"pass", tau_ok}});
    ok = ok && tau_ok;

    out["indices"] = checks;
    return ok;
}

bool verify_detw(Json& out, int m_flag, int n_flag, int count, std::uint64_t seed,
                 int dim_limit) {
    namespace ex = holelab::exact;
    std::vector<std::pair<int, int>> grid;
    if (m_flag > 0 && n_flag > 0) {
        grid.emplace_back(m_flag, n_flag);
    } else if (m_flag > 0) {
        grid.emplace_back(m_flag, 6);
    } else {
        for (int N = 0; N <= 6; ++N) grid.emplace_back(1, N);
        for (int N = 0; N <= 4; ++N) grid.emplace_back(2, N);
        for (int N = 0; N <= 3; ++N) grid.emplace_back(3, N);
    }
    bool ok = true;
    Json checks = Json::array();
    for (auto [m, N] : grid) {
        for (int inst = 0; inst < count; ++inst) {
            const auto xi = random_xi(m, N, seed, static_cast<std::uint64_t>(inst));
            const auto rep = ex::verify_det_product(m, N, xi, dim_limit);
            const bool pass = rep.equal && rep.degree_identity;
            ok = ok && pass;
            Json j{{"m", m}, {"N", N}, {"instance", inst}, {"pass", pass},
                   {"sign", rep.sign}};
            if (!pass) {
                j["lhs"] = rep.lhs.get_str();
                j["rhs"] = rep.rhs.get_str();
                j["degree_identity"] = rep.degree_identity;
            }
            checks.push_back(std::move(j));
        }
    }
    out["detw"] = checks;
    return ok;
}

bool verify_coefficient(Json& out, int m_flag, int n_flag) {
    namespace ex = holelab::exact;
    std::vector<std::pair<int, int>> grid;
    if (m_flag > 0 && n_flag > 0) {
        grid.emplace_back(m_flag, n_flag);
    } else {
        for (int N = 1; N <= 7; ++N) grid.emplace_back(1, N);
        grid.emplace_back(2, 1);
        grid.emplace_back(2, 2);
        grid.emplace_back(3, 1);
    }
    bool ok = true;
    Json checks = Json::array();
    for (auto [m, N] : grid) {
        const auto lead = ex::leading_coefficient(m, N);
        const bool pass = std::abs(lead.coefficient) == 1 && lead.unique_match &&
                          lead.matches_difference_map;
        ok = ok && pass;
        checks.push_back({{"m", m},
                          {"N", N},
                          {"coefficient", lead.coefficient},
                          {"unique", lead.unique_match},
                          {"is_difference_map", lead.matches_difference_map},
                          {"pass", pass}});
    }
    out["coefficient"] = checks;
    return ok;
}

bool verify_detsigma(Json& out, const std::vector<int>& n_list,
                     const std::vector<double>& rhos) {
    bool ok = true;
    Json checks = Json::array();
    for (int N : n_list) {
        for (double rho : rhos) {
            const auto res = holelab::rates::covariance_logdet_circle(N, rho);
            const double scale =
                std::max(1.0, std::fabs((N + 1.0) * std::log(N + 1.0)));
            const bool identity_pass = std::fabs(res.identity_residual) < 1e-6 * scale;
            bool matrix_pass = true;
            double matrix_gap = 0;
            if (res.via_matrix) {
                matrix_gap = *res.via_matrix - res.via_product;
                matrix_pass =
                    std::fabs(matrix_gap) <
                    1e-6 * std::max(1.0, std::fabs(res.via_product));
            }
            ok = ok && identity_pass && matrix_pass;
            Json j{{"N", N},
                   {"rho", rho},
                   {"via_product", res.via_product},
                   {"lattice_q", res.lattice_q},
                   {"identity_residual", res.identity_residual},
                   {"pass", identity_pass && matrix_pass}};
            if (res.via_matrix) {
                j["via_matrix"] = *res.via_matrix;
                j["matrix_gap"] = matrix_gap;
            }
            checks.push_back(std::move(j));
        }
    }
    out["detsigma"] = checks;
    return ok;
}

// ---- sweep injection -------------------------------------------------------

std::function<double(int)> parse_injection(const std::string& expr) {
    // Documented synthetic form: exp(-C*N^P)
    static const std::regex pat(
        R"(^\s*exp\(\s*-\s*([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)\s*\*\s*N\^([0-9]+)\s*\)\s*$)");
    std::smatch mt;
    if (!std::regex_match(expr, mt, pat))
        throw std::invalid_argument("--inject expects the form exp(-C*N^P)");
    const double c = std::stod(mt[1].str());
    const int p = std::stoi(mt[2].str());
    return [c, p](int N) { return std::exp(-c * std::pow(static_cast<double>(N), p)); };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hole-probability laboratory for Gaussian random polynomials"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "flat key=value configuration file");

    std::string out_dir;
    app.add_option("--out", out_dir, "artifact directory")->configurable(true);

    // verify ----------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run exact-identity suites");
    cmd_verify->configurable();
    std::string scope = "all";
    int v_m = 0, v_n = 0, v_count = 20, v_dim_limit = 2000;
    std::uint64_t v_seed_flag = 0;
    bool v_seed_given = false;
    std::vector<int> v_sigma_n{40, 50, 100, 200};
    std::vector<double> v_sigma_rho{0.5, 0.9};
    cmd_verify->add_option("--scope", scope, "indices|detw|coefficient|detsigma|all")
        ->check(CLI::IsMember({"indices", "detw", "coefficient", "detsigma", "all"}));
    cmd_verify->add_option("--m", v_m, "dimension (detw/coefficient)");
    cmd_verify->add_option("--n", v_n, "degree (detw/coefficient)");
    cmd_verify->add_option("--count", v_count, "random assignments per (m, N)");
    cmd_verify->add_option("--dim-limit", v_dim_limit, "matrix dimension cap");
    cmd_verify->add_option("--sigma-n", v_sigma_n, "detsigma degree list");
    cmd_verify->add_option("--sigma-rho", v_sigma_rho, "detsigma radius list");
    cmd_verify->add_option("--seed", v_seed_flag, "assignment seed")
        ->each([&](const std::string&) { v_seed_given = true; });

    // rates -----------------------------------------------------------------
    auto* cmd_rates = app.add_subcommand("rates", "deterministic decay constants");
    cmd_rates->configurable();
    int r_m = 1;
    double r_r = 1.0, r_alpha = 0.0, r_tol = 1e-8;
    int r_lattice_n = 0;
    bool r_exact = false;
    cmd_rates->add_option("--m", r_m, "dimension")->required();
    cmd_rates->add_option("--r", r_r, "radius")->required();
    cmd_rates->add_option("--alpha", r_alpha, "truncation level for the partial sum");
    cmd_rates->add_option("--lattice-n", r_lattice_n, "also report lattice sums at N");
    cmd_rates->add_flag("--exact", r_exact,
                        "cross-check lattice sums with exact integers (N <= 200)");
    cmd_rates->add_option("--tol", r_tol, "quadrature tolerance");

    // simulate ----------------------------------------------------------------
    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo estimate at one (m,N,r,k)");
    cmd_sim->configurable();
    int s_m = 1, s_n = 1, s_k = 0, s_workers = 0, s_grid = 16;
    double s_r = 1.0;
    std::string s_trials, s_csv;
    std::uint64_t s_seed = 0, s_offset = 0;
    bool s_seed_given = false;
    cmd_sim->add_option("--m", s_m, "dimension (1 or 2)")->required();
    cmd_sim->add_option("--n", s_n, "degree")->required();
    cmd_sim->add_option("--r", s_r, "radius")->required();
    cmd_sim->add_option("--k", s_k, "allowed zeros (m=1)");
    cmd_sim->add_option("--trials", s_trials, "trial count (1e6 ok)")->required();
    cmd_sim->add_option("--seed", s_seed, "master seed")
        ->each([&](const std::string&) { s_seed_given = true; });
    cmd_sim->add_option("--workers", s_workers, "worker threads (0 = auto)");
    cmd_sim->add_option("--trial-offset", s_offset, "first trial index (resume)");
    cmd_sim->add_option("--grid-res", s_grid, "m=2 slice resolution");
    cmd_sim->add_option("--csv", s_csv, "campaign CSV path (appended)");

    // sweep -------------------------------------------------------------------
    auto* cmd_sweep = app.add_subcommand("sweep", "estimate across N and fit the slope");
    cmd_sweep->configurable();
    int w_m = 1, w_k = 0, w_workers = 0;
    double w_r = 1.0;
    std::string w_nlist, w_trials = "0", w_inject;
    std::uint64_t w_seed = 0;
    bool w_seed_given = false;
    cmd_sweep->add_option("--m", w_m, "dimension")->required();
    cmd_sweep->add_option("--r", w_r, "radius")->required();
    cmd_sweep->add_option("--k", w_k, "allowed zeros");
    cmd_sweep->add_option("--n", w_nlist, "comma-separated degree list")->required();
    cmd_sweep->add_option("--trials", w_trials, "trials per N");
    cmd_sweep->add_option("--seed", w_seed, "master seed")
        ->each([&](const std::string&) { w_seed_given = true; });
    cmd_sweep->add_option("--workers", w_workers, "worker threads (0 = auto)");
    cmd_sweep->add_option("--inject", w_inject,
                          "synthetic probability exp(-C*N^P), skips sampling");

    // report ------------------------------------------------------------------
    auto* cmd_report = app.add_subcommand("report", "merge campaign CSVs into one fit");
    cmd_report->configurable();
    std::vector<std::string> rep_files;
    cmd_report->add_option("files", rep_files, "campaign CSV files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_verify) {
            const std::uint64_t seed = v_seed_given ? v_seed_flag : default_seed();
            Json results;
            bool ok = true;
            if (scope == "indices" || scope == "all")
                ok &= verify_indices(results, v_m > 0 ? v_m : 5, v_n > 0 ? v_n : 30);
            if (scope == "detw" || scope == "all")
                ok &= verify_detw(results, scope == "all" ? 0 : v_m,
                                  scope == "all" ? 0 : v_n, v_count, seed, v_dim_limit);
            if (scope == "coefficient" || scope == "all")
                ok &= verify_coefficient(results, scope == "all" ? 0 : v_m,
                                         scope == "all" ? 0 : v_n);
            if (scope == "detsigma" || scope == "all")
                ok &= verify_detsigma(results, v_sigma_n, v_sigma_rho);
            results["all_passed"] = ok;
            Json cfg{{"scope", scope}, {"m", v_m},       {"n", v_n},
                     {"count", v_count}, {"seed", seed}, {"dim_limit", v_dim_limit}};
            emit(holelab::record::make_record("verify", cfg, results), out_dir,
                 "verify");
            return ok ? 0 : kExitVerifyFailure;
        }

        if (*cmd_rates) {
            const auto rep = holelab::rates::hole_rate(r_m, r_r);
            Json results{{"m", rep.m},
                         {"r", rep.r},
                         {"alpha0", rep.alpha0},
                         {"simplex_integral", rep.simplex_integral},
                         {"upper_constant", rep.upper_constant}};
            if (rep.restricted_integral)
                results["restricted_integral"] = *rep.restricted_integral;
            if (rep.one_d_rate) results["one_d_rate"] = *rep.one_d_rate;
            if (r_m <= 3)
                results["simplex_integral_quadrature"] =
                    holelab::rates::simplex_integral_quadrature(r_m, r_r, r_tol);
            if (r_lattice_n > 0) {
                const auto q = holelab::rates::lattice_log_sum(r_m, r_lattice_n, r_r);
                const auto rr =
                    holelab::rates::lattice_log_sum_positive(r_m, r_lattice_n, r_r);
                const double npow = std::pow(static_cast<double>(r_lattice_n), r_m + 1);
                results["lattice"] = {
                    {"N", r_lattice_n},
                    {"Q", q.value},
                    {"Q_terms", q.term_count},
                    {"Q_over_Npow", q.value / npow},
                    {"R", rr.value},
                    {"R_terms", rr.term_count},
                    {"R_over_Npow", rr.value / npow}};
                if (r_alpha > 0) {
                    const auto qa = holelab::rates::lattice_log_sum(r_m, r_lattice_n,
                                                                    r_r, r_alpha);
                    results["lattice"]["Q_alpha"] = qa.value;
                    results["lattice"]["Q_alpha_terms"] = qa.term_count;
                }
                if (r_exact) {
                    if (r_lattice_n > 200)
                        throw std::invalid_argument(
                            "--exact supports lattice N <= 200");
                    const auto qe = holelab::rates::lattice_log_sum_exact(
                        r_m, r_lattice_n, r_r);
                    results["lattice"]["Q_exact"] = qe.value;
                    results["lattice"]["Q_exact_gap"] = qe.value - q.value;
                }
            }
            // Human-readable table on stderr; stdout stays machine readable.
            std::cerr << "m=" << rep.m << " r=" << rep.r << "\n"
                      << "  alpha0               " << rep.alpha0 << "\n"
                      << "  simplex integral     " << rep.simplex_integral << "\n"
                      << "  upper constant       " << rep.upper_constant << "\n";
            if (rep.restricted_integral)
                std::cerr << "  restricted integral  " << *rep.restricted_integral
                          << "\n";
            if (rep.one_d_rate)
                std::cerr << "  one-dim rate         " << *rep.one_d_rate << "\n";
            Json cfg{{"m", r_m}, {"r", r_r},   {"alpha", r_alpha},
                     {"lattice_n", r_lattice_n}, {"exact", r_exact}, {"tol", r_tol}};
            emit(holelab::record::make_record("rates", cfg, results), out_dir, "rates");
            return 0;
        }

        if (*cmd_sim) {
            holelab::mc::EstimateConfig cfg;
            cfg.m = s_m;
            cfg.N = s_n;
            cfg.r = s_r;
            cfg.k = s_k;
            cfg.trials = parse_trials(s_trials);
            cfg.master_seed = s_seed_given ? s_seed : default_seed();
            cfg.trial_offset = s_offset;
            cfg.workers = s_workers;
            cfg.grid_res = s_grid;
            const auto est = holelab::mc::estimate_hole_probability(cfg);

            std::string csv_path = s_csv;
            if (csv_path.empty())
                csv_path = (fs::path(out_dir.empty() ? "." : out_dir) / "campaign.csv")
                               .string();
            if (!out_dir.empty()) fs::create_directories(out_dir);
            const bool fresh = !fs::exists(csv_path);
            std::ofstream csv(csv_path, std::ios::app);
            if (fresh) csv << holelab::record::csv_header() << '\n';
            csv << holelab::record::csv_row(est) << '\n';

            Json cfg_j{{"m", s_m},
                       {"N", s_n},
                       {"r", s_r},
                       {"k", s_k},
                       {"trials", cfg.trials},
                       {"seed", cfg.master_seed},
                       {"trial_offset", s_offset},
                       {"workers", s_workers},
                       {"grid_res", s_grid},
                       {"csv", csv_path}};
            emit(holelab::record::make_record("simulate", cfg_j,
                                              holelab::record::to_json(est)),
                 out_dir, "simulate");
            return 0;
        }

        if (*cmd_sweep) {
            const auto n_list = parse_int_list(w_nlist);
            const std::uint64_t seed = w_seed_given ? w_seed : default_seed();
            const std::string dir = out_dir.empty() ? "." : out_dir;
            fs::create_directories(dir);

            std::vector<holelab::mc::SweepPoint> pts;
            if (!w_inject.empty()) {
                const auto p_of_n = parse_injection(w_inject);
                for (int N : n_list) {
                    const double p = p_of_n(N);
                    holelab::mc::SweepPoint pt;
                    pt.N = N;
                    pt.hits = p > 0 ? 1 : 0;
                    pt.p_hat = pt.ci_low = pt.ci_high = p;
                    pts.push_back(pt);
                }
            } else {
                const long long trials = parse_trials(w_trials);
                for (int N : n_list) {
                    holelab::mc::EstimateConfig cfg;
                    cfg.m = w_m;
                    cfg.N = N;
                    cfg.r = w_r;
                    cfg.k = w_k;
                    cfg.trials = trials;
                    cfg.master_seed = seed;
                    cfg.workers = w_workers;
                    const auto est = holelab::mc::estimate_hole_probability(cfg);
                    pts.push_back({N, est.trials, est.hits, est.p_hat, est.ci_low,
                                   est.ci_high, est.boundary_flag_rate});
                }
            }

            holelab::mc::SweepFit fit;
            bool fitted = true;
            std::string refusal;
            try {
                fit = holelab::mc::fit_points(w_m, w_r, w_k, pts);
            } catch (const std::runtime_error& e) {
                // Keep the partial data on disk even when the fit refuses.
                fitted = false;
                refusal = e.what();
                fit.m = w_m;
                fit.r = w_r;
                fit.k = w_k;
                fit.points = pts;
            }
            {
                std::ofstream dat(fs::path(dir) / "sweep.dat");
                dat << holelab::record::sweep_plot_data(fit);
                if (fitted) {
                    std::ofstream svg(fs::path(dir) / "sweep.svg");
                    svg << holelab::record::sweep_svg(fit);
                }
            }
            Json cfg_j{{"m", w_m},     {"r", w_r},
                       {"k", w_k},     {"n_list", n_list},
                       {"trials", w_trials}, {"seed", seed},
                       {"workers", w_workers}, {"inject", w_inject}};
            Json results = holelab::record::to_json(fit);
            if (!fitted) results["fit_refused"] = refusal;
            emit(holelab::record::make_record("sweep", cfg_j, results), out_dir,
                 "sweep");
            if (!fitted) {
                std::cerr << "sweep: " << refusal << '\n';
                return kExitVerifyFailure;
            }
            return 0;
        }

        if (*cmd_report) {
            std::vector<holelab::record::CsvRow> rows;
            for (const auto& f : rep_files) {
                auto part = holelab::record::read_campaign_csv(f);
                rows.insert(rows.end(), part.begin(), part.end());
            }
            const auto fit = holelab::record::merge_and_fit(rows);
            Json cfg_j{{"files", rep_files}};
            emit(holelab::record::make_record("report", cfg_j,
                                              holelab::record::to_json(fit)),
                 out_dir, "report");
            return 0;
        }
    } catch (const holelab::exact::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailure;
    }
    return 0;
}

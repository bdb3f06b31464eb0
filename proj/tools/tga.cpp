// tga: ternary Grassmann algebra toolkit.
// Subcommands: eval, laws, norm, vage-check, berezin, covariance, diff-check.
// Exit codes: 0 success, 1 domain error, 2 parse error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ternary/algebra.hpp"
#include "ternary/berezin.hpp"
#include "ternary/config.hpp"
#include "ternary/covariance.hpp"
#include "ternary/expr.hpp"
#include "ternary/laws.hpp"
#include "ternary/process.hpp"
#include "ternary/serialize.hpp"
#include "ternary/weights.hpp"

namespace {

using namespace ternary;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string read_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream all;
        all << std::cin.rdbuf();
        return all.str();
    }
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw DomainError("cannot open input file: " + arg.substr(1));
        std::ostringstream all;
        all << in.rdbuf();
        return all.str();
    }
    return arg;
}

std::vector<double> parse_grid(const std::string& spec) {
    // "a:b:n" for n uniform points from a to b, else a comma list
    std::vector<double> out;
    if (std::count(spec.begin(), spec.end(), ':') == 2) {
        double a = 0, b = 0;
        int n = 0;
        if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3 || n < 1)
            throw DomainError("bad grid spec: " + spec);
        for (int i = 0; i < n; ++i)
            out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1));
        return out;
    }
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty()) throw DomainError("empty grid spec");
    return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw DomainError("cannot open output file: " + path);
    return file;
}

SpectralDensity density_for(const std::string& spec, const CovarianceOptions& opts,
                            bool announce_calibration) {
    if (spec.rfind("fbm:H=", 0) == 0) {
        double h = std::stod(spec.substr(6));
        CalibratedFbm cal = calibrate_fbm(h, opts);
        if (announce_calibration)
            std::cerr << "# fbm H=" << h << " fitted c_H=" << fmt(cal.fitted_scale)
                      << " analytic candidate=" << fmt(cal.analytic_candidate) << "\n";
        return cal.density;
    }
    return parse_density_spec(spec);
}

int run(int argc, char** argv) {
    CLI::App app{"ternary Grassmann algebra toolkit"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value defaults file");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    std::string eval_expr;
    bool eval_float_mode = false, eval_json = false;
    eval_cmd->add_option("expr", eval_expr, "expression (or - for stdin, @file)")->required();
    eval_cmd->add_flag("--float", eval_float_mode, "double-precision coefficients");
    eval_cmd->add_flag("--json", eval_json, "emit the structured record");

    // laws
    auto* laws_cmd = app.add_subcommand("laws", "run the algebra law suite");
    std::uint64_t seed = 1;
    int trials = 100;
    laws_cmd->add_option("--seed", seed, "generator seed");
    laws_cmd->add_option("--trials", trials, "number of random trials");

    // norm
    auto* norm_cmd = app.add_subcommand("norm", "p-norms and weighted norms");
    std::string norm_input;
    double norm_p = 0.0;
    int norm_hp = 0;
    norm_cmd->add_option("--input", norm_input, "element expression")->required();
    norm_cmd->add_option("--p", norm_p, "p-norm order (real >= 1)");
    norm_cmd->add_option("--hp", norm_hp, "signed weighted-scale index");

    // vage-check
    auto* vage_cmd = app.add_subcommand("vage-check", "product inequality report");
    std::string vage_f, vage_g;
    int vage_p = 2, vage_q = 1, vage_random = 0;
    std::uint64_t vage_seed = 1;
    vage_cmd->add_option("--f", vage_f, "left element expression");
    vage_cmd->add_option("--g", vage_g, "right element expression");
    vage_cmd->add_option("--p", vage_p, "target scale (H_{-p})");
    vage_cmd->add_option("--q", vage_q, "source scale (H_{-q})");
    vage_cmd->add_option("--random", vage_random, "check N random pairs instead");
    vage_cmd->add_option("--seed", vage_seed, "seed for random pairs");

    // berezin
    auto* ber_cmd = app.add_subcommand("berezin", "Berezin integral against a monomial");
    std::string ber_index, ber_input;
    bool ber_float = false;
    ber_cmd->add_option("--index", ber_index, "monomial expression, e.g. e[1]*e[3]^2")->required();
    ber_cmd->add_option("--input", ber_input, "element expression")->required();
    ber_cmd->add_flag("--float", ber_float, "double-precision coefficients");

    // covariance
    auto* cov_cmd = app.add_subcommand("covariance", "covariance kernel tables");
    std::string cov_density = "bm", cov_tgrid, cov_sgrid, cov_mode = "quadrature", cov_out;
    int cov_orders = 0, cov_threads = -1;
    cov_cmd->add_option("--density", cov_density, "bm | fbm:H=<v> | table:<path>");
    cov_cmd->add_option("--t-grid", cov_tgrid, "comma list or a:b:n")->required();
    cov_cmd->add_option("--s-grid", cov_sgrid, "comma list or a:b:n (default: t grid)");
    cov_cmd->add_option("--mode", cov_mode, "quadrature | series");
    cov_cmd->add_option("--orders", cov_orders, "Hermite truncation for series mode");
    cov_cmd->add_option("--out", cov_out, "output CSV path (default stdout)");
    cov_cmd->add_option("--threads", cov_threads, "worker threads (0 = hardware)");

    // diff-check
    auto* diff_cmd = app.add_subcommand("diff-check", "finite-difference derivative report");
    std::string diff_density = "bm";
    double diff_t = 0.5;
    int diff_p = 2, diff_orders = 0;
    diff_cmd->add_option("--density", diff_density, "bm | fbm:H=<v> | table:<path>");
    diff_cmd->add_option("--t", diff_t, "time point");
    diff_cmd->add_option("--p", diff_p, "scale index (H_{-p})");
    diff_cmd->add_option("--orders", diff_orders, "Hermite truncation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Config cfg;
    if (!config_path.empty()) cfg = Config::load(config_path);
    CovarianceOptions cov_opts;
    cov_opts.split_point = cfg.cov_split;
    cov_opts.delta = cfg.cov_delta;
    cov_opts.series_orders = cfg.series_orders;
    cov_opts.threads = cfg.threads;

    if (eval_cmd->parsed()) {
        std::string text = read_input(eval_expr);
        if (eval_float_mode) {
            Element z = parse_float_element(text);
            std::cout << (eval_json ? to_json_text(z) : to_text(z)) << "\n";
        } else {
            ExactElement z = parse_exact_element(text);
            std::cout << (eval_json ? to_json_text(z) : to_text(z)) << "\n";
        }
        return 0;
    }

    if (laws_cmd->parsed()) {
        laws::Options opt;
        opt.seed = seed;
        opt.trials = trials;
        auto failure = laws::run_suite(opt);
        if (failure) {
            std::cout << "FAIL " << failure->law << ": " << failure->detail << "\n";
            return 1;
        }
        std::cout << "ok: " << trials << " trials, seed " << seed << "\n";
        return 0;
    }

    if (norm_cmd->parsed()) {
        Element z = parse_float_element(read_input(norm_input));
        WeightProfile w = WeightProfile::identity();
        bool have_p = norm_cmd->count("--p") > 0;
        bool have_hp = norm_cmd->count("--hp") > 0;
        if (!have_p && !have_hp) throw DomainError("norm: request --p and/or --hp");
        std::cout << "kind,value\n";
        if (have_p) std::cout << "p" << fmt(norm_p) << "," << fmt(p_norm(z, norm_p)) << "\n";
        if (have_hp) std::cout << "h" << norm_hp << "," << fmt(h_norm(z, norm_hp, w)) << "\n";
        return 0;
    }

    if (vage_cmd->parsed()) {
        WeightProfile w = WeightProfile::identity();
        std::cout << VageReport::csv_header() << "\n";
        bool all_hold = true;
        if (vage_random > 0) {
            std::mt19937_64 rng(vage_seed);
            std::uniform_real_distribution<double> coeff(-2.0, 2.0);
            for (int t = 0; t < vage_random; ++t) {
                auto draw = [&] {
                    Element z;
                    for (int term = 0; term < 4; ++term) {
                        std::vector<MultiIndex::Entry> entries;
                        for (int p = 1; p <= 4; ++p) {
                            int e = std::uniform_int_distribution<int>(0, 2)(rng);
                            if (e > 0 && std::uniform_int_distribution<int>(0, 1)(rng) == 0)
                                entries.emplace_back(static_cast<std::uint32_t>(p),
                                                     static_cast<std::uint8_t>(e));
                        }
                        z.accumulate(MultiIndex::from_entries(std::move(entries)),
                                     {coeff(rng), coeff(rng)});
                    }
                    return z;
                };
                VageReport r = check_vage(draw(), draw(), vage_p, vage_q, w);
                std::cout << r.csv_row() << "\n";
                all_hold = all_hold && r.holds;
            }
        } else {
            if (vage_f.empty() || vage_g.empty())
                throw DomainError("vage-check: provide --f and --g, or --random N");
            VageReport r = check_vage(parse_float_element(read_input(vage_f)),
                                      parse_float_element(read_input(vage_g)), vage_p, vage_q, w);
            std::cout << r.csv_row() << "\n";
            all_hold = r.holds;
        }
        return all_hold ? 0 : 1;
    }

    if (ber_cmd->parsed()) {
        if (ber_float) {
            Element idx_el = parse_float_element(read_input(ber_index));
            if (idx_el.term_count() != 1) throw DomainError("--index must be a single monomial");
            Element g = parse_float_element(read_input(ber_input));
            std::cout << to_text(berezin_integral(idx_el.terms().begin()->first, g)) << "\n";
        } else {
            ExactElement idx_el = parse_exact_element(read_input(ber_index));
            if (idx_el.term_count() != 1 ||
                !(idx_el.terms().begin()->second == ExactComplex::one()))
                throw DomainError("--index must be a single unit monomial");
            ExactElement g = parse_exact_element(read_input(ber_input));
            std::cout << to_text(berezin_integral(idx_el.terms().begin()->first, g)) << "\n";
        }
        return 0;
    }

    if (cov_cmd->parsed()) {
        if (cov_orders > 0) cov_opts.series_orders = cov_orders;
        if (cov_threads >= 0) cov_opts.threads = cov_threads;
        SpectralDensity density = density_for(cov_density, cov_opts, true);
        std::vector<double> tg = parse_grid(cov_tgrid);
        std::vector<double> sg = cov_sgrid.empty() ? tg : parse_grid(cov_sgrid);
        CovarianceMode mode;
        if (cov_mode == "quadrature") mode = CovarianceMode::Quadrature;
        else if (cov_mode == "series") mode = CovarianceMode::Series;
        else throw DomainError("mode must be quadrature or series");
        CovarianceGrid grid = build_covariance_grid(density, tg, sg, mode, cov_opts);
        std::ofstream file;
        grid.write_csv(open_out(file, cov_out));
        return 0;
    }

    if (diff_cmd->parsed()) {
        SpectralDensity density = density_for(diff_density, cov_opts, true);
        WeightProfile w = WeightProfile::identity();
        int orders = diff_orders > 0 ? diff_orders : cfg.series_orders;
        DiffCheckReport r = differentiability_check(density, diff_t, diff_p, w, orders);
        std::cout << r.csv();
        auto ratios = r.decay_ratios();
        std::cout << "ratios";
        for (double x : ratios) std::cout << "," << fmt(x);
        std::cout << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ternary::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ternary::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

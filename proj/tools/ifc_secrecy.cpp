// Command-line frontend for the interference-channel secrecy toolkit.
// Every subcommand reads a flat key=value channel config and emits
// deterministic CSV or key-value text.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ifc/analysis.hpp"
#include "ifc/channel.hpp"
#include "ifc/io.hpp"
#include "ifc/low_snr.hpp"
#include "ifc/oracle.hpp"
#include "ifc/rate_regions.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string output_path;
    std::string units = "nats";
    std::string scheme = "tdma";
    std::string regime = "secrecy";
    int grid = 101;
    int fig = 1;
    int trials = 1000;
    double alpha = 0.5;
    double theta = 1.0;
    double lambda = 0.5;
    unsigned long long seed = 12345;
};

ifc::RateUnits parse_units(const std::string& s) {
    if (s == "nats") return ifc::RateUnits::nats;
    if (s == "bits") return ifc::RateUnits::bits;
    throw CLI::ValidationError("--units must be nats or bits");
}

ifc::Scheme parse_scheme(const std::string& s) {
    if (s == "tdma") return ifc::Scheme::tdma;
    if (s == "mux") return ifc::Scheme::multiplexed;
    if (s == "an") return ifc::Scheme::artificial_noise;
    throw CLI::ValidationError("--scheme must be tdma, mux, or an");
}

ifc::Regime parse_regime(const std::string& s) {
    if (s == "secrecy") return ifc::Regime::secrecy;
    if (s == "nosecrecy") return ifc::Regime::no_secrecy;
    throw CLI::ValidationError("--regime must be secrecy or nosecrecy");
}

/// Writes to --output when given, stdout otherwise.
class OutputSink {
  public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

ifc::ValidatedConfig load_config(const Options& opt) {
    if (opt.config_path.empty()) throw CLI::ValidationError("--config is required");
    return ifc::validate_config(ifc::parse_config_file(opt.config_path));
}

int cmd_validate(const Options& opt) {
    ifc::ValidatedConfig cfg = load_config(opt);
    OutputSink sink(opt.output_path);
    std::ostream& out = sink.stream();
    out << "valid=true\n"
        << "snr1_max=" << ifc::format_number(cfg.snr1_max()) << '\n'
        << "snr2_max=" << ifc::format_number(cfg.snr2_max()) << '\n'
        << "m1=" << ifc::format_number(cfg.margin().m1) << '\n'
        << "m2=" << ifc::format_number(cfg.margin().m2) << '\n'
        << "positive_margins=" << (cfg.margin().both_positive() ? "true" : "false") << '\n';
    return 0;
}

int cmd_region(const Options& opt) {
    ifc::ValidatedConfig cfg = load_config(opt);
    ifc::RegionBoundary rb = ifc::achievable_region(cfg, parse_scheme(opt.scheme), opt.grid);
    OutputSink sink(opt.output_path);
    ifc::write_region_csv(sink.stream(), rb, parse_units(opt.units));
    return 0;
}

int cmd_lowsnr(const Options& opt) {
    ifc::ValidatedConfig cfg = load_config(opt);
    ifc::Scheme scheme = parse_scheme(opt.scheme);
    ifc::Regime regime = parse_regime(opt.regime);
    double param = scheme == ifc::Scheme::tdma ? opt.alpha : opt.theta;
    ifc::LowSnrMetrics m = ifc::low_snr_metrics(cfg, scheme, param, regime);
    OutputSink sink(opt.output_path);
    std::ostream& out = sink.stream();
    ifc::write_eb_csv(out, cfg);
    out << "scheme=" << to_string(scheme) << '\n'
        << "regime=" << to_string(regime) << '\n'
        << "param=" << ifc::format_number(param) << '\n'
        << "slope_s1=" << ifc::format_number(m.slope_s1) << '\n'
        << "slope_s2=" << ifc::format_number(m.slope_s2) << '\n';
    return 0;
}

int cmd_slopes(const Options& opt) {
    ifc::ValidatedConfig cfg = load_config(opt);
    ifc::SlopeRegionBoundary b =
        ifc::slope_region_boundary(cfg, parse_scheme(opt.scheme), parse_regime(opt.regime), opt.grid);
    OutputSink sink(opt.output_path);
    ifc::write_slope_csv(sink.stream(), b);
    return 0;
}

int cmd_select(const Options& opt) {
    ifc::ValidatedConfig cfg = load_config(opt);
    ifc::SchemeVerdict sv = ifc::select_scheme(cfg);
    bool window = ifc::divergence_window(cfg);
    OutputSink sink(opt.output_path);
    std::ostream& out = sink.stream();
    ifc::write_verdict_report(out, sv);
    out << "divergence_window=" << (window ? "true" : "false") << '\n';
    return 0;
}

int cmd_penalty(const Options& opt) {
    ifc::ValidatedConfig cfg = load_config(opt);
    ifc::PenaltyReport pr = ifc::secrecy_penalty(cfg, std::max(opt.grid, 1001));
    OutputSink sink(opt.output_path);
    ifc::write_penalty_report(sink.stream(), pr);
    return 0;
}

int cmd_verify(const Options& opt) {
    OutputSink sink(opt.output_path);
    std::ostream& out = sink.stream();
    out << "check,config_seed,scheme,param,delta,tolerance,pass\n";
    bool all_pass = true;
    const double h = 1e-4, tol = 1e-3;
    const double alphas[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    const double thetas[] = {0.01, 0.1, 1.0, 10.0, 100.0};
    for (int trial = 0; trial < opt.trials; ++trial) {
        const unsigned long long cfg_seed = opt.seed + static_cast<unsigned long long>(trial);
        std::mt19937_64 rng(cfg_seed);
        ifc::ValidatedConfig cfg = ifc::random_valid_config(rng);
        for (double alpha : alphas) {
            ifc::DerivativeReport rep = ifc::verify_derivatives(cfg, ifc::Scheme::tdma, alpha, h, tol);
            double worst = std::max({rep.delta_d1_r1, rep.delta_d1_r2, rep.delta_d2_r1, rep.delta_d2_r2});
            out << "derivatives," << cfg_seed << ",tdma," << ifc::format_number(alpha) << ','
                << ifc::format_number(worst) << ',' << ifc::format_number(tol) << ','
                << (rep.pass ? "true" : "false") << '\n';
            all_pass = all_pass && rep.pass;
        }
        for (double theta : thetas) {
            ifc::DerivativeReport rep =
                ifc::verify_derivatives(cfg, ifc::Scheme::multiplexed, theta, h, tol);
            double worst = std::max({rep.delta_d1_r1, rep.delta_d1_r2, rep.delta_d2_r1, rep.delta_d2_r2});
            out << "derivatives," << cfg_seed << ",multiplexed," << ifc::format_number(theta) << ','
                << ifc::format_number(worst) << ',' << ifc::format_number(tol) << ','
                << (rep.pass ? "true" : "false") << '\n';
            all_pass = all_pass && rep.pass;
        }
        ifc::EbLimitReport eb = ifc::verify_eb_limit(
            cfg, ifc::Regime::secrecy, {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7}, 1e-4);
        out << "eb_limit," << cfg_seed << ",multiplexed,,"
            << ifc::format_number(std::fabs(eb.limit_estimate_1 / eb.expected_1 - 1.0)) << ",0.0001,"
            << (eb.pass ? "true" : "false") << '\n';
        all_pass = all_pass && eb.pass;
    }
    return all_pass ? 0 : 1;
}

ifc::ValidatedConfig make_config(double g12, double g21, double p) {
    ifc::ChannelConfig c;
    c.g11 = 1.0;
    c.g22 = 1.0;
    c.g12 = g12;
    c.g21 = g21;
    c.sigma2 = 1.0;
    c.p1 = p;
    c.p2 = p;
    return ifc::validate_config(c);
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& fn) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "'");
    fn(out);
}

int cmd_reproduce_fig(const Options& opt) {
    namespace fs = std::filesystem;
    fs::path dir = opt.output_path.empty() ? fs::path(".") : fs::path(opt.output_path);
    fs::create_directories(dir);
    const int grid = opt.grid;
    switch (opt.fig) {
        case 1: {
            ifc::ValidatedConfig cfg = make_config(0.04, 0.04, 0.1);
            for (ifc::Scheme scheme :
                 {ifc::Scheme::tdma, ifc::Scheme::multiplexed, ifc::Scheme::artificial_noise}) {
                // the 3-parameter artificial-noise sweep gets a coarser grid
                int n = scheme == ifc::Scheme::artificial_noise ? std::min(grid, 41) : grid;
                ifc::RegionBoundary rb = ifc::achievable_region(cfg, scheme, n);
                write_file(dir / ("fig1_" + std::string(to_string(scheme)) + ".csv"),
                           [&](std::ostream& o) { ifc::write_region_csv(o, rb, ifc::RateUnits::nats); });
            }
            break;
        }
        case 2:
        case 3: {
            const ifc::Scheme scheme = opt.fig == 2 ? ifc::Scheme::tdma : ifc::Scheme::multiplexed;
            const double cross[] = {0.01, 0.04, 0.16, 0.36};
            for (double g : cross) {
                ifc::ValidatedConfig cfg = make_config(g, g, 1.0);
                ifc::SlopeRegionBoundary b =
                    ifc::slope_region_boundary(cfg, scheme, ifc::Regime::secrecy, grid);
                char name[64];
                std::snprintf(name, sizeof(name), "fig%d_%s_g%.2f.csv", opt.fig, to_string(scheme), g);
                write_file(dir / name, [&](std::ostream& o) { ifc::write_slope_csv(o, b); });
            }
            break;
        }
        case 4:
        case 5: {
            const double g12 = opt.fig == 4 ? 0.4 : 0.1;
            const double g21 = opt.fig == 4 ? 0.5 : 0.2;
            ifc::ValidatedConfig cfg = make_config(g12, g21, 1.0);
            for (ifc::Scheme scheme : {ifc::Scheme::tdma, ifc::Scheme::multiplexed}) {
                for (ifc::Regime regime : {ifc::Regime::secrecy, ifc::Regime::no_secrecy}) {
                    ifc::SlopeRegionBoundary b = ifc::slope_region_boundary(cfg, scheme, regime, grid);
                    char name[64];
                    std::snprintf(name, sizeof(name), "fig%d_%s_%s.csv", opt.fig, to_string(scheme),
                                  to_string(regime));
                    write_file(dir / name, [&](std::ostream& o) { ifc::write_slope_csv(o, b); });
                }
            }
            break;
        }
        default:
            throw ifc::ParamOutOfRange("--fig must be in 1..5");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy-rate regions and low-SNR metrics for two-user weak Gaussian "
                 "interference channels"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* c = sub->add_option("--config", opt.config_path, "channel config file (key=value)");
        if (needs_config) c->required();
        sub->add_option("--output", opt.output_path, "output file (default stdout)");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a channel config");
    add_common(validate, true);

    CLI::App* region = app.add_subcommand("region", "achievable secrecy-rate region CSV");
    add_common(region, true);
    region->add_option("--scheme", opt.scheme, "tdma|mux|an");
    region->add_option("--grid", opt.grid, "grid resolution per swept parameter");
    region->add_option("--units", opt.units, "nats|bits");

    CLI::App* lowsnr = app.add_subcommand("lowsnr", "minimum bit energies and slopes");
    add_common(lowsnr, true);
    lowsnr->add_option("--scheme", opt.scheme, "tdma|mux");
    lowsnr->add_option("--regime", opt.regime, "secrecy|nosecrecy");
    lowsnr->add_option("--alpha", opt.alpha, "TDMA time share");
    lowsnr->add_option("--theta", opt.theta, "rate ratio R1/R2");

    CLI::App* slopes = app.add_subcommand("slopes", "slope-region boundary CSV");
    add_common(slopes, true);
    slopes->add_option("--scheme", opt.scheme, "tdma|mux");
    slopes->add_option("--regime", opt.regime, "secrecy|nosecrecy");
    slopes->add_option("--grid", opt.grid, "boundary sample count");

    CLI::App* select = app.add_subcommand("select", "scheme-selection verdict");
    add_common(select, true);

    CLI::App* penalty = app.add_subcommand("penalty", "secrecy penalty report");
    add_common(penalty, true);
    penalty->add_option("--grid", opt.grid, "boundary sample count for area ratios");

    CLI::App* verify = app.add_subcommand("verify", "run the numeric oracle battery");
    add_common(verify, false);
    verify->add_option("--seed", opt.seed, "base seed for random configs");
    verify->add_option("--trials", opt.trials, "number of random configs");

    CLI::App* repro = app.add_subcommand("reproduce-fig", "emit the dataset behind one figure");
    repro->add_option("--fig", opt.fig, "figure number 1..5")->required();
    repro->add_option("--output", opt.output_path, "output directory (default .)");
    repro->add_option("--grid", opt.grid, "grid resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (region->parsed()) return cmd_region(opt);
        if (lowsnr->parsed()) return cmd_lowsnr(opt);
        if (slopes->parsed()) return cmd_slopes(opt);
        if (select->parsed()) return cmd_select(opt);
        if (penalty->parsed()) return cmd_penalty(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (repro->parsed()) return cmd_reproduce_fig(opt);
    } catch (const ifc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "ifc/channel.hpp"
#include "ifc/errors.hpp"
#include "ifc/low_snr.hpp"
#include "ifc/rate_regions.hpp"

namespace ifc {

/// Quadratic a*s + b*s^2 interpolated through f(0) = 0, f(h), f(2h).
struct QuadraticFit {
    double a{};
    double b{};
    double h{};
};

struct ContainmentReport {
    bool contained{};
    double worst_violation{-std::numeric_limits<double>::infinity()};
    std::size_t samples{};
};

struct DerivativeReport {
    bool pass{};
    double delta_d1_r1{};
    double delta_d1_r2{};
    double delta_d2_r1{};
    double delta_d2_r2{};
};

struct EbLimitReport {
    bool pass{};
    bool monotone{};
    double limit_estimate_1{};
    double limit_estimate_2{};
    double expected_1{};
    double expected_2{};
};

/// Forward two-point quadratic interpolation using the known value f(0)=0.
/// Exact for quadratics through the origin; O(h) error in the curvature
/// for smooth f.
inline QuadraticFit fit_quadratic(const std::function<double(double)>& rate_fn, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw DegenerateStep("step must be finite positive");
    const double f1 = rate_fn(h);
    const double f2 = rate_fn(2.0 * h);
    if ((f1 != 0.0 && std::fabs(f1) < std::numeric_limits<double>::min()) ||
        (f2 != 0.0 && std::fabs(f2) < std::numeric_limits<double>::min()))
        throw DegenerateStep("function values underflow at this step");
    QuadraticFit fit;
    fit.h = h;
    fit.a = (4.0 * f1 - f2) / (2.0 * h);
    fit.b = (f2 - 2.0 * f1) / (2.0 * h * h);
    return fit;
}

namespace detail {

inline double rel_delta(double got, double want) {
    double scale = std::max(std::fabs(want), 1e-300);
    return std::fabs(got - want) / scale;
}

} // namespace detail

/// Fits the raw rate formulas around SNR = 0 and compares the estimated
/// first/second derivatives against the closed forms. The fit side touches
/// only the rate formulas, never the derivative expressions it checks.
inline DerivativeReport verify_derivatives(const ValidatedConfig& cfg, Scheme scheme, double param,
                                           double h, double tol) {
    if (!(h >= 1e-6 && h <= 1e-2)) throw ParamOutOfRange("h outside [1e-6, 1e-2]");
    cfg.require_positive_margins();

    std::function<double(double)> rate1, rate2;
    if (scheme == Scheme::tdma) {
        rate1 = [&cfg, param](double s) {
            return param <= 0.0 ? 0.0
                                : param * (std::log1p(cfg.g11() * s / param) -
                                           std::log1p(cfg.g21() * s / param));
        };
        rate2 = [&cfg, param](double s) {
            const double share = 1.0 - param;
            return share <= 0.0 ? 0.0
                                : share * (std::log1p(cfg.g22() * s / share) -
                                           std::log1p(cfg.g12() * s / share));
        };
    } else if (scheme == Scheme::multiplexed) {
        rate1 = [&cfg, param](double s) { return multiplexed_rate_theta_user1(cfg, param, s); };
        rate2 = [&cfg, param](double s) { return multiplexed_rate_theta_user2(cfg, param, s); };
    } else {
        throw ParamOutOfRange("derivative verification covers tdma and multiplexed only");
    }

    const QuadraticFit fit1 = fit_quadratic(rate1, h);
    const QuadraticFit fit2 = fit_quadratic(rate2, h);
    const RateDerivatives closed = rate_derivatives(cfg, scheme, param);

    DerivativeReport rep;
    rep.delta_d1_r1 = detail::rel_delta(fit1.a, closed.d1_r1);
    rep.delta_d1_r2 = detail::rel_delta(fit2.a, closed.d1_r2);
    rep.delta_d2_r1 = detail::rel_delta(2.0 * fit1.b, closed.d2_r1);
    rep.delta_d2_r2 = detail::rel_delta(2.0 * fit2.b, closed.d2_r2);
    rep.pass = rep.delta_d1_r1 <= tol && rep.delta_d1_r2 <= tol && rep.delta_d2_r1 <= tol &&
               rep.delta_d2_r2 <= tol;
    return rep;
}

/// Evaluates a signed region-membership function (<= 0 means inside) at
/// every inner boundary point and reports the worst violation.
inline ContainmentReport verify_containment(const std::vector<SlopePoint>& inner,
                                            const std::function<double(const SlopePoint&)>& outer_violation,
                                            double tol) {
    ContainmentReport rep;
    rep.samples = inner.size();
    for (const SlopePoint& p : inner)
        rep.worst_violation = std::max(rep.worst_violation, outer_violation(p));
    rep.contained = rep.samples > 0 && rep.worst_violation <= tol;
    return rep;
}

/// Signed distance helpers for the slope regions. Negative inside.
inline double tdma_region_violation(const SlopeConstants& sc, Regime regime, const SlopePoint& p) {
    if (regime == Regime::no_secrecy) return p.s1 / 2.0 + p.s2 / 2.0 - 1.0;
    return p.s1 / (2.0 * sc.A) + p.s2 / (2.0 * sc.B) - 1.0;
}

/// Boundary value s2(s1) of the multiplexed product identity
/// (ca/s1 - 1)(cb/s2 - 1) = product_rhs with slope caps ca, cb.
inline double mux_boundary_s2(double ca, double cb, double product_rhs, double s1) {
    if (s1 <= 0.0) return cb;
    if (s1 >= ca) return 0.0;
    return cb / (1.0 + product_rhs / (ca / s1 - 1.0));
}

inline double mux_region_violation(const SlopeConstants& sc, double phi, Regime regime,
                                   double phi0, const SlopePoint& p) {
    const double ca = regime == Regime::secrecy ? 2.0 * sc.A : 2.0;
    const double cb = regime == Regime::secrecy ? 2.0 * sc.B : 2.0;
    const double rhs = regime == Regime::secrecy ? phi : phi0;
    if (p.s1 >= ca) return p.s1 - ca;
    return p.s2 - mux_boundary_s2(ca, cb, rhs, p.s1);
}

/// Walks a decreasing SNR ladder checking that the bit energy
/// snr * ln2 / R(snr) never increases and converges to the closed-form
/// minimum. Rates are the multiplexed formulas at snr1 = snr2 = snr.
inline EbLimitReport verify_eb_limit(const ValidatedConfig& cfg, Regime regime,
                                     const std::vector<double>& snr_ladder, double tol) {
    if (snr_ladder.empty()) throw ParamOutOfRange("empty snr ladder");
    for (std::size_t i = 0; i + 1 < snr_ladder.size(); ++i)
        if (!(snr_ladder[i] > snr_ladder[i + 1] && snr_ladder[i + 1] > 0.0))
            throw ParamOutOfRange("ladder must be strictly decreasing and positive");
    if (regime == Regime::secrecy) cfg.require_positive_margins();

    auto rate = [&](double s, int user) {
        const double gdir = user == 1 ? cfg.g11() : cfg.g22();
        const double gin = user == 1 ? cfg.g12() : cfg.g21(); // into this receiver
        const double gout = user == 1 ? cfg.g21() : cfg.g12(); // leaked to the other
        double r = std::log1p(gdir * s / (1.0 + gin * s));
        if (regime == Regime::secrecy) r -= std::log1p(gout * s);
        return std::max(r, 0.0);
    };

    EbLimitReport rep;
    rep.monotone = true;
    double prev1 = std::numeric_limits<double>::infinity();
    double prev2 = std::numeric_limits<double>::infinity();
    const double slack = 1e-12;
    for (double s : snr_ladder) {
        const double eb1 = s * std::numbers::ln2 / rate(s, 1);
        const double eb2 = s * std::numbers::ln2 / rate(s, 2);
        if (eb1 > prev1 * (1.0 + slack) || eb2 > prev2 * (1.0 + slack)) rep.monotone = false;
        prev1 = eb1;
        prev2 = eb2;
    }
    rep.limit_estimate_1 = prev1;
    rep.limit_estimate_2 = prev2;
    std::tie(rep.expected_1, rep.expected_2) = eb_n0_min(cfg, regime);
    rep.pass = rep.monotone && detail::rel_delta(rep.limit_estimate_1, rep.expected_1) <= tol &&
               detail::rel_delta(rep.limit_estimate_2, rep.expected_2) <= tol;
    return rep;
}

/// Draws a random weak-interference config with strictly positive margins
/// and cross gains. Deterministic for a given generator state.
inline ValidatedConfig random_valid_config(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> direct(0.5, 2.0);
    std::uniform_real_distribution<double> frac(0.05, 0.95);
    std::uniform_real_distribution<double> power(0.05, 1.0);
    ChannelConfig c;
    c.g11 = direct(rng);
    c.g22 = direct(rng);
    c.g21 = frac(rng) * std::min(c.g11, c.g22);
    c.g12 = frac(rng) * std::min(c.g11, c.g22);
    c.sigma2 = 1.0;
    c.p1 = power(rng);
    c.p2 = power(rng);
    return validate_config(c);
}

} // namespace ifc

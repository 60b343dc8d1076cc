#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "ifc/channel.hpp"
#include "ifc/errors.hpp"
#include "ifc/rate_regions.hpp"

namespace ifc {

enum class Regime { secrecy, no_secrecy };

inline const char* to_string(Regime r) { return r == Regime::secrecy ? "secrecy" : "no_secrecy"; }

inline double to_db(double linear) { return 10.0 * std::log10(linear); }

/// First and second derivatives of the per-user rates with respect to SNR
/// at SNR = 0, rates in nats.
struct RateDerivatives {
    double d1_r1{};
    double d1_r2{};
    double d2_r1{};
    double d2_r2{};
};

/// Low-SNR performance summary of one operating point.
struct LowSnrMetrics {
    double eb_n0_min_1{};
    double eb_n0_min_2{};
    double slope_s1{};
    double slope_s2{};
};

/// A = (g11-g21)/(g11+g21), B = (g22-g12)/(g22+g12); both in (0,1) for
/// positive margins. 2A and 2B are the per-user slope suprema under secrecy.
struct SlopeConstants {
    double A{};
    double B{};
};

/// Fixed rate ratio theta = R1/R2 at which both rates vanish, together
/// with the SNR ratio it pins down through the first-order coefficients.
struct ThetaRatio {
    double theta{};
    double implied_snr_ratio{};
};

struct SlopePoint {
    double param{}; // alpha for tdma, theta for multiplexed
    double s1{};
    double s2{};
};

struct SlopeRegionBoundary {
    Regime regime{};
    Scheme scheme{};
    std::vector<SlopePoint> points;
};

inline ThetaRatio make_theta(const ValidatedConfig& cfg, double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw ParamOutOfRange("theta must be finite positive");
    cfg.require_positive_margins();
    return ThetaRatio{theta, theta * cfg.margin().m2 / cfg.margin().m1};
}

/// Closed-form rate derivatives at SNR = 0. For tdma `param` is the time
/// share alpha in (0,1); for multiplexed it is the rate ratio theta > 0.
inline RateDerivatives rate_derivatives(const ValidatedConfig& cfg, Scheme scheme, double param) {
    cfg.require_positive_margins();
    const double g11 = cfg.g11(), g12 = cfg.g12(), g21 = cfg.g21(), g22 = cfg.g22();
    const double m1 = cfg.margin().m1, m2 = cfg.margin().m2;
    RateDerivatives d;
    d.d1_r1 = m1;
    d.d1_r2 = m2;
    if (scheme == Scheme::tdma) {
        if (!(param > 0.0 && param < 1.0)) throw ParamOutOfRange("alpha outside (0,1)");
        d.d2_r1 = -(g11 * g11 - g21 * g21) / param;
        d.d2_r2 = -(g22 * g22 - g12 * g12) / (1.0 - param);
    } else if (scheme == Scheme::multiplexed) {
        if (!(param > 0.0) || !std::isfinite(param)) throw ParamOutOfRange("theta must be finite positive");
        d.d2_r1 = -(g11 * g11 - g21 * g21 + 2.0 * g11 * g12 * m1 / (param * m2));
        d.d2_r2 = -(g22 * g22 - g12 * g12 + 2.0 * g22 * g21 * param * m2 / m1);
    } else {
        throw ParamOutOfRange("rate derivatives are defined for tdma and multiplexed only");
    }
    return d;
}

/// Minimum energy per bit, linear scale. Secrecy: ln2 / margin; without
/// secrecy constraints: ln2 / direct gain.
inline std::pair<double, double> eb_n0_min(const ValidatedConfig& cfg, Regime regime) {
    if (regime == Regime::secrecy) {
        cfg.require_positive_margins();
        return {std::numbers::ln2 / cfg.margin().m1, std::numbers::ln2 / cfg.margin().m2};
    }
    return {std::numbers::ln2 / cfg.g11(), std::numbers::ln2 / cfg.g22()};
}

inline SlopeConstants slope_constants(const ValidatedConfig& cfg) {
    cfg.require_positive_margins();
    return SlopeConstants{cfg.margin().m1 / (cfg.g11() + cfg.g21()),
                          cfg.margin().m2 / (cfg.g22() + cfg.g12())};
}

/// TDMA wideband slopes for time share alpha.
inline std::pair<double, double> slopes_tdma(const ValidatedConfig& cfg, double alpha, Regime regime) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ParamOutOfRange("alpha outside [0,1]");
    if (regime == Regime::no_secrecy) return {2.0 * alpha, 2.0 * (1.0 - alpha)};
    SlopeConstants sc = slope_constants(cfg);
    return {2.0 * alpha * sc.A, 2.0 * (1.0 - alpha) * sc.B};
}

/// Multiplexed wideband slopes for rate ratio theta. In the no-secrecy
/// regime the analogous parameterization with direct gains in place of
/// the margins is used; it satisfies the product identity
/// (2/S1 - 1)(2/S2 - 1) = 4 g12 g21 / (g11 g22).
inline std::pair<double, double> slopes_multiplexed(const ValidatedConfig& cfg, double theta, Regime regime) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw ParamOutOfRange("theta must be finite positive");
    const double g11 = cfg.g11(), g12 = cfg.g12(), g21 = cfg.g21(), g22 = cfg.g22();
    if (regime == Regime::no_secrecy) {
        return {2.0 / (1.0 + 2.0 * g12 / (theta * g22)), 2.0 / (1.0 + 2.0 * g21 * theta / g11)};
    }
    cfg.require_positive_margins();
    const double m1 = cfg.margin().m1, m2 = cfg.margin().m2;
    double s1 = 2.0 * m1 / (g11 + g21 + 2.0 * g11 * g12 / (theta * m2));
    double s2 = 2.0 * m2 / (g22 + g12 + 2.0 * g22 * g21 * theta / m1);
    return {s1, s2};
}

/// Samples one slope-region boundary: alpha uniform on [0,1] for tdma,
/// theta log-uniform on [1e-4, 1e4] for multiplexed.
inline SlopeRegionBoundary slope_region_boundary(const ValidatedConfig& cfg, Scheme scheme,
                                                 Regime regime, int grid_resolution) {
    if (grid_resolution < 2) throw ParamOutOfRange("grid_resolution must be >= 2");
    if (scheme == Scheme::artificial_noise)
        throw ParamOutOfRange("slope regions are defined for tdma and multiplexed only");
    if (regime == Regime::secrecy) cfg.require_positive_margins();
    SlopeRegionBoundary b;
    b.regime = regime;
    b.scheme = scheme;
    b.points.reserve(static_cast<std::size_t>(grid_resolution));
    const int n = grid_resolution;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        SlopePoint p;
        if (scheme == Scheme::tdma) {
            p.param = t;
            std::tie(p.s1, p.s2) = slopes_tdma(cfg, p.param, regime);
        } else {
            p.param = std::pow(10.0, -4.0 + 8.0 * t);
            std::tie(p.s1, p.s2) = slopes_multiplexed(cfg, p.param, regime);
        }
        b.points.push_back(p);
    }
    return b;
}

/// Combined low-SNR summary for one scheme and operating parameter.
inline LowSnrMetrics low_snr_metrics(const ValidatedConfig& cfg, Scheme scheme, double param,
                                     Regime regime) {
    LowSnrMetrics m;
    std::tie(m.eb_n0_min_1, m.eb_n0_min_2) = eb_n0_min(cfg, regime);
    if (scheme == Scheme::tdma)
        std::tie(m.slope_s1, m.slope_s2) = slopes_tdma(cfg, param, regime);
    else
        std::tie(m.slope_s1, m.slope_s2) = slopes_multiplexed(cfg, param, regime);
    return m;
}

/// Multiplexed rate of user 1 as a function of its own SNR with the rate
/// ratio theta fixed (the partner's SNR is tied through the first-order
/// coefficients). This is the raw formula the derivative oracle probes.
inline double multiplexed_rate_theta_user1(const ValidatedConfig& cfg, double theta, double snr1) {
    cfg.require_positive_margins();
    const double k = cfg.margin().m1 / (theta * cfg.margin().m2);
    double r = std::log1p(cfg.g11() * snr1 / (1.0 + cfg.g12() * k * snr1)) -
               std::log1p(cfg.g21() * snr1);
    return r > 0.0 ? r : 0.0;
}

/// Same for user 2.
inline double multiplexed_rate_theta_user2(const ValidatedConfig& cfg, double theta, double snr2) {
    cfg.require_positive_margins();
    const double k = theta * cfg.margin().m2 / cfg.margin().m1;
    double r = std::log1p(cfg.g22() * snr2 / (1.0 + cfg.g21() * k * snr2)) -
               std::log1p(cfg.g12() * snr2);
    return r > 0.0 ? r : 0.0;
}

} // namespace ifc

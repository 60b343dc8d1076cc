#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "ifc/channel.hpp"
#include "ifc/errors.hpp"

namespace ifc {

enum class Scheme { tdma, multiplexed, artificial_noise };

enum class NoiseRole { noise_from_tx2, noise_from_tx1 };

inline const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::tdma: return "tdma";
        case Scheme::multiplexed: return "multiplexed";
        default: return "artificial_noise";
    }
}

inline const char* to_string(NoiseRole r) {
    return r == NoiseRole::noise_from_tx2 ? "noise_from_tx2" : "noise_from_tx1";
}

/// An achievable secrecy-rate pair in nats per channel use. Closed-form
/// values that came out negative are clamped to zero and flagged.
struct RatePair {
    double r1{};
    double r2{};
    bool clamped1{};
    bool clamped2{};
};

/// One sweep sample: the rates plus the parameters that produced them.
/// alpha/lambda are NaN when the scheme does not use them.
struct RegionPoint {
    double snr1{};
    double snr2{};
    double alpha{std::numeric_limits<double>::quiet_NaN()};
    double lambda{std::numeric_limits<double>::quiet_NaN()};
    bool has_role{};
    NoiseRole role{NoiseRole::noise_from_tx2};
    RatePair rates;
};

/// Pareto frontier of one scheme's sweep, ordered by decreasing r1.
struct RegionBoundary {
    Scheme scheme{};
    int grid_resolution{};
    std::vector<RegionPoint> points;
};

/// First-order coefficients of the low-SNR rectangular region:
/// r_i <= a_i * snr_i + o(snr_i).
struct FirstOrderCoefficients {
    double a1{};
    double a2{};
};

/// High-SNR limit query: snr1, snr2 -> inf with snr1/snr2 -> q.
struct HighSnrQuery {
    double q{1.0};
    double alpha{0.5};
    double lambda{1.0};
    NoiseRole role{NoiseRole::noise_from_tx2};
};

/// Per-user high-SNR rate limit. `unbounded` marks a limit of +infinity;
/// `value` is meaningful only when it is false.
struct HighSnrLimit {
    double value{};
    bool unbounded{};
};

namespace detail {

inline void check_snr(const ValidatedConfig& cfg, double snr1, double snr2) {
    const double tol = 1e-12;
    if (!(snr1 >= 0.0) || snr1 > cfg.snr1_max() * (1.0 + tol))
        throw ParamOutOfRange("snr1 outside [0, p1/sigma2]");
    if (!(snr2 >= 0.0) || snr2 > cfg.snr2_max() * (1.0 + tol))
        throw ParamOutOfRange("snr2 outside [0, p2/sigma2]");
}

inline double clamp_rate(double r, bool& clamped) {
    if (r < 0.0) {
        clamped = true;
        return 0.0;
    }
    return r;
}

/// One TDMA user: share * [ln(1 + gdir*snr/share) - ln(1 + gcross*snr/share)],
/// with the share->0 endpoint defined by continuity as 0.
inline double tdma_user_rate(double share, double snr, double gdir, double gcross, bool& clamped) {
    if (share <= 0.0 || snr <= 0.0) return 0.0;
    double r = share * (std::log1p(gdir * snr / share) - std::log1p(gcross * snr / share));
    return clamp_rate(r, clamped);
}

} // namespace detail

/// TDMA secrecy rates: user 1 gets time fraction alpha, user 2 the rest.
/// Within its slot a user transmits at snr/share.
inline RatePair tdma_rates(const ValidatedConfig& cfg, double snr1, double snr2, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ParamOutOfRange("alpha outside [0,1]");
    detail::check_snr(cfg, snr1, snr2);
    RatePair rp;
    rp.r1 = detail::tdma_user_rate(alpha, snr1, cfg.g11(), cfg.g21(), rp.clamped1);
    rp.r2 = detail::tdma_user_rate(1.0 - alpha, snr2, cfg.g22(), cfg.g12(), rp.clamped2);
    return rp;
}

/// Multiplexed secrecy rates: both users transmit at once, cross signals
/// raise the noise floor of the intended link and feed the unintended one.
inline RatePair multiplexed_rates(const ValidatedConfig& cfg, double snr1, double snr2) {
    detail::check_snr(cfg, snr1, snr2);
    RatePair rp;
    double r1 = std::log1p(cfg.g11() * snr1 / (1.0 + cfg.g12() * snr2)) - std::log1p(cfg.g21() * snr1);
    double r2 = std::log1p(cfg.g22() * snr2 / (1.0 + cfg.g21() * snr1)) - std::log1p(cfg.g12() * snr2);
    rp.r1 = detail::clamp_rate(r1, rp.clamped1);
    rp.r2 = detail::clamp_rate(r2, rp.clamped2);
    return rp;
}

/// Artificial-noise secrecy rates. With role = noise_from_tx2, transmitter 2
/// spends lambda of its power jamming and (1-lambda) on its own message;
/// the reversed role exchanges the users.
inline RatePair artificial_noise_rates(const ValidatedConfig& cfg, double snr1, double snr2,
                                       double lambda, NoiseRole role) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw ParamOutOfRange("lambda outside [0,1]");
    if (role == NoiseRole::noise_from_tx1) {
        RatePair sw = artificial_noise_rates(cfg.swapped_users(), snr2, snr1, lambda,
                                             NoiseRole::noise_from_tx2);
        return RatePair{sw.r2, sw.r1, sw.clamped2, sw.clamped1};
    }
    detail::check_snr(cfg, snr1, snr2);
    const double g11 = cfg.g11(), g12 = cfg.g12(), g21 = cfg.g21(), g22 = cfg.g22();
    RatePair rp;
    double r1 = std::log1p(g11 * snr1 / (1.0 + g12 * snr2)) -
                std::log1p(g21 * snr1 / (1.0 + g22 * lambda * snr2));
    double r2 = std::log1p(g22 * (1.0 - lambda) * snr2 / (1.0 + g21 * snr1 + g22 * lambda * snr2)) -
                std::log1p(g12 * (1.0 - lambda) * snr2 / (1.0 + g12 * lambda * snr2));
    rp.r1 = detail::clamp_rate(r1, rp.clamped1);
    rp.r2 = detail::clamp_rate(r2, rp.clamped2);
    return rp;
}

/// Maximal non-dominated subset, sorted by decreasing r1. Exact ties on
/// both coordinates keep the earliest input point.
inline std::vector<RegionPoint> pareto_frontier(const std::vector<RegionPoint>& points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const RatePair &pa = points[a].rates, &pb = points[b].rates;
        if (pa.r1 != pb.r1) return pa.r1 > pb.r1;
        if (pa.r2 != pb.r2) return pa.r2 > pb.r2;
        return a < b;
    });
    // Scan in decreasing r1: a point survives iff its r2 beats every point
    // with larger-or-equal r1 seen so far. Exact duplicates sort after the
    // earliest input occurrence and are dropped by the strict comparison.
    std::vector<RegionPoint> out;
    double best_r2 = -1.0;
    for (std::size_t idx : order) {
        const RatePair& p = points[idx].rates;
        if (p.r2 > best_r2) {
            out.push_back(points[idx]);
            best_r2 = p.r2;
        }
    }
    return out;
}

/// Sweeps one scheme over a uniform parameter grid and keeps the Pareto
/// frontier. Grids: tdma (alpha, snr1, snr2); multiplexed (snr1, snr2);
/// artificial noise (snr1, snr2, lambda) for both role assignments.
inline RegionBoundary achievable_region(const ValidatedConfig& cfg, Scheme scheme, int grid_resolution) {
    if (grid_resolution < 2) throw ParamOutOfRange("grid_resolution must be >= 2");
    const int n = grid_resolution;
    auto grid_value = [n](int i, double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    const double s1max = cfg.snr1_max(), s2max = cfg.snr2_max();

    std::vector<RegionPoint> samples;
    auto push = [&](RegionPoint p) { samples.push_back(p); };

    switch (scheme) {
        case Scheme::tdma:
            samples.reserve(static_cast<std::size_t>(n) * n * n);
            for (int ia = 0; ia < n; ++ia) {
                const double alpha = grid_value(ia, 0.0, 1.0);
                for (int i1 = 0; i1 < n; ++i1) {
                    const double snr1 = grid_value(i1, 0.0, s1max);
                    for (int i2 = 0; i2 < n; ++i2) {
                        const double snr2 = grid_value(i2, 0.0, s2max);
                        RegionPoint p;
                        p.snr1 = snr1;
                        p.snr2 = snr2;
                        p.alpha = alpha;
                        p.rates = tdma_rates(cfg, snr1, snr2, alpha);
                        push(p);
                    }
                }
            }
            break;
        case Scheme::multiplexed:
            samples.reserve(static_cast<std::size_t>(n) * n);
            for (int i1 = 0; i1 < n; ++i1) {
                const double snr1 = grid_value(i1, 0.0, s1max);
                for (int i2 = 0; i2 < n; ++i2) {
                    const double snr2 = grid_value(i2, 0.0, s2max);
                    RegionPoint p;
                    p.snr1 = snr1;
                    p.snr2 = snr2;
                    p.rates = multiplexed_rates(cfg, snr1, snr2);
                    push(p);
                }
            }
            break;
        case Scheme::artificial_noise:
            samples.reserve(2 * static_cast<std::size_t>(n) * n * n);
            for (NoiseRole role : {NoiseRole::noise_from_tx2, NoiseRole::noise_from_tx1}) {
                for (int il = 0; il < n; ++il) {
                    const double lambda = grid_value(il, 0.0, 1.0);
                    for (int i1 = 0; i1 < n; ++i1) {
                        const double snr1 = grid_value(i1, 0.0, s1max);
                        for (int i2 = 0; i2 < n; ++i2) {
                            const double snr2 = grid_value(i2, 0.0, s2max);
                            RegionPoint p;
                            p.snr1 = snr1;
                            p.snr2 = snr2;
                            p.lambda = lambda;
                            p.has_role = true;
                            p.role = role;
                            p.rates = artificial_noise_rates(cfg, snr1, snr2, lambda, role);
                            push(p);
                        }
                    }
                }
            }
            break;
    }

    RegionBoundary rb;
    rb.scheme = scheme;
    rb.grid_resolution = grid_resolution;
    rb.points = pareto_frontier(samples);
    return rb;
}

/// Coefficients of the limiting rectangular region at vanishing SNR.
/// lambda is consumed only by the artificial-noise scheme.
inline FirstOrderCoefficients first_order_region(const ValidatedConfig& cfg, Scheme scheme,
                                                 double lambda = 0.0) {
    FirstOrderCoefficients fo;
    fo.a1 = cfg.g11() - cfg.g21();
    fo.a2 = cfg.g22() - cfg.g12();
    if (scheme == Scheme::artificial_noise) {
        if (!(lambda >= 0.0 && lambda <= 1.0)) throw ParamOutOfRange("lambda outside [0,1]");
        fo.a2 *= (1.0 - lambda);
    }
    return fo;
}

/// Per-user rate limits as both SNRs grow without bound with ratio q.
inline std::pair<HighSnrLimit, HighSnrLimit> high_snr_limits(const ValidatedConfig& cfg,
                                                             const HighSnrQuery& query,
                                                             Scheme scheme) {
    if (!(query.q > 0.0) || !std::isfinite(query.q)) throw ParamOutOfRange("q must be finite positive");
    switch (scheme) {
        case Scheme::tdma: {
            if (!(query.alpha >= 0.0 && query.alpha <= 1.0)) throw ParamOutOfRange("alpha outside [0,1]");
            return {HighSnrLimit{query.alpha * std::log(cfg.g11() / cfg.g21())},
                    HighSnrLimit{(1.0 - query.alpha) * std::log(cfg.g22() / cfg.g12())}};
        }
        case Scheme::multiplexed:
            return {HighSnrLimit{0.0}, HighSnrLimit{0.0}};
        default: {
            if (!(query.lambda > 0.0 && query.lambda <= 1.0))
                throw ParamOutOfRange("lambda outside (0,1] for high-SNR artificial noise");
            if (query.role == NoiseRole::noise_from_tx1) {
                HighSnrQuery q2 = query;
                q2.q = 1.0 / query.q;
                q2.role = NoiseRole::noise_from_tx2;
                auto sw = high_snr_limits(cfg.swapped_users(), q2, scheme);
                return {sw.second, sw.first};
            }
            double num = 1.0 + cfg.g11() * query.q / cfg.g12();
            double den = 1.0 + cfg.g21() * query.q / (cfg.g22() * query.lambda);
            return {HighSnrLimit{std::log(num / den)}, HighSnrLimit{0.0}};
        }
    }
}

} // namespace ifc

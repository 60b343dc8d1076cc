#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "ifc/channel.hpp"
#include "ifc/errors.hpp"
#include "ifc/low_snr.hpp"

namespace ifc {

enum class Verdict { tdma_optimal, multiplexed_optimal, tie_prefer_tdma };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::tdma_optimal: return "tdma_optimal";
        case Verdict::multiplexed_optimal: return "multiplexed_optimal";
        default: return "tie_prefer_tdma";
    }
}

/// Scheme-selection thresholds and the resulting classifications.
/// phi compares the slope regions under secrecy, phi0 without secrecy;
/// a value below one favors multiplexed transmission, above one TDMA.
struct SchemeVerdict {
    double phi{};
    double phi0{};
    Verdict verdict_secrecy{};
    Verdict verdict_no_secrecy{};
    bool divergent{};
};

/// How much secrecy costs at low SNR: bit-energy increase in dB and
/// slope-region shrinkage as an area ratio per scheme.
struct PenaltyReport {
    double delta_eb_1{};
    double delta_eb_2{};
    double slope_shrink_tdma{};
    double slope_shrink_mux{};
};

/// phi  = 4 g11 g12 g22 g21 / [(g11^2 - g21^2)(g22^2 - g12^2)]
/// phi0 = 4 g12 g21 / (g11 g22)
inline std::pair<double, double> phi_thresholds(const ValidatedConfig& cfg) {
    cfg.require_positive_margins();
    const double g11 = cfg.g11(), g12 = cfg.g12(), g21 = cfg.g21(), g22 = cfg.g22();
    double phi = 4.0 * g11 * g12 * g22 * g21 /
                 ((g11 * g11 - g21 * g21) * (g22 * g22 - g12 * g12));
    double phi0 = 4.0 * g12 * g21 / (g11 * g22);
    return {phi, phi0};
}

namespace detail {

inline Verdict classify(double value, double tie_tolerance) {
    if (std::fabs(value - 1.0) <= tie_tolerance) return Verdict::tie_prefer_tdma;
    return value < 1.0 ? Verdict::multiplexed_optimal : Verdict::tdma_optimal;
}

} // namespace detail

/// Classifies the optimal scheme with and without secrecy constraints.
/// Ties resolve to TDMA. The divergent flag marks channels where TDMA
/// wins under secrecy while multiplexed wins without it.
inline SchemeVerdict select_scheme(const ValidatedConfig& cfg, double tie_tolerance = 1e-12) {
    if (tie_tolerance < 0.0) throw ParamOutOfRange("tie_tolerance must be >= 0");
    SchemeVerdict sv;
    std::tie(sv.phi, sv.phi0) = phi_thresholds(cfg);
    sv.verdict_secrecy = detail::classify(sv.phi, tie_tolerance);
    sv.verdict_no_secrecy = detail::classify(sv.phi0, tie_tolerance);
    sv.divergent = sv.verdict_secrecy == Verdict::tdma_optimal &&
                   sv.verdict_no_secrecy == Verdict::multiplexed_optimal;
    return sv;
}

/// Evaluates the displayed double inequality
/// (g11/g21 - g21/g11)(g22/g12 - g12/g22) < 4 < (g11/g21)(g22/g12)
/// verbatim. Agreement with select_scheme's divergent flag is checked
/// by the test suite rather than assumed.
inline bool divergence_window(const ValidatedConfig& cfg) {
    cfg.require_positive_margins();
    const double g11 = cfg.g11(), g12 = cfg.g12(), g21 = cfg.g21(), g22 = cfg.g22();
    double left = (g11 / g21 - g21 / g11) * (g22 / g12 - g12 / g22);
    double right = (g11 / g21) * (g22 / g12);
    return left < 4.0 && 4.0 < right;
}

namespace detail {

/// Area under a sampled slope boundary by trapezoidal integration,
/// with the left end closed at s1 = 0.
inline double boundary_area(const SlopeRegionBoundary& b) {
    std::vector<SlopePoint> pts = b.points;
    std::sort(pts.begin(), pts.end(), [](const SlopePoint& a, const SlopePoint& c) { return a.s1 < c.s1; });
    double area = 0.0;
    double prev_s1 = 0.0, prev_s2 = pts.empty() ? 0.0 : pts.front().s2;
    for (const SlopePoint& p : pts) {
        area += (p.s1 - prev_s1) * 0.5 * (p.s2 + prev_s2);
        prev_s1 = p.s1;
        prev_s2 = p.s2;
    }
    return area;
}

} // namespace detail

/// Bit-energy penalty in dB per user plus slope-region area ratios
/// (secrecy over no-secrecy) estimated from sampled boundaries.
inline PenaltyReport secrecy_penalty(const ValidatedConfig& cfg, int grid_resolution) {
    cfg.require_positive_margins();
    auto [eb_sec_1, eb_sec_2] = eb_n0_min(cfg, Regime::secrecy);
    auto [eb_ns_1, eb_ns_2] = eb_n0_min(cfg, Regime::no_secrecy);
    PenaltyReport pr;
    pr.delta_eb_1 = to_db(eb_sec_1 / eb_ns_1);
    pr.delta_eb_2 = to_db(eb_sec_2 / eb_ns_2);
    pr.slope_shrink_tdma =
        detail::boundary_area(slope_region_boundary(cfg, Scheme::tdma, Regime::secrecy, grid_resolution)) /
        detail::boundary_area(slope_region_boundary(cfg, Scheme::tdma, Regime::no_secrecy, grid_resolution));
    pr.slope_shrink_mux =
        detail::boundary_area(slope_region_boundary(cfg, Scheme::multiplexed, Regime::secrecy, grid_resolution)) /
        detail::boundary_area(slope_region_boundary(cfg, Scheme::multiplexed, Regime::no_secrecy, grid_resolution));
    return pr;
}

} // namespace ifc

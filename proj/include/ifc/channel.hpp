#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "ifc/errors.hpp"

namespace ifc {

/// Raw parameters of a two-user Gaussian interference channel.
///
/// Gains are power gains |c_ij|^2 (dimensionless). g11/g22 are the direct
/// links, g12 is the cross gain from transmitter 2 into receiver 1 and g21
/// from transmitter 1 into receiver 2. sigma2 is the common noise variance,
/// p1/p2 the per-transmitter average power limits.
struct ChannelConfig {
    double g11{};
    double g12{};
    double g21{};
    double g22{};
    double sigma2{1.0};
    double p1{};
    double p2{};
};

/// Gain differences that control secrecy at low SNR: m1 = g11 - g21,
/// m2 = g22 - g12. A non-positive margin means the unintended receiver's
/// link is at least as strong as the intended one.
struct SecrecyMargin {
    double m1{};
    double m2{};
    bool positive1{};
    bool positive2{};

    bool both_positive() const { return positive1 && positive2; }
};

enum class RateUnits { nats, bits };

/// Squares the four amplitude gains c_ij into power gains |c_ij|^2.
inline void amplitude_to_power_gains(double c11, double c12, double c21, double c22,
                                     double& g11, double& g12, double& g21, double& g22) {
    g11 = c11 * c11;
    g12 = c12 * c12;
    g21 = c21 * c21;
    g22 = c22 * c22;
}

/// Converts a nonnegative rate between nats and bits per channel use.
inline double convert_rate(double value, RateUnits from, RateUnits to) {
    if (from == to) return value;
    return from == RateUnits::nats ? value / std::numbers::ln2 : value * std::numbers::ln2;
}

/// A ChannelConfig that passed validation, annotated with the derived
/// per-user SNR caps and the secrecy margins. Immutable once built.
class ValidatedConfig {
  public:
    static ValidatedConfig validate(const ChannelConfig& raw) { return ValidatedConfig(raw); }

    const ChannelConfig& raw() const { return cfg_; }
    double g11() const { return cfg_.g11; }
    double g12() const { return cfg_.g12; }
    double g21() const { return cfg_.g21; }
    double g22() const { return cfg_.g22; }
    double sigma2() const { return cfg_.sigma2; }

    /// Maximum SNR of user i, p_i / sigma^2.
    double snr1_max() const { return cfg_.p1 / cfg_.sigma2; }
    double snr2_max() const { return cfg_.p2 / cfg_.sigma2; }

    const SecrecyMargin& margin() const { return margin_; }

    /// Throws NonPositiveMargin unless both secrecy margins are positive.
    void require_positive_margins() const {
        if (!margin_.both_positive())
            throw NonPositiveMargin("operation requires g11 > g21 and g22 > g12");
    }

    /// Same channel with the two users exchanged.
    ValidatedConfig swapped_users() const {
        ChannelConfig s;
        s.g11 = cfg_.g22;
        s.g22 = cfg_.g11;
        s.g12 = cfg_.g21;
        s.g21 = cfg_.g12;
        s.sigma2 = cfg_.sigma2;
        s.p1 = cfg_.p2;
        s.p2 = cfg_.p1;
        return validate(s);
    }

  private:
    explicit ValidatedConfig(const ChannelConfig& raw) : cfg_(raw) {
        check_positive(raw.g11, "g11");
        check_positive(raw.g12, "g12");
        check_positive(raw.g21, "g21");
        check_positive(raw.g22, "g22");
        check_positive(raw.sigma2, "sigma2");
        check_positive(raw.p1, "p1");
        check_positive(raw.p2, "p2");
        if (!(raw.g12 / raw.g11 < 1.0))
            throw NotWeakInterference("g12/g11 = " + std::to_string(raw.g12 / raw.g11) + " >= 1");
        if (!(raw.g21 / raw.g22 < 1.0))
            throw NotWeakInterference("g21/g22 = " + std::to_string(raw.g21 / raw.g22) + " >= 1");
        if (!std::isfinite(snr1_max()) || !std::isfinite(snr2_max()))
            throw NonPositiveParameter("derived SNR not finite");
        margin_.m1 = raw.g11 - raw.g21;
        margin_.m2 = raw.g22 - raw.g12;
        margin_.positive1 = margin_.m1 > 0.0;
        margin_.positive2 = margin_.m2 > 0.0;
    }

    static void check_positive(double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw NonPositiveParameter(std::string(name) + " = " + std::to_string(v));
    }

    ChannelConfig cfg_;
    SecrecyMargin margin_;
};

inline ValidatedConfig validate_config(const ChannelConfig& raw) {
    return ValidatedConfig::validate(raw);
}

} // namespace ifc

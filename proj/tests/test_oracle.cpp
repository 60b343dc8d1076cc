#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ifc/oracle.hpp"

using namespace ifc;

namespace {

ValidatedConfig fig1() {
    ChannelConfig c;
    c.g11 = c.g22 = 1.0;
    c.g12 = c.g21 = 0.04;
    c.sigma2 = 1.0;
    c.p1 = c.p2 = 0.1;
    return validate_config(c);
}

} // namespace

TEST_CASE("fit_quadratic is exact on quadratics through the origin") {
    QuadraticFit fit = fit_quadratic([](double s) { return 3.0 * s - s * s; }, 0.01);
    CHECK(fit.a == Catch::Approx(3.0).epsilon(1e-12));
    CHECK(fit.b == Catch::Approx(-1.0).epsilon(1e-12));

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    std::uniform_real_distribution<double> logh(-6.0, -1.0);
    for (int i = 0; i < 200; ++i) {
        const double a = coef(rng), b = coef(rng);
        const double h = std::pow(10.0, logh(rng));
        QuadraticFit f = fit_quadratic([a, b](double s) { return a * s + b * s * s; }, h);
        CHECK(f.a == Catch::Approx(a).epsilon(1e-9).margin(1e-9));
        CHECK(f.b == Catch::Approx(b).epsilon(1e-6).margin(1e-6));
    }
}

TEST_CASE("fit_quadratic on ln(1+s)") {
    QuadraticFit fit = fit_quadratic([](double s) { return std::log1p(s); }, 1e-3);
    CHECK(std::fabs(fit.a - 1.0) < 1e-6);
    CHECK(std::fabs(2.0 * fit.b - -1.0) < 1e-2);
}

TEST_CASE("fit_quadratic of the zero function") {
    QuadraticFit fit = fit_quadratic([](double) { return 0.0; }, 1e-4);
    CHECK(fit.a == 0.0);
    CHECK(fit.b == 0.0);
}

TEST_CASE("fit_quadratic rejects degenerate steps") {
    CHECK_THROWS_AS(fit_quadratic([](double s) { return s; }, 0.0), DegenerateStep);
    CHECK_THROWS_AS(fit_quadratic([](double s) { return s; }, -1e-3), DegenerateStep);
    // values that underflow to subnormals carry no usable digits
    CHECK_THROWS_AS(fit_quadratic([](double) { return 1e-320; }, 1e-4), DegenerateStep);
}

TEST_CASE("verify_derivatives passes at the paper's baseline") {
    CHECK(verify_derivatives(fig1(), Scheme::tdma, 0.5, 1e-4, 1e-3).pass);
    CHECK(verify_derivatives(fig1(), Scheme::multiplexed, 1.0, 1e-4, 1e-3).pass);
}

TEST_CASE("verify_derivatives detects a corrupted second derivative") {
    // a 1% error must be visible above the fit's truncation at this h
    ValidatedConfig cfg = fig1();
    QuadraticFit fit = fit_quadratic(
        [&](double s) {
            return 0.5 * (std::log1p(cfg.g11() * s / 0.5) - std::log1p(cfg.g21() * s / 0.5));
        },
        1e-4);
    RateDerivatives honest = rate_derivatives(cfg, Scheme::tdma, 0.5);
    const double corrupted_d2 = honest.d2_r1 * 1.01;
    CHECK(std::fabs(2.0 * fit.b - corrupted_d2) / std::fabs(corrupted_d2) > 1e-4);
    CHECK(std::fabs(2.0 * fit.b - honest.d2_r1) / std::fabs(honest.d2_r1) < 1e-3);
}

TEST_CASE("verify_derivatives validates its step range") {
    CHECK_THROWS_AS(verify_derivatives(fig1(), Scheme::tdma, 0.5, 1e-7, 1e-3), ParamOutOfRange);
    CHECK_THROWS_AS(verify_derivatives(fig1(), Scheme::tdma, 0.5, 0.1, 1e-3), ParamOutOfRange);
}

TEST_CASE("containment of secrecy TDMA boundary in the no-secrecy region") {
    std::mt19937_64 rng(31);
    ValidatedConfig cfg = random_valid_config(rng);
    SlopeConstants sc = slope_constants(cfg);
    auto inner = slope_region_boundary(cfg, Scheme::tdma, Regime::secrecy, 101);
    ContainmentReport rep = verify_containment(
        inner.points,
        [&](const SlopePoint& p) { return tdma_region_violation(sc, Regime::no_secrecy, p); }, 0.0);
    CHECK(rep.contained);
    CHECK(rep.worst_violation < 0.0);
    CHECK(rep.samples == 101);
}

TEST_CASE("a boundary lies on its own region border") {
    std::mt19937_64 rng(37);
    ValidatedConfig cfg = random_valid_config(rng);
    SlopeConstants sc = slope_constants(cfg);
    auto b = slope_region_boundary(cfg, Scheme::tdma, Regime::secrecy, 51);
    ContainmentReport rep = verify_containment(
        b.points, [&](const SlopePoint& p) { return tdma_region_violation(sc, Regime::secrecy, p); },
        1e-12);
    CHECK(rep.contained);
    CHECK(std::fabs(rep.worst_violation) < 1e-12);
}

TEST_CASE("reverse containment fails") {
    std::mt19937_64 rng(41);
    ValidatedConfig cfg = random_valid_config(rng);
    SlopeConstants sc = slope_constants(cfg);
    auto outer = slope_region_boundary(cfg, Scheme::tdma, Regime::no_secrecy, 51);
    ContainmentReport rep = verify_containment(
        outer.points,
        [&](const SlopePoint& p) { return tdma_region_violation(sc, Regime::secrecy, p); }, 1e-9);
    CHECK_FALSE(rep.contained);
    CHECK(rep.worst_violation > 0.0);
}

TEST_CASE("bit-energy ladder limit") {
    const std::vector<double> ladder{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
    EbLimitReport sec = verify_eb_limit(fig1(), Regime::secrecy, ladder, 1e-4);
    CHECK(sec.pass);
    CHECK(sec.expected_1 == Catch::Approx(0.72202831308327636).epsilon(1e-12));

    EbLimitReport ns = verify_eb_limit(fig1(), Regime::no_secrecy, ladder, 1e-4);
    CHECK(ns.pass);
    CHECK(ns.expected_1 == Catch::Approx(std::numbers::ln2).epsilon(1e-14));

    ChannelConfig c = fig1().raw();
    c.g11 = 0.5;
    c.g21 = 0.5; // zero margin, flagged
    c.g22 = 2.0;
    c.g12 = 0.1;
    CHECK_THROWS_AS(verify_eb_limit(validate_config(c), Regime::secrecy, ladder, 1e-4),
                    NonPositiveMargin);
    CHECK_THROWS_AS(verify_eb_limit(fig1(), Regime::secrecy, {1e-3, 1e-2}, 1e-4), ParamOutOfRange);
}

TEST_CASE("random_valid_config is deterministic and well-formed") {
    std::mt19937_64 a(99), b(99);
    for (int i = 0; i < 100; ++i) {
        ValidatedConfig ca = random_valid_config(a);
        ValidatedConfig cb = random_valid_config(b);
        CHECK(ca.raw().g11 == cb.raw().g11);
        CHECK(ca.margin().both_positive());
    }
}

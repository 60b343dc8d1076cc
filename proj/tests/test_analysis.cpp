#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ifc/analysis.hpp"
#include "ifc/oracle.hpp"

using namespace ifc;

namespace {

ValidatedConfig make_cfg(double g12, double g21, double kappa = 1.0) {
    ChannelConfig c;
    c.g11 = kappa;
    c.g22 = kappa;
    c.g12 = kappa * g12;
    c.g21 = kappa * g21;
    c.sigma2 = 1.0;
    c.p1 = c.p2 = 1.0;
    return validate_config(c);
}

ValidatedConfig fig1() { return make_cfg(0.04, 0.04); }
ValidatedConfig fig4() { return make_cfg(0.4, 0.5); }
ValidatedConfig fig5() { return make_cfg(0.1, 0.2); }

} // namespace

TEST_CASE("phi thresholds at the paper's figure parameters") {
    auto [phi4, phi04] = phi_thresholds(fig4());
    CHECK(phi4 == Catch::Approx(1.2698412698412698).epsilon(1e-12));
    CHECK(phi04 == Catch::Approx(0.8).epsilon(1e-12));

    auto [phi5, phi05] = phi_thresholds(fig5());
    CHECK(phi5 == Catch::Approx(0.084175084175084175).epsilon(1e-12));
    CHECK(phi05 == Catch::Approx(0.08).epsilon(1e-12));
}

TEST_CASE("symmetric gain solving 4g^2/(1-g^2)^2 = 1 is a tie") {
    const double g = std::sqrt(2.0) - 1.0;
    auto [phi, phi0] = phi_thresholds(make_cfg(g, g));
    CHECK(phi == Catch::Approx(1.0).epsilon(1e-12));
    SchemeVerdict sv = select_scheme(make_cfg(g, g), 1e-9);
    CHECK(sv.verdict_secrecy == Verdict::tie_prefer_tdma);
}

TEST_CASE("scheme selection at figure 4 diverges between regimes") {
    SchemeVerdict sv = select_scheme(fig4());
    CHECK(sv.verdict_secrecy == Verdict::tdma_optimal);
    CHECK(sv.verdict_no_secrecy == Verdict::multiplexed_optimal);
    CHECK(sv.divergent);
}

TEST_CASE("scheme selection at figure 5 favors multiplexed in both regimes") {
    SchemeVerdict sv = select_scheme(fig5());
    CHECK(sv.verdict_secrecy == Verdict::multiplexed_optimal);
    CHECK(sv.verdict_no_secrecy == Verdict::multiplexed_optimal);
    CHECK_FALSE(sv.divergent);
}

TEST_CASE("divergence window evaluates the displayed inequality verbatim") {
    CHECK(divergence_window(fig4()));  // 1.5 * 2.1 = 3.15 < 4 < 5
    CHECK_FALSE(divergence_window(fig5()));  // 4.8 * 9.9 = 47.52 fails the left side
}

TEST_CASE("divergence window agrees with the phi characterization") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 1000; ++i) {
        ValidatedConfig cfg = random_valid_config(rng);
        auto [phi, phi0] = phi_thresholds(cfg);
        CHECK(divergence_window(cfg) == (phi > 1.0 && phi0 < 1.0));
    }
}

TEST_CASE("phi exceeds phi0 for every valid config with positive margins") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 1000; ++i) {
        ValidatedConfig cfg = random_valid_config(rng);
        auto [phi, phi0] = phi_thresholds(cfg);
        CHECK(phi > phi0);
        SlopeConstants sc = slope_constants(cfg);
        CHECK(sc.A > 0.0);
        CHECK(sc.A < 1.0);
        CHECK(sc.B > 0.0);
        CHECK(sc.B < 1.0);
    }
}

TEST_CASE("verdict matches slope-region geometry") {
    std::mt19937_64 rng(107);
    int tdma_cases = 0, mux_cases = 0;
    for (int i = 0; i < 200; ++i) {
        ValidatedConfig cfg = random_valid_config(rng);
        SchemeVerdict sv = select_scheme(cfg);
        SlopeConstants sc = slope_constants(cfg);
        auto [phi, phi0] = phi_thresholds(cfg);
        if (sv.verdict_secrecy == Verdict::tdma_optimal) {
            ++tdma_cases;
            auto mux = slope_region_boundary(cfg, Scheme::multiplexed, Regime::secrecy, 100);
            ContainmentReport rep = verify_containment(
                mux.points,
                [&](const SlopePoint& p) { return tdma_region_violation(sc, Regime::secrecy, p); },
                1e-9);
            CHECK(rep.contained);
        } else if (sv.verdict_secrecy == Verdict::multiplexed_optimal) {
            ++mux_cases;
            auto tdma = slope_region_boundary(cfg, Scheme::tdma, Regime::secrecy, 100);
            ContainmentReport rep = verify_containment(
                tdma.points,
                [&](const SlopePoint& p) {
                    return mux_region_violation(sc, phi, Regime::secrecy, phi0, p);
                },
                1e-9);
            CHECK(rep.contained);
        }
    }
    // the draw should exercise both verdicts
    CHECK(tdma_cases > 0);
    CHECK(mux_cases > 0);
}

TEST_CASE("secrecy penalty at figure 1 parameters") {
    PenaltyReport pr = secrecy_penalty(fig1(), 1001);
    CHECK(pr.delta_eb_1 == Catch::Approx(0.17728766960431587).epsilon(1e-9));
    CHECK(pr.delta_eb_2 == Catch::Approx(0.17728766960431587).epsilon(1e-9));
    // TDMA triangles give the exact area ratio A*B
    CHECK(pr.slope_shrink_tdma == Catch::Approx(0.85207100591715976).epsilon(1e-6));
    CHECK(pr.slope_shrink_mux > 0.0);
    CHECK(pr.slope_shrink_mux < 1.0);
}

TEST_CASE("penalty vanishes as cross gains vanish") {
    PenaltyReport pr = secrecy_penalty(make_cfg(1e-6, 1e-6), 2001);
    CHECK(pr.delta_eb_1 < 1e-5);
    CHECK(pr.delta_eb_2 < 1e-5);
    CHECK(pr.slope_shrink_tdma == Catch::Approx(1.0).epsilon(1e-5));
    CHECK(pr.slope_shrink_mux == Catch::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("scale invariance of thresholds, verdicts and area ratios") {
    for (double kappa : {0.25, 1.0, 7.5}) {
        ValidatedConfig base = fig4();
        ValidatedConfig scaled = make_cfg(0.4, 0.5, kappa);
        auto [phi_b, phi0_b] = phi_thresholds(base);
        auto [phi_s, phi0_s] = phi_thresholds(scaled);
        CHECK(phi_s == Catch::Approx(phi_b).epsilon(1e-12));
        CHECK(phi0_s == Catch::Approx(phi0_b).epsilon(1e-12));
        CHECK(select_scheme(scaled).verdict_secrecy == select_scheme(base).verdict_secrecy);
        PenaltyReport pb = secrecy_penalty(base, 501);
        PenaltyReport ps = secrecy_penalty(scaled, 501);
        CHECK(ps.slope_shrink_tdma == Catch::Approx(pb.slope_shrink_tdma).epsilon(1e-12));
        CHECK(ps.slope_shrink_mux == Catch::Approx(pb.slope_shrink_mux).epsilon(1e-12));
        // bit energies scale inversely with the common gain factor
        auto [eb_b, eb_b2] = eb_n0_min(base, Regime::secrecy);
        auto [eb_s, eb_s2] = eb_n0_min(scaled, Regime::secrecy);
        CHECK(eb_s == Catch::Approx(eb_b / kappa).epsilon(1e-12));
        CHECK(eb_s2 == Catch::Approx(eb_b2 / kappa).epsilon(1e-12));
    }
}

TEST_CASE("analysis operations reject flagged configs") {
    ChannelConfig c;
    c.g11 = 0.5;
    c.g22 = 2.0;
    c.g21 = 0.8;
    c.g12 = 0.1;
    c.sigma2 = 1.0;
    c.p1 = c.p2 = 1.0;
    ValidatedConfig flagged = validate_config(c);
    CHECK_THROWS_AS(phi_thresholds(flagged), NonPositiveMargin);
    CHECK_THROWS_AS(select_scheme(flagged), NonPositiveMargin);
    CHECK_THROWS_AS(divergence_window(flagged), NonPositiveMargin);
    CHECK_THROWS_AS(secrecy_penalty(flagged, 101), NonPositiveMargin);
}

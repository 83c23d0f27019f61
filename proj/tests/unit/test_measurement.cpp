#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "contextua/measurement.hpp"
#include "test_util.hpp"

using namespace contextua;
using namespace contextua::testutil;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;

BeamState random_beam(SplitMix64& rng, double intensity = 1.0) {
    return BeamState(random_unit_vec(rng, 4), intensity);
}
}  // namespace

TEST_CASE("polarization branch projector at theta=0 on |a,V)") {
    BeamState aV(CVec{1.0, 0.0, 0.0, 0.0}, 1.0);
    CVec out = matvec(projector_pol(0.0, Branch::Zero).matrix, aV.amplitudes);
    CHECK(max_abs_diff(out, CVec{0.5, 0.5, 0.0, 0.0}) <= 1e-15);
}

TEST_CASE("branch projectors are idempotent, complete and orthogonal") {
    SplitMix64 rng(801);
    for (int rep = 0; rep < 200; ++rep) {
        const double angle = rng.next_angle();
        for (bool pol : {true, false}) {
            CMat p0 = pol ? projector_pol(angle, Branch::Zero).matrix
                          : projector_path(angle, Branch::Zero).matrix;
            CMat pp = pol ? projector_pol(angle, Branch::Pi).matrix
                          : projector_path(angle, Branch::Pi).matrix;
            CHECK(max_abs_diff(matmul(p0, p0), p0) <= 1e-12);
            CHECK(max_abs_diff(add(p0, pp), CMat::identity(4)) <= 1e-12);
            CHECK(max_abs(matmul(p0, pp)) <= 1e-12);
            CHECK(is_hermitian(p0, 1e-12));
        }
    }
}

TEST_CASE("path branch projector at phi=0 spreads phi+ evenly") {
    BeamState s = bell_state(BellKind::PhiPlus, 1.0);
    CVec out = matvec(projector_path(0.0, Branch::Zero).matrix, s.amplitudes);
    const double q = 0.5 * 0.70710678118654752;
    CHECK(max_abs_diff(out, CVec{q, q, q, q}) <= 1e-15);
}

TEST_CASE("sigma observables square to identity, commute, and equal projector differences") {
    SplitMix64 rng(802);
    for (int rep = 0; rep < 100; ++rep) {
        const double theta = rng.next_angle();
        const double phi = rng.next_angle();
        CMat st = sigma_theta(theta).matrix;
        CMat sp = sigma_phi(phi).matrix;
        CHECK(max_abs_diff(matmul(st, st), CMat::identity(4)) <= 1e-12);
        CHECK(max_abs_diff(matmul(st, sp), matmul(sp, st)) <= 1e-12);
        CHECK(max_abs_diff(st, sub(projector_pol(theta, Branch::Zero).matrix,
                                   projector_pol(theta, Branch::Pi).matrix)) <= 1e-12);
        CHECK(max_abs_diff(sp, sub(projector_path(phi, Branch::Zero).matrix,
                                   projector_path(phi, Branch::Pi).matrix)) <= 1e-12);
    }
}

TEST_CASE("phi+ correlation at the axis points") {
    BeamState s = bell_state(BellKind::PhiPlus, 1.0);
    CHECK(std::abs(correlation_direct(s, {0.0, 0.0}) - 1.0) <= 1e-12);
    CHECK(std::abs(correlation_direct(s, {kPi / 2, 0.0})) <= 1e-12);
}

TEST_CASE("phi+ correlation follows cos(theta+phi) on an angle grid") {
    BeamState s = bell_state(BellKind::PhiPlus, 1.0);
    for (int i = 0; i < 25; ++i) {
        for (int j = 0; j < 25; ++j) {
            const double theta = i * (2 * kPi / 25);
            const double phi = j * (2 * kPi / 25);
            CHECK(std::abs(correlation_direct(s, {theta, phi}) - std::cos(theta + phi)) <= 1e-12);
        }
    }
}

TEST_CASE("a pure |a,V) beam has zero polarization coherence") {
    BeamState aV(CVec{1.0, 0.0, 0.0, 0.0}, 1.0);
    CHECK(std::abs(expectation(aV, sigma_theta(0.3))) <= 1e-15);
}

TEST_CASE("expectation rejects non-hermitian operators") {
    OpticalOperator bad = npbs();  // unitary but not hermitian
    BeamState s = bell_state(BellKind::PhiPlus, 1.0);
    CHECK_THROWS_AS(expectation(s, bad), std::invalid_argument);
}

TEST_CASE("product-state correlation factorizes and matches the doubled-angle closed form") {
    SplitMix64 rng(803);
    for (int rep = 0; rep < 300; ++rep) {
        const double a = rng.next_angle(), b = rng.next_angle();
        const double g = rng.next_angle(), d = rng.next_angle();
        const double theta = rng.next_angle(), phi = rng.next_angle();
        BeamState s = product_state(ProductStateParams(a, b, g, d), 1.0);
        const double direct = correlation_direct(s, {theta, phi});
        const double closed =
            std::sin(2 * a) * std::cos(b - theta) * std::sin(2 * g) * std::cos(d - phi);
        CHECK(std::abs(direct - closed) <= 1e-12);
    }
}

TEST_CASE("phi+ intensities are quarter-scaled interference fringes summing to the input") {
    BeamState s = bell_state(BellKind::PhiPlus, 1.0);
    SplitMix64 rng(804);
    for (int rep = 0; rep < 200; ++rep) {
        AnalyzerAngles a{rng.next_angle(), rng.next_angle()};
        IntensityQuad q = intensity_quad(s, a);
        CHECK(std::abs(q.i_00 - 0.25 * (1 + std::cos(a.theta + a.phi))) <= 1e-12);
        CHECK(std::abs(q.total() - 1.0) <= 1e-12);
    }
}

TEST_CASE("intensities are nonnegative and scale with beam intensity") {
    SplitMix64 rng(805);
    for (int rep = 0; rep < 200; ++rep) {
        BeamState s = random_beam(rng, 7.3);
        AnalyzerAngles a{rng.next_angle(), rng.next_angle()};
        IntensityQuad q = intensity_quad(s, a);
        CHECK(q.i_00 >= -1e-15);
        CHECK(q.i_pp >= -1e-15);
        CHECK(q.i_p0 >= -1e-15);
        CHECK(q.i_0p >= -1e-15);
        CHECK(std::abs(q.total() - 7.3) <= 1e-12);

        // ratio estimator is scale invariant
        BeamState unit(s.amplitudes, 1.0);
        IntensityQuad qu = intensity_quad(unit, a);
        CHECK(std::abs(correlation_from_intensities(q) - correlation_from_intensities(qu)) <=
              1e-12);
    }
}

TEST_CASE("the two correlation estimators agree on random states and angles") {
    SplitMix64 rng(806);
    for (int rep = 0; rep < 1000; ++rep) {
        BeamState s = random_beam(rng);
        AnalyzerAngles a{rng.next_angle(), rng.next_angle()};
        const double direct = correlation_direct(s, a);
        const double ratio = correlation_from_intensities(intensity_quad(s, a));
        CHECK(std::abs(direct - ratio) <= 1e-12);
        CHECK(std::abs(direct) <= 1.0 + 1e-12);
    }
}

TEST_CASE("phi+ ratio estimator reproduces cos(theta+phi)") {
    BeamState s = bell_state(BellKind::PhiPlus, 1.0);
    SplitMix64 rng(807);
    for (int rep = 0; rep < 200; ++rep) {
        AnalyzerAngles a{rng.next_angle(), rng.next_angle()};
        const double e = correlation_from_intensities(intensity_quad(s, a));
        CHECK(std::abs(e - std::cos(a.theta + a.phi)) <= 1e-12);
    }
}

TEST_CASE("a dark beam is rejected by the ratio estimator") {
    BeamState dark(bell_state(BellKind::PhiPlus, 1.0).amplitudes, 0.0);
    IntensityQuad q = intensity_quad(dark, {0.2, 0.4});
    CHECK_THROWS_AS(correlation_from_intensities(q), std::invalid_argument);
}

TEST_CASE("quad CSV row is round-trippable") {
    BeamState s = bell_state(BellKind::PhiPlus, 1.0);
    AnalyzerAngles a{0.37, 1.91};
    IntensityQuad q = intensity_quad(s, a);
    std::string row = quad_csv_row(a, q);
    double theta, phi, i00, ipp, ip0, i0p, e;
    REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf", &theta, &phi, &i00, &ipp, &ip0,
                        &i0p, &e) == 7);
    CHECK(theta == a.theta);
    CHECK(phi == a.phi);
    CHECK(i00 == q.i_00);
    CHECK(e == correlation_from_intensities(q));
}

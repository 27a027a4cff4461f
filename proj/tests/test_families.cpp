#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "curvcert/families.hpp"
#include "curvcert/thorpe.hpp"

using namespace curvcert;

TEST_CASE("Fubini-Study data") {
    const MetricPointData fs = fubini_study();
    const auto e = sym_eigen(fs.R.matrix());
    const double expect[6] = {0, 0, 2, 2, 2, 6};
    for (int i = 0; i < 6; ++i)
        CHECK(e.values[i] == doctest::Approx(expect[i]).epsilon(1e-12).scale(1.0));
    CHECK(fs.scal == doctest::Approx(24.0));
    CHECK(fs.R.scal() == doctest::Approx(24.0));
    // Einstein: Ric = (scal/4) g.
    CHECK((fs.R.ricci() - RealMat::identity(4) * 6.0).frobenius() <= 1e-10);
    CHECK((fs.ric - fs.R.ricci()).frobenius() <= 1e-10);

    const TauInterval iv = tau_interval(fs.R);
    REQUIRE_FALSE(iv.empty);
    CHECK(std::abs(iv.tauMin) <= 1e-6);
    CHECK(std::abs(iv.tauMax - 2.0) <= 1e-6);
    // Strict feasibility in the interior.
    CHECK(star_shift_min_eig(fs.R, 1.0) > 1e-3);
}

TEST_CASE("round sphere data") {
    const MetricPointData s = round_sphere(1.0);
    CHECK((s.R.matrix() - RealMat::identity(6)).frobenius() <= 1e-14);
    CHECK((s.ric - RealMat::identity(4) * 3.0).frobenius() <= 1e-12);
    const TauInterval iv = tau_interval(s.R);
    CHECK(std::abs(iv.tauMin + 1.0) <= 1e-6);
    CHECK(std::abs(iv.tauMax - 1.0) <= 1e-6);

    const MetricPointData s2 = round_sphere(2.0);
    CHECK(s2.scal == doctest::Approx(3.0));
    CHECK_THROWS_AS(round_sphere(0.0), std::invalid_argument);
}

TEST_CASE("sphere product data") {
    const MetricPointData p = product_spheres(1.0, 1.0);
    const TauInterval iv = tau_interval(p.R);
    REQUIRE_FALSE(iv.empty);
    CHECK(iv.tauMax - iv.tauMin <= 1e-6);
    CHECK(sec_min_bruteforce(p.R, 100).first >= -1e-9);
    CHECK(sec_min_bruteforce(p.R, 100).first <= 1e-9);
    CHECK(p.ric.trace() == doctest::Approx(p.scal).epsilon(1e-12));

    const MetricPointData q = product_spheres(1.0, 2.0);
    CHECK(q.scal == doctest::Approx(2.0 + 0.5));
}

TEST_CASE("profile boundary conditions and shape") {
    const GZProfile p = gz_profile(10.0, 12.0);
    CHECK(p.phi(0.0) == 0.0);
    CHECK(std::abs(p.phiPrime(0.0) - 0.5) <= 1e-12);
    CHECK(p.b() > 0.0);
    CHECK(p.phi(p.r0()) == doctest::Approx(p.b()).epsilon(1e-14));

    // Monotone, concave, and within the plateau bound at 1000 points.
    for (int i = 0; i <= 1000; ++i) {
        const double r = 12.0 * i / 1000;
        CHECK(p.phiPrime(r) >= -1e-12);
        CHECK(p.phiDoublePrime(r) <= 1e-12);
        CHECK(p.phi(r) <= p.b() * (1 + 1e-12));
    }
    // Exact plateau.
    for (double r : {10.0, 10.5, 11.0, 12.0}) {
        CHECK(p.phi(r) == p.b());
        CHECK(p.phiPrime(r) == 0.0);
        CHECK(p.phiDoublePrime(r) == 0.0);
    }
    CHECK_THROWS_AS(gz_profile(-1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(gz_profile(3.0, 2.0), std::invalid_argument);
}

TEST_CASE("profile interpolation is faithful to the defining equation") {
    const GZProfile p = gz_profile(10.0, 12.0);
    // phi' should match a central difference of phi away from grid nodes.
    for (double r = 0.37; r < 9.5; r += 0.83) {
        const double h = 1e-5;
        const double numeric = (p.phi(r + h) - p.phi(r - h)) / (2 * h);
        CHECK(p.phiPrime(r) == doctest::Approx(numeric).epsilon(1e-6));
        const double numeric2 = (p.phi(r + h) - 2 * p.phi(r) + p.phi(r - h)) / (h * h);
        CHECK(p.phiDoublePrime(r) == doctest::Approx(numeric2).epsilon(1e-3).scale(0.01));
    }
}

TEST_CASE("curvature data along the disk bundle") {
    const GZProfile p = gz_profile(10.0, 12.0);
    for (int i = 0; i <= 200; ++i) {
        const double r = 12.0 * i / 200;
        const MetricPointData d = gz_curvature_at(p, r);
        // Closed-form Ricci/scalar agree with the contraction of R.
        CHECK((d.ric - d.R.ricci()).frobenius() <= 1e-10 * (1 + d.ric.frobenius()));
        CHECK(d.scal == doctest::Approx(d.R.scal()).epsilon(1e-10));
        CHECK(d.ric.trace() == doctest::Approx(d.scal).epsilon(1e-10));
        // Shifted operator is PSD at the predicted tau.
        CHECK(star_shift_min_eig(d.R, d.tau) >= -1e-9);
        CHECK(d.tau <= 1e-15);
        // Ricci positivity and the pinching bound.
        CHECK(min_eigenvalue(d.ric) >= -1e-9);
        RealMat pinch = d.ric * -1.0;
        for (int k = 0; k < 4; ++k) pinch(k, k) += 0.5 * d.scal;
        CHECK(min_eigenvalue(pinch) > 0.0);
    }
}

TEST_CASE("plateau cylinder data") {
    const GZProfile p = gz_profile(10.0, 12.0);
    const double b = p.b();
    const MetricPointData d = gz_curvature_at(p, 11.0);
    CHECK(d.tau == 0.0);
    CHECK(d.scal == doctest::Approx(1.5 / (b * b)).epsilon(1e-9));
    // Cylinder over the sphere of radius 2b: rank-three curvature.
    const double k = 1.0 / (4 * b * b);
    RealMat expect(6, 6);
    expect(0, 0) = expect(2, 2) = expect(5, 5) = k;
    CHECK((d.R.matrix() - expect).frobenius() <= 1e-12);
}

TEST_CASE("feasibility sweep passes for the default profile") {
    const GZProfile p = gz_profile(10.0, 12.0);
    const GZValidation v = validate_gz(p, 500);
    CHECK(v.pass);
    CHECK(v.worstMargin >= 0.0);
}

TEST_CASE("the exactly-linear ramp profile is infeasible near the origin") {
    const GZProfile ramp = gz_profile_linear_ramp(10.0, 12.0);
    CHECK(std::abs(ramp.phiPrime(0.0) - 0.5) <= 1e-12);
    CHECK(ramp.phiDoublePrime(1.0) == 0.0);  // exactly linear zone
    const GZValidation v = validate_gz(ramp, 500);
    CHECK_FALSE(v.pass);
    // Violated already in the limit r -> 0 and throughout the linear zone.
    CHECK(v.firstViolationR >= 0.0);
    CHECK(v.firstViolationR < ramp.r0());
}

TEST_CASE("homothety to a requested plateau value") {
    const GZProfile p = gz_profile(10.0, 12.0);
    const GZProfile q = p.rescaledToPlateau(2.0);
    CHECK(q.b() == doctest::Approx(2.0).epsilon(1e-12));
    const double c = q.b() / p.b();
    CHECK(q.r0() == doctest::Approx(c * p.r0()).epsilon(1e-12));
    CHECK(q.phi(c * 3.0) == doctest::Approx(c * p.phi(3.0)).epsilon(1e-12));
    // Curvature scales by the inverse square of the homothety factor.
    const MetricPointData d0 = gz_curvature_at(p, 3.0);
    const MetricPointData d1 = gz_curvature_at(q, c * 3.0);
    CHECK(d1.scal == doctest::Approx(d0.scal / (c * c)).epsilon(1e-9));
    CHECK((d1.R.matrix() * (c * c) - d0.R.matrix()).frobenius() <= 1e-9);
}

TEST_CASE("glued metric: mirror symmetry and neck behavior") {
    const GZProfile p = gz_profile(10.0, 12.0);
    for (double r : {0.5, 3.0, 9.0, 11.0, 12.0}) {
        const MetricPointData a = cheeger_glued(p, r);
        const MetricPointData b = cheeger_glued(p, 2 * p.rmax() - r);
        CHECK((a.R.matrix() - b.R.matrix()).frobenius() <= 1e-14);
        CHECK(a.tau == b.tau);
    }
    // Neck midpoint is the cylinder with vanishing shift.
    const MetricPointData mid = cheeger_glued(p, p.rmax());
    CHECK(mid.tau == 0.0);

    double tauMax = -1e300, tauMin = 1e300;
    for (int i = 0; i <= 400; ++i) {
        const double r = 2 * p.rmax() * i / 400;
        const MetricPointData d = cheeger_glued(p, r);
        tauMax = std::max(tauMax, d.tau);
        tauMin = std::min(tauMin, d.tau);
        if (r >= p.r0() && r <= 2 * p.rmax() - p.r0()) CHECK(d.tau == 0.0);
    }
    CHECK(tauMax <= 1e-12);
    CHECK(tauMin < 0.0);
    CHECK_THROWS_AS(cheeger_glued(p, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(cheeger_glued(p, 24.5), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "curvcert/exterior.hpp"
#include "curvcert/rng.hpp"

using namespace curvcert;

namespace {

RealMat randomMat4(Rng& rng) {
    RealMat m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rng.gaussian();
    return m;
}

RealMat randomSym6(Rng& rng) {
    RealMat m(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) m(i, j) = m(j, i) = rng.gaussian();
    return m;
}

RealMat diag6(std::initializer_list<double> d) {
    RealMat m(6, 6);
    int i = 0;
    for (double x : d) m(i, i) = x, ++i;
    return m;
}

RealMat fubiniStudyK() {
    const RealMat p = change_of_basis_sdasd();
    return p * diag6({0, 0, 6, 2, 2, 2}) * p.transpose();
}

}  // namespace

TEST_CASE("exterior square of identity and diagonal maps") {
    CHECK((wedge2(RealMat::identity(4)) - RealMat::identity(6)).frobenius() <= 1e-15);

    RealMat d(4, 4);
    const double lam[4] = {2, 3, 5, 7};
    for (int i = 0; i < 4; ++i) d(i, i) = lam[i];
    const RealMat w = wedge2(d);
    for (int k = 0; k < 6; ++k) {
        const int a = TwoVectorBasis::pairs[k][0], b = TwoVectorBasis::pairs[k][1];
        CHECK(w(k, k) == doctest::Approx(lam[a] * lam[b]).epsilon(1e-14));
        for (int m = 0; m < 6; ++m)
            if (m != k) CHECK(w(k, m) == 0.0);
    }
}

TEST_CASE("exterior square is functorial and adjoint-compatible") {
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const RealMat a = randomMat4(rng), b = randomMat4(rng);
        const RealMat lhs = wedge2(a * b);
        const RealMat rhs = wedge2(a) * wedge2(b);
        CHECK((lhs - rhs).frobenius() <= 1e-10 * std::max(1.0, rhs.frobenius()));
        CHECK((wedge2(a.transpose()) - wedge2(a).transpose()).frobenius() <= 1e-12);
    }
}

TEST_CASE("exterior square singular values are pairwise products") {
    Rng rng(9);
    for (int t = 0; t < 25; ++t) {
        const RealMat l = randomMat4(rng);
        const auto sl = svd(l);
        std::vector<double> prods;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                prods.push_back(sl.singularValues[i] * sl.singularValues[j]);
        std::sort(prods.begin(), prods.end(), std::greater<>());
        const auto sw = svd(wedge2(l));
        for (int k = 0; k < 6; ++k)
            CHECK(sw.singularValues[k] ==
                  doctest::Approx(prods[k]).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("nonincreasing predicate") {
    CHECK(is_nonincreasing(wedge2(RealMat::identity(4) * 0.5)));
    RealMat d(4, 4);
    d(0, 0) = 2;
    d(1, 1) = d(2, 2) = d(3, 3) = 0.4;
    CHECK_FALSE(is_nonincreasing(d * RealMat::identity(4)));
    CHECK(is_nonincreasing(wedge2(d)));  // max pairwise product 0.8

    // Rotation in the (1,2)-plane: an isometry.
    RealMat rot = RealMat::identity(4);
    rot(0, 0) = rot(1, 1) = std::cos(0.7);
    rot(0, 1) = -std::sin(0.7);
    rot(1, 0) = std::sin(0.7);
    CHECK(is_nonincreasing(rot));
    CHECK(is_nonincreasing(wedge2(rot)));
}

TEST_CASE("Hodge star matrix and the two-vector bases") {
    const RealMat s = hodge_star();
    CHECK((s * s - RealMat::identity(6)).frobenius() <= 1e-15);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const double expect = (i / 2 == j / 2 && i != j) ? 1.0 : 0.0;
            CHECK(s(i, j) == expect);
        }
    const RealMat p = change_of_basis_sdasd();
    CHECK((p.transpose() * p - RealMat::identity(6)).frobenius() <= 1e-14);
    const RealMat conj = p.transpose() * s * p;
    const RealMat expect = diag6({1, 1, 1, -1, -1, -1});
    CHECK((conj - expect).frobenius() <= 1e-14);
}

TEST_CASE("curvature operator validation") {
    CHECK_THROWS_AS(CurvatureOperator{hodge_star()}, std::invalid_argument);  // Bianchi fails
    RealMat notSym(6, 6);
    notSym(0, 1) = 1.0;
    CHECK_THROWS_AS(CurvatureOperator{notSym}, std::invalid_argument);
    CHECK_NOTHROW(CurvatureOperator(RealMat::identity(6)));
}

TEST_CASE("Bianchi projection of random symmetric operators") {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        const RealMat proj = CurvatureOperator::bianchiProject(randomSym6(rng));
        CHECK(CurvatureOperator::bianchiResidual(proj) <= 1e-10 * std::max(1.0, proj.frobenius()));
        CHECK_NOTHROW(CurvatureOperator{proj});
    }
}

TEST_CASE("Ricci and scalar curvature of model operators") {
    const CurvatureOperator round(RealMat::identity(6));
    const RealMat ric = round.ricci();
    CHECK((ric - RealMat::identity(4) * 3.0).frobenius() <= 1e-12);
    CHECK(round.scal() == doctest::Approx(12.0));

    const CurvatureOperator zero(RealMat(6, 6));
    CHECK(zero.ricci().frobenius() <= 1e-15);
    CHECK(zero.scal() == 0.0);
}

TEST_CASE("trace of Ricci equals scalar curvature") {
    Rng rng(33);
    for (int t = 0; t < 500; ++t) {
        const CurvatureOperator R(CurvatureOperator::bianchiProject(randomSym6(rng)));
        CHECK(R.ricci().trace() == doctest::Approx(R.scal()).epsilon(1e-10));
    }
}

TEST_CASE("planes satisfy the quadric and norm invariants") {
    Rng rng(2);
    const RealMat star = hodge_star();
    for (int t = 0; t < 100; ++t) {
        std::array<double, 3> a{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        std::array<double, 3> b{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        const Plane p(a, b);
        const Vec6& s = p.sigma();
        double n2 = 0, q = 0;
        for (int i = 0; i < 6; ++i) {
            n2 += s[i] * s[i];
            for (int j = 0; j < 6; ++j) q += s[i] * star(i, j) * s[j];
        }
        CHECK(std::abs(n2 - 1.0) <= 1e-12);
        CHECK(std::abs(q) <= 1e-12);
    }
    CHECK_THROWS_AS(Plane(Vec6{1, 1, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("sectional curvature evaluations") {
    const CurvatureOperator round(RealMat::identity(6));
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        std::array<double, 3> a{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        std::array<double, 3> b{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        CHECK(sec(round, Plane(a, b)) == doctest::Approx(1.0).epsilon(1e-12));
    }

    // Product of unit spheres: coordinate planes of each factor have
    // curvature 1, mixed planes 0.
    const CurvatureOperator prod(diag6({1, 1, 0, 0, 0, 0}));
    CHECK(sec(prod, Plane(Vec6{1, 0, 0, 0, 0, 0})) == doctest::Approx(1.0));
    CHECK(sec(prod, Plane(Vec6{0, 0, 1, 0, 0, 0})) == doctest::Approx(0.0));
}

TEST_CASE("brute-force sectional extrema") {
    const CurvatureOperator round(RealMat::identity(6));
    const auto [minRound, argRound] = sec_min_bruteforce(round, 64);
    CHECK(minRound == doctest::Approx(1.0).epsilon(1e-9));

    const CurvatureOperator fs(fubiniStudyK());
    const SecScanResult fsScan = sec_scan_bruteforce(fs, 200);
    CHECK(fsScan.minValue >= 1.0 - 1e-3);
    CHECK(fsScan.minValue <= 1.0 + 1e-9);
    CHECK(fsScan.maxValue >= 4.0 - 1e-3);
    CHECK(fsScan.maxValue <= 4.0 + 1e-9);

    const CurvatureOperator indef(diag6({1, -1, 0, 0, 0, 0}));
    const auto [minIndef, argIndef] = sec_min_bruteforce(indef, 64);
    CHECK(minIndef < 0.0);
    CHECK(sec(indef, argIndef) == doctest::Approx(minIndef).epsilon(1e-12));
}

TEST_CASE("orientation reversal conjugates the star operator to its negative") {
    Rng rng(12);
    RealMat d(4, 4);
    d(0, 0) = d(1, 1) = d(2, 2) = 1;
    d(3, 3) = -1;
    const RealMat D = wedge2(d);
    CHECK((D * hodge_star() * D + hodge_star()).frobenius() <= 1e-14);
    for (int t = 0; t < 20; ++t) {
        const CurvatureOperator R(CurvatureOperator::bianchiProject(randomSym6(rng)));
        const CurvatureOperator rev = reverse_orientation(R);
        CHECK(rev.scal() == doctest::Approx(R.scal()).epsilon(1e-12));
        CHECK_NOTHROW(CurvatureOperator(rev.matrix()));
        // Reversing twice restores the operator.
        CHECK((reverse_orientation(rev).matrix() - R.matrix()).frobenius() <= 1e-12);
    }
}

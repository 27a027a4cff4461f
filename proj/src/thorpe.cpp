#include "curvcert/thorpe.hpp"

#include <cmath>
#include <stdexcept>

namespace curvcert {

namespace {

constexpr double kGolden = 0.61803398874989484820;

struct Objective {
    RealMat r;
    RealMat star;

    double operator()(double tau) const {
        RealMat m = r;
        for (int b = 0; b < 3; ++b) {
            m(2 * b, 2 * b + 1) += tau;
            m(2 * b + 1, 2 * b) += tau;
        }
        return min_eigenvalue(m);
    }
};

// Maximize the concave lambda(tau) over [lo, hi] by golden section.
std::pair<double, double> goldenMax(const Objective& f, double lo, double hi, double xtol) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        }
    }
    return f1 > f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// On [inside, outside] with f(inside) >= target > f(outside), find the
// crossing f(tau) = target to 1e-9 absolute in tau.
double bisectCrossing(const Objective& f, double inside, double outside, double target) {
    for (int it = 0; it < 200 && std::abs(outside - inside) > 1e-9; ++it) {
        const double mid = 0.5 * (inside + outside);
        if (f(mid) >= target)
            inside = mid;
        else
            outside = mid;
    }
    return inside;
}

}  // namespace

double star_shift_min_eig(const CurvatureOperator& R, double tau) {
    Objective f{R.matrix(), hodge_star()};
    return f(tau);
}

TauInterval tau_interval(const CurvatureOperator& R) {
    const Objective f{R.matrix(), hodge_star()};
    const double scale = std::max(1.0, R.matrix().frobenius());
    // Beyond ||R|| + 1 the star term dominates and lambda is negative.
    const double bracket = R.matrix().frobenius() + 1.0;

    const auto [tauStar, fStar] = goldenMax(f, -bracket, bracket, 1e-11);

    // Two-tier tolerance: feasibility is decided with the coarse slack, but
    // endpoints are located against a much tighter target so degenerate
    // (single-point) intervals come out with negligible width.
    const double feasTol = 1e-9 * scale;
    const double edgeTarget = -1e-12 * scale;

    TauInterval iv;
    if (fStar < -feasTol) return iv;  // empty

    iv.empty = false;
    iv.strict = fStar >= 1e-9 * scale;
    if (fStar < edgeTarget) {
        // Feasible only within the tolerance band; report the maximizer.
        iv.tauMin = iv.tauMax = tauStar;
        return iv;
    }
    iv.tauMin = bisectCrossing(f, tauStar, -bracket, edgeTarget);
    iv.tauMax = bisectCrossing(f, tauStar, bracket, edgeTarget);
    return iv;
}

SecNonnegCertificate sec_nonneg(const CurvatureOperator& R, int gridDensity) {
    SecNonnegCertificate cert;
    cert.interval = tau_interval(R);
    if (!cert.interval.empty) {
        cert.nonneg = true;
        cert.feasibleTau = cert.interval.midpoint();
        return cert;
    }
    auto [minV, plane] = sec_min_bruteforce(R, gridDensity);
    const double scale = std::max(1.0, R.matrix().frobenius());
    if (minV >= 1e-6 * scale)
        throw std::logic_error(
            "sec_nonneg: internal inconsistency - no feasible shift yet the "
            "sectional-curvature scan found minimum " + std::to_string(minV));
    cert.nonneg = false;
    cert.counterexample = plane;
    cert.counterexampleValue = minV;
    return cert;
}

std::optional<double> sign_constrained_tau(const CurvatureOperator& R, TauSign sign) {
    const TauInterval iv = tau_interval(R);
    if (iv.empty) return std::nullopt;
    const double lo = sign == TauSign::Nonpositive ? iv.tauMin : std::max(iv.tauMin, 0.0);
    const double hi = sign == TauSign::Nonpositive ? std::min(iv.tauMax, 0.0) : iv.tauMax;
    // Endpoint tolerance: a boundary touch at 0 still counts.
    if (lo > hi + 1e-9) return std::nullopt;
    if (lo > hi) return 0.0;
    const double mid = 0.5 * (lo + hi);
    return sign == TauSign::Nonpositive ? std::min(mid, 0.0) : std::max(mid, 0.0);
}

}  // namespace curvcert

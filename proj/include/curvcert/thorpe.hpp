#pragma once

#include <optional>
#include <variant>

#include "curvcert/exterior.hpp"

namespace curvcert {

/// Closed interval of shifts tau with R + tau*star positive-semidefinite.
/// Width zero (a single feasible tau) and emptiness are both valid outcomes.
struct TauInterval {
    bool empty = true;
    double tauMin = 0.0;
    double tauMax = 0.0;
    /// True when some tau achieves strict positive-definiteness.
    bool strict = false;

    bool contains(double tau) const { return !empty && tauMin <= tau && tau <= tauMax; }
    double midpoint() const { return 0.5 * (tauMin + tauMax); }
};

/// min eigenvalue of R + tau*star; concave in tau.
double star_shift_min_eig(const CurvatureOperator& R, double tau);

/// Exact feasibility interval, endpoints located by golden-section
/// maximization of the concave minimum eigenvalue followed by bisection.
TauInterval tau_interval(const CurvatureOperator& R);

/// Certificate for sec >= 0: either a feasible shift or an explicit plane
/// of negative sectional curvature found by the brute-force scan.
struct SecNonnegCertificate {
    bool nonneg = false;
    double feasibleTau = 0.0;  // valid when nonneg
    TauInterval interval;
    std::optional<Plane> counterexample;  // set when !nonneg
    double counterexampleValue = 0.0;
};

SecNonnegCertificate sec_nonneg(const CurvatureOperator& R, int gridDensity = 100);

enum class TauSign { Nonpositive, Nonnegative };

/// A feasible tau of the requested sign, when the interval meets the
/// half-line; prefers the interior of the intersection.
std::optional<double> sign_constrained_tau(const CurvatureOperator& R, TauSign sign);

}  // namespace curvcert

#pragma once

#include <string>
#include <vector>

#include "curvcert/exterior.hpp"

namespace curvcert {

/// Per-point curvature data of an example metric.
struct MetricPointData {
    CurvatureOperator R;
    RealMat ric;      // 4x4
    double scal;
    bool hasTau;      // true for the cohomogeneity-one family
    double tau;       // the unique feasible shift, when hasTau
    std::string label;
};

MetricPointData fubini_study();
MetricPointData round_sphere(double radius);
MetricPointData product_spheres(double radiusA, double radiusB);

/// Rotationally symmetric profile for the cohomogeneity-one metric on the
/// disk bundle: phi(0) = 0, phi'(0) = 1/2, phi' >= 0, phi'' <= 0, and
/// phi == b exactly on [r0, rmax].
///
/// Two constructions are provided:
///  - the default solves phi' = (1/2) ((4B^2 - 3 phi^2)/4B^2)^3 and tapers
///    it to zero with a smooth cutoff supported in [0.8 r0, r0]; the
///    concavity margin of the closed-form right-hand side keeps the
///    curvature operator feasible at every radius;
///  - a "linear ramp" (phi exactly linear until the cutoff) that violates
///    feasibility near r = 0 and exists as a negative control for
///    validate_gz.
class GZProfile {
public:
    enum class Kind { Concave, LinearRamp };

    double b() const { return scale_ * b_; }
    double r0() const { return scale_ * r0_; }
    double rmax() const { return scale_ * rmax_; }
    Kind kind() const { return kind_; }

    double phi(double r) const;
    double phiPrime(double r) const;
    double phiDoublePrime(double r) const;
    /// -phi''/phi with the analytic limit at phi = 0.
    double concavityRatio(double r) const;

    /// Homothetic copy with plateau value bRequested: all lengths scale by
    /// bRequested / b(), curvatures by the inverse square.
    GZProfile rescaledToPlateau(double bRequested) const;

private:
    friend GZProfile gz_profile(double r0, double rmax);
    friend GZProfile gz_profile_linear_ramp(double r0, double rmax);
    GZProfile() = default;

    double shapeValue(double r) const;  // grid lookup + Hermite interpolation
    double zeta(double r) const;        // smooth cutoff, 1 on [0,w0], 0 past r0
    double zetaPrime(double r) const;
    double odeRhs(double phi) const;    // phi' as a function of phi (uncut)
    double odeRhsPrime(double phi) const;

    Kind kind_ = Kind::Concave;
    double b_ = 0, r0_ = 0, rmax_ = 0;
    double scale_ = 1.0;   // homothety factor relative to the stored shape
    double B_ = 0;         // asymptote of the uncut concave solution
    double w0_ = 0;        // cutoff window start
    double h_ = 0;         // shape grid spacing
    std::vector<double> grid_;  // shape phi values at multiples of h_
};

/// Default feasible profile; b is an output (the value phi(r0)).
GZProfile gz_profile(double r0, double rmax);

/// Negative control: exactly-linear start, infeasible near r = 0.
GZProfile gz_profile_linear_ramp(double r0, double rmax);

/// Curvature data of the disk-bundle metric at radius r in [0, rmax]:
/// blocks of the curvature operator, the Ricci/scalar closed forms, and
/// the unique feasible shift tau = -phi'/2b^2.
MetricPointData gz_curvature_at(const GZProfile& p, double r);

struct GZValidation {
    bool pass;
    double worstMargin;  // min over the sweep of the block determinant slack
    double worstR;
    double firstViolationR;  // meaningful when !pass
};

/// Sweep of the feasibility condition R(r) + tau(r) * star >= 0.
GZValidation validate_gz(const GZProfile& p, int gridDensity);

/// Double disk bundle glued along the cylindrical neck: parameter range
/// [0, 2 rmax], mirror-symmetric about rmax.
MetricPointData cheeger_glued(const GZProfile& p, double r);

}  // namespace curvcert

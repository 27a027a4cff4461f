#pragma once

#include <array>
#include <optional>

#include "curvcert/exterior.hpp"
#include "curvcert/weitzenbock.hpp"

namespace curvcert {

/// Pointwise boundary data: second fundamental form of the boundary
/// 3-manifold with respect to the inward unit normal, an orthonormal frame
/// of the boundary tangent space with its normal, and the competitor's
/// mean curvature. Mean curvature of the domain side is trace(II).
struct BoundaryData {
    RealMat secondFundamentalForm;  // 3x3 symmetric
    /// Columns: inward normal then the three tangent frame vectors.
    /// Defaults to (-e1, e2, e3, e4).
    RealMat frame;
    double meanCurvatureN = 0.0;

    static RealMat defaultFrame();
};

/// Curvature-operator-shaped carrier of the second fundamental form:
///   Q(nu ^ f_i) = nu ^ II(f_i),  Q = 0 on tangent ^ tangent.
/// Symmetric, Bianchi, trace(Q) = trace(II), and Q >= 0 iff II >= 0.
CurvatureOperator build_Q(const BoundaryData& bd);

/// Boundary endomorphism A = -(1/2) H_N Id - R-endo(Q, l') with l' the
/// isometric boundary extension determined by the frame. Hermitian.
SpinorEndo build_A_endo(const BoundaryData& bd);

/// Minimum eigenvalue of [-A - (1/2)(H_N - H_M) Id] restricted to
/// S+ (x) S+; nonnegative (up to tolerance) whenever II >= 0.
/// Throws when II is indefinite beyond tolerance, unless convexity
/// enforcement is disabled (used to demonstrate failure for non-convex
/// boundaries).
double mean_curvature_bound(const BoundaryData& bd, bool enforceConvexity = true);

}  // namespace curvcert

#pragma once

#include <string>

#include "curvcert/clifford.hpp"
#include "curvcert/exterior.hpp"
#include "curvcert/rng.hpp"

namespace curvcert {

/// 16x16 endomorphism of S(W) (x) S(V) in the chirality-adapted tensor
/// basis, with a tag recording which construction produced it.
struct SpinorEndo {
    CMat matrix;
    std::string tag;
};

/// Curvature term of the twisted Weitzenboeck formula:
///   -2 sum_i Xi(beta_i) (x) Xi(R(L(beta_i)))
/// over an orthonormal basis {beta_i} of Lambda^2 W, L the exterior square
/// of l. Hermitian; commutes with both chirality projectors.
SpinorEndo build_R_endo(const CurvatureOperator& R, const RealMat& l);

/// Hodge-type counterpart:
///   -sum_i (Xi(L*(a_i)) (x) 1 + 1 (x) Xi(a_i)) o (Xi(L*(R a_i)) (x) 1 + 1 (x) Xi(R a_i))
/// over an orthonormal basis {a_i} of Lambda^2 V. Accepts any symmetric
/// 6x6 operator (in particular the Hodge star), not just Bianchi ones.
SpinorEndo build_T_endo(const RealMat& Rsym, const RealMat& l);

/// Rebuild either endomorphism summing over the columns of an orthonormal
/// basis `Q` of Lambda^2 instead of the standard one; used to verify that
/// the construction is basis-independent.
SpinorEndo build_R_endo_in_basis(const CurvatureOperator& R, const RealMat& l, const RealMat& Q);
SpinorEndo build_T_endo_in_basis(const RealMat& Rsym, const RealMat& l, const RealMat& Q);

/// Frobenius residual of the identity
///   R-endo = T-endo - (1/4) tr(L* R L) Id - (1/8) scal_R Id.
double check_rt_identity(const CurvatureOperator& R, const RealMat& l);

struct TraceBound {
    double lhs;    // tr(L* o R o L)
    double rhs;    // scal_R / 2
    double slack;  // rhs - lhs
};

/// Trace inequality for operators of nonnegative sectional curvature and
/// area-nonincreasing maps; throws with a diagnostic when either
/// precondition fails.
TraceBound trace_bound(const CurvatureOperator& R, const RealMat& l);

struct RigidityProbe {
    double minSlack;
    RealMat worstMap;
};

/// Sample non-isometric maps with nonincreasing exterior square and verify
/// the trace-bound slack stays strictly positive. Requires the strict
/// pinching (scal/2) g > Ric > 0; throws when the hypothesis fails.
RigidityProbe rigidity_probe(const CurvatureOperator& R, int samples, std::uint64_t seed = 0);

/// Random map whose exterior square is nonincreasing but which is not an
/// isometry (some singular value differs from 1 by at least 0.01).
RealMat random_area_nonincreasing_map(Rng& rng, bool forbidIsometry);

struct ExtremalityReport {
    bool areaNonincreasing = false;
    bool scalInequalityHolds = false;
    double traceSlack = 0.0;
    double tShiftedMin = 0.0;   // min eig of T(R + tau*star, L) on S+ x S+
    double tStarTermMin = 0.0;  // min eig of -tau * T(star, L) on S+ x S+
    double tPsdMin = 0.0;       // min eig of T(R, L) on S+ x S+
    double weitzenboeckGap = 0.0;
    bool rigidityFlag = false;
};

/// Pointwise certificate that an area-nonincreasing competitor with
/// scal_N >= scal_M cannot break the curvature term of the Weitzenboeck
/// formula: reports the positivity split of the Hodge-type term for the
/// given nonpositive shift and the resulting spectral gap
///   min eig [ (1/4) scal_N + R-endo ]|_{S+ x S+} - (1/4)(scal_N - scal_M).
ExtremalityReport extremality_certificate(const CurvatureOperator& R_M, double tau,
                                          double scal_N, const RealMat& l);

}  // namespace curvcert

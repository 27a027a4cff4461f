#include "curvcert/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace curvcert {

namespace {

// K coordinates of v ^ w for 4-vectors v, w.
Vec6 wedgeVectors(const std::array<double, 4>& v, const std::array<double, 4>& w) {
    Vec6 r{};
    for (int k = 0; k < 6; ++k) {
        const int a = TwoVectorBasis::pairs[k][0], b = TwoVectorBasis::pairs[k][1];
        r[k] = v[a] * w[b] - v[b] * w[a];
    }
    return r;
}

std::array<double, 4> frameColumn(const RealMat& f, int j) {
    return {f(0, j), f(1, j), f(2, j), f(3, j)};
}

void validate(const BoundaryData& bd) {
    const RealMat& ii = bd.secondFundamentalForm;
    if (ii.rows() != 3 || ii.cols() != 3)
        throw std::invalid_argument("BoundaryData: second fundamental form must be 3x3");
    if ((ii - ii.transpose()).frobenius() > 1e-12 * std::max(1.0, ii.frobenius()))
        throw std::invalid_argument("BoundaryData: second fundamental form not symmetric");
    const RealMat& f = bd.frame;
    if (f.rows() != 4 || f.cols() != 4)
        throw std::invalid_argument("BoundaryData: frame must be 4 columns of R^4");
    const RealMat g = f.transpose() * f - RealMat::identity(4);
    if (g.frobenius() > 1e-10)
        throw std::invalid_argument("BoundaryData: frame not orthonormal");
}

}  // namespace

RealMat BoundaryData::defaultFrame() {
    RealMat f(4, 4);
    f(0, 0) = -1.0;  // inward normal -e1
    f(1, 1) = 1.0;
    f(2, 2) = 1.0;
    f(3, 3) = 1.0;
    return f;
}

CurvatureOperator build_Q(const BoundaryData& bd) {
    validate(bd);
    const std::array<double, 4> nu = frameColumn(bd.frame, 0);
    std::array<Vec6, 3> u;
    for (int i = 0; i < 3; ++i) u[i] = wedgeVectors(nu, frameColumn(bd.frame, i + 1));

    RealMat q(6, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double c = bd.secondFundamentalForm(i, j);
            if (c == 0.0) continue;
            for (int a = 0; a < 6; ++a)
                for (int b = 0; b < 6; ++b) q(a, b) += c * u[i][a] * u[j][b];
        }
    return CurvatureOperator(q);
}

SpinorEndo build_A_endo(const BoundaryData& bd) {
    const CurvatureOperator q = build_Q(bd);
    // The boundary comparison map is an isometry matching the frames.
    SpinorEndo r = build_R_endo(q, RealMat::identity(4));
    CMat a = r.matrix * cplx(-1.0);
    a -= CMat::identity(16) * cplx(0.5 * bd.meanCurvatureN);
    return {std::move(a), "boundary-term"};
}

double mean_curvature_bound(const BoundaryData& bd, bool enforceConvexity) {
    const RealMat& ii = bd.secondFundamentalForm;
    if (enforceConvexity && min_eigenvalue(ii) < -1e-9 * (1.0 + ii.frobenius()))
        throw std::invalid_argument(
            "mean_curvature_bound: second fundamental form is not "
            "positive-semidefinite (boundary not convex)");
    const double hM = ii.trace();
    CMat operand = build_A_endo(bd).matrix * cplx(-1.0);
    operand -= CMat::identity(16) * cplx(0.5 * (bd.meanCurvatureN - hM));
    return min_eigenvalue(chirality_blocks(operand)[0]);
}

}  // namespace curvcert

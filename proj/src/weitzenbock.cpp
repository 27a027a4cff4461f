#include "curvcert/weitzenbock.hpp"

#include <cmath>
#include <stdexcept>

#include "curvcert/thorpe.hpp"

namespace curvcert {

namespace {

Vec6 column(const RealMat& m, int j) {
    Vec6 v{};
    for (int i = 0; i < 6; ++i) v[i] = m(i, j);
    return v;
}

Vec6 apply(const RealMat& m, const Vec6& v) {
    Vec6 r{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i] += m(i, j) * v[j];
    return r;
}

CMat buildR(const RealMat& r, const RealMat& l, const RealMat& basis) {
    const CliffordRep& cl = clifford();
    const RealMat L = wedge2(l);
    CMat out(16, 16);
    for (int i = 0; i < 6; ++i) {
        const Vec6 beta = column(basis, i);
        const Vec6 rlBeta = apply(r, apply(L, beta));
        out += kron(cl.xi0_inv(beta), cl.xi0_inv(rlBeta));
    }
    return out * cplx(-2.0);
}

CMat buildT(const RealMat& r, const RealMat& l, const RealMat& basis) {
    const CliffordRep& cl = clifford();
    const RealMat Lstar = wedge2(l.transpose());
    const CMat id4 = CMat::identity(4);
    CMat out(16, 16);
    for (int i = 0; i < 6; ++i) {
        const Vec6 alpha = column(basis, i);
        const Vec6 rAlpha = apply(r, alpha);
        const CMat first = kron(cl.xi0_inv(apply(Lstar, alpha)), id4) +
                           kron(id4, cl.xi0_inv(alpha));
        const CMat second = kron(cl.xi0_inv(apply(Lstar, rAlpha)), id4) +
                            kron(id4, cl.xi0_inv(rAlpha));
        out += first * second;
    }
    return out * cplx(-1.0);
}

void checkSymmetric6(const RealMat& m, const char* what) {
    if (m.rows() != 6 || m.cols() != 6)
        throw std::invalid_argument(std::string(what) + ": expected a 6x6 matrix");
    const double asym = (m - m.transpose()).frobenius();
    if (asym > 1e-12 * std::max(1.0, m.frobenius()))
        throw std::invalid_argument(std::string(what) + ": matrix not symmetric");
}

RealMat randomRotation4(Rng& rng) {
    // Gram-Schmidt of a Gaussian matrix.
    RealMat g(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = rng.gaussian();
    for (int c = 0; c < 4; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            double dot = 0;
            for (int i = 0; i < 4; ++i) dot += g(i, c) * g(i, prev);
            for (int i = 0; i < 4; ++i) g(i, c) -= dot * g(i, prev);
        }
        double nrm = 0;
        for (int i = 0; i < 4; ++i) nrm += g(i, c) * g(i, c);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-8) return randomRotation4(rng);  // degenerate draw, retry
        for (int i = 0; i < 4; ++i) g(i, c) /= nrm;
    }
    return g;
}

}  // namespace

SpinorEndo build_R_endo(const CurvatureOperator& R, const RealMat& l) {
    return {buildR(R.matrix(), l, RealMat::identity(6)), "curvature-term"};
}

SpinorEndo build_T_endo(const RealMat& Rsym, const RealMat& l) {
    checkSymmetric6(Rsym, "build_T_endo");
    return {buildT(Rsym, l, RealMat::identity(6)), "hodge-term"};
}

SpinorEndo build_R_endo_in_basis(const CurvatureOperator& R, const RealMat& l,
                                 const RealMat& Q) {
    return {buildR(R.matrix(), l, Q), "curvature-term"};
}

SpinorEndo build_T_endo_in_basis(const RealMat& Rsym, const RealMat& l, const RealMat& Q) {
    checkSymmetric6(Rsym, "build_T_endo");
    return {buildT(Rsym, l, Q), "hodge-term"};
}

double check_rt_identity(const CurvatureOperator& R, const RealMat& l) {
    const RealMat L = wedge2(l);
    const double traceTerm = (L.transpose() * R.matrix() * L).trace();
    const CMat lhs = build_R_endo(R, l).matrix;
    CMat rhs = build_T_endo(R.matrix(), l).matrix;
    rhs -= CMat::identity(16) * cplx(0.25 * traceTerm + 0.125 * R.scal());
    return (lhs - rhs).frobenius();
}

TraceBound trace_bound(const CurvatureOperator& R, const RealMat& l) {
    if (tau_interval(R).empty)
        throw std::invalid_argument(
            "trace_bound: operator has planes of negative sectional curvature "
            "(no feasible star shift)");
    const RealMat L = wedge2(l);
    if (!is_nonincreasing(L))
        throw std::invalid_argument(
            "trace_bound: exterior square of the map is not nonincreasing");
    TraceBound tb;
    tb.lhs = (L.transpose() * R.matrix() * L).trace();
    tb.rhs = 0.5 * R.scal();
    tb.slack = tb.rhs - tb.lhs;
    return tb;
}

RealMat random_area_nonincreasing_map(Rng& rng, bool forbidIsometry) {
    for (;;) {
        // Singular values with all pairwise products <= 1.
        double s[4];
        for (double& x : s) x = rng.uniform(0.0, 1.6);
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (s[i] * s[j] > 1.0) { ok = false; break; }
        if (!ok) continue;
        if (forbidIsometry) {
            double dev = 0;
            for (double x : s) dev = std::max(dev, std::abs(x - 1.0));
            if (dev < 0.01) continue;
        }
        RealMat d(4, 4);
        for (int i = 0; i < 4; ++i) d(i, i) = s[i];
        return randomRotation4(rng) * d * randomRotation4(rng);
    }
}

RigidityProbe rigidity_probe(const CurvatureOperator& R, int samples, std::uint64_t seed) {
    const RealMat ric = R.ricci();
    const double scal = R.scal();
    RealMat pinch = ric * -1.0;
    for (int i = 0; i < 4; ++i) pinch(i, i) += 0.5 * scal;
    if (min_eigenvalue(ric) <= 1e-9 || min_eigenvalue(pinch) <= 1e-9)
        throw std::invalid_argument(
            "rigidity_probe: needs (scal/2) g > Ric > 0 with positive margins");

    RigidityProbe probe{1e300, RealMat::identity(4)};
    for (int k = 0; k < samples; ++k) {
        Rng rng = Rng::split(seed, static_cast<std::uint64_t>(k));
        const RealMat l = random_area_nonincreasing_map(rng, /*forbidIsometry=*/true);
        const TraceBound tb = trace_bound(R, l);
        if (tb.slack < probe.minSlack) {
            probe.minSlack = tb.slack;
            probe.worstMap = l;
        }
    }
    return probe;
}

ExtremalityReport extremality_certificate(const CurvatureOperator& R_M, double tau,
                                          double scal_N, const RealMat& l) {
    const double scale = std::max(1.0, R_M.matrix().frobenius());
    if (tau > 0.0)
        throw std::invalid_argument("extremality_certificate: shift must be nonpositive");
    if (star_shift_min_eig(R_M, tau) < -1e-9 * scale)
        throw std::invalid_argument(
            "extremality_certificate: R + tau*star is not positive-semidefinite");
    const RealMat L = wedge2(l);

    ExtremalityReport rep;
    rep.areaNonincreasing = is_nonincreasing(L);
    if (!rep.areaNonincreasing)
        throw std::invalid_argument(
            "extremality_certificate: exterior square of the competitor map is "
            "not nonincreasing");
    const double scal_M = R_M.scal();
    rep.scalInequalityHolds = scal_N >= scal_M - 1e-9 * (1.0 + std::abs(scal_M));

    const RealMat star = hodge_star();
    const RealMat shifted = R_M.matrix() + star * tau;
    rep.tShiftedMin = min_eigenvalue(chirality_blocks(build_T_endo(shifted, l).matrix)[0]);
    rep.tStarTermMin =
        min_eigenvalue(chirality_blocks(build_T_endo(star, l).matrix * cplx(-tau))[0]);
    rep.tPsdMin = min_eigenvalue(chirality_blocks(build_T_endo(R_M.matrix(), l).matrix)[0]);

    rep.traceSlack = 0.5 * scal_M - (L.transpose() * R_M.matrix() * L).trace();

    CMat gapOp = chirality_blocks(build_R_endo(R_M, l).matrix)[0];
    gapOp += CMat::identity(4) * cplx(0.25 * scal_N);
    rep.weitzenboeckGap = min_eigenvalue(gapOp) - 0.25 * (scal_N - scal_M);
    rep.rigidityFlag = std::abs(rep.weitzenboeckGap) <= 1e-6 * scale;
    return rep;
}

}  // namespace curvcert

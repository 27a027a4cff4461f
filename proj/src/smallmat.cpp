#include "curvcert/smallmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace curvcert {

namespace {

double offDiagNorm(const CMat& a) {
    double s = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic Jacobi pass over all (p,q) pairs. The complex rotation is a
// phase factored out of a(p,q) followed by a real Givens rotation.
void jacobiSweep(CMat& a, CMat& v) {
    const int n = a.rows();
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const cplx apq = a(p, q);
            const double g = std::abs(apq);
            if (g == 0.0) continue;
            const cplx u = apq / g;  // phase
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double theta = (aqq - app) / (2.0 * g);
            const double t = (theta >= 0 ? 1.0 : -1.0) /
                             (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            // Columns p,q of the rotation: (c, -s*conj(u)) and (s*u, c) after
            // absorbing the phase into column q of the p-row.
            const cplx rp = c, rq = s * u;       // new col p gets c, col q gets s*u on row p
            const cplx sp = -s * std::conj(u);   // row q entries
            const cplx sq = c;
            for (int i = 0; i < n; ++i) {
                const cplx aip = a(i, p), aiq = a(i, q);
                a(i, p) = aip * rp + aiq * sp;
                a(i, q) = aip * rq + aiq * sq;
            }
            for (int j = 0; j < n; ++j) {
                const cplx apj = a(p, j), aqj = a(q, j);
                a(p, j) = std::conj(rp) * apj + std::conj(sp) * aqj;
                a(q, j) = std::conj(rq) * apj + std::conj(sq) * aqj;
            }
            for (int i = 0; i < n; ++i) {
                const cplx vip = v(i, p), viq = v(i, q);
                v(i, p) = vip * rp + viq * sp;
                v(i, q) = vip * rq + viq * sq;
            }
        }
    }
}

EigenResult<cplx> jacobiEigen(CMat a) {
    const int n = a.rows();
    const double scale = a.frobenius();
    CMat v = CMat::identity(n);
    const double tol = 1e-13 * std::max(scale, 1e-300);
    for (int sweep = 0; sweep < 100 && offDiagNorm(a) > tol; ++sweep) jacobiSweep(a, v);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = a(i, i).real();
    std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });

    EigenResult<cplx> r;
    r.values.resize(n);
    r.vectors = CMat(n, n);
    for (int k = 0; k < n; ++k) {
        r.values[k] = d[order[k]];
        for (int i = 0; i < n; ++i) r.vectors(i, k) = v(i, order[k]);
    }
    return r;
}

void requireHermitian(const CMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("sym_eigen: matrix not square");
    const double asym = (m - m.adjoint()).frobenius();
    const double scale = m.frobenius();
    if (asym > 1e-12 * std::max(scale, 1e-300) && asym > 1e-300)
        throw std::invalid_argument("sym_eigen: input not Hermitian, asymmetry " +
                                    std::to_string(asym) + " vs norm " + std::to_string(scale));
}

}  // namespace

EigenResult<cplx> sym_eigen(const CMat& m) {
    requireHermitian(m);
    // Symmetrize: the Jacobi iteration assumes exact Hermiticity.
    CMat h = (m + m.adjoint()) * cplx(0.5);
    return jacobiEigen(std::move(h));
}

EigenResult<double> sym_eigen(const RealMat& m) {
    EigenResult<cplx> ec = sym_eigen(toComplex(m));
    // Real symmetric input keeps the Jacobi rotations real up to a unit
    // phase per column; strip it.
    EigenResult<double> r;
    r.values = ec.values;
    const int n = m.rows();
    r.vectors = RealMat(n, n);
    for (int k = 0; k < n; ++k) {
        int imax = 0;
        double amax = 0;
        for (int i = 0; i < n; ++i) {
            const double a = std::abs(ec.vectors(i, k));
            if (a > amax) { amax = a; imax = i; }
        }
        cplx phase = amax > 0 ? ec.vectors(imax, k) / amax : cplx(1.0);
        double nrm = 0;
        for (int i = 0; i < n; ++i) {
            r.vectors(i, k) = (ec.vectors(i, k) / phase).real();
            nrm += r.vectors(i, k) * r.vectors(i, k);
        }
        nrm = std::sqrt(nrm);
        for (int i = 0; i < n; ++i) r.vectors(i, k) /= nrm;
    }
    return r;
}

double min_eigenvalue(const CMat& m) { return sym_eigen(m).values.front(); }
double min_eigenvalue(const RealMat& m) { return sym_eigen(m).values.front(); }

SVDResult svd(const RealMat& l) {
    if (l.rows() != l.cols()) throw std::invalid_argument("svd: matrix not square");
    if (l.rows() > 6) throw std::invalid_argument("svd: dimension > 6 unsupported");
    const int n = l.rows();

    // Gram matrix l^T l, eigenvalues are squared singular values.
    EigenResult<double> e = sym_eigen(l.transpose() * l);

    SVDResult r;
    r.singularValues.resize(n);
    r.leftBasis = RealMat(n, n);
    r.rightBasis = RealMat(n, n);
    const double scale = l.frobenius();
    const double tinyRank = 1e-13 * std::max(scale, 1e-300);

    // Descending order: reverse the ascending eigen output.
    for (int k = 0; k < n; ++k) {
        const int src = n - 1 - k;
        const double s = std::sqrt(std::max(e.values[src], 0.0));
        r.singularValues[k] = s;
        for (int i = 0; i < n; ++i) r.rightBasis(i, k) = e.vectors(i, src);
    }

    // v_k = l(w_k) / s_k where the singular value is nonzero; complete the
    // rest with Gram-Schmidt against the standard basis.
    int filled = 0;
    for (int k = 0; k < n; ++k) {
        if (r.singularValues[k] <= tinyRank) break;
        for (int i = 0; i < n; ++i) {
            double acc = 0;
            for (int j = 0; j < n; ++j) acc += l(i, j) * r.rightBasis(j, k);
            r.leftBasis(i, k) = acc / r.singularValues[k];
        }
        ++filled;
    }
    for (int cand = 0; cand < n && filled < n; ++cand) {
        std::vector<double> v(n, 0.0);
        v[cand] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k < filled; ++k) {
                double dot = 0;
                for (int i = 0; i < n; ++i) dot += v[i] * r.leftBasis(i, k);
                for (int i = 0; i < n; ++i) v[i] -= dot * r.leftBasis(i, k);
            }
        double nrm = 0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm < 1e-6) continue;  // candidate nearly in the span, try next
        for (int i = 0; i < n; ++i) r.leftBasis(i, filled) = v[i] / nrm;
        ++filled;
    }
    return r;
}

}  // namespace curvcert

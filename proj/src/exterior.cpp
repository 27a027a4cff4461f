#include "curvcert/exterior.hpp"

#include <cmath>
#include <stdexcept>

namespace curvcert {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

std::array<double, 3> fibonacciPoint(int i, int n) {
    // Golden-angle spiral: near-uniform deterministic coverage of S^2.
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double theta = i * 2.39996322972865332;
    return {rho * std::cos(theta), rho * std::sin(theta), z};
}

void normalize3(std::array<double, 3>& v) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (n == 0.0) throw std::invalid_argument("Plane: zero direction vector");
    for (double& x : v) x /= n;
}

}  // namespace

std::pair<int, double> TwoVectorBasis::indexOf(int i, int j) {
    if (i == j || i < 0 || j < 0 || i > 3 || j > 3)
        throw std::invalid_argument("TwoVectorBasis::indexOf: bad vector indices");
    for (int k = 0; k < 6; ++k) {
        if (pairs[k][0] == i && pairs[k][1] == j) return {k, 1.0};
        if (pairs[k][0] == j && pairs[k][1] == i) return {k, -1.0};
    }
    throw std::logic_error("TwoVectorBasis::indexOf: basis table incomplete");
}

RealMat hodge_star() {
    RealMat s(6, 6);
    for (int b = 0; b < 3; ++b) {
        s(2 * b, 2 * b + 1) = 1.0;
        s(2 * b + 1, 2 * b) = 1.0;
    }
    return s;
}

RealMat change_of_basis_sdasd() {
    RealMat p(6, 6);
    for (int k = 0; k < 3; ++k) {
        // Self-dual column: (beta_{2k} + beta_{2k+1})/sqrt2, eigenvalue +1.
        p(2 * k, k) = kSqrtHalf;
        p(2 * k + 1, k) = kSqrtHalf;
        // Anti-self-dual column, eigenvalue -1.
        p(2 * k, 3 + k) = kSqrtHalf;
        p(2 * k + 1, 3 + k) = -kSqrtHalf;
    }
    return p;
}

RealMat wedge2(const RealMat& l) {
    if (l.rows() != 4 || l.cols() != 4)
        throw std::invalid_argument("wedge2: expected a 4x4 map");
    RealMat m(6, 6);
    for (int a = 0; a < 6; ++a) {
        const int ia = TwoVectorBasis::pairs[a][0], ja = TwoVectorBasis::pairs[a][1];
        for (int b = 0; b < 6; ++b) {
            const int ib = TwoVectorBasis::pairs[b][0], jb = TwoVectorBasis::pairs[b][1];
            // <l(e_ib) ^ l(e_jb), e_ia ^ e_ja> = 2x2 minor.
            m(a, b) = l(ia, ib) * l(ja, jb) - l(ia, jb) * l(ja, ib);
        }
    }
    return m;
}

bool is_nonincreasing(const RealMat& m) {
    const SVDResult s = svd(m);
    return s.singularValues.front() <= 1.0 + 1e-12;
}

CurvatureOperator::CurvatureOperator(const RealMat& m) : m_(m) {
    if (m.rows() != 6 || m.cols() != 6)
        throw std::invalid_argument("CurvatureOperator: expected a 6x6 matrix");
    const double scale = std::max(1.0, m.frobenius());
    const double asym = (m - m.transpose()).frobenius();
    if (asym > 1e-12 * scale)
        throw std::invalid_argument("CurvatureOperator: matrix not symmetric, asymmetry " +
                                    std::to_string(asym));
    const double bres = bianchiResidual(m);
    if (bres > 1e-10 * scale)
        throw std::invalid_argument("CurvatureOperator: Bianchi identity fails, residual " +
                                    std::to_string(bres));
}

double CurvatureOperator::scal() const { return 2.0 * m_.trace(); }

RealMat CurvatureOperator::ricci() const {
    RealMat ric(4, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            double s = 0;
            for (int k = 0; k < 4; ++k) {
                if (k == a || k == b) continue;
                const auto [ka, sa] = TwoVectorBasis::indexOf(k, a);
                const auto [kb, sb] = TwoVectorBasis::indexOf(k, b);
                s += sa * sb * m_(ka, kb);
            }
            if (a == b) {
                // k == b contributes <R(e_b^e_a), e_b^e_a> = 0 only when a==b
                // makes e_k^e_a vanish; for the diagonal, k==a is the only
                // excluded index.
                s = 0;
                for (int k = 0; k < 4; ++k) {
                    if (k == a) continue;
                    const auto [ka, sa] = TwoVectorBasis::indexOf(k, a);
                    s += m_(ka, ka);
                }
            }
            ric(a, b) = s;
            ric(b, a) = s;
        }
    return ric;
}

double CurvatureOperator::bianchiResidual(const RealMat& m) {
    // <star, m> = tr(star * m); star spans the complement of the Bianchi
    // operators inside the symmetric endomorphisms of Lambda^2.
    double t = 0;
    for (int b = 0; b < 3; ++b) t += m(2 * b, 2 * b + 1) + m(2 * b + 1, 2 * b);
    return std::abs(t);
}

RealMat CurvatureOperator::bianchiProject(const RealMat& s) {
    RealMat sym = (s + s.transpose()) * 0.5;
    double t = 0;
    for (int b = 0; b < 3; ++b) t += sym(2 * b, 2 * b + 1) + sym(2 * b + 1, 2 * b);
    // <star, star> = 6.
    return sym - hodge_star() * (t / 6.0);
}

Plane::Plane(const std::array<double, 3>& unitSelfDual,
             const std::array<double, 3>& unitAntiSelfDual) {
    std::array<double, 3> a = unitSelfDual, b = unitAntiSelfDual;
    normalize3(a);
    normalize3(b);
    const RealMat p = change_of_basis_sdasd();
    for (int i = 0; i < 6; ++i) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += p(i, k) * a[k] + p(i, 3 + k) * b[k];
        sigma_[i] = s * kSqrtHalf;
    }
}

Plane::Plane(const Vec6& sigmaK) : sigma_(sigmaK) {
    double n2 = 0, q = 0;
    for (int i = 0; i < 6; ++i) n2 += sigma_[i] * sigma_[i];
    for (int b = 0; b < 3; ++b) q += 2.0 * sigma_[2 * b] * sigma_[2 * b + 1];
    if (std::abs(n2 - 1.0) > 1e-9)
        throw std::invalid_argument("Plane: coordinates not unit-norm");
    if (std::abs(q) > 1e-9)
        throw std::invalid_argument("Plane: not decomposable, quadric residual " +
                                    std::to_string(std::abs(q)));
}

std::array<double, 3> Plane::selfDualUnit() const {
    const RealMat p = change_of_basis_sdasd();
    std::array<double, 3> a{};
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 6; ++i) a[k] += p(i, k) * sigma_[i];
    for (double& x : a) x /= kSqrtHalf;
    return a;
}

std::array<double, 3> Plane::antiSelfDualUnit() const {
    const RealMat p = change_of_basis_sdasd();
    std::array<double, 3> b{};
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 6; ++i) b[k] += p(i, 3 + k) * sigma_[i];
    for (double& x : b) x /= kSqrtHalf;
    return b;
}

double sec(const CurvatureOperator& R, const Plane& p) {
    const Vec6& s = p.sigma();
    double v = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) v += s[i] * R.matrix()(i, j) * s[j];
    return v;
}

namespace {

struct SdasdForm {
    // sec(alpha, beta) = a^T A a + 2 a^T B b + b^T C b with a, b the S^2
    // unit directions scaled by 1/sqrt2.
    double A[3][3], B[3][3], C[3][3];

    explicit SdasdForm(const CurvatureOperator& R) {
        const RealMat p = change_of_basis_sdasd();
        const RealMat rp = p.transpose() * R.matrix() * p;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                A[i][j] = 0.5 * rp(i, j);
                B[i][j] = 0.5 * rp(i, 3 + j);
                C[i][j] = 0.5 * rp(3 + i, 3 + j);
            }
    }

    double value(const std::array<double, 3>& a, const std::array<double, 3>& b) const {
        double v = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                v += a[i] * A[i][j] * a[j] + 2.0 * a[i] * B[i][j] * b[j] +
                     b[i] * C[i][j] * b[j];
        return v;
    }

    void gradient(const std::array<double, 3>& a, const std::array<double, 3>& b,
                  std::array<double, 3>& ga, std::array<double, 3>& gb) const {
        for (int i = 0; i < 3; ++i) {
            ga[i] = 0;
            gb[i] = 0;
            for (int j = 0; j < 3; ++j) {
                ga[i] += 2.0 * (A[i][j] * a[j] + B[i][j] * b[j]);
                gb[i] += 2.0 * (C[i][j] * b[j] + B[j][i] * a[j]);
            }
        }
    }
};

// Projected-gradient descent of sign*value on S^2 x S^2 with backtracking.
double polish(const SdasdForm& f, double sign, std::array<double, 3>& a,
              std::array<double, 3>& b) {
    double best = sign * f.value(a, b);
    double step = 0.25;
    std::array<double, 3> ga, gb;
    for (int it = 0; it < 2000 && step > 1e-14; ++it) {
        f.gradient(a, b, ga, gb);
        std::array<double, 3> na, nb;
        for (int i = 0; i < 3; ++i) {
            na[i] = a[i] - sign * step * ga[i];
            nb[i] = b[i] - sign * step * gb[i];
        }
        normalize3(na);
        normalize3(nb);
        const double v = sign * f.value(na, nb);
        if (v < best - 1e-16) {
            best = v;
            a = na;
            b = nb;
            step *= 1.3;
        } else {
            step *= 0.5;
        }
    }
    return sign * best;
}

}  // namespace

SecScanResult sec_scan_bruteforce(const CurvatureOperator& R, int gridDensity) {
    if (gridDensity < 8)
        throw std::invalid_argument("sec_scan_bruteforce: grid density must be >= 8");
    const SdasdForm f(R);
    const int n = gridDensity;

    std::vector<std::array<double, 3>> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = fibonacciPoint(i, n);

    double minV = 1e300, maxV = -1e300;
    std::array<double, 3> minA{}, minB{}, maxA{}, maxB{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double v = f.value(pts[i], pts[j]);
            if (v < minV) {
                minV = v;
                minA = pts[i];
                minB = pts[j];
            }
            if (v > maxV) {
                maxV = v;
                maxA = pts[i];
                maxB = pts[j];
            }
        }

    minV = polish(f, 1.0, minA, minB);
    maxV = polish(f, -1.0, maxA, maxB);
    return SecScanResult{minV, maxV, Plane(minA, minB), Plane(maxA, maxB)};
}

std::pair<double, Plane> sec_min_bruteforce(const CurvatureOperator& R, int gridDensity) {
    SecScanResult r = sec_scan_bruteforce(R, gridDensity);
    return {r.minValue, r.argmin};
}

CurvatureOperator reverse_orientation(const CurvatureOperator& R) {
    RealMat d(4, 4);
    d(0, 0) = d(1, 1) = d(2, 2) = 1.0;
    d(3, 3) = -1.0;
    const RealMat D = wedge2(d);
    return CurvatureOperator(D * R.matrix() * D);
}

}  // namespace curvcert

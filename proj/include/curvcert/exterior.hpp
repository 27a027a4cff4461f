#pragma once

#include <array>
#include <optional>

#include "curvcert/smallmat.hpp"

namespace curvcert {

/// Fixed ordered basis of Lambda^2 R^4 used throughout:
///   K = (e1^e2, e3^e4, e1^e3, e4^e2, e1^e4, e2^e3).
/// Consecutive entries are Hodge-dual pairs, so the star operator is
/// diag(H,H,H) with H = [[0,1],[1,0]].
struct TwoVectorBasis {
    // 0-indexed vector pairs (i,j) meaning e_i ^ e_j.
    static constexpr std::array<std::array<int, 2>, 6> pairs{
        {{0, 1}, {2, 3}, {0, 2}, {3, 1}, {0, 3}, {1, 2}}};

    // K-index and sign of e_i ^ e_j (i != j).
    static std::pair<int, double> indexOf(int i, int j);
};

using Vec6 = std::array<double, 6>;

RealMat hodge_star();

/// Orthogonal P whose columns are the self-dual then anti-self-dual basis
/// expressed in K coordinates; P^T * star_K * P = diag(1,1,1,-1,-1,-1).
RealMat change_of_basis_sdasd();

/// Matrix of the exterior square of a 4x4 map in the K basis.
RealMat wedge2(const RealMat& l);

/// True iff every singular value is <= 1 + 1e-12.
bool is_nonincreasing(const RealMat& m);

/// Symmetric 6x6 operator on Lambda^2 satisfying the first Bianchi
/// identity (equivalently, orthogonal to the star operator).
class CurvatureOperator {
public:
    explicit CurvatureOperator(const RealMat& m);

    const RealMat& matrix() const { return m_; }
    double scal() const;          // 2 tr R
    RealMat ricci() const;        // 4x4 symmetric

    static double bianchiResidual(const RealMat& m);  // |tr(star*m)|
    /// Orthogonal projection of a symmetric 6x6 onto the Bianchi subspace.
    static RealMat bianchiProject(const RealMat& s);

private:
    RealMat m_;
};

/// Oriented 2-plane as a point of the Plucker quadric: sigma = alpha + beta
/// with alpha in Lambda^+, beta in Lambda^-, each of norm 1/sqrt(2).
class Plane {
public:
    /// From unit vectors on the two 2-spheres (scaled internally by 1/sqrt2).
    Plane(const std::array<double, 3>& unitSelfDual,
          const std::array<double, 3>& unitAntiSelfDual);
    /// From raw K coordinates; validates the quadric and unit-norm invariants.
    explicit Plane(const Vec6& sigmaK);

    const Vec6& sigma() const { return sigma_; }
    std::array<double, 3> selfDualUnit() const;
    std::array<double, 3> antiSelfDualUnit() const;

private:
    Vec6 sigma_;
};

double sec(const CurvatureOperator& R, const Plane& p);

struct SecScanResult {
    double minValue;
    double maxValue;
    Plane argmin;
    Plane argmax;
};

/// Brute-force extrema of sec over a product of Fibonacci-sphere grids on
/// S^2(Lambda^+) x S^2(Lambda^-), with a local polish of the best grid
/// points (projected gradient on the product of spheres).
SecScanResult sec_scan_bruteforce(const CurvatureOperator& R, int gridDensity);

/// Minimum only, matching the oracle contract used by the Finsler-Thorpe
/// equivalence checks.
std::pair<double, Plane> sec_min_bruteforce(const CurvatureOperator& R, int gridDensity);

/// Conjugation by the exterior square of diag(1,1,1,-1): same metric data,
/// opposite orientation (star effectively negated).
CurvatureOperator reverse_orientation(const CurvatureOperator& R);

}  // namespace curvcert

#pragma once

#include <array>

#include "curvcert/exterior.hpp"
#include "curvcert/smallmat.hpp"

namespace curvcert {

/// Fixed matrix model of the complex Clifford algebra of R^4 acting on
/// S = C^4, with the convention v.v = -|v|^2.
///
/// Generators are Pauli tensor products:
///   e1 = i s1 x s0,  e2 = i s2 x s0,  e3 = i s3 x s1,  e4 = i s3 x s2,
/// giving the volume element omega = -e1 e2 e3 e4 = s3 x s3. The
/// chirality-adapted ordering permutes coordinates so omega's diagonal is
/// (+1, +1, -1, -1): positive half-spinors first.
class CliffordRep {
public:
    CliffordRep();

    const std::array<CMat, 4>& generators() const { return e_; }
    const CMat& omega() const { return omega_; }
    const CMat& projPlus() const { return projPlus_; }
    const CMat& projMinus() const { return projMinus_; }

    /// Coordinate indices of S^+ then S^- in the raw tensor basis.
    const std::array<int, 4>& chiralityOrder() const { return order_; }

    /// Clifford action of a real vector.
    CMat gamma(const std::array<double, 4>& v) const;

    /// Lie-algebra embedding of an infinitesimal rotation: linear extension
    /// of e_i ^ e_j -> (1/2) e_i e_j, input in K coordinates. Images are
    /// skew-Hermitian and commute with the chirality projectors.
    CMat xi0_inv(const Vec6& alphaK) const;

private:
    std::array<CMat, 4> e_;
    CMat omega_, projPlus_, projMinus_;
    std::array<int, 4> order_;
};

/// Shared immutable instance.
const CliffordRep& clifford();

/// The four m x m chirality blocks of a square matrix, m = dim/2, in the
/// chirality-adapted basis: [0]=++ , [1]=+- , [2]=-+ , [3]=-- .
/// Accepts 4x4 matrices on S and 16x16 matrices on S(W) x S(V); for the
/// tensor case "+" means the S+(W) x S+(V) (resp. S-(W) x S-(V)) summand
/// and the off-diagonal blocks collect the mixed-chirality summands.
std::array<CMat, 4> chirality_blocks(const CMat& m);

/// Kronecker product, result dimension rows(a)*rows(b) <= 16.
CMat kron(const CMat& a, const CMat& b);

}  // namespace curvcert

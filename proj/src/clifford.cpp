#include "curvcert/clifford.hpp"

#include <stdexcept>

namespace curvcert {

namespace {

const cplx kI(0.0, 1.0);

CMat pauli(int k) {
    CMat m(2, 2);
    switch (k) {
        case 0: m(0, 0) = 1; m(1, 1) = 1; break;
        case 1: m(0, 1) = 1; m(1, 0) = 1; break;
        case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
        case 3: m(0, 0) = 1; m(1, 1) = -1; break;
        default: throw std::logic_error("pauli: bad index");
    }
    return m;
}

CMat permuteConjugate(const CMat& m, const std::array<int, 4>& order) {
    CMat r(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = m(order[i], order[j]);
    return r;
}

}  // namespace

CMat kron(const CMat& a, const CMat& b) {
    const int na = a.rows(), nb = b.rows();
    CMat r(na * nb, na * nb);
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < na; ++j1) {
            const cplx v = a(i1, j1);
            if (v == cplx{}) continue;
            for (int i2 = 0; i2 < nb; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    r(i1 * nb + i2, j1 * nb + j2) = v * b(i2, j2);
        }
    return r;
}

CliffordRep::CliffordRep() {
    std::array<CMat, 4> raw = {
        kron(pauli(1), pauli(0)) * kI,
        kron(pauli(2), pauli(0)) * kI,
        kron(pauli(3), pauli(1)) * kI,
        kron(pauli(3), pauli(2)) * kI,
    };
    // omega = -e1 e2 e3 e4 = s3 x s3, diagonal (+1, -1, -1, +1) in the raw
    // tensor basis; reorder so the +1 eigenspace comes first.
    order_ = {0, 3, 1, 2};
    for (int k = 0; k < 4; ++k) e_[k] = permuteConjugate(raw[k], order_);

    CMat om = raw[0] * raw[1] * raw[2] * raw[3] * cplx(-1.0);
    omega_ = permuteConjugate(om, order_);

    projPlus_ = CMat(4, 4);
    projMinus_ = CMat(4, 4);
    projPlus_(0, 0) = projPlus_(1, 1) = 1;
    projMinus_(2, 2) = projMinus_(3, 3) = 1;
}

const CliffordRep& clifford() {
    static const CliffordRep rep;
    return rep;
}

CMat CliffordRep::gamma(const std::array<double, 4>& v) const {
    CMat r(4, 4);
    for (int k = 0; k < 4; ++k) r += e_[k] * cplx(v[k]);
    return r;
}

CMat CliffordRep::xi0_inv(const Vec6& alphaK) const {
    CMat r(4, 4);
    for (int k = 0; k < 6; ++k) {
        if (alphaK[k] == 0.0) continue;
        const int i = TwoVectorBasis::pairs[k][0], j = TwoVectorBasis::pairs[k][1];
        r += e_[i] * e_[j] * cplx(0.5 * alphaK[k]);
    }
    return r;
}

std::array<CMat, 4> chirality_blocks(const CMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("chirality_blocks: not square");
    if (m.rows() == 4) {
        // Blocks P+ M P+, P+ M P-, P- M P+, P- M P- as 2x2 matrices.
        std::array<CMat, 4> b{CMat(2, 2), CMat(2, 2), CMat(2, 2), CMat(2, 2)};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                b[(i / 2) * 2 + (j / 2)](i % 2, j % 2) = m(i, j);
        return b;
    }
    if (m.rows() == 16) {
        // Diagonal restrictions to the four summands S+-(W) x S+-(V),
        // each 4-dimensional, in order ++, +-, -+, --.
        static const std::array<std::array<int, 4>, 4> idx = {{
            {0, 1, 4, 5},      // S+(W) x S+(V)
            {2, 3, 6, 7},      // S+(W) x S-(V)
            {8, 9, 12, 13},    // S-(W) x S+(V)
            {10, 11, 14, 15},  // S-(W) x S-(V)
        }};
        std::array<CMat, 4> b{CMat(4, 4), CMat(4, 4), CMat(4, 4), CMat(4, 4)};
        for (int blk = 0; blk < 4; ++blk)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) b[blk](i, j) = m(idx[blk][i], idx[blk][j]);
        return b;
    }
    throw std::invalid_argument("chirality_blocks: expected dimension 4 or 16");
}

}  // namespace curvcert

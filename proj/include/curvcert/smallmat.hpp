#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvcert {

using cplx = std::complex<double>;

inline double conj_of(double x) { return x; }
inline cplx conj_of(const cplx& x) { return std::conj(x); }

/// Dense row-major matrix, dimensions capped at 16x16.
/// Used for everything in this project: 4x4 maps, 6x6 operators on
/// two-vectors, and 16x16 spinor endomorphisms.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, T{}) {
        if (rows < 1 || cols < 1 || rows > 16 || cols > 16)
            throw std::invalid_argument("Mat: dimensions must be in [1,16]");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Mat operator+(const Mat& o) const {
        checkSameShape(o);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        checkSameShape(o);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T aik = (*this)(i, k);
                if (aik == T{}) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }
    Mat operator*(const T& s) const {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
        return r;
    }
    Mat& operator+=(const Mat& o) {
        checkSameShape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        checkSameShape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Conjugate transpose; plain transpose for real matrices.
    Mat adjoint() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = conj_of((*this)(i, j));
        return r;
    }

    double frobenius() const {
        double s = 0;
        for (const T& x : a_) s += std::norm(cplx(x));
        return std::sqrt(s);
    }

    T trace() const {
        T s{};
        for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

private:
    void checkSameShape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Mat: shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> a_;
};

using RealMat = Mat<double>;
using CMat = Mat<cplx>;

inline CMat toComplex(const RealMat& m) {
    CMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

template <class T>
struct EigenResult {
    std::vector<double> values;  // ascending
    Mat<T> vectors;              // orthonormal columns, vectors.col(k) <-> values[k]
};

/// Cyclic Jacobi eigensolver for real symmetric / complex Hermitian input.
/// Rejects input whose deviation from Hermitian exceeds 1e-12 * ||M||.
EigenResult<double> sym_eigen(const RealMat& m);
EigenResult<cplx> sym_eigen(const CMat& m);

double min_eigenvalue(const RealMat& m);
double min_eigenvalue(const CMat& m);

struct SVDResult {
    RealMat leftBasis;               // orthonormal columns v_i of the target space
    RealMat rightBasis;              // orthonormal columns w_i of the source space
    std::vector<double> singularValues;  // descending, >= 0; l(w_i) = s_i v_i
};

/// SVD of a square map, dim <= 6, via the eigendecomposition of l^T l,
/// completing the left basis explicitly when singular values vanish.
SVDResult svd(const RealMat& l);

}  // namespace curvcert

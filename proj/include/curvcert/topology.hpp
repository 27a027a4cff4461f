#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace curvcert {

/// Exact rational arithmetic on 64-bit integers; no floating point is used
/// anywhere in the index formulas.
class Rational {
public:
    Rational(std::int64_t num = 0, std::int64_t den = 1) : n_(num), d_(den) {
        if (d_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return n_; }
    std::int64_t den() const { return d_; }
    bool isInteger() const { return d_ == 1; }

    Rational operator+(const Rational& o) const { return {n_ * o.d_ + o.n_ * d_, d_ * o.d_}; }
    Rational operator-(const Rational& o) const { return {n_ * o.d_ - o.n_ * d_, d_ * o.d_}; }
    Rational operator*(const Rational& o) const { return {n_ * o.n_, d_ * o.d_}; }
    Rational operator/(const Rational& o) const {
        if (o.n_ == 0) throw std::invalid_argument("Rational: division by zero");
        return {n_ * o.d_, d_ * o.n_};
    }
    bool operator==(const Rational& o) const { return n_ == o.n_ && d_ == o.d_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return n_ * o.d_ < o.n_ * d_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const {
        return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
    }

private:
    void normalize() {
        if (d_ < 0) {
            n_ = -n_;
            d_ = -d_;
        }
        const std::int64_t g = std::gcd(n_ < 0 ? -n_ : n_, d_);
        if (g > 1) {
            n_ /= g;
            d_ /= g;
        }
        if (n_ == 0) d_ = 1;
    }

    std::int64_t n_, d_;
};

/// Characteristic numbers of the domain M, the competitor's source N, the
/// map degree, and boundary Betti numbers where applicable.
struct TopologyData {
    std::int64_t eulerM = 0;
    std::int64_t sigmaM = 0;
    std::int64_t sigmaN = 0;
    std::int64_t degF = 1;
    std::int64_t b0dM = 0;  // b_0 of the boundary
    std::int64_t b2dM = 0;  // b_2 of the boundary
    std::int64_t b2M = 0;

    void requireDegree() const {
        if (degF == 0) throw std::invalid_argument("TopologyData: map degree must be nonzero");
    }
    void requireBetti() const {
        if (b0dM < 0 || b2dM < 0 || b2M < 0)
            throw std::invalid_argument("TopologyData: Betti numbers must be nonnegative");
    }
};

struct IndexResult {
    Rational value;
    /// Non-integer index: the input data is inconsistent with the signature
    /// convention for the relevant (closed or boundary) setting. Surfaced
    /// as a warning, not an error.
    bool nonIntegerWarning;
};

/// Closed case:  -sigma(N)/4 + deg(f) * (3 sigma(M)/4 + chi(M)/2).
inline IndexResult index_closed(const TopologyData& t) {
    t.requireDegree();
    const Rational v = Rational(-t.sigmaN, 4) +
                       Rational(t.degF) * (Rational(3 * t.sigmaM, 4) + Rational(t.eulerM, 2));
    return {v, !v.isInteger()};
}

/// Boundary case: (-sigma(N) + 2 chi(M) + 3 sigma(M) + 2 b0(dM) + 2 b2(dM)) / 4.
inline IndexResult index_boundary(const TopologyData& t) {
    t.requireDegree();
    t.requireBetti();
    const Rational v(-t.sigmaN + 2 * t.eulerM + 3 * t.sigmaM + 2 * t.b0dM + 2 * t.b2dM, 4);
    return {v, !v.isInteger()};
}

struct ClassPredicates {
    bool c0;        // 2 chi + 3 sigma > sigma(N)/deg
    bool c0Self;    // 4 + (1/deg - 1) b2(M) > 0
    bool cBoundary; // 2 chi + 3 sigma + 2 b0(dM) + 2 b2(dM) > sigma(N)
    bool cLocal;    // |sigma(N)| < 4
};

inline ClassPredicates class_predicates(const TopologyData& t) {
    t.requireDegree();
    t.requireBetti();
    ClassPredicates p{};
    p.c0 = Rational(2 * t.eulerM + 3 * t.sigmaM) > Rational(t.sigmaN, t.degF);
    p.c0Self = Rational(4) + (Rational(1, t.degF) - Rational(1)) * Rational(t.b2M) > Rational(0);
    p.cBoundary = 2 * t.eulerM + 3 * t.sigmaM + 2 * t.b0dM + 2 * t.b2dM > t.sigmaN;
    p.cLocal = t.sigmaN > -4 && t.sigmaN < 4;
    return p;
}

}  // namespace curvcert

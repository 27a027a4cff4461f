#include "curvcert/families.hpp"

#include <cmath>
#include <stdexcept>

#include "curvcert/thorpe.hpp"

namespace curvcert {

namespace {

constexpr double kGamma = 3.0;  // exponent of the concave profile law

RealMat diag6(double a, double b, double c, double d, double e, double f) {
    RealMat m(6, 6);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    m(4, 4) = e;
    m(5, 5) = f;
    return m;
}

RealMat diag4(double a, double b, double c, double d) {
    RealMat m(4, 4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

double bump(double t) { return t > 0 ? std::exp(-1.0 / t) : 0.0; }
double bumpPrime(double t) { return t > 0 ? std::exp(-1.0 / t) / (t * t) : 0.0; }

}  // namespace

MetricPointData fubini_study() {
    const RealMat p = change_of_basis_sdasd();
    const RealMat rk = p * diag6(0, 0, 6, 2, 2, 2) * p.transpose();
    return {CurvatureOperator(rk), diag4(6, 6, 6, 6), 24.0, false, 0.0, "fubini-study"};
}

MetricPointData round_sphere(double radius) {
    if (radius <= 0) throw std::invalid_argument("round_sphere: radius must be positive");
    const double k = 1.0 / (radius * radius);
    return {CurvatureOperator(RealMat::identity(6) * k), diag4(3 * k, 3 * k, 3 * k, 3 * k),
            12.0 * k, false, 0.0, "round-sphere"};
}

MetricPointData product_spheres(double radiusA, double radiusB) {
    if (radiusA <= 0 || radiusB <= 0)
        throw std::invalid_argument("product_spheres: radii must be positive");
    const double ka = 1.0 / (radiusA * radiusA), kb = 1.0 / (radiusB * radiusB);
    return {CurvatureOperator(diag6(ka, kb, 0, 0, 0, 0)), diag4(ka, ka, kb, kb),
            2.0 * (ka + kb), false, 0.0, "product-spheres"};
}

double GZProfile::odeRhs(double phi) const {
    if (kind_ == Kind::LinearRamp) return 0.5;
    const double u = std::max(0.0, (4.0 * B_ * B_ - 3.0 * phi * phi) / (4.0 * B_ * B_));
    return 0.5 * std::pow(u, kGamma);
}

double GZProfile::odeRhsPrime(double phi) const {
    if (kind_ == Kind::LinearRamp) return 0.0;
    const double u = std::max(0.0, (4.0 * B_ * B_ - 3.0 * phi * phi) / (4.0 * B_ * B_));
    return -0.5 * kGamma * std::pow(u, kGamma - 1.0) * (3.0 * phi / (2.0 * B_ * B_));
}

double GZProfile::zeta(double r) const {
    if (r <= w0_) return 1.0;
    if (r >= r0_) return 0.0;
    const double d = r0_ - w0_;
    const double down = bump((r0_ - r) / d), up = bump((r - w0_) / d);
    return down / (down + up);
}

double GZProfile::zetaPrime(double r) const {
    if (r <= w0_ || r >= r0_) return 0.0;
    const double d = r0_ - w0_;
    const double t = (r0_ - r) / d, s = (r - w0_) / d;
    const double ft = bump(t), fs = bump(s);
    const double denom = (ft + fs) * (ft + fs);
    return -(bumpPrime(t) * fs + ft * bumpPrime(s)) / (denom * d);
}

double GZProfile::shapeValue(double r) const {
    if (r >= r0_) return b_;
    if (r <= 0.0) return 0.0;
    const std::size_t last = grid_.size() - 1;
    const double x = r / h_;
    std::size_t i = static_cast<std::size_t>(x);
    if (i >= last) i = last - 1;
    const double t = x - i;
    const double r0n = i * h_, r1n = r0n + h_;
    const double p0 = grid_[i], p1 = grid_[i + 1];
    // Cubic Hermite with the exact derivative phi' = zeta * rhs(phi) at the
    // nodes; keeps interpolation error negligible against the tolerances.
    const double d0 = zeta(r0n) * odeRhs(p0), d1 = zeta(r1n) * odeRhs(p1);
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * p0 + (t3 - 2 * t2 + t) * h_ * d0 +
           (-2 * t3 + 3 * t2) * p1 + (t3 - t2) * h_ * d1;
}

double GZProfile::phi(double r) const {
    const double rs = r / scale_;
    if (rs < -1e-12 || rs > rmax_ * (1 + 1e-12))
        throw std::invalid_argument("GZProfile: radius out of range");
    return scale_ * shapeValue(rs);
}

double GZProfile::phiPrime(double r) const {
    const double rs = r / scale_;
    if (rs >= r0_) return 0.0;
    return zeta(rs) * odeRhs(shapeValue(rs));
}

double GZProfile::phiDoublePrime(double r) const {
    const double rs = r / scale_;
    if (rs >= r0_) return 0.0;
    const double p = shapeValue(rs), z = zeta(rs);
    return (zetaPrime(rs) * odeRhs(p) + z * z * odeRhsPrime(p) * odeRhs(p)) / scale_;
}

double GZProfile::concavityRatio(double r) const {
    const double rs = r / scale_;
    if (rs >= r0_) return 0.0;
    const double p = shapeValue(rs);
    if (p > 1e-6 * b_) return -phiDoublePrime(r) / phi(r);
    // Limit as phi -> 0: phi'' ~ rhs'(0+) * rhs(0) * phi (the cutoff is
    // identically 1 here), so -phi''/phi -> 3*gamma/(8 B^2).
    if (kind_ == Kind::LinearRamp) return 0.0;
    return 3.0 * kGamma / (8.0 * B_ * B_ * scale_ * scale_);
}

GZProfile GZProfile::rescaledToPlateau(double bRequested) const {
    if (bRequested <= 0)
        throw std::invalid_argument("GZProfile: requested plateau must be positive");
    GZProfile q = *this;
    q.scale_ = scale_ * (bRequested / b());
    return q;
}

GZProfile gz_profile(double r0, double rmax) {
    if (r0 <= 0 || rmax < r0)
        throw std::invalid_argument("gz_profile: need 0 < r0 <= rmax");
    GZProfile p;
    p.kind_ = GZProfile::Kind::Concave;
    p.r0_ = r0;
    p.rmax_ = rmax;
    p.w0_ = 0.8 * r0;

    // Find the arclength s93 at which the uncut unit-asymptote solution
    // reaches 0.93, then set B so that happens at the cutoff window start.
    {
        GZProfile unit;
        unit.kind_ = GZProfile::Kind::Concave;
        unit.B_ = 1.0;
        double s = 0, v = 0;
        const double hs = 1e-3;
        while (v < 0.93) {
            const double k1 = unit.odeRhs(v);
            const double k2 = unit.odeRhs(v + 0.5 * hs * k1);
            const double k3 = unit.odeRhs(v + 0.5 * hs * k2);
            const double k4 = unit.odeRhs(v + hs * k3);
            v += hs * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0;
            s += hs;
        }
        p.B_ = p.w0_ / s;
    }

    // Integrate the tapered equation phi' = zeta(r) * rhs(phi) on [0, r0];
    // past r0 the profile is the exact constant b.
    const int n = 8000;
    p.h_ = r0 / n;
    p.grid_.assign(n + 1, 0.0);
    double v = 0;
    for (int i = 0; i < n; ++i) {
        const double r = i * p.h_;
        auto f = [&](double rr, double vv) { return p.zeta(rr) * p.odeRhs(vv); };
        const double k1 = f(r, v);
        const double k2 = f(r + 0.5 * p.h_, v + 0.5 * p.h_ * k1);
        const double k3 = f(r + 0.5 * p.h_, v + 0.5 * p.h_ * k2);
        const double k4 = f(r + p.h_, v + p.h_ * k3);
        v += p.h_ * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0;
        p.grid_[i + 1] = v;
    }
    p.b_ = v;
    return p;
}

GZProfile gz_profile_linear_ramp(double r0, double rmax) {
    if (r0 <= 0 || rmax < r0)
        throw std::invalid_argument("gz_profile_linear_ramp: need 0 < r0 <= rmax");
    GZProfile p;
    p.kind_ = GZProfile::Kind::LinearRamp;
    p.r0_ = r0;
    p.rmax_ = rmax;
    p.w0_ = 0.8 * r0;
    p.B_ = 1.0;  // unused by the ramp law

    const int n = 8000;
    p.h_ = r0 / n;
    p.grid_.assign(n + 1, 0.0);
    double v = 0;
    for (int i = 0; i < n; ++i) {
        const double r = i * p.h_;
        auto f = [&](double rr) { return 0.5 * p.zeta(rr); };
        const double k1 = f(r);
        const double k2 = f(r + 0.5 * p.h_);
        const double k4 = f(r + p.h_);
        v += p.h_ * (k1 + 4 * k2 + k4) / 6.0;  // Simpson step (rhs is r-only)
        p.grid_[i + 1] = v;
    }
    p.b_ = v;
    return p;
}

MetricPointData gz_curvature_at(const GZProfile& p, double r) {
    if (r < 0 || r > p.rmax() * (1 + 1e-12))
        throw std::invalid_argument("gz_curvature_at: radius out of range");
    const double b = p.b();
    const double f = p.phi(r), fp = p.phiPrime(r);
    const double ratio = p.concavityRatio(r);  // -phi''/phi
    const double b2 = b * b, b4 = b2 * b2;

    // Sphere-factor blocks on (e1^e2, e3^e4) and (e1^e3, e4^e2); the mixed
    // block, carrying the concavity term, sits on (e1^e4, e2^e3).
    RealMat m(6, 6);
    const double sphereDiag = f * f / (4.0 * b4);
    const double sphereOff = fp / (2.0 * b2);
    for (int blk = 0; blk < 2; ++blk) {
        m(2 * blk, 2 * blk) = sphereDiag;
        m(2 * blk, 2 * blk + 1) = sphereOff;
        m(2 * blk + 1, 2 * blk) = sphereOff;
    }
    m(4, 4) = ratio;
    m(4, 5) = -fp / b2;
    m(5, 4) = -fp / b2;
    m(5, 5) = (4.0 * b2 - 3.0 * f * f) / (4.0 * b4);

    const double tau = -fp / (2.0 * b2);
    const RealMat ric = diag4(f * f / (2.0 * b4) - (-ratio), 1.0 / b2 - f * f / (2.0 * b4),
                              1.0 / b2 - f * f / (2.0 * b4), ratio);
    const double scal = 2.0 / b2 - f * f / (2.0 * b4) + 2.0 * ratio;
    return {CurvatureOperator(m), ric, scal, true, tau, "disk-bundle"};
}

GZValidation validate_gz(const GZProfile& p, int gridDensity) {
    if (gridDensity < 2) throw std::invalid_argument("validate_gz: grid too coarse");
    GZValidation v{true, 1e300, 0.0, -1.0};
    const double b = p.b();
    for (int i = 0; i <= gridDensity; ++i) {
        const double r = p.rmax() * i / gridDensity;
        const double f = p.phi(r), fp = p.phiPrime(r);
        const double ratio = p.concavityRatio(r);
        // With tau = -phi'/2b^2 the sphere blocks are automatically
        // diagonal PSD; the mixed block needs its determinant condition.
        const double margin =
            (4.0 * b * b - 3.0 * f * f) * ratio - 9.0 * fp * fp;
        if (margin < v.worstMargin) {
            v.worstMargin = margin;
            v.worstR = r;
        }
        if (margin < -1e-9 && v.pass) {
            v.pass = false;
            v.firstViolationR = r;
        }
    }
    return v;
}

MetricPointData cheeger_glued(const GZProfile& p, double r) {
    if (r < 0 || r > 2 * p.rmax() * (1 + 1e-12))
        throw std::invalid_argument("cheeger_glued: radius out of range");
    const double rr = r <= p.rmax() ? r : 2 * p.rmax() - r;
    MetricPointData d = gz_curvature_at(p, rr);
    d.label = "glued-double-bundle";
    return d;
}

}  // namespace curvcert

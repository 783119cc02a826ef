#include "apollo/spinor.hpp"

#include <cmath>

namespace apollo {

namespace {

/// Principal complex square root. Exact when the input is an exact perfect
/// square of a Gaussian rational; demotes to float otherwise.
ComplexScalar complex_sqrt_principal(const ComplexScalar& w) {
    if (w.is_exact()) {
        // Try u = p + qi with (p^2 - q^2, 2pq) = (re, im). Along the axes the
        // components solve directly; otherwise p^2 is a root of
        // 4t^2 - 4 re t - im^2 = 0, rational iff re^2 + im^2 is a square.
        const Rational re = w.re.rational();
        const Rational im = w.im.rational();
        if (im == 0) {
            if (re >= 0) {
                if (auto r = rational_sqrt(re)) return {Scalar(*r), Scalar(0)};
            } else {
                if (auto r = rational_sqrt(Rational(-re))) return {Scalar(0), Scalar(*r)};
            }
        } else {
            if (auto mod2 = rational_sqrt(Rational(re * re + im * im))) {
                Rational p2 = (re + *mod2) / 2;
                if (auto p = rational_sqrt(p2)) {
                    if (*p != 0) {
                        Rational q = im / (2 * (*p));
                        // principal: Re > 0, or Re == 0 with Im >= 0
                        if (*p > 0) return {Scalar(*p), Scalar(q)};
                        return {Scalar(-*p), Scalar(Rational(-q))};
                    }
                }
            }
        }
    }
    double re = w.re.value(), im = w.im.value();
    double mod = std::hypot(re, im);
    double p = std::sqrt(std::max(0.0, (mod + re) / 2));
    double q = std::sqrt(std::max(0.0, (mod - re) / 2));
    if (im < 0) q = -q;
    if (p == 0.0 && q < 0) q = -q;
    return ComplexScalar::from_doubles(p, q);
}

}  // namespace

Scalar spinor_cross(const TangencySpinor& a, const TangencySpinor& b) {
    return a.value.re * b.value.im - a.value.im * b.value.re;
}

Scalar spinor_dot(const TangencySpinor& a, const TangencySpinor& b) {
    return a.value.re * b.value.re + a.value.im * b.value.im;
}

TangencySpinor spinor_of_pair(const Disk& d1, const Disk& d2) {
    if (d1.is_line() || d2.is_line()) throw LineUnsupported();
    ComplexScalar w = d2.center - d1.center;
    Scalar r1 = d1.signed_radius();
    Scalar r2 = d2.signed_radius();

    // Tangency: |w| = |r1 + r2| with signed radii.
    Scalar dist2 = w.norm2();
    Scalar rsum = r1 + r2;
    Scalar target = rsum * rsum;
    if (dist2.is_exact() && target.is_exact()) {
        if (dist2 != target) throw NotTangent();
    } else {
        double scale = std::max({1.0, std::abs(dist2.value()), std::abs(target.value())});
        if (std::abs(dist2.value() - target.value()) > 1e-9 * scale) throw NotTangent();
    }

    ComplexScalar ratio = {w.re / (r1 * r2), w.im / (r1 * r2)};
    return TangencySpinor(complex_sqrt_principal(ratio));
}

SpinorProducts spinor_products(const TangencySpinor& a, const TangencySpinor& b) {
    SpinorProducts p;
    p.C = spinor_cross(a, b);
    p.A = a.norm2() - p.C;
    p.B = b.norm2() - p.C;
    TangencySpinor sum(a.value + b.value);
    TangencySpinor diff(b.value - a.value);
    p.D_plus = sum.norm2() - p.C;
    p.D_minus = diff.norm2() - p.C;
    p.K = spinor_dot(a, b);
    return p;
}

ProjPoint project_pauli(const PauliSpinor& xi) {
    if (xi.a.is_zero()) {
        if (xi.b.is_zero()) throw Error("null spinor");
        return ProjPoint::infinity();
    }
    return ProjPoint(xi.b / xi.a);
}

std::pair<TangencySpinor, TangencySpinor> completion_spinors(const TangencySpinor& a,
                                                             const TangencySpinor& b) {
    return {TangencySpinor(b.value + a.value), TangencySpinor(b.value - a.value)};
}

std::array<ProjPoint, 3> frame_representatives(const ProjPoint& z) {
    const ComplexScalar i_unit{Scalar(0), Scalar(1)};
    const ComplexScalar one{Scalar(1), Scalar(0)};

    ProjPoint z2 = ProjPoint::infinity();
    if (!z.infinite) {
        ComplexScalar den = i_unit - z.z;
        if (!den.is_zero()) z2 = ProjPoint(-(one / den));
    } else {
        z2 = ProjPoint(ComplexScalar{Scalar(0), Scalar(0)});  // -1/(i-z) -> 0
    }

    ProjPoint z3 = ProjPoint(i_unit);
    if (!z.infinite) {
        if (z.z.is_zero())
            z3 = ProjPoint::infinity();
        else
            z3 = ProjPoint(i_unit + one / z.z);
    }
    return {z, z2, z3};
}

std::optional<SpinorFrame> SpinorFrame::from_disks(const Disk& A, const Disk& B, const Disk& C) {
    TangencySpinor a = spinor_of_pair(B, C);
    TangencySpinor b = spinor_of_pair(C, A);
    TangencySpinor c = spinor_of_pair(A, B);

    double scale = std::sqrt(std::max(
        {a.norm2().value(), b.norm2().value(), c.norm2().value(), 1e-300}));
    auto closes = [&](const TangencySpinor& x, const TangencySpinor& y, const TangencySpinor& w) {
        ComplexScalar s = x.value + y.value + w.value;
        return std::hypot(s.re.value(), s.im.value()) <= 1e-9 * std::max(1.0, scale);
    };

    // Each spinor carries a free sign; fixing a's covers all cases up to the
    // global flip, which preserves closure anyway.
    for (int sb = 0; sb < 2; ++sb) {
        for (int sc = 0; sc < 2; ++sc) {
            TangencySpinor bb = sb ? -b : b;
            TangencySpinor cc = sc ? -c : c;
            if (closes(a, bb, cc)) return SpinorFrame{a, bb, cc};
        }
    }
    return std::nullopt;
}

}  // namespace apollo

#include "apollo/circleform.hpp"

#include <cmath>

namespace apollo {

CircleForm CircleForm::circle(const ComplexScalar& center, const Scalar& radius) {
    // |z - c|^2 = r^2  ->  z conj(z) - conj(c) z - c conj(z) + |c|^2 - r^2 = 0
    return {Scalar(1), -center, center.norm2() - radius * radius};
}

CircleForm CircleForm::line(const ComplexScalar& normal, const Scalar& offset) {
    // <n, z> = d  ->  Re(conj(n) z) = d  ->  conj(B) z + B conj(z) + C = 0
    // with B = n/2 ... scaled by 2: B = n, C = -2d.
    return {Scalar(0), normal, -(Scalar(2) * offset)};
}

bool CircleForm::is_line() const {
    if (A.is_exact()) return A.sign() == 0;
    double m = std::max({std::abs(A.value()), std::abs(B.re.value()), std::abs(B.im.value()),
                         std::abs(C.value()), 1e-300});
    return std::abs(A.value()) <= 1e-12 * m;
}

Scalar CircleForm::eval(const ProjPoint& p) const {
    if (p.infinite) throw InfinitePoint();
    // A|z|^2 + 2 Re(conj(B) z) + C with conj(B) z = (Br*x + Bi*y) + i(...)
    const Scalar& x = p.x();
    const Scalar& y = p.y();
    return A * (x * x + y * y) + Scalar(2) * (B.re * x + B.im * y) + C;
}

ComplexScalar CircleForm::center() const {
    if (is_line()) throw Error("line has no center");
    return {-B.re / A, -B.im / A};
}

Scalar CircleForm::radius() const {
    if (is_line()) throw Error("line has no radius");
    Scalar d = discriminant();
    if (d.sign() < 0) throw Error("imaginary locus");
    return d.sqrt_or_float() / A.abs();
}

CircleForm CircleForm::canonical() const {
    const Scalar* coeffs[4] = {&A, &B.re, &B.im, &C};
    double maxmag = 0;
    for (auto* c : coeffs) maxmag = std::max(maxmag, std::abs(c->value()));
    for (auto* c : coeffs) {
        bool zero = c->is_exact() ? c->sign() == 0 : std::abs(c->value()) <= 1e-12 * maxmag;
        if (!zero) {
            const Scalar& s = *c;
            return {A / s, {B.re / s, B.im / s}, C / s};
        }
    }
    throw Error("null circle form");
}

bool same_locus(const CircleForm& a, const CircleForm& b) {
    CircleForm ca = a.canonical();
    CircleForm cb = b.canonical();
    if (ca.is_exact() && cb.is_exact())
        return ca.A == cb.A && ca.B == cb.B && ca.C == cb.C;
    auto close = [](const Scalar& u, const Scalar& v) {
        return std::abs(u.value() - v.value()) <= 1e-9;
    };
    return close(ca.A, cb.A) && close(ca.B.re, cb.B.re) && close(ca.B.im, cb.B.im) &&
           close(ca.C, cb.C);
}

CircleForm circle_apply_moebius(const CircleForm& c, const GroupElement& g) {
    if (g.det().is_zero()) throw SingularMatrix();

    // Hermitian matrix of the form: [[A, B], [conj(B), C]].
    ComplexScalar A{c.A, Scalar(0)};
    ComplexScalar C{c.C, Scalar(0)};
    ComplexScalar B = c.B;
    if (g.conj) B = B.conj();  // pre-conjugation mirrors the locus across y=0

    // With N the adjugate of g's matrix, the image form is N^H * M * N.
    ComplexScalar n11 = g.m22, n12 = -g.m12, n21 = -g.m21, n22 = g.m11;

    // K = M * N
    ComplexScalar k11 = A * n11 + B * n21;
    ComplexScalar k12 = A * n12 + B * n22;
    ComplexScalar k21 = B.conj() * n11 + C * n21;
    ComplexScalar k22 = B.conj() * n12 + C * n22;

    // Out = N^H * K
    ComplexScalar o11 = n11.conj() * k11 + n21.conj() * k21;
    ComplexScalar o12 = n11.conj() * k12 + n21.conj() * k22;
    ComplexScalar o22 = n12.conj() * k12 + n22.conj() * k22;

    return {o11.re, o12, o22.re};
}

}  // namespace apollo

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace apollo {

// Error hierarchy shared by all modules.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NegativeRadicand : Error {
    NegativeRadicand() : Error("negative radicand") {}
};
struct NonPositiveInput : Error {
    NonPositiveInput() : Error("non-positive input") {}
};
struct InfinitePoint : Error {
    InfinitePoint() : Error("point at infinity") {}
};
struct NotRealizable : Error {
    NotRealizable() : Error("tricycle not realizable") {}
};
struct SingularMatrix : Error {
    SingularMatrix() : Error("singular matrix") {}
};
struct OverflowError : Error {
    OverflowError() : Error("step or size guard exceeded") {}
};
struct NotTangent : Error {
    NotTangent() : Error("disks are not tangent") {}
};
struct LineUnsupported : Error {
    LineUnsupported() : Error("line (curvature 0) unsupported here") {}
};
struct GeometryInconsistent : Error {
    GeometryInconsistent() : Error("seed geometry inconsistent") {}
};
struct UnreachableVertex : Error {
    UnreachableVertex() : Error("zero-depth subgraph unreachable; enlarge max curvature") {}
};
struct DegeneratePoint : Error {
    DegeneratePoint() : Error("point lies on the degenerate orbit set") {}
};
struct UnsupportedForm : Error {
    UnsupportedForm() : Error("unsupported symbolic input form") {}
};

using Rational = mpq_class;
using BigInt = mpz_class;

/// Exact integer square root: s with s*s == n, or nullopt if n is not a
/// perfect square. Requires n >= 0.
std::optional<BigInt> integer_sqrt(const BigInt& n);

/// Exact rational square root: defined when numerator and denominator are
/// both perfect squares. Requires q >= 0.
std::optional<Rational> rational_sqrt(const Rational& q);

Rational make_rational(BigInt num, BigInt den);

/// Parses "3", "-7/2" or a decimal like "0.25" as an exact rational.
std::optional<Rational> parse_rational(const std::string& text);

/// A scalar that is either an exact rational or a binary64 float.
/// Exact-exact arithmetic stays exact; anything mixed demotes to float.
class Scalar {
public:
    Scalar() : exact_(true), q_(0), f_(0.0) {}
    Scalar(int v) : exact_(true), q_(v), f_(0.0) {}
    Scalar(long v) : exact_(true), f_(0.0) { q_ = BigInt(static_cast<long>(v)); }
    Scalar(const Rational& q) : exact_(true), q_(q), f_(0.0) { q_.canonicalize(); }
    Scalar(const BigInt& n) : exact_(true), q_(n), f_(0.0) {}
    explicit Scalar(double f) : exact_(false), q_(0), f_(f) {}

    static Scalar from_double(double f) { return Scalar(f); }
    static Scalar ratio(long num, long den) { return Scalar(make_rational(BigInt(num), BigInt(den))); }

    bool is_exact() const { return exact_; }
    const Rational& rational() const {
        if (!exact_) throw Error("Scalar::rational on a float value");
        return q_;
    }
    double value() const { return exact_ ? q_.get_d() : f_; }

    /// Demotes to the float backend (used by renderers).
    Scalar demoted() const { return exact_ ? Scalar(q_.get_d()) : *this; }

    int sign() const {
        if (exact_) return sgn(q_);
        return f_ > 0.0 ? 1 : (f_ < 0.0 ? -1 : 0);
    }

    Scalar operator-() const { return exact_ ? Scalar(Rational(-q_)) : Scalar(-f_); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ + b.q_));
        return Scalar(a.value() + b.value());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ - b.q_));
        return Scalar(a.value() - b.value());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ * b.q_));
        return Scalar(a.value() * b.value());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) {
            if (b.q_ == 0) throw Error("division by zero");
            return Scalar(Rational(a.q_ / b.q_));
        }
        return Scalar(a.value() / b.value());
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return a.q_ == b.q_;
        return a.value() == b.value();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return a.q_ < b.q_;
        return a.value() < b.value();
    }
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    /// Square root that stays exact when the radicand is a perfect rational
    /// square and demotes to float otherwise. Requires *this >= 0.
    Scalar sqrt_or_float() const;

    std::string str() const;

private:
    bool exact_;
    Rational q_;
    double f_;
};

/// Tolerance comparison per the float-mode contract: absolute 1e-12 after
/// scaling by the largest magnitude in the expression.
bool approx_eq(double a, double b, double scale = 1.0);

/// Complex number with Scalar components; exact iff both parts exact.
struct ComplexScalar {
    Scalar re, im;

    ComplexScalar() = default;
    ComplexScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
    ComplexScalar(int r) : re(r), im(0) {}

    static ComplexScalar from_doubles(double r, double i) {
        return {Scalar(r), Scalar(i)};
    }

    bool is_exact() const { return re.is_exact() && im.is_exact(); }
    bool is_zero() const { return re.sign() == 0 && im.sign() == 0; }

    ComplexScalar conj() const { return {re, -im}; }
    Scalar norm2() const { return re * re + im * im; }
    ComplexScalar demoted() const { return {re.demoted(), im.demoted()}; }

    ComplexScalar operator-() const { return {-re, -im}; }
    friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexScalar operator*(const Scalar& s, const ComplexScalar& a) {
        return {s * a.re, s * a.im};
    }
    friend ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b) {
        Scalar n = b.norm2();
        if (n.sign() == 0) throw Error("complex division by zero");
        ComplexScalar prod = a * b.conj();
        return {prod.re / n, prod.im / n};
    }
    friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexScalar& a, const ComplexScalar& b) { return !(a == b); }

    std::string str() const;
};

/// A point of the extended complex plane.
struct ProjPoint {
    ComplexScalar z;
    bool infinite = false;

    ProjPoint() = default;
    ProjPoint(ComplexScalar v) : z(std::move(v)) {}
    ProjPoint(Scalar x, Scalar y) : z(std::move(x), std::move(y)) {}

    static ProjPoint infinity() {
        ProjPoint p;
        p.infinite = true;
        return p;
    }
    static ProjPoint xy(double x, double y) { return ProjPoint(Scalar(x), Scalar(y)); }

    bool is_exact() const { return infinite || z.is_exact(); }
    const Scalar& x() const { return z.re; }
    const Scalar& y() const { return z.im; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.z == b.z;
    }

    std::string str() const;
};

}  // namespace apollo

#pragma once

#include "apollo/scalar.hpp"
#include "apollo/symmetry.hpp"

namespace apollo {

/// Hermitian form of a circle or line: the locus
///     A*z*conj(z) + conj(B)*z + B*conj(z) + C = 0
/// with A, C real. A real locus has |B|^2 - A*C > 0; A = 0 is a line.
/// Forms are equal up to a nonzero real scale.
struct CircleForm {
    Scalar A;
    ComplexScalar B;
    Scalar C;

    CircleForm() : A(0), B(Scalar(0), Scalar(0)), C(0) {}
    CircleForm(Scalar a, ComplexScalar b, Scalar c)
        : A(std::move(a)), B(std::move(b)), C(std::move(c)) {}

    /// Circle with the given center and radius (radius != 0).
    static CircleForm circle(const ComplexScalar& center, const Scalar& radius);
    /// Line {<normal, z> = offset}; the normal need not be unit length.
    static CircleForm line(const ComplexScalar& normal, const Scalar& offset);

    bool is_exact() const { return A.is_exact() && B.is_exact() && C.is_exact(); }
    bool is_line() const;

    /// |B|^2 - A*C, positive for a real circle or line.
    Scalar discriminant() const { return B.norm2() - A * C; }

    /// Value of the form at a finite point (zero on the locus).
    Scalar eval(const ProjPoint& p) const;

    /// Center and radius; only valid when not a line.
    ComplexScalar center() const;
    Scalar radius() const;
    /// Unit-normal direction and offset; only valid for lines (A = 0).
    ComplexScalar line_normal_raw() const { return B; }
    Scalar line_offset_raw() const { return -C / Scalar(2); }

    /// Divides by the first nonzero coefficient among (A, Re B, Im B, C).
    CircleForm canonical() const;

    CircleForm demoted() const { return {A.demoted(), B.demoted(), C.demoted()}; }
};

/// Equality of loci: canonical forms compared exactly (exact inputs) or at
/// 1e-9 after canonical scaling.
bool same_locus(const CircleForm& a, const CircleForm& b);

/// Image of the locus under a group element; conjugation-flagged elements
/// act anti-holomorphically. Throws SingularMatrix when det(g) = 0.
CircleForm circle_apply_moebius(const CircleForm& c, const GroupElement& g);

}  // namespace apollo

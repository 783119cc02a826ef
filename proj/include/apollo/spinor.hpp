#pragma once

#include <array>
#include <optional>

#include "apollo/depth.hpp"
#include "apollo/scalar.hpp"

namespace apollo {

/// A disk given by signed curvature and center. Negative curvature encloses
/// the others; curvature 0 is a line with unit normal and offset instead of
/// a center.
struct Disk {
    Scalar curvature;
    ComplexScalar center;
    ComplexScalar line_normal;  // meaningful iff curvature == 0
    Scalar line_offset;

    Disk() : curvature(0), line_offset(0) {}
    Disk(Scalar curv, ComplexScalar c)
        : curvature(std::move(curv)), center(std::move(c)), line_offset(0) {}

    static Disk line(ComplexScalar normal, Scalar offset) {
        Disk d;
        d.line_normal = std::move(normal);
        d.line_offset = std::move(offset);
        return d;
    }

    bool is_line() const { return curvature.sign() == 0; }
    Scalar signed_radius() const { return Scalar(1) / curvature; }
};

/// Tangency spinor of an ordered pair of tangent disks, defined up to a
/// global sign; square = (center difference)/(r1*r2).
struct TangencySpinor {
    ComplexScalar value;

    TangencySpinor() = default;
    explicit TangencySpinor(ComplexScalar v) : value(std::move(v)) {}

    Scalar norm2() const { return value.norm2(); }
    TangencySpinor operator-() const { return TangencySpinor(-value); }
    /// The symplectic conjugate i * value.
    TangencySpinor sympl() const {
        return TangencySpinor({-value.im, value.re});
    }
};

/// Cross product of two spinors read as plane vectors.
Scalar spinor_cross(const TangencySpinor& a, const TangencySpinor& b);
/// Dot product of two spinors read as plane vectors.
Scalar spinor_dot(const TangencySpinor& a, const TangencySpinor& b);

/// Two tangency spinors stacked as a 2-component complex vector.
struct PauliSpinor {
    ComplexScalar a, b;
};

/// Products attached to a spinor pair anchored at a common disk: the three
/// curvatures, both completion curvatures and the mid-circle curvature.
struct SpinorProducts {
    Scalar C, A, B, D_minus, D_plus, K;
};

/// Spinor of an ordered pair of tangent disks; principal square root sign
/// (nonnegative real part, ties broken toward nonnegative imaginary part).
TangencySpinor spinor_of_pair(const Disk& d1, const Disk& d2);

SpinorProducts spinor_products(const TangencySpinor& a, const TangencySpinor& b);

/// Projectivization: [a; b] -> b/a (infinity when a = 0).
ProjPoint project_pauli(const PauliSpinor& xi);

/// Spinors from the anchor disk to the two completions: (b + a, b - a).
std::pair<TangencySpinor, TangencySpinor> completion_spinors(const TangencySpinor& a,
                                                             const TangencySpinor& b);

/// The three anchor choices of the parameter point:
/// z1 = z, z2 = -1/(i - z), z3 = i + 1/z. Applying z -> -1/(i-z) three times
/// is the identity.
std::array<ProjPoint, 3> frame_representatives(const ProjPoint& z);

/// The six spinors of a tricycle (three and their symplectic conjugates),
/// with signs adjusted so the base spinors sum to zero.
struct SpinorFrame {
    TangencySpinor a, b, c;  // spin(B,C), spin(C,A), spin(A,B)

    TangencySpinor a_conj() const { return a.sympl(); }
    TangencySpinor b_conj() const { return b.sympl(); }
    TangencySpinor c_conj() const { return c.sympl(); }

    /// Builds the frame from three mutually tangent disks; returns nullopt if
    /// no sign choice closes the triangle (inconsistent geometry).
    static std::optional<SpinorFrame> from_disks(const Disk& A, const Disk& B, const Disk& C);
};

}  // namespace apollo

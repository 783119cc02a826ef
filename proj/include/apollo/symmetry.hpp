#pragma once

#include <string>
#include <vector>

#include "apollo/depth.hpp"
#include "apollo/scalar.hpp"

namespace apollo {

/// Generator tokens. S and R are the inversion/coordinate forms whose
/// relations close the twelve-element group; SAlt is the sign variant
/// -1/conj(z) = H*S that some presentations use for S.
enum class GenName { T, TInv, S, F, R, H, P, SAlt };

std::string gen_name_str(GenName g);

/// A Moebius map with optional pre-conjugation: z -> M(z) or z -> M(conj(z))
/// with M(w) = (m11*w + m12)/(m21*w + m22). Entries are Gaussian rationals
/// (or floats after demotion); equality is projective.
struct GroupElement {
    ComplexScalar m11, m12, m21, m22;
    bool conj = false;

    static GroupElement identity();

    ComplexScalar det() const { return m11 * m22 - m12 * m21; }

    ProjPoint apply(const ProjPoint& p) const;
    GroupElement inverse() const;

    /// Scales so the first nonzero entry (row major) is 1.
    GroupElement canonical() const;

    std::string str() const;
};

/// (g o h)(z) = g(h(z)). The matrix part is m_g * sigma(m_h) with sigma
/// conjugating entries iff g.conj; conj flags xor.
GroupElement compose(const GroupElement& g, const GroupElement& h);

/// Projective equality: conj flags match and matrices are proportional by a
/// nonzero complex scalar. Exact for exact entries.
bool proj_equal(const GroupElement& g, const GroupElement& h);

/// The exact matrix-with-conjugation form of a generator.
GroupElement generator(GenName name);

/// Conjugation-free companions: unit shift, negate-and-lift, -1/z, and the
/// inversion variant, which generate the modular group without conjugation.
GroupElement generator_algebraic(GenName name);

/// The coordinate action of a generator, applied directly to a point
/// (these are the mirror/inversion formulas used by the invariance tests).
ProjPoint generator_coordinate(GenName name, const ProjPoint& z);

struct RelationCheck {
    std::string name;
    bool pass;
};

/// Exact checks of the defining identities of the finite group and the
/// modular-group identity of the conjugation-free companions.
std::vector<RelationCheck> verify_relations();

/// Closure of {S, F, H}: exactly 12 projective elements. Throws if closure
/// exceeds `guard` elements (a representation bug).
std::vector<GroupElement> enumerate_theta(size_t guard = 24);
/// Closure of {S, F}: exactly 6 elements.
std::vector<GroupElement> enumerate_theta0(size_t guard = 24);
/// The anchor-ambiguity group {id, FS, SF}: 3 elements.
std::vector<GroupElement> enumerate_anchor_group(size_t guard = 24);

enum class RegionName { P, Q, Strip, Dark };

/// Closed-set membership, exact when the point is exact.
/// P = {0 <= x <= 1/2, y <= 0, x^2+y^2 >= 1};  Q = {x >= 0, y <= 1/2,
/// x^2+y^2 >= 1};  Strip = {0 <= y <= 1};  Dark = {x^2+(y-1/2)^2 <= 1/4}.
bool in_region(RegionName r, const ProjPoint& z);
/// Strict-inequality (interior) variant.
bool in_region_interior(RegionName r, const ProjPoint& z);

/// A word over the generator alphabet, stored in application order.
struct Word {
    std::vector<GenName> symbols;

    GroupElement element() const;
    ProjPoint apply(const ProjPoint& z) const;
    std::string str() const;
};

struct CanonicalizeResult {
    ProjPoint point;
    Word word;
    bool boundary = false;  // landed on the edge of the fundamental domain
};

/// Reduces z to the fundamental domain P of the full symmetry group and
/// returns the word mapping z there. Throws DegeneratePoint for points whose
/// tricycle contains a line (y in {0,1}, the disk boundary through the
/// origin, z = 0 or infinity), and OverflowError past max_steps.
CanonicalizeResult canonicalize_to_P(const ProjPoint& z, long max_steps = kDefaultMaxSteps);

/// All distinct images of z under words of length <= word_length over
/// {T, T^-1, S, F, H}, deduplicated (exactly when exact, else at 1e-9).
std::vector<ProjPoint> orbit_sample(const ProjPoint& z, int word_length);

}  // namespace apollo

#include "apollo/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace apollo {

namespace {

const Scalar kZero(0);
const Scalar kOne(1);
const Scalar kHalf = Scalar::ratio(1, 2);

ComplexScalar cs(int re, int im) { return {Scalar(re), Scalar(im)}; }

GroupElement make(ComplexScalar a, ComplexScalar b, ComplexScalar c, ComplexScalar d, bool conj) {
    GroupElement g;
    g.m11 = std::move(a);
    g.m12 = std::move(b);
    g.m21 = std::move(c);
    g.m22 = std::move(d);
    g.conj = conj;
    return g;
}

}  // namespace

std::string gen_name_str(GenName g) {
    switch (g) {
        case GenName::T: return "T";
        case GenName::TInv: return "T'";
        case GenName::S: return "S";
        case GenName::F: return "F";
        case GenName::R: return "R";
        case GenName::H: return "H";
        case GenName::P: return "P";
        case GenName::SAlt: return "S-";
    }
    return "?";
}

GroupElement GroupElement::identity() {
    return make(cs(1, 0), cs(0, 0), cs(0, 0), cs(1, 0), false);
}

ProjPoint GroupElement::apply(const ProjPoint& p) const {
    if (p.infinite) {
        if (m21.is_zero()) return ProjPoint::infinity();
        return ProjPoint(m11 / m21);
    }
    ComplexScalar w = conj ? p.z.conj() : p.z;
    ComplexScalar den = m21 * w + m22;
    if (den.is_zero()) return ProjPoint::infinity();
    return ProjPoint((m11 * w + m12) / den);
}

GroupElement GroupElement::inverse() const {
    if (det().is_zero()) throw SingularMatrix();
    GroupElement adj = make(m22, -m12, -m21, m11, conj);
    if (conj) {
        adj.m11 = adj.m11.conj();
        adj.m12 = adj.m12.conj();
        adj.m21 = adj.m21.conj();
        adj.m22 = adj.m22.conj();
    }
    return adj;
}

GroupElement GroupElement::canonical() const {
    const ComplexScalar* entries[4] = {&m11, &m12, &m21, &m22};
    double maxmag = 0;
    for (auto* e : entries)
        maxmag = std::max(maxmag, std::abs(e->re.value()) + std::abs(e->im.value()));
    for (auto* e : entries) {
        bool zero;
        if (e->is_exact())
            zero = e->is_zero();
        else
            zero = std::abs(e->re.value()) + std::abs(e->im.value()) <= 1e-12 * maxmag;
        if (!zero) {
            GroupElement g = *this;
            g.m11 = m11 / *e;
            g.m12 = m12 / *e;
            g.m21 = m21 / *e;
            g.m22 = m22 / *e;
            return g;
        }
    }
    throw SingularMatrix();
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "[" << m11.str() << ", " << m12.str() << "; " << m21.str() << ", " << m22.str() << "]";
    if (conj) os << "~";
    return os.str();
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    ComplexScalar a = h.m11, b = h.m12, c = h.m21, d = h.m22;
    if (g.conj) {
        a = a.conj();
        b = b.conj();
        c = c.conj();
        d = d.conj();
    }
    GroupElement out;
    out.m11 = g.m11 * a + g.m12 * c;
    out.m12 = g.m11 * b + g.m12 * d;
    out.m21 = g.m21 * a + g.m22 * c;
    out.m22 = g.m21 * b + g.m22 * d;
    out.conj = g.conj != h.conj;
    return out;
}

bool proj_equal(const GroupElement& g, const GroupElement& h) {
    if (g.conj != h.conj) return false;
    GroupElement a = g.canonical();
    GroupElement b = h.canonical();
    bool exact = a.m11.is_exact() && a.m12.is_exact() && a.m21.is_exact() && a.m22.is_exact() &&
                 b.m11.is_exact() && b.m12.is_exact() && b.m21.is_exact() && b.m22.is_exact();
    const ComplexScalar* ea[4] = {&a.m11, &a.m12, &a.m21, &a.m22};
    const ComplexScalar* eb[4] = {&b.m11, &b.m12, &b.m21, &b.m22};
    for (int i = 0; i < 4; ++i) {
        if (exact) {
            if (*ea[i] != *eb[i]) return false;
        } else {
            if (std::abs(ea[i]->re.value() - eb[i]->re.value()) > 1e-9 ||
                std::abs(ea[i]->im.value() - eb[i]->im.value()) > 1e-9)
                return false;
        }
    }
    return true;
}

GroupElement generator(GenName name) {
    switch (name) {
        case GenName::T:  // z + 1
            return make(cs(1, 0), cs(1, 0), cs(0, 0), cs(1, 0), false);
        case GenName::TInv:  // z - 1
            return make(cs(1, 0), cs(-1, 0), cs(0, 0), cs(1, 0), false);
        case GenName::S:  // 1/conj(z): inversion through the unit circle
            return make(cs(0, 0), cs(1, 0), cs(1, 0), cs(0, 0), true);
        case GenName::F:  // conj(z) + i: mirror across y = 1/2
            return make(cs(1, 0), cs(0, 1), cs(0, 0), cs(1, 0), true);
        case GenName::R:  // conj(z)/(1 - i conj(z)): inversion through |z-i|=1
            return make(cs(1, 0), cs(0, 0), cs(0, -1), cs(1, 0), true);
        case GenName::H:  // -conj(z): mirror across x = 0
            return make(cs(1, 0), cs(0, 0), cs(0, 0), cs(-1, 0), true);
        case GenName::P:  // 1 - conj(z): mirror across x = 1/2
            return make(cs(-1, 0), cs(1, 0), cs(0, 0), cs(1, 0), true);
        case GenName::SAlt:  // -1/conj(z) = H o S
            return make(cs(0, 0), cs(-1, 0), cs(1, 0), cs(0, 0), true);
    }
    throw Error("unknown generator");
}

GroupElement generator_algebraic(GenName name) {
    switch (name) {
        case GenName::T:
            return make(cs(1, 0), cs(1, 0), cs(0, 0), cs(1, 0), false);
        case GenName::TInv:
            return make(cs(1, 0), cs(-1, 0), cs(0, 0), cs(1, 0), false);
        case GenName::F:  // -z + i
            return make(cs(0, 1), cs(1, 0), cs(0, 0), cs(0, -1), false);
        case GenName::S:  // -1/z
            return make(cs(0, 0), cs(-1, 0), cs(1, 0), cs(0, 0), false);
        case GenName::R:  // iz/(z - i)
            return make(cs(0, 1), cs(0, 0), cs(1, 0), cs(0, -1), false);
        default:
            throw Error("no conjugation-free form for this generator");
    }
}

ProjPoint generator_coordinate(GenName name, const ProjPoint& z) {
    if (z.infinite) return generator(name).apply(z);
    const Scalar& x = z.x();
    const Scalar& y = z.y();
    switch (name) {
        case GenName::T:
            return ProjPoint(x + kOne, y);
        case GenName::TInv:
            return ProjPoint(x - kOne, y);
        case GenName::F:
            return ProjPoint(x, kOne - y);
        case GenName::H:
            return ProjPoint(-x, y);
        case GenName::P:
            return ProjPoint(kOne - x, y);
        case GenName::S: {
            Scalar n = x * x + y * y;
            if (n.sign() == 0) return ProjPoint::infinity();
            return ProjPoint(x / n, y / n);
        }
        case GenName::SAlt: {
            Scalar n = x * x + y * y;
            if (n.sign() == 0) return ProjPoint::infinity();
            return ProjPoint(-x / n, y / n);
        }
        case GenName::R: {
            Scalar dy = y - kOne;
            Scalar n = x * x + dy * dy;
            if (n.sign() == 0) return ProjPoint::infinity();
            return ProjPoint(x / n, (x * x + y * y - y) / n);
        }
    }
    throw Error("unknown generator");
}

namespace {

GroupElement word_elem(std::initializer_list<GenName> names) {
    // Names listed in application order; the element composes right-to-left.
    GroupElement e = GroupElement::identity();
    for (GenName n : names) e = compose(generator(n), e);
    return e;
}

GroupElement power(const GroupElement& g, int n) {
    GroupElement e = GroupElement::identity();
    for (int i = 0; i < n; ++i) e = compose(g, e);
    return e;
}

}  // namespace

std::vector<RelationCheck> verify_relations() {
    std::vector<RelationCheck> out;
    GroupElement id = GroupElement::identity();
    auto S = generator(GenName::S), F = generator(GenName::F), R = generator(GenName::R),
         H = generator(GenName::H), T = generator(GenName::T), P = generator(GenName::P);

    auto check = [&](const std::string& name, const GroupElement& a, const GroupElement& b) {
        out.push_back({name, proj_equal(a, b)});
    };

    check("H^2 = id", power(H, 2), id);
    check("S^2 = id", power(S, 2), id);
    check("F^2 = id", power(F, 2), id);
    check("R^2 = id", power(R, 2), id);
    check("(SF)^3 = id", power(compose(S, F), 3), id);
    check("(FR)^3 = id", power(compose(F, R), 3), id);
    check("(RS)^3 = id", power(compose(R, S), 3), id);
    check("R = SFS", R, word_elem({GenName::S, GenName::F, GenName::S}));
    check("R = FSF", R, word_elem({GenName::F, GenName::S, GenName::F}));
    check("HS = SH", compose(H, S), compose(S, H));
    check("HF = FH", compose(H, F), compose(F, H));
    check("HR = RH", compose(H, R), compose(R, H));
    check("T = PH", T, compose(P, H));

    auto Ta = generator_algebraic(GenName::T), Sa = generator_algebraic(GenName::S);
    check("modular (TS)^3 = id", power(compose(Ta, Sa), 3), id);
    return out;
}

namespace {

std::vector<GroupElement> closure(const std::vector<GroupElement>& gens, size_t guard) {
    std::vector<GroupElement> elems{GroupElement::identity()};
    std::deque<GroupElement> frontier{GroupElement::identity()};
    auto known = [&](const GroupElement& g) {
        return std::any_of(elems.begin(), elems.end(),
                           [&](const GroupElement& e) { return proj_equal(e, g); });
    };
    while (!frontier.empty()) {
        GroupElement cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            GroupElement next = compose(g, cur).canonical();
            if (!known(next)) {
                elems.push_back(next);
                frontier.push_back(next);
                if (elems.size() > guard) throw OverflowError();
            }
        }
    }
    return elems;
}

}  // namespace

std::vector<GroupElement> enumerate_theta(size_t guard) {
    return closure({generator(GenName::S), generator(GenName::F), generator(GenName::H)}, guard);
}

std::vector<GroupElement> enumerate_theta0(size_t guard) {
    return closure({generator(GenName::S), generator(GenName::F)}, guard);
}

std::vector<GroupElement> enumerate_anchor_group(size_t guard) {
    GroupElement fs = compose(generator(GenName::F), generator(GenName::S));
    GroupElement sf = compose(generator(GenName::S), generator(GenName::F));
    return closure({fs, sf}, guard);
}

bool in_region(RegionName r, const ProjPoint& z) {
    if (z.infinite) return false;
    const Scalar& x = z.x();
    const Scalar& y = z.y();
    switch (r) {
        case RegionName::P:
            return x.sign() >= 0 && x <= kHalf && y.sign() <= 0 && x * x + y * y >= kOne;
        case RegionName::Q:
            return x.sign() >= 0 && y <= kHalf && x * x + y * y >= kOne;
        case RegionName::Strip:
            return y.sign() >= 0 && y <= kOne;
        case RegionName::Dark:
            return x * x + y * y <= y;
    }
    return false;
}

bool in_region_interior(RegionName r, const ProjPoint& z) {
    if (z.infinite) return false;
    const Scalar& x = z.x();
    const Scalar& y = z.y();
    switch (r) {
        case RegionName::P:
            return x.sign() > 0 && x < kHalf && y.sign() < 0 && x * x + y * y > kOne;
        case RegionName::Q:
            return x.sign() > 0 && y < kHalf && x * x + y * y > kOne;
        case RegionName::Strip:
            return y.sign() > 0 && y < kOne;
        case RegionName::Dark:
            return x * x + y * y < y;
    }
    return false;
}

GroupElement Word::element() const {
    GroupElement e = GroupElement::identity();
    for (GenName s : symbols) e = compose(generator(s), e);
    return e;
}

ProjPoint Word::apply(const ProjPoint& z) const {
    ProjPoint p = z;
    for (GenName s : symbols) p = generator(s).apply(p);
    return p;
}

std::string Word::str() const {
    std::string s;
    for (GenName g : symbols) {
        if (!s.empty()) s += " ";
        s += gen_name_str(g);
    }
    return s;
}

namespace {

bool scalar_is(const Scalar& v, const Scalar& target) {
    if (v.is_exact() && target.is_exact()) return v == target;
    return std::abs(v.value() - target.value()) <= 1e-12;
}

long floor_to_long(const Scalar& v) {
    if (v.is_exact()) {
        const Rational& r = v.rational();
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
        if (!q.fits_slong_p()) throw OverflowError();
        return q.get_si();
    }
    return static_cast<long>(std::floor(v.value()));
}

}  // namespace

CanonicalizeResult canonicalize_to_P(const ProjPoint& z, long max_steps) {
    if (z.infinite) throw DegeneratePoint();

    CanonicalizeResult res;
    Scalar x = z.x();
    Scalar y = z.y();
    auto emit = [&](GenName g) { res.word.symbols.push_back(g); };
    auto degenerate_y = [&](const Scalar& v) {
        return scalar_is(v, kZero) || scalar_is(v, kOne);
    };

    if (degenerate_y(y)) throw DegeneratePoint();
    if (scalar_is(x, kZero) && scalar_is(y, kZero)) throw DegeneratePoint();

    // Phase 1: fold onto x >= 0.
    if (x.sign() < 0) {
        x = -x;
        emit(GenName::H);
    }
    // Phase 2: upper zero region mirrors onto the lower half plane.
    if (y > kOne) {
        y = kOne - y;
        emit(GenName::F);
    }

    long budget = max_steps;
    auto spend = [&] {
        if (--budget < 0) throw OverflowError();
    };

    // Phase 3: inside the strip, run the plane walk down to the dark disk,
    // then lift through the unit inversion and mirror into y < 0.
    if (y.sign() > 0 && y < kOne) {
        while (true) {
            spend();
            Scalar dy = kHalf - y;
            if (x * x + dy * dy <= Scalar::ratio(1, 4)) break;
            Scalar ry = y - kOne;
            Scalar denom = x * x + ry * ry;
            if (denom < kOne) {
                Scalar nx = x / denom;
                Scalar u = (x * x + y * y - y) / denom;
                emit(GenName::R);
                if (u < kHalf) {
                    u = kOne - u;
                    emit(GenName::F);
                }
                x = nx;
                y = u;
            }
            if (x >= kOne) {
                x = x - kOne;
                emit(GenName::TInv);
            } else {
                x = kOne - x;
                emit(GenName::P);
            }
        }
        // Unit inversion sends the dark disk to y >= 1 (its boundary lands
        // on the line y = 1, which is a degenerate orbit).
        Scalar n = x * x + y * y;
        if (n.sign() == 0) throw DegeneratePoint();
        x = x / n;
        y = y / n;
        emit(GenName::S);
        if (degenerate_y(y)) throw DegeneratePoint();
        y = kOne - y;
        emit(GenName::F);
    }

    // Phase 4: hyperbolic reduction in the lower half plane under unit
    // shifts, the two vertical mirrors and the unit inversion.
    while (true) {
        spend();
        long k = floor_to_long(x);
        if (k != 0) {
            x = x - Scalar(BigInt(k));
            GenName shift = k > 0 ? GenName::TInv : GenName::T;
            for (long i = 0; i < std::labs(k); ++i) emit(shift);
        }
        if (x > kHalf) {
            x = kOne - x;
            emit(GenName::P);
        }
        Scalar n = x * x + y * y;
        if (n >= kOne) break;
        if (n.sign() == 0) throw DegeneratePoint();
        x = x / n;
        y = y / n;
        emit(GenName::S);
    }

    res.point = ProjPoint(x, y);
    bool exact = x.is_exact() && y.is_exact();
    Scalar n = x * x + y * y;
    if (exact)
        res.boundary = x.sign() == 0 || x == kHalf || n == kOne;
    else
        res.boundary = std::abs(x.value()) <= 1e-9 || std::abs(x.value() - 0.5) <= 1e-9 ||
                       std::abs(n.value() - 1.0) <= 1e-9;
    return res;
}

std::vector<ProjPoint> orbit_sample(const ProjPoint& z, int word_length) {
    if (word_length > 8) throw Error("orbit word length capped at 8");
    const GenName gens[] = {GenName::T, GenName::TInv, GenName::S, GenName::F, GenName::H};

    std::vector<ProjPoint> points;
    auto known = [&](const ProjPoint& p) {
        for (const auto& q : points) {
            if (p.infinite || q.infinite) {
                if (p.infinite && q.infinite) return true;
                continue;
            }
            if (p.is_exact() && q.is_exact()) {
                if (p.z == q.z) return true;
            } else if (std::abs(p.x().value() - q.x().value()) <= 1e-9 &&
                       std::abs(p.y().value() - q.y().value()) <= 1e-9) {
                return true;
            }
        }
        return false;
    };

    std::deque<std::pair<ProjPoint, int>> frontier;
    points.push_back(z);
    frontier.emplace_back(z, 0);
    while (!frontier.empty()) {
        auto [p, len] = frontier.front();
        frontier.pop_front();
        if (len >= word_length) continue;
        for (GenName g : gens) {
            ProjPoint next = generator(g).apply(p);
            if (!known(next)) {
                points.push_back(next);
                frontier.emplace_back(next, len + 1);
            }
        }
    }
    return points;
}

}  // namespace apollo

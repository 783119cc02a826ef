#include "apollo/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "apollo/packing.hpp"
#include "apollo/render.hpp"
#include "apollo/spinor.hpp"
#include "apollo/symmetry.hpp"

namespace apollo {

uint64_t DetRng::next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double DetRng::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

long DetRng::range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
}

Rational DetRng::rational(long max_den) {
    long den = range(1, max_den);
    long num = range(1, den);
    return make_rational(BigInt(num), BigInt(den));
}

const std::vector<ReferenceDiscrepancy>& reference_discrepancies() {
    static const std::vector<ReferenceDiscrepancy> table = {
        {Triple{Scalar(179), Scalar(62), Scalar(23)}, 3, 4,
         "a published worked chain for (179,62,23) skips the triple (6,3,2) and "
         "reports depth 3; the step-count definition used here records depth 4"},
    };
    return table;
}

namespace {

void add(SuiteReport& r, const std::string& name, bool pass, const std::string& detail = "") {
    r.checks.push_back({name, pass, false, detail});
}

void note(SuiteReport& r, const std::string& name, const std::string& detail) {
    r.checks.push_back({name, true, true, detail});
}

bool depth_equal(const DepthResult& a, const DepthResult& b) {
    if (a.overflow != b.overflow) return false;
    return a.overflow || a.depth == b.depth;
}

ProjPoint sample_strip_point(DetRng& rng) {
    // Boundary-avoiding: margin 1e-6 from y=0, y=1 and the dark circle.
    while (true) {
        double x = rng.uniform() * 3.0;
        double y = rng.uniform();
        if (y < 1e-6 || y > 1.0 - 1e-6) continue;
        double dark = std::abs(std::hypot(x, y - 0.5) - 0.5);
        if (dark < 1e-6) continue;
        return ProjPoint::xy(x, y);
    }
}

ProjPoint sample_rational_point(DetRng& rng, long max_den) {
    while (true) {
        Rational x = DetRng::rational ? rng.rational(max_den) * 3 : Rational(0);
        Rational y = rng.rational(max_den);
        if (y == 0 || y == 1) continue;
        Rational dark = x * x + y * y - y;  // on the dark boundary iff zero
        if (dark == 0) continue;
        return ProjPoint(Scalar(x), Scalar(y));
    }
}

}  // namespace

SuiteReport verify_groups() {
    SuiteReport r{"groups", {}};

    for (const auto& rel : verify_relations()) add(r, "relation " + rel.name, rel.pass);

    try {
        add(r, "order of the full mirror group = 12", enumerate_theta().size() == 12);
        add(r, "order of the conjugation-free mirror subgroup = 6",
            enumerate_theta0().size() == 6);
        add(r, "order of the anchor-cycle group = 3", enumerate_anchor_group().size() == 3);
    } catch (const OverflowError&) {
        add(r, "group closure stays within guard", false);
    }

    // The twelve images of the fundamental region interior are disjoint and
    // cover a neighborhood of the triple mirror point (sqrt(3)/2, 1/2).
    {
        auto theta = enumerate_theta();
        DetRng rng(11);
        bool disjoint = true;
        for (int n = 0; n < 200 && disjoint; ++n) {
            double x = 0.05 + rng.uniform() * 3.0;
            double y = 0.5 - 0.05 - rng.uniform() * 3.0;
            ProjPoint q = ProjPoint::xy(x, y);
            if (!in_region_interior(RegionName::Q, q)) {
                --n;
                continue;
            }
            for (const auto& g : theta) {
                if (proj_equal(g, GroupElement::identity())) continue;
                if (in_region_interior(RegionName::Q, g.apply(q))) disjoint = false;
            }
        }
        add(r, "the 12 region images are pairwise disjoint (sampled)", disjoint);

        bool covered = true;
        double cx = std::sqrt(3) / 2, cy = 0.5;
        for (int k = 0; k < 32; ++k) {
            double ang = 2 * M_PI * k / 32;
            ProjPoint w = ProjPoint::xy(cx + 1e-3 * std::cos(ang), cy + 1e-3 * std::sin(ang));
            bool hit = false;
            for (const auto& g : theta)
                if (in_region(RegionName::Q, g.inverse().apply(w))) hit = true;
            if (!hit) covered = false;
        }
        add(r, "region closures cover a neighborhood of (sqrt(3)/2, 1/2)", covered);
    }
    return r;
}

SuiteReport verify_depth() {
    SuiteReport r{"depth", {}};

    // Exact agreement of the two depth algorithms over the 1/16 grid.
    {
        long agree = 0, covered = 0, total = 0, mismatch = 0;
        for (int k = 0; k <= 48; ++k)
            for (int j = 1; j <= 15; ++j) {
                ProjPoint z(Scalar(make_rational(k, 16)), Scalar(make_rational(j, 16)));
                DepthResult a = depth_z(z, 12);
                DepthResult b = depth_z_algorithm(z, 12);
                ++total;
                if (!a.overflow) ++covered;
                if (!a.overflow || !b.overflow) {
                    if (a.overflow == b.overflow && (a.overflow || a.depth == b.depth))
                        ++agree;
                    else
                        ++mismatch;
                }
            }
        std::ostringstream os;
        os << agree << " agreeing points, " << mismatch << " mismatches, " << covered << "/"
           << total << " with depth <= 12";
        add(r, "plane walk matches the triple process on the 1/16 grid", mismatch == 0,
            os.str());
        add(r, ">= 95% of the grid has depth <= 12", covered * 100 >= total * 95);
    }

    DetRng rng(23);

    // Scale and permutation invariance on exact tricycles.
    {
        bool scale_ok = true, perm_ok = true;
        for (int n = 0; n < 50; ++n) {
            ProjPoint z = sample_rational_point(rng, 16);
            Triple t = triple_of_z(z);
            if (t.min().sign() <= 0) continue;
            long base = depth_triple(t).depth;
            Scalar lam{rng.rational(9) + 1};
            if (depth_triple({t.a * lam, t.b * lam, t.c * lam}).depth != base) scale_ok = false;
            const std::array<Triple, 5> perms = {Triple{t.a, t.c, t.b}, {t.b, t.a, t.c},
                                                 {t.b, t.c, t.a},       {t.c, t.a, t.b},
                                                 {t.c, t.b, t.a}};
            for (const auto& p : perms)
                if (depth_triple(p).depth != base) perm_ok = false;
        }
        add(r, "depth is scale invariant (exact samples)", scale_ok);
        add(r, "depth is permutation invariant", perm_ok);
    }

    // Completion root identities.
    {
        bool exact_ok = true, float_ok = true;
        for (int n = 0; n < 50; ++n) {
            ProjPoint z = sample_rational_point(rng, 16);
            Triple t = triple_of_z(z);
            if (t.pair_sum().sign() < 0) continue;
            auto [lo, hi] = descartes_solutions(t);
            if (lo + hi != Scalar(2) * t.sum()) exact_ok = false;
            if (lo * hi != t.sum() * t.sum() - Scalar(4) * t.pair_sum()) exact_ok = false;

            Triple tf = t.demoted();
            auto [flo, fhi] = descartes_solutions(tf);
            for (double d : {flo.value(), fhi.value()}) {
                double s = tf.a.value() + tf.b.value() + tf.c.value() + d;
                double q = 2 * (tf.a.value() * tf.a.value() + tf.b.value() * tf.b.value() +
                                tf.c.value() * tf.c.value() + d * d);
                double m = std::max({1.0, std::abs(s * s), std::abs(q)});
                if (std::abs(s * s - q) > 1e-9 * m) float_ok = false;
            }
        }
        add(r, "completion roots satisfy the sum/product identities exactly", exact_ok);
        add(r, "both roots satisfy the quadratic identity to 1e-9 in floats", float_ok);
    }

    // Monotone termination along recorded chains.
    {
        bool mono = true;
        for (int n = 0; n < 30; ++n) {
            ProjPoint z = sample_rational_point(rng, 12);
            DepthResult d = depth_triple(triple_of_z(z));
            for (size_t i = 0; i + 1 < d.chain.size(); ++i) {
                Triple cur = d.chain[i].sorted_desc();
                Triple nxt = d.chain[i + 1].sorted_desc();
                if (cur.min().sign() <= 0) break;
                if (!(nxt.min() < cur.max())) mono = false;
            }
        }
        add(r, "each replacement strictly decreases the replaced value", mono);
    }

    // Reference-value disagreements, reported without failing.
    for (const auto& d : reference_discrepancies()) {
        DepthResult got = depth_triple(d.input);
        if (got.depth == d.computed_depth && !got.overflow)
            note(r, "reference depth for " + d.input.str(), d.note);
        else
            add(r, "reference depth recomputation for " + d.input.str(), false);
    }
    return r;
}

SuiteReport verify_spinor() {
    SuiteReport r{"spinor", {}};
    DetRng rng(37);

    bool closure_ok = true, cross_ok = true, products_ok = true, dcover_ok = true,
         cycle_ok = true;
    int built = 0;
    for (int n = 0; n < 80; ++n) {
        ProjPoint z = sample_rational_point(rng, 14);
        Triple t = triple_of_z(z);
        if (t.a.sign() == 0 || t.b.sign() == 0 || t.c.sign() == 0) continue;

        std::array<Disk, 3> disks;
        try {
            disks = tricycle_of_z_geometric(z);
        } catch (const NotRealizable&) {
            continue;
        }
        ++built;

        auto frame = SpinorFrame::from_disks(disks[0], disks[1], disks[2]);
        if (!frame) {
            closure_ok = false;
            continue;
        }
        // Cross products against curvature ratios (common scale).
        Scalar Cp = spinor_cross(frame->b, frame->a_conj());
        Scalar Ap = spinor_cross(frame->c, frame->b_conj());
        Scalar Bp = spinor_cross(frame->a, frame->c_conj());
        auto ratio_eq = [](const Scalar& p1, const Scalar& v1, const Scalar& p2,
                           const Scalar& v2) {
            double lhs = p1.value() * v2.value(), rhs = p2.value() * v1.value();
            return std::abs(lhs - rhs) <= 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
        };
        if (!ratio_eq(Ap, t.a, Bp, t.b) || !ratio_eq(Bp, t.b, Cp, t.c) ||
            !ratio_eq(Ap, t.a, Cp, t.c))
            cross_ok = false;

        // Spinor pair anchored at the third disk: products vs completions.
        TangencySpinor sa = spinor_of_pair(disks[2], disks[0]);
        TangencySpinor sb = spinor_of_pair(disks[2], disks[1]);
        SpinorProducts p = spinor_products(sa, sb);
        Triple abc{p.A, p.B, p.C};
        if (abc.pair_sum().sign() >= 0) {
            auto [lo, hi] = descartes_solutions(abc);
            Scalar dlo = p.D_minus < p.D_plus ? p.D_minus : p.D_plus;
            Scalar dhi = p.D_minus < p.D_plus ? p.D_plus : p.D_minus;
            auto close = [](const Scalar& u, const Scalar& v) {
                return std::abs(u.value() - v.value()) <=
                       1e-9 * std::max({1.0, std::abs(u.value()), std::abs(v.value())});
            };
            if (!close(dlo, lo) || !close(dhi, hi)) products_ok = false;
        }

        // Sign double cover.
        SpinorProducts flip_one = spinor_products(TangencySpinor(-sa.value), sb);
        SpinorProducts flip_both =
            spinor_products(TangencySpinor(-sa.value), TangencySpinor(-sb.value));
        if (flip_one.C != -p.C || flip_both.C != p.C) dcover_ok = false;

        // Anchor cycle: the three representatives give proportional triples.
        auto reps = frame_representatives(z);
        std::array<double, 3> base = {t.a.value(), t.b.value(), t.c.value()};
        std::sort(base.begin(), base.end());
        for (const auto& rep : reps) {
            if (rep.infinite) continue;
            Triple tr = triple_of_z(rep);
            std::array<double, 3> got = {tr.a.value(), tr.b.value(), tr.c.value()};
            std::sort(got.begin(), got.end());
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    double lhs = base[i] * got[j], rhs = base[j] * got[i];
                    if (std::abs(lhs - rhs) >
                        1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)}))
                        cycle_ok = false;
                }
        }
    }
    std::ostringstream os;
    os << built << " tricycles built";
    add(r, "six-spinor frames close to zero", closure_ok, os.str());
    add(r, "cross products reproduce the curvature ratios", cross_ok);
    add(r, "completion norms match the completion roots", products_ok);
    add(r, "sign double cover behaves as stated", dcover_ok);
    add(r, "anchor cycle preserves the triple up to scale and order", cycle_ok);

    // The anchor map applied three times is the identity (exact).
    {
        GroupElement sf = compose(generator(GenName::S), generator(GenName::F));
        GroupElement cube = compose(sf, compose(sf, sf));
        add(r, "anchor map has exact order three", proj_equal(cube, GroupElement::identity()));
    }

    note(r, "completion-norm identity uses squared norms",
         "the identity reads ||a +- b||^2 = C + D with squared norms; the unsquared "
         "variant is inconsistent with the completion roots");
    return r;
}

SuiteReport verify_packing() {
    SuiteReport r{"packing", {}};

    // Window packing to curvature 15 reproduces the labeled multiset.
    {
        Packing p = generate_packing(window_seed(), Scalar(15));
        std::map<long, int> hist;
        bool integral = true;
        for (const auto& d : p.disks) {
            if (!d.curv.is_exact() || d.curv.rational().get_den() != 1) {
                integral = false;
                continue;
            }
            hist[d.curv.rational().get_num().get_si()]++;
        }
        std::map<long, int> want{{-1, 1}, {2, 2}, {3, 2}, {6, 4}, {11, 4}, {14, 4}, {15, 2}};
        add(r, "window multiset to curvature 15 matches the figure labels",
            integral && hist == want);

        bool residuals = true;
        for (auto [i, j] : p.adjacency) {
            const PackedDisk &a = p.disks[i], &b = p.disks[j];
            if (a.is_line() || b.is_line()) continue;
            double dist = std::hypot(a.center().re.value() - b.center().re.value(),
                                     a.center().im.value() - b.center().im.value());
            double want_d = std::abs(a.signed_radius_sum(b));
            double mr = std::max({a.radius().value(), b.radius().value(), 1.0});
            if (std::abs(dist - want_d) > 1e-9 * mr) residuals = false;
        }
        add(r, "window tangency residuals below 1e-9", residuals);
    }

    // Reflection involution, exact.
    {
        DetRng rng(53);
        bool ok = true;
        for (int n = 0; n < 100; ++n) {
            Scalar a{rng.rational(30)}, b{rng.rational(30)}, c{rng.rational(30)},
                d{rng.rational(30)};
            Scalar refl = Scalar(2) * (a + b + c) - d;
            Scalar back = Scalar(2) * (a + b + c) - refl;
            if (back != d) ok = false;
        }
        add(r, "reflection is an exact involution", ok);
    }

    // Greedy process equals BFS distance on the window packing.
    {
        Packing p = generate_packing(window_seed(), Scalar(100));
        TricycleGraph g = build_tricycle_graph(p);
        auto dist = graph_depth_all(g);
        long checked = 0, equal = 0, counterexamples = 0;
        for (size_t v = 0; v < g.vertices.size(); ++v) {
            if (dist[v] < 0) continue;
            if (!bfs_ball_unpruned(g, static_cast<int>(v), dist[v])) continue;
            ++checked;
            Triple t{p.disks[g.vertices[v].disks[0]].curv, p.disks[g.vertices[v].disks[1]].curv,
                     p.disks[g.vertices[v].disks[2]].curv};
            if (depth_triple(t).depth == dist[v])
                ++equal;
            else
                ++counterexamples;
        }
        std::ostringstream os;
        os << equal << "/" << checked << " unpruned vertices agree";
        add(r, "greedy depth equals shortest-path distance (window, curvature 100)",
            counterexamples == 0 && checked > 0, os.str());

        bool valent = true;
        for (size_t v = 0; v < g.vertices.size(); ++v)
            if (g.neighbors[v].size() > 6) valent = false;
        add(r, "no tricycle vertex exceeds valency six", valent);
    }
    return r;
}

SuiteReport verify_integrality() {
    SuiteReport r{"integrality", {}};
    DetRng rng(71);

    bool classify_ok = true, levels_ok = true;
    for (int n = 0; n < 200; ++n) {
        Rational x = rng.rational(20) * rng.range(0, 2);
        Rational y = rng.rational(20);
        if (y == 0 || y == 1) {
            --n;
            continue;
        }
        if (x * x + y * y - y == 0) {
            --n;
            continue;
        }
        IntegralityResult res = integrality_classify(Rational(x * x), y);
        if (res.cls != IntegralityClass::IntegralAfterScaling) {
            classify_ok = false;
            continue;
        }
        // Three reflection levels of the scaled seed stay integral.
        std::vector<Quadruple> level{{res.scaled_seed}};
        for (int lev = 0; lev < 3; ++lev) {
            std::vector<Quadruple> next;
            for (const Quadruple& q : level) {
                const Scalar* vals[4] = {&q.a, &q.b, &q.c, &q.d};
                for (int drop = 0; drop < 4; ++drop) {
                    Scalar sum(0);
                    for (int i = 0; i < 4; ++i)
                        if (i != drop) sum += *vals[i];
                    Scalar refl = Scalar(2) * sum - *vals[drop];
                    if (!refl.is_exact() || refl.rational().get_den() != 1) levels_ok = false;
                    Quadruple qq = q;
                    (drop == 0 ? qq.a : drop == 1 ? qq.b : drop == 2 ? qq.c : qq.d) = refl;
                    next.push_back(qq);
                }
            }
            level = std::move(next);
        }
    }
    add(r, "200 rational parameters scale to integral seeds", classify_ok);
    add(r, "three reflection levels stay integral", levels_ok);

    {
        IntegralityResult res = integrality_classify(Rational(2), make_rational(1, 2));
        add(r, "x = sqrt(2), y = 1/2 is not integral, with an exact witness",
            res.cls == IntegralityClass::NotIntegral &&
                res.witness.find("sqrt(2)") != std::string::npos,
            res.witness);
    }
    return r;
}

std::vector<SuiteReport> run_verify(const std::string& suite) {
    std::vector<SuiteReport> out;
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    if (want("groups")) out.push_back(verify_groups());
    if (want("depth")) out.push_back(verify_depth());
    if (want("spinor")) out.push_back(verify_spinor());
    if (want("packing")) out.push_back(verify_packing());
    if (want("integrality")) out.push_back(verify_integrality());
    if (out.empty()) throw Error("unknown suite: " + suite);
    return out;
}

}  // namespace apollo

#include "apollo/packing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace apollo {

namespace {

const Scalar kOne(1);
const Scalar kTwo(2);

bool all_exact(const PackedDisk& d) {
    return d.cocurv.is_exact() && d.curv.is_exact() && d.curv_center.is_exact();
}

double magnitude(const PackedDisk& d) {
    return std::max({std::abs(d.cocurv.value()), std::abs(d.curv.value()),
                     std::abs(d.curv_center.re.value()), std::abs(d.curv_center.im.value()), 1.0});
}

ComplexScalar circ_diff(const PackedDisk& p, const PackedDisk& q) {
    return {p.curv_center.re * q.curv - q.curv_center.re * p.curv,
            p.curv_center.im * q.curv - q.curv_center.im * p.curv};
}

/// Tangency in linear coordinates:
///   circle-circle:  |w1*b2 - w2*b1|^2 = (b1 + b2)^2
///   line-circle:    (<w1, w2> - offset1 * b2)^2 = 1
///   line-line:      w1 + w2 = 0 (tangent at infinity)
bool disks_tangent(const PackedDisk& p, const PackedDisk& q) {
    bool exact = all_exact(p) && all_exact(q);
    auto eq = [&](const Scalar& a, const Scalar& b, double scale) {
        if (exact) return a == b;
        return std::abs(a.value() - b.value()) <= 1e-9 * std::max(1.0, scale);
    };
    if (p.is_line() && q.is_line()) {
        ComplexScalar s = p.curv_center + q.curv_center;
        return eq(s.re, Scalar(0), 1.0) && eq(s.im, Scalar(0), 1.0);
    }
    if (p.is_line() || q.is_line()) {
        const PackedDisk& line = p.is_line() ? p : q;
        const PackedDisk& circ = p.is_line() ? q : p;
        Scalar lhs = line.curv_center.re * circ.curv_center.re +
                     line.curv_center.im * circ.curv_center.im -
                     line.line_offset() * circ.curv;
        return eq(lhs * lhs, kOne, magnitude(circ));
    }
    ComplexScalar diff = circ_diff(p, q);
    Scalar rhs = p.curv + q.curv;
    return eq(diff.norm2(), rhs * rhs, magnitude(p) * magnitude(q));
}

}  // namespace

Scalar Quadruple::descartes_residual() const {
    Scalar s = a + b + c + d;
    return s * s - kTwo * (a * a + b * b + c * c + d * d);
}

Quadruple complete_seed(const Triple& t) {
    auto [lo, hi] = descartes_solutions(t);
    (void)hi;
    return {t.a, t.b, t.c, lo};
}

Quadruple scale_to_integral(const Quadruple& q) {
    const Scalar* vals[4] = {&q.a, &q.b, &q.c, &q.d};
    for (auto* v : vals)
        if (!v->is_exact()) throw UnsupportedForm();
    BigInt lcm_den = 1;
    for (auto* v : vals) {
        BigInt den = v->rational().get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    BigInt gcd_num = 0;
    for (auto* v : vals) {
        BigInt num = v->rational().get_num() * (lcm_den / v->rational().get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
    }
    if (gcd_num == 0) gcd_num = 1;
    Scalar factor{make_rational(lcm_den, gcd_num)};
    return {q.a * factor, q.b * factor, q.c * factor, q.d * factor};
}

ComplexScalar PackedDisk::center() const {
    if (is_line()) throw Error("line has no center");
    return {curv_center.re / curv, curv_center.im / curv};
}

Scalar PackedDisk::radius() const {
    if (is_line()) throw Error("line has no radius");
    return (kOne / curv).abs();
}

Disk PackedDisk::disk() const {
    if (is_line()) return Disk::line(curv_center, line_offset());
    return Disk(curv, center());
}

namespace {

PackedDisk make_circle(const Scalar& curv, const ComplexScalar& center, int level = 0) {
    PackedDisk d;
    d.curv = curv;
    d.curv_center = {curv * center.re, curv * center.im};
    d.cocurv = (center.norm2() - (kOne / curv) * (kOne / curv)) * curv;
    d.level = level;
    return d;
}

PackedDisk make_line(const ComplexScalar& unit_normal, const Scalar& offset, int level = 0) {
    PackedDisk d;
    d.curv = Scalar(0);
    d.curv_center = unit_normal;
    d.cocurv = kTwo * offset;
    d.level = level;
    return d;
}

}  // namespace

SeedGeometry window_seed() {
    SeedGeometry s;
    s.disks.push_back(make_circle(Scalar(-1), {Scalar(0), Scalar(0)}));
    s.disks.push_back(make_circle(Scalar(2), {Scalar::ratio(-1, 2), Scalar(0)}));
    s.disks.push_back(make_circle(Scalar(2), {Scalar::ratio(1, 2), Scalar(0)}));
    s.disks.push_back(make_circle(Scalar(3), {Scalar(0), Scalar::ratio(2, 3)}));
    return s;
}

SeedGeometry belt_seed() {
    SeedGeometry s;
    s.disks.push_back(make_line({Scalar(0), Scalar(-1)}, Scalar(0)));   // half plane y <= 0
    s.disks.push_back(make_line({Scalar(0), Scalar(1)}, Scalar(2)));    // half plane y >= 2
    s.disks.push_back(make_circle(Scalar(1), {Scalar(0), Scalar(1)}));
    s.disks.push_back(make_circle(Scalar(1), {Scalar(2), Scalar(1)}));
    return s;
}

SeedGeometry seed_from_curvatures(const Quadruple& q) {
    const Scalar* b[4] = {&q.a, &q.b, &q.c, &q.d};
    for (auto* v : b)
        if (v->sign() == 0)
            throw GeometryInconsistent();  // use belt_seed for line-bearing quadruples
    {
        Scalar res = q.descartes_residual();
        if (res.is_exact() ? res.sign() != 0 : std::abs(res.value()) > 1e-9)
            throw GeometryInconsistent();
    }
    Scalar r1 = kOne / *b[0], r2 = kOne / *b[1], r3 = kOne / *b[2], r4 = kOne / *b[3];
    if ((r1 + r2).sign() == 0) throw GeometryInconsistent();

    ComplexScalar c1{Scalar(0), Scalar(0)};
    ComplexScalar c2{r1 + r2, Scalar(0)};

    // Third disk: intersection of the tangency circles around 1 and 2.
    auto place = [&](const Scalar& r) {
        Scalar d1 = r1 + r;
        Scalar d2 = r2 + r;
        Scalar x = (c2.re * c2.re + d1 * d1 - d2 * d2) / (kTwo * c2.re);
        Scalar y2 = d1 * d1 - x * x;
        if (y2.sign() < 0) throw GeometryInconsistent();
        return ComplexScalar{x, y2.sqrt_or_float()};
    };
    ComplexScalar c3 = place(r3);

    ComplexScalar c4 = place(r4);
    auto tangent34 = [&](const ComplexScalar& cand) {
        Scalar want = (r3 + r4) * (r3 + r4);
        Scalar have = (cand - c3).norm2();
        if (want.is_exact() && have.is_exact()) return have == want;
        return std::abs(have.value() - want.value()) <= 1e-9 * std::max(1.0, std::abs(want.value()));
    };
    if (!tangent34(c4)) {
        c4 = {c4.re, -c4.im};
        if (!tangent34(c4)) throw GeometryInconsistent();
    }

    SeedGeometry s;
    s.disks.push_back(make_circle(*b[0], c1));
    s.disks.push_back(make_circle(*b[1], c2));
    s.disks.push_back(make_circle(*b[2], c3));
    s.disks.push_back(make_circle(*b[3], c4));
    return s;
}

namespace {

using ExactKey = std::array<Rational, 4>;
using FloatKey = std::array<long long, 4>;

ExactKey exact_key(const PackedDisk& d) {
    return {d.cocurv.rational(), d.curv.rational(), d.curv_center.re.rational(),
            d.curv_center.im.rational()};
}

FloatKey float_key(const PackedDisk& d) {
    auto r = [](double v) { return static_cast<long long>(std::llround(v * 1e9)); };
    return {r(d.cocurv.value()), r(d.curv.value()), r(d.curv_center.re.value()),
            r(d.curv_center.im.value())};
}

}  // namespace

Packing generate_packing(const SeedGeometry& seed, const Scalar& max_curvature,
                         const GenerateOptions& opts) {
    if (seed.disks.size() != 4) throw GeometryInconsistent();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!disks_tangent(seed.disks[i], seed.disks[j])) throw GeometryInconsistent();
    {
        Quadruple q{seed.disks[0].curv, seed.disks[1].curv, seed.disks[2].curv,
                    seed.disks[3].curv};
        Scalar res = q.descartes_residual();
        if (res.is_exact() ? res.sign() != 0 : std::abs(res.value()) > 1e-9)
            throw GeometryInconsistent();
    }

    bool exact = std::all_of(seed.disks.begin(), seed.disks.end(),
                             [](const PackedDisk& d) { return all_exact(d); });

    Packing out;
    out.seed = {seed.disks[0].curv, seed.disks[1].curv, seed.disks[2].curv, seed.disks[3].curv};

    std::map<ExactKey, int> eindex;
    std::map<FloatKey, int> findex;
    auto lookup = [&](const PackedDisk& d) -> int* {
        if (exact) return &eindex.try_emplace(exact_key(d), -1).first->second;
        return &findex.try_emplace(float_key(d), -1).first->second;
    };

    auto add_disk = [&](PackedDisk d) -> int {
        int* slot = lookup(d);
        if (*slot >= 0) return *slot;
        if (static_cast<long>(out.disks.size()) >= opts.max_disks) {
            if (opts.truncate_at_guard) return -1;
            throw OverflowError();
        }
        *slot = static_cast<int>(out.disks.size());
        out.disks.push_back(std::move(d));
        return *slot;
    };

    for (const PackedDisk& d : seed.disks) {
        PackedDisk copy = d;
        copy.level = 0;
        if (exact) {
            add_disk(copy);
        } else {
            PackedDisk dem = copy;
            dem.cocurv = dem.cocurv.demoted();
            dem.curv = dem.curv.demoted();
            dem.curv_center = dem.curv_center.demoted();
            add_disk(dem);
        }
    }

    std::set<std::array<int, 4>> seen_configs;
    std::deque<std::pair<std::array<int, 4>, int>> frontier;
    std::array<int, 4> seed_cfg{0, 1, 2, 3};
    seen_configs.insert(seed_cfg);
    frontier.emplace_back(seed_cfg, 0);

    bool truncated = false;
    while (!frontier.empty()) {
        auto [cfg, level] = frontier.front();
        frontier.pop_front();
        for (int drop = 0; drop < 4; ++drop) {
            Scalar co(0), cu(0);
            ComplexScalar cc{Scalar(0), Scalar(0)};
            for (int i = 0; i < 4; ++i) {
                if (i == drop) continue;
                const PackedDisk& d = out.disks[cfg[i]];
                co += d.cocurv;
                cu += d.curv;
                cc = cc + d.curv_center;
            }
            const PackedDisk& old = out.disks[cfg[drop]];
            PackedDisk fresh;
            fresh.cocurv = kTwo * co - old.cocurv;
            fresh.curv = kTwo * cu - old.curv;
            fresh.curv_center = {kTwo * cc.re - old.curv_center.re,
                                 kTwo * cc.im - old.curv_center.im};
            fresh.level = level + 1;
            if (fresh.curv > max_curvature) continue;

            int idx = add_disk(fresh);
            if (idx < 0) {
                truncated = true;
                continue;
            }
            std::array<int, 4> next;
            int k = 0;
            for (int i = 0; i < 4; ++i)
                if (i != drop) next[k++] = cfg[i];
            next[3] = idx;
            std::sort(next.begin(), next.end());
            if (seen_configs.insert(next).second) frontier.emplace_back(next, level + 1);
        }
        if (truncated) break;
    }

    int n = static_cast<int>(out.disks.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (disks_tangent(out.disks[i], out.disks[j])) out.adjacency.emplace_back(i, j);
    return out;
}

std::array<Disk, 3> tricycle_of_z_geometric(const ProjPoint& z) {
    Triple t = triple_of_z(z);
    if (t.a.sign() == 0 || t.b.sign() == 0 || t.c.sign() == 0) throw NotRealizable();

    Scalar rA = kOne / t.a, rB = kOne / t.b, rC = kOne / t.c;
    const Scalar& x = z.x();
    const Scalar& y = z.y();
    ComplexScalar b2{x * x - y * y, kTwo * x * y};

    // Anchor tangency at the origin; the pair spinor of (C,A) is then [1,0],
    // and of (C,B) is [x,y] up to the sign double cover.
    ComplexScalar centerC{-rC, Scalar(0)};
    ComplexScalar centerA{-rC + rC * rA, Scalar(0)};
    ComplexScalar centerB = centerC + ComplexScalar{rC * rB * b2.re, rC * rB * b2.im};

    Disk A(t.a, centerA), B(t.b, centerB), C(t.c, centerC);

    // The A-B pair must close up; a failed residual means z was not
    // realizable as a genuine tricycle.
    Scalar want = (rA + rB) * (rA + rB);
    Scalar have = (centerA - centerB).norm2();
    if (want.is_exact() && have.is_exact()) {
        if (want != have) throw NotRealizable();
    } else if (std::abs(want.value() - have.value()) >
               1e-9 * std::max(1.0, std::abs(want.value()))) {
        throw NotRealizable();
    }
    return {A, B, C};
}

IntegralityResult integrality_classify(const Rational& x_squared, const Rational& y) {
    if (x_squared < 0) throw UnsupportedForm();
    IntegralityResult res;

    Rational A = 1 - y;
    Rational B = x_squared + y * y - y;
    Rational C = y;
    Rational radicand = A * B + B * C + C * A;
    if (radicand < 0) throw NotRealizable();

    if (auto xr = rational_sqrt(x_squared)) {
        // Rational parameter: the completion is rational too, so the seed
        // scales to a primitive integral quadruple.
        auto root = rational_sqrt(radicand);
        if (!root) throw Error("rational parameter with irrational completion");
        Rational d_minus = A + B + C - 2 * (*root);
        res.cls = IntegralityClass::IntegralAfterScaling;
        res.scaled_seed =
            scale_to_integral({Scalar(A), Scalar(B), Scalar(C), Scalar(d_minus)});
        (void)xr;
        return res;
    }

    // x = sqrt(q) with q not a perfect square: both completions are
    // irrational, which no scaling can repair.
    res.cls = IntegralityClass::NotIntegral;
    auto wrap = [](const Rational& r) { return r.get_str(); };
    Rational s = A + B + C;
    res.witness = "D- = " + wrap(s) + " - 2*sqrt(" + wrap(radicand) + "), sqrt(" +
                  wrap(radicand) + ") irrational";
    return res;
}

IntegralityResult integrality_classify(const ProjPoint& z) {
    if (z.infinite || !z.is_exact()) throw UnsupportedForm();
    Rational x = z.x().rational();
    return integrality_classify(Rational(x * x), z.y().rational());
}

int TricycleGraph::find_vertex(std::array<int, 3> disks) const {
    std::sort(disks.begin(), disks.end());
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].disks == disks) return static_cast<int>(i);
    return -1;
}

TricycleGraph build_tricycle_graph(const Packing& p) {
    int n = static_cast<int>(p.disks.size());
    std::vector<std::set<int>> adj(n);
    for (auto [i, j] : p.adjacency) {
        adj[i].insert(j);
        adj[j].insert(i);
    }

    TricycleGraph g;
    std::map<std::array<int, 3>, int> vid;
    for (int i = 0; i < n; ++i)
        for (int j : adj[i]) {
            if (j <= i) continue;
            for (int k : adj[j]) {
                if (k <= j || !adj[i].count(k)) continue;
                std::array<int, 3> tri{i, j, k};
                vid[tri] = static_cast<int>(g.vertices.size());
                g.vertices.push_back({tri});
            }
        }

    g.neighbors.resize(g.vertices.size());
    g.zero_depth.resize(g.vertices.size(), 0);
    for (size_t v = 0; v < g.vertices.size(); ++v)
        for (int d : g.vertices[v].disks)
            if (p.disks[d].curv.sign() <= 0) g.zero_depth[v] = 1;

    // Group vertices by shared disk pair; join those whose third disks touch.
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_edge;
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        auto [i, j, k] = std::tuple{g.vertices[v].disks[0], g.vertices[v].disks[1],
                                    g.vertices[v].disks[2]};
        by_edge[{i, j}].emplace_back(k, static_cast<int>(v));
        by_edge[{i, k}].emplace_back(j, static_cast<int>(v));
        by_edge[{j, k}].emplace_back(i, static_cast<int>(v));
    }
    for (auto& [edge, thirds] : by_edge) {
        for (size_t s = 0; s < thirds.size(); ++s)
            for (size_t t = s + 1; t < thirds.size(); ++t) {
                auto [d1, v1] = thirds[s];
                auto [d2, v2] = thirds[t];
                if (adj[d1].count(d2)) {
                    g.neighbors[v1].push_back(v2);
                    g.neighbors[v2].push_back(v1);
                }
            }
    }
    for (auto& nb : g.neighbors) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

std::vector<int> graph_depth_all(const TricycleGraph& g) {
    std::vector<int> dist(g.vertices.size(), -1);
    std::deque<int> queue;
    for (size_t v = 0; v < g.vertices.size(); ++v)
        if (g.zero_depth[v]) {
            dist[v] = 0;
            queue.push_back(static_cast<int>(v));
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

int graph_depth(const TricycleGraph& g, int v) {
    if (v < 0 || static_cast<size_t>(v) >= g.vertices.size()) throw Error("bad vertex");
    auto dist = graph_depth_all(g);
    if (dist[v] < 0) throw UnreachableVertex();
    return dist[v];
}

bool bfs_ball_unpruned(const TricycleGraph& g, int v, int radius) {
    std::vector<int> dist(g.vertices.size(), -1);
    std::deque<int> queue;
    dist[v] = 0;
    queue.push_back(v);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] >= radius) continue;
        if (g.neighbors[u].size() != 6) return false;
        for (int w : g.neighbors[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return true;
}

std::string Packing::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"disks\":[";
    for (size_t i = 0; i < disks.size(); ++i) {
        const PackedDisk& d = disks[i];
        if (i) os << ",";
        os << "{\"index\":" << i << ",\"curvature\":" << d.curv.value();
        if (d.is_line()) {
            os << ",\"cx\":" << d.curv_center.re.value()
               << ",\"cy\":" << d.curv_center.im.value()
               << ",\"line\":true,\"offset\":" << d.line_offset().value();
        } else {
            ComplexScalar c = d.center();
            os << ",\"cx\":" << c.re.value() << ",\"cy\":" << c.im.value();
        }
        os << ",\"level\":" << d.level << "}";
    }
    os << "],\"adjacency\":[";
    for (size_t i = 0; i < adjacency.size(); ++i) {
        if (i) os << ",";
        os << "[" << adjacency[i].first << "," << adjacency[i].second << "]";
    }
    os << "]}";
    return os.str();
}

std::string Packing::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "index,curvature,cx,cy,level\n";
    for (size_t i = 0; i < disks.size(); ++i) {
        const PackedDisk& d = disks[i];
        double cx, cy;
        if (d.is_line()) {
            cx = d.curv_center.re.value();
            cy = d.curv_center.im.value();
        } else {
            ComplexScalar c = d.center();
            cx = c.re.value();
            cy = c.im.value();
        }
        os << i << "," << d.curv.value() << "," << cx << "," << cy << "," << d.level << "\n";
    }
    os << "\ni,j\n";
    for (auto [i, j] : adjacency) os << i << "," << j << "\n";
    return os.str();
}

}  // namespace apollo

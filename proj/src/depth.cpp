#include "apollo/depth.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace apollo {

namespace {

// Float-mode non-positivity: an entry at or below 1e-12 times the largest
// initial entry counts as non-positive, so curvature-0 boundaries terminate.
bool non_positive(const Scalar& v, const Scalar& threshold) {
    if (v.is_exact() && threshold.is_exact()) return v.sign() <= 0;
    return v.value() <= threshold.value();
}

Scalar termination_threshold(const Triple& t) {
    if (t.a.is_exact() && t.b.is_exact() && t.c.is_exact()) return Scalar(0);
    double m = std::max({std::abs(t.a.value()), std::abs(t.b.value()), std::abs(t.c.value())});
    return Scalar(1e-12 * m);
}

}  // namespace

Triple Triple::sorted_desc() const {
    std::array<Scalar, 3> v{a, b, c};
    std::sort(v.begin(), v.end(), [](const Scalar& x, const Scalar& y) { return y < x; });
    return {v[0], v[1], v[2]};
}

std::string Triple::str() const {
    return "(" + a.str() + "," + b.str() + "," + c.str() + ")";
}

std::vector<long> DepthResult::alpha_runs() const {
    // Run lengths reading the word in composition order (reverse of
    // application order); the first run is then always non-empty.
    std::vector<long> runs;
    long current = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == WordSymbol::Alpha) {
            ++current;
        } else {
            runs.push_back(current);
            current = 0;
        }
    }
    runs.push_back(current);
    if (word.empty()) runs.clear();
    return runs;
}

std::string DepthResult::word_str() const {
    auto runs = alpha_runs();
    std::ostringstream os;
    for (size_t i = 0; i < runs.size(); ++i) {
        if (i) os << "b";
        if (runs[i] > 0) os << "a^" << runs[i];
    }
    return os.str();
}

std::pair<Scalar, Scalar> descartes_solutions(const Triple& t) {
    Scalar radicand = t.pair_sum();
    if (radicand.sign() < 0) throw NegativeRadicand();
    Scalar root = radicand.sqrt_or_float();
    Scalar s = t.sum();
    Scalar two(2);
    return {s - two * root, s + two * root};
}

DepthResult depth_triple(const Triple& t, long max_steps) {
    if (max_steps < 1) throw Error("max_steps must be >= 1");
    DepthResult r;
    r.chain.push_back(t);
    Scalar threshold = termination_threshold(t);

    std::array<Scalar, 3> v{t.a, t.b, t.c};
    if (non_positive(*std::min_element(v.begin(), v.end()), threshold)) return r;

    for (long step = 1; step <= max_steps; ++step) {
        size_t hi = 0;
        for (size_t i = 1; i < 3; ++i)
            if (v[i] > v[hi]) hi = i;  // first maximal entry wins ties

        Triple cur{v[0], v[1], v[2]};
        auto [lo_root, hi_root] = descartes_solutions(cur);
        (void)hi_root;
        v[hi] = lo_root;

        r.chain.push_back(Triple{v[0], v[1], v[2]}.sorted_desc());
        r.depth = step;
        if (non_positive(*std::min_element(v.begin(), v.end()), threshold)) return r;
    }
    r.overflow = true;
    return r;
}

std::pair<Scalar, Scalar> reduce_triple(const Triple& t) {
    if (t.a.sign() <= 0 || t.b.sign() <= 0 || t.c.sign() <= 0) throw NonPositiveInput();
    std::array<Scalar, 3> v{t.a, t.b, t.c};
    size_t hi = 0;
    for (size_t i = 1; i < 3; ++i)
        if (v[i] > v[hi]) hi = i;
    // Rotate so the greatest entry is last; the first two carry over.
    return {v[(hi + 1) % 3] / v[hi], v[(hi + 2) % 3] / v[hi]};
}

Triple triple_of_z(const ProjPoint& z) {
    if (z.infinite) throw InfinitePoint();
    const Scalar& x = z.x();
    const Scalar& y = z.y();
    return {Scalar(1) - y, x * x + y * y - y, y};
}

ProjPoint z_of_triple(const Triple& t) {
    Scalar denom = t.a + t.c;
    if (denom.sign() <= 0) throw NotRealizable();
    Scalar y = t.c / denom;
    Scalar radicand = t.b / denom + y - y * y;
    if (radicand.sign() < 0) throw NotRealizable();
    return ProjPoint(radicand.sqrt_or_float(), y);
}

DepthResult depth_z(const ProjPoint& z, long max_steps) {
    return depth_triple(triple_of_z(z), max_steps);
}

DepthResult depth_z_algorithm(const ProjPoint& z, long max_steps) {
    if (z.infinite) throw InfinitePoint();
    DepthResult r;
    Scalar x = z.x().abs();
    Scalar y = z.y();

    bool exact = x.is_exact() && y.is_exact();
    Scalar eps = exact ? Scalar(0) : Scalar(1e-12);

    // Outside the open strip one of the outer curvatures is already <= 0.
    if (y.sign() <= 0 || y >= Scalar(1) - eps) {
        r.chain.push_back(triple_of_z(ProjPoint(x, y)));
        return r;
    }

    const Scalar quarter = Scalar::ratio(1, 4);
    const Scalar half = Scalar::ratio(1, 2);
    const Scalar one(1);

    r.chain.push_back(triple_of_z(ProjPoint(x, y)));
    for (long d = 0; d <= max_steps; ++d) {
        Scalar dy = half - y;
        Scalar omega = x * x + dy * dy;
        if (omega <= quarter + eps) {
            r.depth = d;
            return r;
        }
        if (d == max_steps) break;

        Scalar ry = y - one;
        Scalar denom = x * x + ry * ry;
        if (denom < one) {
            // Simultaneous update from the old coordinates: inversion through
            // the unit circle at (0,1), then fold to the upper half strip.
            Scalar nx = x / denom;
            Scalar ny = half + ((x * x + y * y - y) / denom - half).abs();
            x = nx;
            y = ny;
            r.word.push_back(WordSymbol::Beta);
        }
        x = (x - one).abs();
        r.word.push_back(WordSymbol::Alpha);
        r.chain.push_back(triple_of_z(ProjPoint(x, y)));
    }
    r.overflow = true;
    r.depth = max_steps;
    return r;
}

}  // namespace apollo

#pragma once

#include <utility>
#include <vector>

#include "apollo/scalar.hpp"

namespace apollo {

/// A triple of curvatures. No ordering is assumed.
struct Triple {
    Scalar a, b, c;

    Triple() = default;
    Triple(Scalar a_, Scalar b_, Scalar c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    Scalar min() const { return a < b ? (a < c ? a : c) : (b < c ? b : c); }
    Scalar max() const { return a > b ? (a > c ? a : c) : (b > c ? b : c); }
    Scalar sum() const { return a + b + c; }
    /// ab + bc + ca, the radicand of the completion formula.
    Scalar pair_sum() const { return a * b + b * c + c * a; }

    Triple sorted_desc() const;
    Triple demoted() const { return {a.demoted(), b.demoted(), c.demoted()}; }

    std::string str() const;
};

/// One step of the reduction word: a unit shift toward the origin, or the
/// inversion-and-fold composite.
enum class WordSymbol { Alpha, Beta };

/// Outcome of the depth process. `chain` lists every visited triple (first =
/// input, last = first triple with a non-positive entry); `word` is the
/// symbol sequence in application order (only the z-plane algorithm fills
/// it). `alpha_runs()` gives the run-length exponents in composition order,
/// whose sum equals the depth.
struct DepthResult {
    long depth = 0;
    bool overflow = false;
    std::vector<Triple> chain;
    std::vector<WordSymbol> word;

    std::vector<long> alpha_runs() const;
    std::string word_str() const;
};

inline constexpr long kDefaultMaxSteps = 10000;

/// Both completions of a tricycle: (sum - 2*sqrt(radicand), sum + 2*sqrt(..)).
/// Exact when the radicand is a perfect rational square.
std::pair<Scalar, Scalar> descartes_solutions(const Triple& t);

/// The depth process on curvature triples: repeatedly replace the greatest
/// entry (first maximal on ties) with the smaller completion until an entry
/// is non-positive; the producing step is counted.
DepthResult depth_triple(const Triple& t, long max_steps = kDefaultMaxSteps);

/// Scales out the (first) greatest entry: rotates the triple so it is last
/// and returns the other two divided by it. All entries must be positive.
std::pair<Scalar, Scalar> reduce_triple(const Triple& t);

/// Curvature triple of the parameter point z = x+iy: (1-y, x^2+y^2-y, y).
Triple triple_of_z(const ProjPoint& z);

/// Inverse parametrization: rescales so the first and third entries sum to 1,
/// then x = +sqrt(B' + y - y^2), y = C'. Throws NotRealizable when the
/// radicand is negative.
ProjPoint z_of_triple(const Triple& t);

/// Depth of the tricycle encoded by z (delegates to depth_triple).
DepthResult depth_z(const ProjPoint& z, long max_steps = kDefaultMaxSteps);

/// Depth via the plane walk: fold x, then repeat [invert-and-fold when inside
/// the mirror circle at (0,1)] + [unit shift with fold] until the point lands
/// in the closed disk x^2+(y-1/2)^2 <= 1/4. Records the symbol word.
/// Agrees with depth_z wherever both are defined.
DepthResult depth_z_algorithm(const ProjPoint& z, long max_steps = kDefaultMaxSteps);

}  // namespace apollo

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apollo/depth.hpp"
#include "apollo/scalar.hpp"
#include "apollo/spinor.hpp"

namespace apollo {

/// Four curvatures in Descartes configuration:
/// (a+b+c+d)^2 = 2(a^2+b^2+c^2+d^2).
struct Quadruple {
    Scalar a, b, c, d;

    Triple first_three() const { return {a, b, c}; }
    /// Residual of the Descartes identity (zero for a valid quadruple).
    Scalar descartes_residual() const;
};

/// Completes a tricycle with the smaller-curvature (outermost) solution.
Quadruple complete_seed(const Triple& t);

/// Multiplies a rational quadruple by lcm(denominators)/gcd(numerators),
/// giving a primitive integral quadruple.
Quadruple scale_to_integral(const Quadruple& q);

/// Disk in linear coordinates: co-curvature, curvature and curvature*center.
/// All three reflect linearly through Descartes configurations, so integral
/// seeds stay exact. Lines have curvature 0, co-curvature = 2*offset, and
/// curvature*center holding the unit normal into the half plane.
struct PackedDisk {
    Scalar cocurv;
    Scalar curv;
    ComplexScalar curv_center;
    int level = 0;

    bool is_line() const { return curv.sign() == 0; }
    ComplexScalar center() const;
    Scalar radius() const;
    ComplexScalar line_normal() const { return curv_center; }
    Scalar line_offset() const { return cocurv / Scalar(2); }

    Disk disk() const;
};

struct Packing {
    std::vector<PackedDisk> disks;
    std::vector<std::pair<int, int>> adjacency;  // tangent index pairs, i < j
    Quadruple seed;

    std::string to_json() const;
    std::string to_csv() const;
};

struct GenerateOptions {
    long max_disks = 100000;
    /// When false, hitting the disk guard throws OverflowError; when true the
    /// truncated packing is returned (needed for strip-type seeds, which have
    /// unboundedly many disks under any curvature cutoff).
    bool truncate_at_guard = false;
};

/// Geometric seed quadruples with exact layout.
struct SeedGeometry {
    std::vector<PackedDisk> disks;  // exactly four, mutually tangent
};

/// Canonical geometry for a curvature quadruple: first disk centered at the
/// origin, second to its right, third above, fourth by completion. Entries
/// must be nonzero (use belt_seed for line-bearing quadruples).
SeedGeometry seed_from_curvatures(const Quadruple& q);
/// The (-1,2,2,3) packing seed.
SeedGeometry window_seed();
/// The two-lines-and-two-unit-disks seed (0,0,1,1).
SeedGeometry belt_seed();

/// Breadth-first reflection through every Descartes configuration, pruning
/// disks with curvature above the cutoff; deduplicated; adjacency by exact
/// (or 1e-9) tangency.
Packing generate_packing(const SeedGeometry& seed, const Scalar& max_curvature,
                         const GenerateOptions& opts = {});

/// Disks with curvatures (1-y, x^2+y^2-y, y) positioned so the pair spinors
/// anchored at the third disk are [1,0] and [x,y] up to sign, with the
/// tangency point of the anchor pair at the origin.
std::array<Disk, 3> tricycle_of_z_geometric(const ProjPoint& z);

enum class IntegralityClass { IntegralAfterScaling, NotIntegral };

/// Witness value r + coeff*sqrt(radicand) for the irrational branch.
struct IntegralityResult {
    IntegralityClass cls;
    Quadruple scaled_seed;           // valid for IntegralAfterScaling
    std::string witness;             // irrational completion, spelled out
};

/// Classifies the packing of z = x+iy. `x_squared` passes x symbolically as
/// sqrt(q): rational x is (q, true) with q = x^2 a perfect square.
IntegralityResult integrality_classify(const Rational& x_squared, const Rational& y);
IntegralityResult integrality_classify(const ProjPoint& z);

/// Vertices are mutually tangent disk triples; edges join triples sharing
/// two disks whose remaining disks are tangent.
struct TricycleGraph {
    struct Vertex {
        std::array<int, 3> disks;  // sorted ascending
    };
    std::vector<Vertex> vertices;
    std::vector<std::vector<int>> neighbors;
    std::vector<char> zero_depth;  // contains a non-positive-curvature disk

    int find_vertex(std::array<int, 3> disks) const;
};

TricycleGraph build_tricycle_graph(const Packing& p);

/// BFS distance from v to the zero-depth subgraph. Throws UnreachableVertex
/// when pruning severed every path.
int graph_depth(const TricycleGraph& g, int v);

/// Multi-source BFS distances from the zero-depth subgraph (-1 = unreachable).
std::vector<int> graph_depth_all(const TricycleGraph& g);

/// True when every vertex within distance `radius - 1` of v (in the built
/// graph) has all six neighbors present, so truncation cannot have changed
/// the BFS ball of that radius.
bool bfs_ball_unpruned(const TricycleGraph& g, int v, int radius);

}  // namespace apollo

#pragma once

#include <vector>

#include "lune/polygon.hpp"
#include "lune/sphere.hpp"

namespace lune {

/// Width of the polygon determined by the supporting hemisphere whose
/// boundary contains side `side`, together with the attaining lune.
struct SideWidth {
    int side;
    double width;             ///< radians
    Lune attaining;           ///< (side hemisphere, optimal opposing support)
    int touched_vertex;       ///< smallest vertex index on the opposing boundary
    bool at_least_half_pi;    ///< width >= pi/2 - kEpsGeo; flagged, not rejected
};

struct WidthProfile {
    std::vector<SideWidth> per_side;
    double thickness = 0.0;
    int attaining_side = 0;  ///< smallest side index realizing the minimum
};

/// Supporting hemisphere whose boundary contains side i.
Hemisphere side_hemisphere(const SphericalPolygon& polygon, int i);

/// Exact minimizer of dot(direction, c) over unit c supporting the polygon
/// (all vertices on the nonnegative side of c). The minimum over the
/// spherical polytope of feasible centers is attained on its boundary, so a
/// finite candidate set suffices:
///   (1) per vertex j, the direction opposing `direction` in the plane
///       orthogonal to v_j (support touching only v_j);
///   (2) per vertex pair, both unit normals of their common great circle.
/// Ordering is vertex candidates by index, then pairs lexicographically,
/// which makes ties resolve toward the smallest touched vertex index.
struct SupportOptimum {
    double dot;
    SpherePoint center;
    int touched_vertex;  ///< smallest index with |v . center| <= kEpsGeo, -1 if none
};

SupportOptimum min_support_dot(const SphericalPolygon& polygon, const SpherePoint& direction);

/// Minimum lune thickness over lunes K intersect K* with K the side-i
/// hemisphere and K* any supporting hemisphere; the lune identity reduces
/// this to minimizing the dot of the two centers. Throws DegenerateLune if
/// the optimum collapses.
SideWidth width_for_side(const SphericalPolygon& polygon, int i);

/// All per-side widths plus their minimum. The reduction is index ordered;
/// ties keep the smallest side index.
WidthProfile width_profile(const SphericalPolygon& polygon);

double thickness(const SphericalPolygon& polygon);

/// Brute-force check value for width_for_side: minimizes over supporting
/// centers drawn from a Fibonacci grid of m points on S^2. Always an upper
/// bound on the exact width; within O(grid spacing) of it. Throws
/// NoFeasibleSample when no grid point supports the polygon.
double sampling_oracle_width(const SphericalPolygon& polygon, int side, int grid_size);

/// sampling_oracle_width followed by multistart local pattern search around
/// the best grid basins; agrees with the exact width to ~1e-9 for
/// well-conditioned polygons. Independent of the candidate enumeration.
double refined_oracle_width(const SphericalPolygon& polygon, int side, int grid_size);

/// Minimum lune thickness over lunes with BOTH hemispheres unconstrained
/// (any supporting pair), found by grid scan plus refinement over the outer
/// center. Used to check that the minimal lune is side-flush.
double oracle_min_lune_thickness(const SphericalPolygon& polygon, int grid_size);

/// Point idx of the m-point Fibonacci grid on S^2.
SpherePoint fibonacci_point(int idx, int m);

}  // namespace lune

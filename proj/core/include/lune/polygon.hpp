#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lune/sphere.hpp"

namespace lune {

enum class ValidationIssueKind {
    too_few_vertices,
    antipodal_vertices,
    not_convex,
    not_in_open_hemisphere,
};

const char* to_string(ValidationIssueKind kind);

struct ValidationIssue {
    ValidationIssueKind kind;
    std::vector<int> indices;  ///< offending vertex indices, when applicable
    std::string detail;
};

struct ValidationError : Error {
    explicit ValidationError(std::vector<ValidationIssue> issues);
    const char* kind() const override { return "validation_error"; }
    std::vector<ValidationIssue> issues;
};

/// Spherically convex polygon with positive orientation, contained in an
/// open hemisphere certified by an explicit witness center. Immutable once
/// validated; vertex indices are cyclic modulo size() throughout.
class SphericalPolygon {
  public:
    /// Validates all invariants; throws ValidationError listing every
    /// violation. Use violations() for the non-throwing form.
    static SphericalPolygon validate(std::vector<SpherePoint> vertices);

    /// Every violated invariant of the candidate vertex list; empty means
    /// validate() would succeed.
    static std::vector<ValidationIssue> violations(const std::vector<SpherePoint>& vertices);

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<SpherePoint>& vertices() const { return vertices_; }

    /// Vertex by cyclic index (any integer, reduced modulo size()).
    const SpherePoint& vertex(long i) const { return vertices_[mod(i)]; }

    /// Side i runs from vertex i to vertex i+1.
    Arc side(long i) const { return Arc(vertex(i), vertex(i + 1)); }
    double side_length(long i) const { return side_lengths_[mod(i)]; }

    /// Unit pole of side i: normalize(v_i x v_{i+1}). Points into the
    /// hemisphere containing the polygon.
    const SpherePoint& side_pole(long i) const { return side_poles_[mod(i)]; }

    double perimeter() const { return perimeter_; }

    /// Arc length from vertex 0 to vertex i counterclockwise along the
    /// boundary.
    double boundary_offset_of_vertex(long i) const { return cumulative_[mod(i)]; }

    /// Certified center of an open hemisphere strictly containing every
    /// vertex.
    const SpherePoint& hemisphere_witness() const { return witness_; }

    int mod(long i) const {
        const long n = static_cast<long>(vertices_.size());
        return static_cast<int>(((i % n) + n) % n);
    }

  private:
    SphericalPolygon(std::vector<SpherePoint> vertices, SpherePoint witness);

    std::vector<SpherePoint> vertices_;
    std::vector<SpherePoint> side_poles_;
    std::vector<double> side_lengths_;
    std::vector<double> cumulative_;
    double perimeter_ = 0.0;
    SpherePoint witness_;
};

double perimeter(const SphericalPolygon& polygon);

/// Endpoint indices (j, j+1 mod n) of the side opposite vertex i of an
/// odd-gon: j = i + (n-1)/2. Throws EvenPolygon when n is even.
std::pair<int, int> opposite_side(const SphericalPolygon& polygon, int i);

/// Projection foot of a vertex on the great circle of its opposite side.
struct OppositeProjection {
    int index;                        ///< i
    SpherePoint t;                    ///< foot of the projection
    double dist_to_side;              ///< |v_i t_i| (radians)
    bool in_relative_interior;        ///< t strictly between the side endpoints
    std::pair<int, int> side_indices; ///< (i+(n-1)/2, i+(n+1)/2) mod n
};

OppositeProjection opposite_projection(const SphericalPolygon& polygon, int i);

/// Where a point sits on the boundary: side index, offset from the side's
/// start vertex, and the absolute counterclockwise position from vertex 0.
/// Ties at vertices resolve to the lower side index.
struct BoundaryPosition {
    int side;
    double offset;
    double arc_position;
};

std::optional<BoundaryPosition> locate_on_boundary(const SphericalPolygon& polygon,
                                                   const SpherePoint& p, double tol = kEpsGeo);

/// Arc length traveled counterclockwise from `from` to `to` along the
/// boundary; in [0, perimeter). Throws NotOnBoundary when either point is
/// not on a side arc within kEpsGeo.
double boundary_length_ccw(const SphericalPolygon& polygon, const SpherePoint& from,
                           const SpherePoint& to);

}  // namespace lune

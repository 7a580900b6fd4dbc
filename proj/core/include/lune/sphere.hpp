#pragma once

#include <numbers>
#include <optional>
#include <utility>

#include "lune/errors.hpp"
#include "lune/vec3.hpp"

namespace lune {

inline constexpr double kPi = std::numbers::pi;

/// Unit-norm tolerance for SpherePoint.
inline constexpr double kEpsUnit = 1e-12;

/// Tolerance for geometric predicates: membership tests, degeneracy guards.
/// Double precision leaves roughly three digits of headroom under chained
/// trigonometry, hence the gap to kEpsUnit.
inline constexpr double kEpsGeo = 1e-9;

/// A point of S^2 stored as a unit 3-vector. Construction renormalizes, so
/// the norm is 1 within kEpsUnit for any finite nonzero input.
class SpherePoint {
  public:
    SpherePoint(double x, double y, double z) : SpherePoint(Vec3{x, y, z}) {}

    explicit SpherePoint(const Vec3& v) : v_(v) {
        const double n = norm(v);
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw Error("sphere point requires a finite nonzero direction");
        }
        v_ = (1.0 / n) * v_;
    }

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

  private:
    Vec3 v_;
};

inline double dot(const SpherePoint& a, const SpherePoint& b) { return dot(a.vec(), b.vec()); }
inline Vec3 cross(const SpherePoint& a, const SpherePoint& b) { return cross(a.vec(), b.vec()); }

/// Great circle {x : x . pole = 0}. pole and -pole describe the same circle
/// with opposite orientation; the orientation follows the right-hand rule of
/// the ordered pair the circle was built from.
struct GreatCircle {
    SpherePoint pole;
};

/// Closed hemisphere {x : x . center >= 0}.
struct Hemisphere {
    SpherePoint center;

    bool contains(const SpherePoint& p, double tol = kEpsGeo) const {
        return dot(center, p) >= -tol;
    }
    GreatCircle boundary() const { return {center}; }
};

/// Shorter great-circle path between two points that are neither equal nor
/// antipodal. Length and the circle pole are cached at construction.
class Arc {
  public:
    Arc(const SpherePoint& a, const SpherePoint& b);

    const SpherePoint& a() const { return a_; }
    const SpherePoint& b() const { return b_; }
    double length() const { return length_; }
    const SpherePoint& pole() const { return pole_; }
    GreatCircle circle() const { return {pole_}; }

  private:
    SpherePoint a_;
    SpherePoint b_;
    SpherePoint pole_;
    double length_;
};

/// Lune G intersect H for hemispheres with distinct, non-antipodal centers.
class Lune {
  public:
    Lune(const Hemisphere& g, const Hemisphere& h);

    const Hemisphere& g() const { return g_; }
    const Hemisphere& h() const { return h_; }

    bool contains(const SpherePoint& p, double tol = kEpsGeo) const {
        return g_.contains(p, tol) && h_.contains(p, tol);
    }

  private:
    Hemisphere g_;
    Hemisphere h_;
};

/// Angular distance in [0, pi]. Total: antipodes map to pi by continuity
/// even though no unique arc joins them.
double distance(const SpherePoint& a, const SpherePoint& b);

inline SpherePoint antipode(const SpherePoint& a) { return SpherePoint(-a.vec()); }

/// The unique great circle through two points; pole = normalize(a x b).
/// Throws DegenerateCircle for equal or antipodal inputs.
GreatCircle great_circle_through(const SpherePoint& a, const SpherePoint& b);

/// Point at arc length s from arc.a along the arc. s must lie in
/// [0, length] up to kEpsGeo slack; throws OutOfRange otherwise.
SpherePoint arc_point_at(const Arc& arc, double s);

/// Nearest point of the circle to a. Throws PoleProjection when a is within
/// kEpsGeo of a pole, where every point of the circle is equidistant.
SpherePoint project_onto_circle(const SpherePoint& a, const GreatCircle& f);

/// Midpoints of the two semicircles bounding the lune: first the center of
/// G/H (on the boundary of G, deepest inside H), then the center of H/G.
std::pair<SpherePoint, SpherePoint> lune_midpoints(const Lune& l);

/// Distance between the two semicircle midpoints. Equals
/// pi - distance(g.center, h.center); the midpoint construction is the
/// definition, the identity is checked in tests.
double lune_thickness(const Lune& l);

/// Angle in [0, pi] between the initial tangents at `at` of the arcs toward
/// p and toward q. Throws DegenerateAngle when p or q coincides with `at`
/// or its antipode.
double spherical_angle(const SpherePoint& at, const SpherePoint& p, const SpherePoint& q);

/// Intersection point of two shorter arcs, or nullopt when they do not
/// meet. Throws CoplanarArcs when the arcs share a great circle and overlap
/// in more than one point.
std::optional<SpherePoint> arc_intersection(const Arc& u, const Arc& v);

/// Unit tangent vector at `at` pointing along the arc toward `toward`.
Vec3 tangent_toward(const SpherePoint& at, const SpherePoint& toward);

bool on_circle(const SpherePoint& p, const GreatCircle& f, double tol = kEpsGeo);
bool on_arc(const SpherePoint& p, const Arc& arc, double tol = kEpsGeo);

/// Deterministic unit vector orthogonal to p.
SpherePoint any_orthogonal(const SpherePoint& p);

/// Right-handed orthonormal frame (e1, e2, axis); e1 = any_orthogonal(axis).
std::pair<Vec3, Vec3> tangent_frame(const SpherePoint& axis);

}  // namespace lune

#include "lune/sphere.hpp"

#include <cmath>
#include <vector>

namespace lune {

namespace {

std::string fmt_point(const SpherePoint& p) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "(%.17g, %.17g, %.17g)", p.x(), p.y(), p.z());
    return buf;
}

}  // namespace

Arc::Arc(const SpherePoint& a, const SpherePoint& b)
    : a_(a), b_(b), pole_(Vec3{0, 0, 1}), length_(0.0) {
    if (std::fabs(dot(a, b)) >= 1.0 - kEpsGeo) {
        throw DegenerateArc("arc endpoints must be neither equal nor antipodal: " + fmt_point(a) +
                            ", " + fmt_point(b));
    }
    pole_ = SpherePoint(cross(a, b));
    length_ = distance(a, b);
}

Lune::Lune(const Hemisphere& g, const Hemisphere& h) : g_(g), h_(h) {
    const double ang = distance(g.center, h.center);
    if (ang <= kEpsGeo || ang >= kPi - kEpsGeo) {
        throw DegenerateLune("lune requires hemisphere centers neither equal nor antipodal; "
                             "center angle = " + std::to_string(ang));
    }
}

double distance(const SpherePoint& a, const SpherePoint& b) {
    // atan2 of (|a x b|, a . b) is well conditioned near both 0 and pi,
    // unlike acos of the dot product.
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

GreatCircle great_circle_through(const SpherePoint& a, const SpherePoint& b) {
    if (std::fabs(dot(a, b)) >= 1.0 - kEpsGeo) {
        throw DegenerateCircle("no unique great circle through equal or antipodal points " +
                               fmt_point(a) + ", " + fmt_point(b));
    }
    return {SpherePoint(cross(a, b))};
}

SpherePoint arc_point_at(const Arc& arc, double s) {
    if (s < -kEpsGeo || s > arc.length() + kEpsGeo) {
        throw OutOfRange("arc parameter " + std::to_string(s) + " outside [0, " +
                         std::to_string(arc.length()) + "]");
    }
    const double t = std::fmin(std::fmax(s, 0.0), arc.length());
    const Vec3 w = tangent_toward(arc.a(), arc.b());
    return SpherePoint(std::cos(t) * arc.a().vec() + std::sin(t) * w);
}

SpherePoint project_onto_circle(const SpherePoint& a, const GreatCircle& f) {
    if (std::fabs(dot(a, f.pole)) >= 1.0 - kEpsGeo) {
        throw PoleProjection("projection of a pole onto its circle is not unique: " + fmt_point(a));
    }
    return SpherePoint(reject(a.vec(), f.pole.vec()));
}

std::pair<SpherePoint, SpherePoint> lune_midpoints(const Lune& l) {
    const Vec3& g = l.g().center.vec();
    const Vec3& h = l.h().center.vec();
    // Center of G/H: the point of the boundary circle of G deepest inside H,
    // i.e. the projection of h onto that circle. Symmetrically for H/G.
    return {SpherePoint(reject(h, g)), SpherePoint(reject(g, h))};
}

double lune_thickness(const Lune& l) {
    const auto [mg, mh] = lune_midpoints(l);
    return distance(mg, mh);
}

Vec3 tangent_toward(const SpherePoint& at, const SpherePoint& toward) {
    const Vec3 w = reject(toward.vec(), at.vec());
    const double n = norm(w);
    if (!(n > 0.0)) {
        throw DegenerateAngle("no tangent direction: points coincide or are antipodal");
    }
    return (1.0 / n) * w;
}

double spherical_angle(const SpherePoint& at, const SpherePoint& p, const SpherePoint& q) {
    if (std::fabs(dot(at, p)) >= 1.0 - kEpsGeo || std::fabs(dot(at, q)) >= 1.0 - kEpsGeo) {
        throw DegenerateAngle("angle at " + fmt_point(at) + " undefined: an arm coincides with "
                              "the apex or its antipode");
    }
    const Vec3 u = tangent_toward(at, p);
    const Vec3 w = tangent_toward(at, q);
    return std::atan2(norm(cross(u, w)), dot(u, w));
}

bool on_circle(const SpherePoint& p, const GreatCircle& f, double tol) {
    return std::fabs(dot(p, f.pole)) <= tol;
}

bool on_arc(const SpherePoint& p, const Arc& arc, double tol) {
    if (std::fabs(dot(p, arc.pole())) > tol) {
        return false;
    }
    return distance(arc.a(), p) + distance(p, arc.b()) <= arc.length() + tol;
}

std::optional<SpherePoint> arc_intersection(const Arc& u, const Arc& v) {
    const Vec3 d = cross(u.pole(), v.pole());
    const double dn = norm(d);
    if (dn < kEpsGeo) {
        // Same great circle, either orientation. Any overlap is delimited by
        // endpoints of one arc lying on the other.
        std::vector<SpherePoint> hits;
        const auto add = [&hits](const SpherePoint& p) {
            for (const auto& q : hits) {
                if (distance(p, q) <= kEpsGeo) {
                    return;
                }
            }
            hits.push_back(p);
        };
        if (on_arc(v.a(), u)) add(v.a());
        if (on_arc(v.b(), u)) add(v.b());
        if (on_arc(u.a(), v)) add(u.a());
        if (on_arc(u.b(), v)) add(u.b());
        if (hits.empty()) {
            return std::nullopt;
        }
        if (hits.size() > 1) {
            throw CoplanarArcs("arcs share a great circle and overlap in more than one point");
        }
        return hits.front();
    }
    const SpherePoint c((1.0 / dn) * d);
    if (on_arc(c, u) && on_arc(c, v)) {
        return c;
    }
    const SpherePoint cn = antipode(c);
    if (on_arc(cn, u) && on_arc(cn, v)) {
        return cn;
    }
    return std::nullopt;
}

SpherePoint any_orthogonal(const SpherePoint& p) {
    const Vec3& v = p.vec();
    const double ax = std::fabs(v.x), ay = std::fabs(v.y), az = std::fabs(v.z);
    Vec3 helper{1, 0, 0};
    if (ay <= ax && ay <= az) {
        helper = {0, 1, 0};
    } else if (az <= ax && az <= ay) {
        helper = {0, 0, 1};
    }
    return SpherePoint(cross(helper, v));
}

std::pair<Vec3, Vec3> tangent_frame(const SpherePoint& axis) {
    const Vec3 e1 = any_orthogonal(axis).vec();
    return {e1, cross(axis.vec(), e1)};
}

}  // namespace lune

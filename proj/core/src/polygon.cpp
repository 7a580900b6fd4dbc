#include "lune/polygon.hpp"

#include <cmath>
#include <sstream>

namespace lune {

namespace {

std::optional<SpherePoint> find_witness(const std::vector<SpherePoint>& vs) {
    const int n = static_cast<int>(vs.size());
    const auto strictly_contains_all = [&vs](const Vec3& c) {
        const double nc = norm(c);
        if (!(nc > 0.0)) {
            return false;
        }
        const Vec3 u = (1.0 / nc) * c;
        for (const auto& v : vs) {
            if (dot(v.vec(), u) <= kEpsGeo) {
                return false;
            }
        }
        return true;
    };

    std::vector<Vec3> candidates;
    Vec3 centroid{};
    for (const auto& v : vs) {
        centroid = centroid + v.vec();
    }
    candidates.push_back(centroid);

    Vec3 pole_sum{};
    for (int i = 0; i < n; ++i) {
        const Vec3 p = cross(vs[i].vec(), vs[(i + 1) % n].vec());
        const double np = norm(p);
        if (np > kEpsGeo) {
            const Vec3 u = (1.0 / np) * p;
            pole_sum = pole_sum + u;
            candidates.push_back(u);
        }
    }
    // The normalized pole sum is a strict witness whenever strict convexity
    // holds: every vertex is orthogonal to exactly two side poles and has
    // positive dot with the rest.
    candidates.insert(candidates.begin() + 1, pole_sum);

    for (const auto& c : candidates) {
        if (strictly_contains_all(c)) {
            return SpherePoint(c);
        }
    }
    return std::nullopt;
}

std::string indices_to_string(const std::vector<int>& idx) {
    std::ostringstream os;
    for (size_t k = 0; k < idx.size(); ++k) {
        os << (k ? "," : "") << idx[k];
    }
    return os.str();
}

}  // namespace

const char* to_string(ValidationIssueKind kind) {
    switch (kind) {
        case ValidationIssueKind::too_few_vertices: return "too_few_vertices";
        case ValidationIssueKind::antipodal_vertices: return "antipodal_vertices";
        case ValidationIssueKind::not_convex: return "not_convex";
        case ValidationIssueKind::not_in_open_hemisphere: return "not_in_open_hemisphere";
    }
    return "unknown";
}

ValidationError::ValidationError(std::vector<ValidationIssue> is)
    : Error([&is] {
          std::ostringstream os;
          os << "invalid polygon:";
          for (const auto& issue : is) {
              os << " [" << to_string(issue.kind);
              if (!issue.indices.empty()) {
                  os << " at " << indices_to_string(issue.indices);
              }
              os << "]";
          }
          return os.str();
      }()),
      issues(std::move(is)) {}

std::vector<ValidationIssue> SphericalPolygon::violations(const std::vector<SpherePoint>& vs) {
    std::vector<ValidationIssue> issues;
    const int n = static_cast<int>(vs.size());
    if (n < 3) {
        issues.push_back({ValidationIssueKind::too_few_vertices, {},
                          "need at least 3 vertices, got " + std::to_string(n)});
        return issues;
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dot(vs[i], vs[j]) <= -(1.0 - kEpsGeo)) {
                issues.push_back({ValidationIssueKind::antipodal_vertices, {i, j},
                                  "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                      " are antipodal"});
            }
        }
    }

    // Strict convexity with positive orientation: every other vertex lies
    // strictly on the positive side of every side plane. Repeated vertices
    // degenerate the side pole and fail here as well.
    for (int i = 0; i < n; ++i) {
        const Vec3 pole = cross(vs[i].vec(), vs[(i + 1) % n].vec());
        for (int m = 0; m < n; ++m) {
            if (m == i || m == (i + 1) % n) {
                continue;
            }
            if (dot(pole, vs[m].vec()) <= kEpsGeo) {
                issues.push_back({ValidationIssueKind::not_convex, {i, (i + 1) % n, m},
                                  "vertex " + std::to_string(m) +
                                      " not strictly left of side (" + std::to_string(i) + "," +
                                      std::to_string((i + 1) % n) + ")"});
            }
        }
    }

    if (!find_witness(vs)) {
        issues.push_back({ValidationIssueKind::not_in_open_hemisphere, {},
                          "no open hemisphere strictly contains all vertices"});
    }
    return issues;
}

SphericalPolygon SphericalPolygon::validate(std::vector<SpherePoint> vertices) {
    auto issues = violations(vertices);
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }
    auto witness = find_witness(vertices);
    return SphericalPolygon(std::move(vertices), *witness);
}

SphericalPolygon::SphericalPolygon(std::vector<SpherePoint> vertices, SpherePoint witness)
    : vertices_(std::move(vertices)), witness_(witness) {
    const int n = static_cast<int>(vertices_.size());
    side_poles_.reserve(n);
    side_lengths_.reserve(n);
    cumulative_.reserve(n);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        cumulative_.push_back(acc);
        const SpherePoint& a = vertices_[i];
        const SpherePoint& b = vertices_[(i + 1) % n];
        side_poles_.emplace_back(cross(a, b));
        side_lengths_.push_back(distance(a, b));
        acc += side_lengths_.back();
    }
    perimeter_ = acc;
}

double perimeter(const SphericalPolygon& polygon) { return polygon.perimeter(); }

std::pair<int, int> opposite_side(const SphericalPolygon& polygon, int i) {
    const int n = polygon.size();
    if (n % 2 == 0) {
        throw EvenPolygon("opposite side is undefined for even n = " + std::to_string(n));
    }
    const int j = polygon.mod(i + (n - 1) / 2);
    return {j, polygon.mod(j + 1)};
}

OppositeProjection opposite_projection(const SphericalPolygon& polygon, int i) {
    const auto [j, k] = opposite_side(polygon, i);
    const GreatCircle circle = great_circle_through(polygon.vertex(j), polygon.vertex(k));
    const SpherePoint t = project_onto_circle(polygon.vertex(i), circle);
    const double da = distance(polygon.vertex(j), t);
    const double db = distance(t, polygon.vertex(k));
    const bool interior = da > kEpsGeo && db > kEpsGeo &&
                          da + db <= polygon.side_length(j) + kEpsGeo;
    return {polygon.mod(i), t, distance(polygon.vertex(i), t), interior, {j, k}};
}

std::optional<BoundaryPosition> locate_on_boundary(const SphericalPolygon& polygon,
                                                   const SpherePoint& p, double tol) {
    const int n = polygon.size();
    for (int j = 0; j < n; ++j) {
        if (std::fabs(dot(p, polygon.side_pole(j))) > tol) {
            continue;
        }
        const double da = distance(polygon.vertex(j), p);
        const double db = distance(p, polygon.vertex(j + 1));
        if (da + db <= polygon.side_length(j) + tol) {
            return BoundaryPosition{j, da, polygon.boundary_offset_of_vertex(j) + da};
        }
    }
    return std::nullopt;
}

double boundary_length_ccw(const SphericalPolygon& polygon, const SpherePoint& from,
                           const SpherePoint& to) {
    const auto pf = locate_on_boundary(polygon, from);
    if (!pf) {
        throw NotOnBoundary("`from` point is not on the polygon boundary");
    }
    const auto pt = locate_on_boundary(polygon, to);
    if (!pt) {
        throw NotOnBoundary("`to` point is not on the polygon boundary");
    }
    const double d = pt->arc_position - pf->arc_position;
    return d < 0.0 ? d + polygon.perimeter() : d;
}

}  // namespace lune

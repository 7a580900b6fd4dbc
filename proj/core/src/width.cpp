#include "lune/width.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lune {

namespace {

constexpr double kGoldenAngle = 2.399963229728653;  // pi * (3 - sqrt(5))

bool feasible(const std::vector<SpherePoint>& vs, const Vec3& c) {
    for (const auto& v : vs) {
        if (dot(v.vec(), c) < -kEpsGeo) {
            return false;
        }
    }
    return true;
}

/// Local minimization of dot(k, c) over the feasible set by tangent-plane
/// pattern search with shrinking radius. The objective is linear and the
/// feasible set spherically convex, so this converges to the boundary
/// optimum of the basin it starts in.
Vec3 pattern_search_min_dot(const std::vector<SpherePoint>& vs, const Vec3& k, Vec3 c,
                            double radius) {
    constexpr int kDirections = 32;
    constexpr int kMaxIterations = 4000;
    double fc = dot(k, c);
    for (int iter = 0; iter < kMaxIterations && radius > 1e-13; ++iter) {
        const SpherePoint center(c);
        const auto [e1, e2] = tangent_frame(center);
        const double cr = std::cos(radius), sr = std::sin(radius);
        double best = fc;
        Vec3 best_c = c;
        for (int t = 0; t < kDirections; ++t) {
            const double theta = 2.0 * kPi * t / kDirections;
            Vec3 cand = cr * center.vec() + sr * (std::cos(theta) * e1 + std::sin(theta) * e2);
            cand = (1.0 / norm(cand)) * cand;
            if (!feasible(vs, cand)) {
                continue;
            }
            const double f = dot(k, cand);
            if (f < best) {
                best = f;
                best_c = cand;
            }
        }
        if (best < fc) {
            fc = best;
            c = best_c;
        } else {
            radius *= 0.5;
        }
    }
    return c;
}

struct GridSample {
    double dot;
    Vec3 c;
};

/// Feasible grid points worth refining: the best one plus representatives of
/// every near-tie basin (within a Lipschitz bound of the best), kept
/// spatially separated so distinct basins each get a start.
std::vector<Vec3> refinement_starts(const std::vector<GridSample>& samples, double spacing,
                                    int max_starts) {
    std::vector<GridSample> sorted = samples;
    std::sort(sorted.begin(), sorted.end(),
              [](const GridSample& a, const GridSample& b) { return a.dot < b.dot; });
    const double cutoff = sorted.front().dot + 2.0 * spacing;
    std::vector<Vec3> starts;
    for (const auto& s : sorted) {
        if (s.dot > cutoff || static_cast<int>(starts.size()) >= max_starts) {
            break;
        }
        bool separated = true;
        for (const auto& other : starts) {
            if (distance(SpherePoint(s.c), SpherePoint(other)) < 1.5 * spacing) {
                separated = false;
                break;
            }
        }
        if (separated) {
            starts.push_back(s.c);
        }
    }
    return starts;
}

}  // namespace

SpherePoint fibonacci_point(int idx, int m) {
    const double z = 1.0 - 2.0 * (idx + 0.5) / m;
    const double r = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    const double phi = kGoldenAngle * idx;
    return SpherePoint(r * std::cos(phi), r * std::sin(phi), z);
}

Hemisphere side_hemisphere(const SphericalPolygon& polygon, int i) {
    return Hemisphere{polygon.side_pole(i)};
}

SupportOptimum min_support_dot(const SphericalPolygon& polygon, const SpherePoint& direction) {
    const auto& vs = polygon.vertices();
    const int n = polygon.size();
    const Vec3& k = direction.vec();

    double best = std::numeric_limits<double>::infinity();
    Vec3 best_c{};
    bool found = false;
    const auto consider = [&](const Vec3& c) {
        if (!feasible(vs, c)) {
            return;
        }
        const double d = dot(k, c);
        if (!found || d < best) {
            found = true;
            best = d;
            best_c = c;
        }
    };

    for (int j = 0; j < n; ++j) {
        const Vec3 w = reject(k, vs[j].vec());
        const double nw = norm(w);
        if (nw < kEpsGeo) {
            continue;  // direction passes through v_j; facet candidate undefined
        }
        consider((-1.0 / nw) * w);
    }
    for (int j = 0; j < n; ++j) {
        for (int l = j + 1; l < n; ++l) {
            const Vec3 w = cross(vs[j].vec(), vs[l].vec());
            const double nw = norm(w);
            if (nw < kEpsGeo) {
                continue;
            }
            const Vec3 u = (1.0 / nw) * w;
            consider(u);
            consider(-u);
        }
    }
    if (!found) {
        throw NoFeasibleSupport("no supporting hemisphere candidate is feasible; "
                                "polygon invariants must have been bypassed");
    }

    const SpherePoint center(best_c);
    int touched = -1;
    for (int m = 0; m < n; ++m) {
        if (std::fabs(dot(vs[m], center)) <= kEpsGeo) {
            touched = m;
            break;
        }
    }
    return {best, center, touched};
}

SideWidth width_for_side(const SphericalPolygon& polygon, int i) {
    const Hemisphere k = side_hemisphere(polygon, i);
    const SupportOptimum opt = min_support_dot(polygon, k.center);
    const double separation = distance(k.center, opt.center);
    if (separation <= kEpsGeo || separation >= kPi - kEpsGeo) {
        throw DegenerateLune("optimal supporting pair for side " + std::to_string(i) +
                             " does not bound a lune");
    }
    const double width = kPi - separation;
    return {polygon.mod(i), width, Lune(k, Hemisphere{opt.center}), opt.touched_vertex,
            width >= kPi / 2 - kEpsGeo};
}

WidthProfile width_profile(const SphericalPolygon& polygon) {
    WidthProfile profile;
    const int n = polygon.size();
    profile.per_side.reserve(n);
    for (int i = 0; i < n; ++i) {
        profile.per_side.push_back(width_for_side(polygon, i));
    }
    profile.thickness = profile.per_side.front().width;
    profile.attaining_side = 0;
    for (int i = 1; i < n; ++i) {
        if (profile.per_side[i].width < profile.thickness) {
            profile.thickness = profile.per_side[i].width;
            profile.attaining_side = i;
        }
    }
    return profile;
}

double thickness(const SphericalPolygon& polygon) { return width_profile(polygon).thickness; }

double sampling_oracle_width(const SphericalPolygon& polygon, int side, int grid_size) {
    const Vec3& k = polygon.side_pole(side).vec();
    const auto& vs = polygon.vertices();
    double best = std::numeric_limits<double>::infinity();
    Vec3 best_c{};
    bool found = false;
    for (int idx = 0; idx < grid_size; ++idx) {
        const SpherePoint c = fibonacci_point(idx, grid_size);
        if (!feasible(vs, c.vec())) {
            continue;
        }
        const double d = dot(k, c.vec());
        if (!found || d < best) {
            found = true;
            best = d;
            best_c = c.vec();
        }
    }
    if (!found) {
        throw NoFeasibleSample("no grid point supports the polygon; raise the grid size (m = " +
                               std::to_string(grid_size) + ")");
    }
    return kPi - distance(polygon.side_pole(side), SpherePoint(best_c));
}

double refined_oracle_width(const SphericalPolygon& polygon, int side, int grid_size) {
    const SpherePoint k = polygon.side_pole(side);
    const auto& vs = polygon.vertices();
    std::vector<GridSample> samples;
    samples.reserve(grid_size / 4);
    for (int idx = 0; idx < grid_size; ++idx) {
        const SpherePoint c = fibonacci_point(idx, grid_size);
        if (feasible(vs, c.vec())) {
            samples.push_back({dot(k.vec(), c.vec()), c.vec()});
        }
    }
    if (samples.empty()) {
        throw NoFeasibleSample("no grid point supports the polygon; raise the grid size (m = " +
                               std::to_string(grid_size) + ")");
    }
    const double spacing = std::sqrt(4.0 * kPi / grid_size);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& start : refinement_starts(samples, spacing, 16)) {
        const Vec3 c = pattern_search_min_dot(vs, k.vec(), start, spacing);
        best = std::fmin(best, dot(k.vec(), c));
    }
    return kPi - std::acos(std::fmax(-1.0, std::fmin(1.0, best)));
}

double oracle_min_lune_thickness(const SphericalPolygon& polygon, int grid_size) {
    const auto& vs = polygon.vertices();
    const auto inner = [&polygon](const Vec3& c1) {
        return min_support_dot(polygon, SpherePoint(c1)).dot;
    };

    std::vector<GridSample> samples;
    for (int idx = 0; idx < grid_size; ++idx) {
        const SpherePoint c = fibonacci_point(idx, grid_size);
        if (feasible(vs, c.vec())) {
            samples.push_back({inner(c.vec()), c.vec()});
        }
    }
    if (samples.empty()) {
        throw NoFeasibleSample("no grid point supports the polygon; raise the grid size");
    }
    const double spacing = std::sqrt(4.0 * kPi / grid_size);

    // Pattern search over the outer center; each objective evaluation solves
    // the inner support problem exactly.
    double best = std::numeric_limits<double>::infinity();
    for (const auto& start : refinement_starts(samples, spacing, 8)) {
        Vec3 c = start;
        double fc = inner(c);
        double radius = spacing;
        constexpr int kDirections = 24;
        for (int iter = 0; iter < 2000 && radius > 1e-12; ++iter) {
            const SpherePoint center(c);
            const auto [e1, e2] = tangent_frame(center);
            const double cr = std::cos(radius), sr = std::sin(radius);
            double local_best = fc;
            Vec3 local_c = c;
            for (int t = 0; t < kDirections; ++t) {
                const double theta = 2.0 * kPi * t / kDirections;
                Vec3 cand = cr * center.vec() + sr * (std::cos(theta) * e1 + std::sin(theta) * e2);
                cand = (1.0 / norm(cand)) * cand;
                if (!feasible(vs, cand)) {
                    continue;
                }
                const double f = inner(cand);
                if (f < local_best) {
                    local_best = f;
                    local_c = cand;
                }
            }
            if (local_best < fc) {
                fc = local_best;
                c = local_c;
            } else {
                radius *= 0.5;
            }
        }
        best = std::fmin(best, fc);
    }
    return kPi - std::acos(std::fmax(-1.0, std::fmin(1.0, best)));
}

}  // namespace lune

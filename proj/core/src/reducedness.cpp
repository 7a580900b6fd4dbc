#include "lune/reducedness.hpp"

#include <cmath>
#include <sstream>

namespace lune {

namespace {

struct Context {
    const SphericalPolygon& polygon;
    std::vector<OppositeProjection> proj;  // t_i for every i
    int shift;                             // s = (n+1)/2
};

Context make_context(const SphericalPolygon& polygon) {
    const int n = polygon.size();
    if (n % 2 == 0) {
        throw EvenPolygon("reducedness conditions are defined for odd-gons; n = " +
                          std::to_string(n));
    }
    Context ctx{polygon, {}, (n + 1) / 2};
    ctx.proj.reserve(n);
    for (int i = 0; i < n; ++i) {
        ctx.proj.push_back(opposite_projection(polygon, i));
    }
    return ctx;
}

/// Residual scan template: applies per-index defect, collects the max, and
/// funnels per-index failures into the error slot instead of aborting.
template <typename DefectFn>
ConditionResult scan(const Context& ctx, double tol, DefectFn&& defect) {
    ConditionResult result;
    double worst = 0.0;
    bool any = false;
    std::ostringstream errors;
    for (int i = 0; i < ctx.polygon.size(); ++i) {
        try {
            worst = std::fmax(worst, defect(i));
            any = true;
        } catch (const Error& e) {
            if (result.error) {
                errors << "; ";
            }
            errors << "i=" << i << ": " << e.what();
            result.error = errors.str();
        }
    }
    if (any) {
        result.residual = worst;
    }
    result.ok = any && !result.error && worst <= tol;
    return result;
}

ConditionResult condition_a_impl(const Context& ctx, const WidthProfile& profile, double tol) {
    return scan(ctx, tol, [&](int i) {
        return std::fabs(ctx.proj[i].dist_to_side - profile.thickness);
    });
}

ConditionResult condition_b_impl(const Context& ctx, double tol) {
    const auto& polygon = ctx.polygon;
    return scan(ctx, tol, [&](int i) {
        const int is = polygon.mod(i + ctx.shift);
        const double lhs = distance(polygon.vertex(i), ctx.proj[is].t);
        const double rhs = distance(ctx.proj[i].t, polygon.vertex(is));
        return std::fabs(lhs - rhs);
    });
}

ConditionResult condition_c_impl(const Context& ctx, double tol) {
    const auto& polygon = ctx.polygon;
    return scan(ctx, tol, [&](int i) {
        const int is = polygon.mod(i + ctx.shift);
        const double lhs = spherical_angle(polygon.vertex(i), ctx.proj[is].t, ctx.proj[i].t);
        const double rhs = spherical_angle(polygon.vertex(is), ctx.proj[i].t, ctx.proj[is].t);
        return std::fabs(lhs - rhs);
    });
}

ConditionResult condition_d_impl(const Context& ctx, double tol) {
    const auto& polygon = ctx.polygon;
    const double half = polygon.perimeter() / 2.0;
    return scan(ctx, tol, [&](int i) {
        return std::fabs(boundary_length_ccw(polygon, polygon.vertex(i), ctx.proj[i].t) - half);
    });
}

SpherePoint o_witness_impl(const Context& ctx, int i) {
    const auto& polygon = ctx.polygon;
    const int is = polygon.mod(i + ctx.shift);
    const Arc first(polygon.vertex(i), ctx.proj[polygon.mod(i)].t);
    const Arc second(polygon.vertex(is), ctx.proj[is].t);
    const auto hit = arc_intersection(first, second);
    if (!hit) {
        throw NoIntersection("arcs v_" + std::to_string(polygon.mod(i)) + " t_" +
                             std::to_string(polygon.mod(i)) + " and v_" + std::to_string(is) +
                             " t_" + std::to_string(is) + " do not meet");
    }
    return *hit;
}

}  // namespace

PreconditionResult check_precondition(const SphericalPolygon& polygon) {
    return check_precondition(polygon, width_profile(polygon));
}

PreconditionResult check_precondition(const SphericalPolygon& polygon,
                                      const WidthProfile& profile) {
    const Context ctx = make_context(polygon);  // throws EvenPolygon for even n
    if (profile.thickness >= kPi / 2 - kEpsGeo) {
        throw ThicknessTooLarge("thickness " + std::to_string(profile.thickness) +
                                " is not below pi/2; conditions are out of scope");
    }
    PreconditionResult result;
    result.foot_in_interior.reserve(polygon.size());
    result.ok = true;
    for (const auto& p : ctx.proj) {
        result.foot_in_interior.push_back(p.in_relative_interior);
        result.ok = result.ok && p.in_relative_interior;
    }
    return result;
}

ConditionResult condition_a(const SphericalPolygon& polygon, double tol) {
    return condition_a_impl(make_context(polygon), width_profile(polygon), tol);
}

ConditionResult condition_b(const SphericalPolygon& polygon, double tol) {
    return condition_b_impl(make_context(polygon), tol);
}

ConditionResult condition_c(const SphericalPolygon& polygon, double tol) {
    return condition_c_impl(make_context(polygon), tol);
}

ConditionResult condition_d(const SphericalPolygon& polygon, double tol) {
    return condition_d_impl(make_context(polygon), tol);
}

SpherePoint o_witness(const SphericalPolygon& polygon, int i) {
    return o_witness_impl(make_context(polygon), i);
}

ReducednessReport full_report(const SphericalPolygon& polygon, double tol) {
    ReducednessReport report;
    report.n = polygon.size();
    report.tolerance = tol;
    report.profile = width_profile(polygon);
    report.thickness = report.profile.thickness;

    if (polygon.size() % 2 == 0) {
        report.gate_error = "even_polygon: conditions are defined for odd-gons";
        return report;
    }
    if (report.thickness >= kPi / 2 - kEpsGeo) {
        report.gate_error = "thickness_too_large: thickness is not below pi/2";
        return report;
    }

    const Context ctx = make_context(polygon);
    report.precondition_ok = true;
    report.foot_in_interior.reserve(report.n);
    for (const auto& p : ctx.proj) {
        report.foot_in_interior.push_back(p.in_relative_interior);
        report.precondition_ok = report.precondition_ok && p.in_relative_interior;
    }

    report.cond_a = condition_a_impl(ctx, report.profile, tol);
    report.cond_b = condition_b_impl(ctx, tol);
    report.cond_c = condition_c_impl(ctx, tol);
    report.cond_d = condition_d_impl(ctx, tol);

    report.witnesses.reserve(report.n);
    for (int i = 0; i < report.n; ++i) {
        VertexWitness w;
        w.i = i;
        w.t = ctx.proj[i].t;
        w.dist_to_side = ctx.proj[i].dist_to_side;
        w.in_relative_interior = ctx.proj[i].in_relative_interior;
        w.side_width = report.profile.per_side[i].width;
        try {
            w.o = o_witness_impl(ctx, i);
        } catch (const Error& e) {
            w.o_error = e.what();
        }
        report.witnesses.push_back(std::move(w));
    }
    return report;
}

}  // namespace lune

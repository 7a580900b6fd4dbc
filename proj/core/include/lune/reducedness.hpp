#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lune/polygon.hpp"
#include "lune/width.hpp"

namespace lune {

/// Default tolerance for the condition booleans; residuals are always
/// reported so callers can apply their own.
inline constexpr double kDefaultTolerance = 1e-7;

struct ConditionResult {
    bool ok = false;
    double residual = std::numeric_limits<double>::quiet_NaN();
    std::optional<std::string> error;  ///< set when a per-index evaluation failed
};

struct PreconditionResult {
    bool ok = false;
    std::vector<bool> foot_in_interior;  ///< per vertex index
};

/// Per-vertex diagnostic data backing the four conditions.
struct VertexWitness {
    int i = 0;
    SpherePoint t{0, 0, 1};              ///< projection foot on the opposite side
    double dist_to_side = 0.0;           ///< |v_i t_i|
    bool in_relative_interior = false;
    double side_width = 0.0;             ///< width determined by side i
    std::optional<SpherePoint> o;        ///< intersection of v_i t_i and v_{i+s} t_{i+s}
    std::optional<std::string> o_error;  ///< set when the intersection was not found
};

struct ReducednessReport {
    int n = 0;
    double thickness = std::numeric_limits<double>::quiet_NaN();
    double tolerance = kDefaultTolerance;
    WidthProfile profile;
    std::optional<std::string> gate_error;  ///< even n or thickness >= pi/2
    bool precondition_ok = false;
    std::vector<bool> foot_in_interior;
    std::optional<ConditionResult> cond_a;
    std::optional<ConditionResult> cond_b;
    std::optional<ConditionResult> cond_c;
    std::optional<ConditionResult> cond_d;
    std::vector<VertexWitness> witnesses;

    bool reduced() const {
        return precondition_ok && cond_a && cond_a->ok && cond_b && cond_b->ok && cond_c &&
               cond_c->ok && cond_d && cond_d->ok;
    }
};

/// Gate for the four conditions: n odd, thickness below pi/2, and every
/// projection foot in the relative interior of its opposite side. Throws
/// EvenPolygon / ThicknessTooLarge on the hard gates; foot placement is
/// reported per index.
PreconditionResult check_precondition(const SphericalPolygon& polygon);
PreconditionResult check_precondition(const SphericalPolygon& polygon,
                                      const WidthProfile& profile);

/// (a) every vertex-to-opposite-side distance equals the thickness.
/// Residual: max_i |dist_i - thickness|.
ConditionResult condition_a(const SphericalPolygon& polygon, double tol = kDefaultTolerance);

/// (b) |v_i t_{i+s}| = |t_i v_{i+s}| with s = (n+1)/2.
ConditionResult condition_b(const SphericalPolygon& polygon, double tol = kDefaultTolerance);

/// (c) angle(t_{i+s} v_i t_i) = angle(t_i v_{i+s} t_{i+s}).
ConditionResult condition_c(const SphericalPolygon& polygon, double tol = kDefaultTolerance);

/// (d) the arc v_i t_i halves the perimeter.
ConditionResult condition_d(const SphericalPolygon& polygon, double tol = kDefaultTolerance);

/// Intersection point of the arcs v_i t_i and v_{i+s} t_{i+s}. Throws
/// NoIntersection when the shorter arcs do not meet.
SpherePoint o_witness(const SphericalPolygon& polygon, int i);

/// Runs the gates, the precondition, all four conditions and the width
/// profile. Never short-circuits: when the hard gates pass, every residual
/// is computed and per-condition failures land in their own error slots.
ReducednessReport full_report(const SphericalPolygon& polygon, double tol = kDefaultTolerance);

}  // namespace lune

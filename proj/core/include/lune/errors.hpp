#pragma once

#include <stdexcept>
#include <string>

namespace lune {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error objects.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const { return "error"; }
};

#define LUNE_DEFINE_ERROR(Name, Tag)                                 \
    struct Name : Error {                                            \
        explicit Name(const std::string& what) : Error(what) {}      \
        const char* kind() const override { return Tag; }            \
    }

// sphere kernel
LUNE_DEFINE_ERROR(DegenerateCircle, "degenerate_circle");
LUNE_DEFINE_ERROR(DegenerateArc, "degenerate_arc");
LUNE_DEFINE_ERROR(DegenerateLune, "degenerate_lune");
LUNE_DEFINE_ERROR(DegenerateAngle, "degenerate_angle");
LUNE_DEFINE_ERROR(PoleProjection, "pole_projection");
LUNE_DEFINE_ERROR(OutOfRange, "out_of_range");
LUNE_DEFINE_ERROR(CoplanarArcs, "coplanar_arcs");

// polygon / reducedness
LUNE_DEFINE_ERROR(EvenPolygon, "even_polygon");
LUNE_DEFINE_ERROR(ThicknessTooLarge, "thickness_too_large");
LUNE_DEFINE_ERROR(NotOnBoundary, "not_on_boundary");
LUNE_DEFINE_ERROR(NoIntersection, "no_intersection");

// width engine
LUNE_DEFINE_ERROR(NoFeasibleSupport, "no_feasible_support");
LUNE_DEFINE_ERROR(NoFeasibleSample, "no_feasible_sample");

// generators
LUNE_DEFINE_ERROR(Unachievable, "unachievable");
LUNE_DEFINE_ERROR(PerturbationFailed, "perturbation_failed");
LUNE_DEFINE_ERROR(GenerationFailed, "generation_failed");

// io / rendering
LUNE_DEFINE_ERROR(ParseError, "parse_error");
LUNE_DEFINE_ERROR(SchemaError, "schema_error");
LUNE_DEFINE_ERROR(NotVisible, "not_visible");

#undef LUNE_DEFINE_ERROR

}  // namespace lune

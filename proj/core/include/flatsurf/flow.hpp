#pragma once

#include <vector>

#include "flatsurf/surface.hpp"

namespace flatsurf {

struct SurfacePoint {
    int polygon = 0;
    Vec2 position;
};

enum class Terminal { HitConePoint, BudgetExhausted, ClosedUp };

struct TrajectorySegment {
    int polygon = 0;
    Vec2 entry;
    Vec2 exit;
};

struct Trajectory {
    std::vector<TrajectorySegment> segments;
    double total_length = 0.0;
    Terminal terminal = Terminal::BudgetExhausted;
    int cone_id = -1;  // vertex class hit, when terminal == HitConePoint

    Vec2 displacement() const;  // sum of segment vectors
};

// Straight-line flow from start in direction dir until a vertex is hit, the
// trajectory closes up, or the length budget runs out. A ray passing within
// the hit tolerance of a vertex counts as hitting it; a ray parallel to an
// edge it sits on travels along the edge.
Trajectory trace(const TranslationSurface& s, SurfacePoint start, Vec2 dir, double max_length);

// Outgoing separatrices of a vertex class in directions +dir and -dir, one
// per angular sector containing the direction (angle multiple m gives m rays
// per sign). Each ray is traced with the given budget.
std::vector<Trajectory> separatrices(const TranslationSurface& s, const ConePoint& cone, Vec2 dir,
                                     double max_length);

}  // namespace flatsurf

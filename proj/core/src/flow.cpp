#include "flatsurf/flow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flatsurf/tolerances.hpp"

namespace flatsurf {

Vec2 Trajectory::displacement() const {
    Vec2 d{0, 0};
    for (const auto& seg : segments) d = d + (seg.exit - seg.entry);
    return d;
}

namespace {

struct Tracer {
    const TranslationSurface& s;
    const std::vector<std::vector<EdgeRef>>& partner;
    const VertexClasses& classes;
    Vec2 dir;  // unit
    double eps_hit;
    double eps_angle;

    // Closest vertex of polygon p to x within eps, or -1.
    int vertex_near(int p, Vec2 x) const {
        const Polygon& poly = s.polygons[p];
        int best = -1;
        double best_d = eps_hit;
        for (int v = 0; v < poly.size(); ++v) {
            double d = (poly.vertices[v] - x).norm();
            if (d <= best_d) {
                best_d = d;
                best = v;
            }
        }
        return best;
    }

    // Edge of p through x parallel to dir, or -1.
    int along_edge(int p, Vec2 x) const {
        const Polygon& poly = s.polygons[p];
        for (int e = 0; e < poly.size(); ++e) {
            Vec2 ev = poly.edge_vector(e);
            double len = ev.norm();
            if (std::abs(cross(ev, dir)) > eps_angle * len) continue;
            Vec2 a = poly.vertex(e);
            double t = dot(x - a, ev) / (len * len);
            if (t < -eps_hit / len || t > 1 + eps_hit / len) continue;
            Vec2 foot = a + ev * t;
            if ((x - foot).norm() <= eps_hit) return e;
        }
        return -1;
    }
};

}  // namespace

static Trajectory trace_impl(const TranslationSurface& s, SurfacePoint start, Vec2 dir,
                             double max_length, bool allow_vertex_start) {
    const auto& tol = Tolerances::get();
    if (!(dir.norm() > 0)) throw std::invalid_argument("trace requires a nonzero direction");
    if (max_length < 0) throw std::invalid_argument("trace requires a nonnegative budget");
    if (start.polygon < 0 || start.polygon >= static_cast<int>(s.polygons.size()))
        throw std::invalid_argument("start polygon out of range");

    auto partner = gluing_partners(s);
    VertexClasses classes = vertex_classes(s);
    Vec2 d = dir.normalized();
    Tracer tracer{s, partner, classes, d, tol.hit, tol.angle};

    Trajectory out;
    int p = start.polygon;
    Vec2 x = start.position;

    {
        const Polygon& poly = s.polygons[p];
        // inside check: signed distance to every edge
        for (int e = 0; e < poly.size(); ++e) {
            Vec2 ev = poly.edge_vector(e);
            if (cross(ev, x - poly.vertex(e)) < -tol.hit * std::max(1.0, ev.norm()))
                throw std::invalid_argument("start point lies outside its polygon");
        }
        if (!allow_vertex_start && tracer.vertex_near(p, x) >= 0)
            throw std::invalid_argument("start point must not be a vertex");
    }

    double remaining = max_length;
    long cap = 20000000;
    bool retried = false;

    while (true) {
        if (--cap < 0) throw std::runtime_error("trace step cap exceeded");
        const Polygon& poly = s.polygons[p];

        // Ray along an edge: slide to the edge endpoint ahead of us.
        int ae = tracer.along_edge(p, x);
        if (ae >= 0) {
            Vec2 ev = poly.edge_vector(ae);
            bool forward = dot(ev, d) > 0;
            Vec2 target = forward ? poly.vertex(ae + 1) : poly.vertex(ae);
            double dist = dot(target - x, d);
            if (dist <= tol.hit) {
                // already at the vertex
                int v = forward ? (ae + 1) % poly.size() : ae;
                out.terminal = Terminal::HitConePoint;
                out.cone_id = classes.class_of[p][v];
                return out;
            }
            if (dist >= remaining) {
                out.segments.push_back({p, x, x + d * remaining});
                out.total_length += remaining;
                out.terminal = Terminal::BudgetExhausted;
                return out;
            }
            out.segments.push_back({p, x, target});
            out.total_length += dist;
            int v = forward ? (ae + 1) % poly.size() : ae;
            out.terminal = Terminal::HitConePoint;
            out.cone_id = classes.class_of[p][v];
            return out;
        }

        // Generic step: first crossing of the boundary.
        double best_t = -1;
        int best_e = -1;
        for (int e = 0; e < poly.size(); ++e) {
            Vec2 a = poly.vertex(e);
            Vec2 ev = poly.edge_vector(e);
            double denom = cross(d, ev);
            if (std::abs(denom) < 1e-15) continue;  // parallel
            double t = cross(a - x, ev) / denom;
            double u = cross(a - x, d) / denom;
            if (t <= tol.hit) continue;
            if (u < -tol.hit || u > 1 + tol.hit) continue;
            if (best_e < 0 || t < best_t) {
                best_t = t;
                best_e = e;
            }
        }
        if (best_e < 0) {
            if (!retried) {
                // tangential grazing: nudge toward the centroid and retry once
                Vec2 centroid{0, 0};
                for (const auto& v : poly.vertices) centroid = centroid + v;
                centroid = centroid / poly.size();
                x = x + (centroid - x).normalized() * (8 * tol.hit);
                retried = true;
                continue;
            }
            throw std::runtime_error("flow tracer found no exit from polygon (tangential grazing)");
        }

        Vec2 y = x + d * best_t;

        // Closing up: the segment revisits the start point with the same
        // direction (direction never changes across translation gluings).
        if (p == start.polygon) {
            double along = dot(start.position - x, d);
            Vec2 foot = x + d * along;
            if (along > tol.hit && along <= best_t && along <= remaining &&
                (foot - start.position).norm() <= tol.hit &&
                out.total_length + along > tol.hit) {
                out.segments.push_back({p, x, foot});
                out.total_length += along;
                out.terminal = Terminal::ClosedUp;
                return out;
            }
        }

        if (best_t >= remaining) {
            out.segments.push_back({p, x, x + d * remaining});
            out.total_length += remaining;
            out.terminal = Terminal::BudgetExhausted;
            return out;
        }

        int hit_v = tracer.vertex_near(p, y);
        if (hit_v >= 0) {
            out.segments.push_back({p, x, poly.vertex(hit_v)});
            out.total_length += dot(poly.vertex(hit_v) - x, d);
            out.terminal = Terminal::HitConePoint;
            out.cone_id = classes.class_of[p][hit_v];
            return out;
        }

        out.segments.push_back({p, x, y});
        out.total_length += best_t;
        remaining -= best_t;

        EdgeRef q = partner[p][best_e];
        // translation: edge start of p maps to edge end of q
        Vec2 shift = s.polygons[q.polygon].vertex(q.edge + 1) - poly.vertex(best_e);
        x = y + shift;
        p = q.polygon;
    }
}

Trajectory trace(const TranslationSurface& s, SurfacePoint start, Vec2 dir, double max_length) {
    return trace_impl(s, start, dir, max_length, false);
}

std::vector<Trajectory> separatrices(const TranslationSurface& s, const ConePoint& cone, Vec2 dir,
                                     double max_length) {
    const auto& tol = Tolerances::get();
    if (!(dir.norm() > 0)) throw std::invalid_argument("separatrices requires a nonzero direction");
    VertexClasses classes = vertex_classes(s);
    if (cone.id < 0 || cone.id >= classes.count())
        throw std::invalid_argument("cone point id out of range");

    Vec2 d = dir.normalized();
    std::vector<Trajectory> out;

    for (Vec2 sd : {d, -d}) {
        for (auto [p, v] : classes.corners[cone.id]) {
            const Polygon& poly = s.polygons[p];
            Vec2 a = poly.edge_vector(v);                 // toward next vertex
            Vec2 b = -poly.edge_vector(v - 1);            // toward previous vertex
            // Corner wedge [a, b), counterclockwise, half-open so that each
            // direction around the class belongs to exactly one corner.
            double ca = cross(a, sd), cb = cross(sd, b);
            bool on_a = std::abs(ca) <= tol.angle * a.norm() && dot(a, sd) > 0;
            bool on_b = std::abs(cb) <= tol.angle * b.norm() && dot(b, sd) > 0;
            bool inside = ca > 0 && cb > 0 && !on_b;
            if (!(inside || on_a)) continue;
            out.push_back(trace_impl(s, SurfacePoint{p, poly.vertex(v)}, sd, max_length, true));
        }
    }
    return out;
}

}  // namespace flatsurf

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "flatsurf/census.hpp"
#include "flatsurf/flow.hpp"
#include "flatsurf/parallel.hpp"
#include "flatsurf/tolerances.hpp"
#include "flatsurf/triangulation.hpp"

namespace flatsurf {

namespace {

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Traced saddle connection in the decomposition direction.
struct WallSc {
    Vec2 holonomy;
    double length = 0.0;
    int start_cls = -1;
    int end_cls = -1;
};

// Full chord of one polygon at one transverse level.
struct Chord {
    int poly = -1;
    double tau = 0.0;
    Vec2 lo_pt, hi_pt;      // endpoints ordered by position along the flow
    double length = 0.0;
    int sc_id = -1;
    int end_cls[2] = {-1, -1};   // vertex class at each endpoint, or -1
    int end_edge[2] = {-1, -1};  // polygon edge carrying a mid-edge endpoint
};

struct PolySlabs {
    std::vector<double> bounds;  // tau cut levels including the extremes
    std::vector<double> areas;   // one per slab
    int piece_base = 0;          // global id of slab 0
    int slab_count() const { return static_cast<int>(areas.size()); }
};

double clipped_area(const Polygon& poly, Vec2 n, double lo, double hi, double eps) {
    // area of poly intersected with lo <= dot(n, x) <= hi
    std::vector<Vec2> cur = poly.vertices;
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<Vec2> next;
        auto value = [&](Vec2 v) { return pass == 0 ? dot(n, v) - lo : hi - dot(n, v); };
        int m = static_cast<int>(cur.size());
        for (int i = 0; i < m; ++i) {
            Vec2 a = cur[i], b = cur[(i + 1) % m];
            double va = value(a), vb = value(b);
            if (va >= -eps) next.push_back(a);
            if ((va > eps && vb < -eps) || (va < -eps && vb > eps))
                next.push_back(a + (b - a) * (va / (va - vb)));
        }
        cur = std::move(next);
        if (cur.size() < 3) return 0.0;
    }
    double s = 0.0;
    int m = static_cast<int>(cur.size());
    for (int i = 0; i < m; ++i) s += cross(cur[i], cur[(i + 1) % m]);
    return 0.5 * std::abs(s);
}

// Endpoints of the chord of poly at level dot(n, x) = tau, ordered along d.
std::pair<Vec2, Vec2> chord_endpoints(const Polygon& poly, Vec2 n, Vec2 d, double tau, double eps) {
    std::vector<Vec2> pts;
    int m = poly.size();
    for (int i = 0; i < m; ++i) {
        Vec2 a = poly.vertex(i), b = poly.vertex(i + 1);
        double va = dot(n, a) - tau, vb = dot(n, b) - tau;
        if (std::abs(va) <= eps) pts.push_back(a);
        if ((va > eps && vb < -eps) || (va < -eps && vb > eps))
            pts.push_back(a + (b - a) * (va / (va - vb)));
    }
    if (pts.size() < 2) throw std::runtime_error("degenerate wall chord");
    auto cmp = [&](Vec2 u, Vec2 v) { return dot(d, u) < dot(d, v); };
    Vec2 lo = *std::min_element(pts.begin(), pts.end(), cmp);
    Vec2 hi = *std::max_element(pts.begin(), pts.end(), cmp);
    return {lo, hi};
}

}  // namespace

CylinderDecomposition decompose(const TranslationSurface& s, Vec2 dir, double budget) {
    const auto& tol = Tolerances::get();
    require_valid(s);
    if (!(dir.norm() > 0)) throw std::invalid_argument("decompose requires a nonzero direction");
    Vec2 d = dir.normalized();
    Vec2 n = d.perp();

    double scale = 0.0;
    for (const auto& poly : s.polygons)
        for (const auto& v : poly.vertices) scale = std::max(scale, std::abs(v.x) + std::abs(v.y));
    scale = std::max(scale, 1.0);
    const double eps = tol.glue * scale * 8;

    VertexClasses classes = vertex_classes(s);
    auto partner = gluing_partners(s);

    // --- trace every separatrix; in a periodic direction each one is a
    // saddle connection in +-d ---
    std::vector<WallSc> scs;
    std::vector<std::vector<std::pair<double, int>>> levels(s.polygons.size());  // (tau, sc id)

    auto add_level = [&](int poly, double tau, int sc_id) {
        for (const auto& [t, id] : levels[poly])
            if (std::abs(t - tau) <= eps) return;
        levels[poly].push_back({tau, sc_id});
    };

    // Glued edge pairs parallel to d are saddle connections; register each
    // pair as one connection carried by both charts, ahead of the traced
    // separatrices so the along-edge traces reuse the shared entry.
    for (const auto& [E, F] : s.gluings) {
        const Polygon& poly = s.polygons[E.polygon];
        Vec2 ev = poly.edge_vector(E.edge);
        if (std::abs(cross(ev, d)) > tol.angle * scale * 8 * ev.norm()) continue;
        int v0 = E.edge, v1 = (E.edge + 1) % poly.size();
        int id = static_cast<int>(scs.size());
        bool fw = dot(ev, d) > 0;
        scs.push_back({fw ? ev : -ev, ev.norm(),
                       classes.class_of[E.polygon][fw ? v0 : v1],
                       classes.class_of[E.polygon][fw ? v1 : v0]});
        add_level(E.polygon, dot(n, poly.vertex(E.edge)), id);
        add_level(F.polygon, dot(n, s.polygons[F.polygon].vertex(F.edge)), id);
    }

    for (int c = 0; c < classes.count(); ++c) {
        ConePoint cp{c, classes.multiple[c], classes.multiple[c] - 1};
        for (const Trajectory& traj : separatrices(s, cp, d, budget)) {
            if (traj.terminal != Terminal::HitConePoint) {
                std::ostringstream os;
                os << "separatrix from class " << c << " in direction (" << d.x << "," << d.y
                   << ") did not reach a vertex within budget " << budget;
                throw NotPeriodicWithinBudget(os.str());
            }
            int id = static_cast<int>(scs.size());
            scs.push_back({traj.displacement(), traj.total_length, c, traj.cone_id});
            for (const auto& seg : traj.segments) {
                if ((seg.exit - seg.entry).norm() <= eps) continue;
                add_level(seg.polygon, dot(n, seg.entry), id);
            }
        }
    }

    // --- cut each polygon into slabs between consecutive wall levels ---
    std::vector<PolySlabs> slabs(s.polygons.size());
    int piece_count = 0;
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        const Polygon& poly = s.polygons[p];
        double tmin = 1e300, tmax = -1e300;
        for (const auto& v : poly.vertices) {
            tmin = std::min(tmin, dot(n, v));
            tmax = std::max(tmax, dot(n, v));
        }
        std::vector<double> cuts;
        for (const auto& [t, id] : levels[p])
            if (t > tmin + eps && t < tmax - eps) cuts.push_back(t);
        std::sort(cuts.begin(), cuts.end());
        PolySlabs& ps = slabs[p];
        ps.bounds.push_back(tmin);
        for (double t : cuts) ps.bounds.push_back(t);
        ps.bounds.push_back(tmax);
        ps.piece_base = piece_count;
        for (std::size_t i = 0; i + 1 < ps.bounds.size(); ++i)
            ps.areas.push_back(clipped_area(poly, n, ps.bounds[i], ps.bounds[i + 1], eps * 1e-3));
        piece_count += ps.slab_count();
    }

    auto slab_index = [&](int p, double tau) {
        const auto& b = slabs[p].bounds;
        auto it = std::upper_bound(b.begin(), b.end(), tau);
        int i = static_cast<int>(it - b.begin()) - 1;
        return std::clamp(i, 0, slabs[p].slab_count() - 1);
    };
    auto piece_id = [&](int p, int slab) { return slabs[p].piece_base + slab; };
    // index of a wall level within the bounds array, or -1
    auto bound_index = [&](int p, double tau) {
        const auto& b = slabs[p].bounds;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (std::abs(b[i] - tau) <= eps * 2) return static_cast<int>(i);
        return -1;
    };

    // --- union pieces that flow into each other across non-parallel glued
    // edges ---
    DSU fine(piece_count);
    for (const auto& [E, F] : s.gluings) {
        const Polygon& pp = s.polygons[E.polygon];
        const Polygon& pq = s.polygons[F.polygon];
        Vec2 ev = pp.edge_vector(E.edge);
        if (std::abs(cross(ev, d)) <= tol.angle * scale * 8 * ev.norm()) continue;
        double ta = dot(n, pp.vertex(E.edge));
        double tb = dot(n, pp.vertex(E.edge + 1));
        double lo = std::min(ta, tb), hi = std::max(ta, tb);
        double shift = dot(n, pq.vertex(F.edge + 1)) - dot(n, pp.vertex(E.edge));

        std::vector<double> cuts{lo, hi};
        for (double b : slabs[E.polygon].bounds)
            if (b > lo + eps && b < hi - eps) cuts.push_back(b);
        for (double b : slabs[F.polygon].bounds) {
            double t = b - shift;
            if (t > lo + eps && t < hi - eps) cuts.push_back(t);
        }
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (cuts[i + 1] - cuts[i] <= 2 * eps) continue;
            double mid = 0.5 * (cuts[i] + cuts[i + 1]);
            fine.unite(piece_id(E.polygon, slab_index(E.polygon, mid)),
                       piece_id(F.polygon, slab_index(F.polygon, mid + shift)));
        }
    }

    // --- build chords with endpoint classification ---
    std::vector<Chord> chords;
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        const Polygon& poly = s.polygons[p];
        for (const auto& [tau, sc_id] : levels[p]) {
            Chord ch;
            ch.poly = static_cast<int>(p);
            ch.tau = tau;
            ch.sc_id = sc_id;
            auto [lo_pt, hi_pt] = chord_endpoints(poly, n, d, tau, eps);
            ch.lo_pt = lo_pt;
            ch.hi_pt = hi_pt;
            ch.length = dot(d, hi_pt - lo_pt);
            Vec2 ends[2] = {lo_pt, hi_pt};
            for (int k = 0; k < 2; ++k) {
                for (int v = 0; v < poly.size(); ++v) {
                    if ((poly.vertex(v) - ends[k]).norm() <= eps * 4) {
                        ch.end_cls[k] = classes.class_of[p][v];
                        break;
                    }
                }
                if (ch.end_cls[k] >= 0) continue;
                for (int e = 0; e < poly.size(); ++e) {
                    Vec2 a = poly.vertex(e);
                    Vec2 evv = poly.edge_vector(e);
                    double t = dot(ends[k] - a, evv) / evv.norm2();
                    if (t < -eps || t > 1 + eps) continue;
                    if ((a + evv * t - ends[k]).norm() <= eps * 4) {
                        ch.end_edge[k] = e;
                        break;
                    }
                }
                if (ch.end_edge[k] < 0)
                    throw std::runtime_error("wall chord endpoint is neither vertex nor edge point");
            }
            chords.push_back(ch);
        }
    }

    // chord lookup by (polygon, tau)
    auto find_chord = [&](int p, double tau) {
        for (int i = 0; i < static_cast<int>(chords.size()); ++i)
            if (chords[i].poly == p && std::abs(chords[i].tau - tau) <= eps * 2) return i;
        return -1;
    };

    // --- chain chords into boundary circles ---
    DSU circ(static_cast<int>(chords.size()));
    std::vector<char> chord_hard(chords.size(), 0);
    std::vector<std::vector<int>> class_ends(classes.count());

    for (int i = 0; i < static_cast<int>(chords.size()); ++i) {
        const Chord& ch = chords[i];
        for (int k = 0; k < 2; ++k) {
            if (ch.end_cls[k] >= 0) {
                if (classes.multiple[ch.end_cls[k]] >= 2)
                    chord_hard[i] = 1;
                else
                    class_ends[ch.end_cls[k]].push_back(i);
            } else {
                // continues into the neighbouring chart
                int e = ch.end_edge[k];
                EdgeRef F = partner[ch.poly][e];
                double shift = dot(n, s.polygons[F.polygon].vertex(F.edge + 1)) -
                               dot(n, s.polygons[ch.poly].vertex(e));
                int j = find_chord(F.polygon, ch.tau + shift);
                if (j < 0) throw std::runtime_error("wall chord has no continuation across gluing");
                circ.unite(i, j);
            }
        }
    }
    // A marked point has one outgoing ray per sign, so every chord end at a
    // marked class lies on the single circle passing straight through it
    // (glued parallel edges contribute one chart copy per side).
    for (int c = 0; c < classes.count(); ++c)
        for (std::size_t k = 1; k < class_ends[c].size(); ++k)
            circ.unite(class_ends[c][0], class_ends[c][k]);

    // hardness is a property of the whole chain
    std::map<int, bool> chain_hard;
    for (int i = 0; i < static_cast<int>(chords.size()); ++i)
        chain_hard[circ.find(i)] = chain_hard[circ.find(i)] || chord_hard[i];

    // --- pieces directly above/below each chord ---
    std::vector<int> above(chords.size()), below(chords.size());
    auto across_parallel_edge = [&](int p, double tau, bool top) {
        const Polygon& poly = s.polygons[p];
        for (int e = 0; e < poly.size(); ++e) {
            Vec2 ev = poly.edge_vector(e);
            if (std::abs(cross(ev, d)) > tol.angle * scale * 8 * ev.norm()) continue;
            if (std::abs(dot(n, poly.vertex(e)) - tau) > eps * 2) continue;
            EdgeRef F = partner[p][e];
            int q = F.polygon;
            double tq = dot(n, s.polygons[q].vertex(F.edge));
            int k = bound_index(q, tq);
            if (k < 0) throw std::runtime_error("glued parallel edge not on a slab boundary");
            return top ? piece_id(q, k) : piece_id(q, k - 1);
        }
        throw std::runtime_error("no parallel edge found at polygon extreme");
    };
    for (int i = 0; i < static_cast<int>(chords.size()); ++i) {
        const Chord& ch = chords[i];
        int k = bound_index(ch.poly, ch.tau);
        if (k < 0) throw std::runtime_error("wall level is not a slab boundary");
        int nslabs = slabs[ch.poly].slab_count();
        above[i] = (k < nslabs) ? piece_id(ch.poly, k) : across_parallel_edge(ch.poly, ch.tau, true);
        below[i] = (k > 0) ? piece_id(ch.poly, k - 1) : across_parallel_edge(ch.poly, ch.tau, false);
    }

    // --- merge fine cylinders across chains whose junctions are all marked ---
    DSU merged = fine;
    for (int i = 0; i < static_cast<int>(chords.size()); ++i)
        if (!chain_hard[circ.find(i)]) merged.unite(fine.find(above[i]), fine.find(below[i]));

    // --- assemble cylinders ---
    struct Acc {
        double width = 0.0;
        double area = 0.0;
        std::vector<double> circumferences;
        std::map<int, std::vector<int>> boundary_sc;  // side (0 up, 1 down) -> sc ids
    };
    std::map<int, Acc> acc;
    std::map<int, double> fine_area, fine_width;
    for (int p = 0; p < static_cast<int>(s.polygons.size()); ++p) {
        for (int i = 0; i < slabs[p].slab_count(); ++i) {
            int pid = piece_id(p, i);
            int root = fine.find(pid);
            double w = slabs[p].bounds[i + 1] - slabs[p].bounds[i];
            fine_area[root] += slabs[p].areas[i];
            auto it = fine_width.find(root);
            if (it == fine_width.end())
                fine_width[root] = w;
            else if (std::abs(it->second - w) > 1e-6 * std::max(1.0, w))
                throw std::runtime_error("strip widths disagree within one cylinder");
        }
    }
    for (const auto& [root, a] : fine_area) {
        Acc& target = acc[merged.find(root)];
        target.width += fine_width[root];
        target.area += a;
        target.circumferences.push_back(a / fine_width[root]);
    }
    for (int i = 0; i < static_cast<int>(chords.size()); ++i) {
        if (!chain_hard[circ.find(i)]) continue;
        int ca = merged.find(fine.find(above[i]));
        int cb = merged.find(fine.find(below[i]));
        acc[ca].boundary_sc[1].push_back(chords[i].sc_id);
        acc[cb].boundary_sc[0].push_back(chords[i].sc_id);
    }

    CylinderDecomposition out;
    out.direction = d;
    for (auto& [root, a] : acc) {
        Cylinder cyl;
        cyl.direction = d;
        cyl.width = a.width;
        cyl.area = a.area;
        double circ0 = a.circumferences.front();
        for (double c : a.circumferences)
            if (std::abs(c - circ0) > 1e-6 * std::max(1.0, circ0))
                throw std::runtime_error("inconsistent core length within one cylinder");
        cyl.circumference = a.area / a.width;
        for (int side = 0; side < 2; ++side) {
            auto ids = a.boundary_sc[side];
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            for (int id : ids) {
                const WallSc& w = scs[id];
                cyl.boundary[side].push_back(
                    {w.holonomy, w.length, w.start_cls, w.end_cls, -1});
            }
        }
        out.cylinders.push_back(std::move(cyl));
    }

    std::sort(out.cylinders.begin(), out.cylinders.end(), [](const Cylinder& a, const Cylinder& b) {
        if (a.circumference != b.circumference) return a.circumference < b.circumference;
        return a.width < b.width;
    });

    double total = out.total_area();
    double surface = s.area();
    if (std::abs(total - surface) > 1e-8 * std::max(1.0, surface))
        throw std::runtime_error("cylinder areas do not sum to the surface area");

    return out;
}

CylinderCensus cylinder_census(const TranslationSurface& s, double L) {
    const auto& tol = Tolerances::get();
    if (!(L > 0)) throw std::invalid_argument("census radius must be positive");
    TranslationSurface sd = delaunay(s);
    std::vector<SaddleConnection> scs = saddle_connections(sd, L);

    // candidate directions, sign-canonicalized and deduplicated
    struct Cand {
        Vec2 dir;
        double angle;
        double min_len;
    };
    std::vector<Cand> cands;
    for (const auto& sc : scs) {
        Vec2 u = sc.holonomy.normalized();
        if (u.y < -tol.dir_dedup || (std::abs(u.y) <= tol.dir_dedup && u.x < 0)) u = -u;
        cands.push_back({u, angle_of(u), sc.length});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.angle != b.angle) return a.angle < b.angle;
        return a.min_len < b.min_len;
    });
    std::vector<Cand> dirs;
    for (const auto& c : cands) {
        if (!dirs.empty() && std::abs(c.angle - dirs.back().angle) <= tol.dir_dedup) {
            dirs.back().min_len = std::min(dirs.back().min_len, c.min_len);
            continue;
        }
        dirs.push_back(c);
    }

    double budget = kCylinderBudgetFactor * L;
    std::vector<std::vector<Cylinder>> found(dirs.size());
    std::vector<char> failed(dirs.size(), 0);

    parallel_for(dirs.size(), [&](std::size_t i) {
        try {
            CylinderDecomposition dec = decompose(sd, dirs[i].dir, budget);
            for (const auto& cyl : dec.cylinders)
                if (cyl.circumference <= L * (1 + 1e-9)) found[i].push_back(cyl);
        } catch (const NotPeriodicWithinBudget&) {
            failed[i] = 1;
        }
    });

    CylinderCensus out;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        if (failed[i]) {
            out.skipped.push_back({dirs[i].dir, dirs[i].min_len});
            continue;
        }
        for (const auto& cyl : found[i]) {
            out.cylinders.push_back(cyl);
            Cylinder neg = cyl;
            neg.direction = -neg.direction;
            for (auto& side : neg.boundary)
                for (auto& sc : side) sc.holonomy = -sc.holonomy;
            out.cylinders.push_back(std::move(neg));
        }
    }

    std::sort(out.cylinders.begin(), out.cylinders.end(), [](const Cylinder& a, const Cylinder& b) {
        if (a.circumference != b.circumference) return a.circumference < b.circumference;
        double aa = angle_of(a.direction), ab = angle_of(b.direction);
        if (aa != ab) return aa < ab;
        return a.width < b.width;
    });
    return out;
}

std::vector<Cylinder> cylinders_up_to(const TranslationSurface& s, double L) {
    return cylinder_census(s, L).cylinders;
}

}  // namespace flatsurf

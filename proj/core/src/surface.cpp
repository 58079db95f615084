#include "flatsurf/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "flatsurf/tolerances.hpp"

namespace flatsurf {

double Polygon::area() const {
    double s = 0.0;
    int n = size();
    for (int i = 0; i < n; ++i) {
        Vec2 a = vertices[i], b = vertices[(i + 1) % n];
        s += cross(a, b);
    }
    return 0.5 * s;
}

bool Polygon::convex_ccw(double eps) const {
    int n = size();
    if (n < 3) return false;
    for (int i = 0; i < n; ++i) {
        Vec2 e0 = edge_vector(i - 1), e1 = edge_vector(i);
        if (cross(e0, e1) < -eps) return false;
        if (e1.norm() <= eps) return false;
    }
    return area() > eps;
}

int TranslationSurface::edge_count() const {
    int n = 0;
    for (const auto& p : polygons) n += p.size();
    return n;
}

double TranslationSurface::area() const {
    double s = 0.0;
    for (const auto& p : polygons) s += p.area();
    return s;
}

std::string ValidationReport::summary() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].code << ": " << violations[i].message;
    }
    return os.str();
}

double corner_angle(const Polygon& poly, int v) {
    Vec2 out = poly.edge_vector(v);
    Vec2 back = -poly.edge_vector(v - 1);
    double a = angle_of(back) - angle_of(out);
    while (a < 0) a += 2 * M_PI;
    while (a >= 2 * M_PI) a -= 2 * M_PI;
    return a;
}

static bool edge_in_range(const TranslationSurface& s, EdgeRef e) {
    return e.polygon >= 0 && e.polygon < static_cast<int>(s.polygons.size()) &&
           e.edge >= 0 && e.edge < s.polygons[e.polygon].size();
}

std::vector<std::vector<EdgeRef>> gluing_partners(const TranslationSurface& s) {
    std::vector<std::vector<EdgeRef>> partner(s.polygons.size());
    std::vector<std::vector<bool>> seen(s.polygons.size());
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        partner[p].assign(s.polygons[p].size(), EdgeRef{-1, -1});
        seen[p].assign(s.polygons[p].size(), false);
    }
    for (const auto& [a, b] : s.gluings) {
        if (!edge_in_range(s, a) || !edge_in_range(s, b))
            throw std::invalid_argument("gluing references edge out of range");
        if (a == b) throw std::invalid_argument("edge glued to itself");
        if (seen[a.polygon][a.edge] || seen[b.polygon][b.edge])
            throw std::invalid_argument("edge glued more than once");
        seen[a.polygon][a.edge] = seen[b.polygon][b.edge] = true;
        partner[a.polygon][a.edge] = b;
        partner[b.polygon][b.edge] = a;
    }
    for (std::size_t p = 0; p < seen.size(); ++p)
        for (std::size_t e = 0; e < seen[p].size(); ++e)
            if (!seen[p][e]) throw std::invalid_argument("uncovered edge");
    return partner;
}

ValidationReport validate(const TranslationSurface& s) {
    const auto& tol = Tolerances::get();
    ValidationReport report;
    auto add = [&](const std::string& code, const std::string& msg) {
        report.violations.push_back({code, msg});
    };

    if (s.polygons.empty()) {
        add("empty", "surface has no polygons");
        return report;
    }

    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        const Polygon& poly = s.polygons[p];
        if (poly.size() < 3) {
            add("degenerate-polygon", "polygon " + std::to_string(p) + " has fewer than 3 vertices");
            continue;
        }
        bool finite = true;
        for (const auto& v : poly.vertices) finite = finite && v.finite();
        if (!finite) {
            add("non-finite", "polygon " + std::to_string(p) + " has non-finite coordinates");
            continue;
        }
        if (!poly.convex_ccw(tol.glue))
            add("non-convex", "polygon " + std::to_string(p) + " is not convex counterclockwise with positive area");
    }
    if (!report.ok()) return report;

    // Gluing structure: involution, fixed-point free, covers each edge once.
    std::vector<std::vector<EdgeRef>> partner;
    try {
        partner = gluing_partners(s);
    } catch (const std::exception& e) {
        add("gluing-structure", e.what());
        return report;
    }

    // Glued edges carry opposite vectors of equal length.
    for (const auto& [a, b] : s.gluings) {
        Vec2 va = s.polygons[a.polygon].edge_vector(a.edge);
        Vec2 vb = s.polygons[b.polygon].edge_vector(b.edge);
        if ((va + vb).norm() > tol.glue * std::max(1.0, va.norm())) {
            std::ostringstream os;
            os << "edges (" << a.polygon << "," << a.edge << ") and (" << b.polygon << "," << b.edge
               << ") are not opposite translates: sum (" << (va + vb).x << "," << (va + vb).y << ")";
            add("edge-mismatch", os.str());
        }
    }
    if (!report.ok()) return report;

    // Total angle at every vertex class is a multiple of 2*pi.
    VertexClasses classes = vertex_classes(s);
    for (int c = 0; c < classes.count(); ++c) {
        double total = classes.total_angle[c];
        double m = total / (2 * M_PI);
        if (std::abs(m - std::round(m)) * 2 * M_PI > tol.angle * classes.corners[c].size() * 16 ||
            std::round(m) < 1) {
            std::ostringstream os;
            os << "vertex class " << c << " has total angle " << total << " = " << m << " * 2pi";
            add("angle-sum", os.str());
        }
    }

    return report;
}

void require_valid(const TranslationSurface& s) {
    ValidationReport r = validate(s);
    if (!r.ok()) throw std::invalid_argument("invalid surface '" + s.name + "': " + r.summary());
}

VertexClasses vertex_classes(const TranslationSurface& s) {
    auto partner = gluing_partners(s);
    VertexClasses out;
    out.class_of.resize(s.polygons.size());
    for (std::size_t p = 0; p < s.polygons.size(); ++p)
        out.class_of[p].assign(s.polygons[p].size(), -1);

    // Successor when rotating counterclockwise around vertex v of polygon p:
    // cross the incoming edge (v-1, v); its partner starts at the image of v.
    auto next_corner = [&](int p, int v) {
        int n = s.polygons[p].size();
        int prev_edge = (v - 1 + n) % n;
        EdgeRef m = partner[p][prev_edge];
        return std::pair<int, int>{m.polygon, m.edge};
    };

    for (std::size_t p0 = 0; p0 < s.polygons.size(); ++p0) {
        for (int v0 = 0; v0 < s.polygons[p0].size(); ++v0) {
            if (out.class_of[p0][v0] != -1) continue;
            int id = out.count();
            out.corners.emplace_back();
            double total = 0.0;
            int p = static_cast<int>(p0), v = v0;
            int guard = s.edge_count() + 1;
            do {
                if (--guard < 0) throw std::logic_error("corner walk does not close");
                out.class_of[p][v] = id;
                out.corners[id].push_back({p, v});
                total += corner_angle(s.polygons[p], v);
                auto [np, nv] = next_corner(p, v);
                p = np;
                v = nv;
            } while (!(p == static_cast<int>(p0) && v == v0));
            out.total_angle.push_back(total);
            out.multiple.push_back(static_cast<int>(std::lround(total / (2 * M_PI))));
        }
    }
    return out;
}

std::vector<ConePoint> cone_points(const TranslationSurface& s) {
    VertexClasses classes = vertex_classes(s);
    std::vector<ConePoint> out;
    out.reserve(classes.count());
    for (int c = 0; c < classes.count(); ++c) {
        ConePoint cp;
        cp.id = c;
        cp.angle_multiple = classes.multiple[c];
        cp.zero_order = classes.multiple[c] - 1;
        out.push_back(cp);
    }
    return out;
}

double area(const TranslationSurface& s) { return s.area(); }

int genus(const TranslationSurface& s) {
    VertexClasses classes = vertex_classes(s);
    int v = classes.count();
    int e = s.edge_count() / 2;
    int f = static_cast<int>(s.polygons.size());
    int chi = v - e + f;
    return (2 - chi) / 2;
}

TranslationSurface apply_matrix(const Mat2& g, const TranslationSurface& s) {
    if (std::abs(g.det() - 1.0) > Tolerances::get().unimodular)
        throw std::invalid_argument("apply_matrix requires det = 1, got det = " + std::to_string(g.det()));
    TranslationSurface out = s;
    for (auto& poly : out.polygons)
        for (auto& v : poly.vertices) v = g * v;
    return out;
}

}  // namespace flatsurf

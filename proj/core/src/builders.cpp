#include "flatsurf/builders.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "flatsurf/tolerances.hpp"

namespace flatsurf {

Polygon RationalPolygonSpec::polygon() const {
    std::vector<AngleFrac> dirs = side_directions();
    Polygon poly;
    Vec2 v{0.0, 0.0};
    for (int i = 0; i < size(); ++i) {
        poly.vertices.push_back(v);
        double d = dirs[i].radians();
        v = v + lengths[i] * Vec2{std::cos(d), std::sin(d)};
    }
    return poly;
}

std::vector<AngleFrac> RationalPolygonSpec::side_directions() const {
    std::vector<AngleFrac> dirs;
    dirs.reserve(size());
    AngleFrac dir = first_direction;
    AngleFrac pi(1, 1);
    for (int i = 0; i < size(); ++i) {
        if (i > 0) dir = (dir + pi - angles[i]).mod_two_pi();
        dirs.push_back(dir);
    }
    return dirs;
}

void RationalPolygonSpec::check() const {
    if (size() < 3) throw std::invalid_argument("polygon needs at least 3 angles");
    if (lengths.size() != angles.size())
        throw std::invalid_argument("angle and length counts differ");
    for (const auto& a : angles)
        if (a.num <= 0) throw std::invalid_argument("angles must be positive");
    AngleFrac sum(0, 1);
    for (const auto& a : angles) sum = sum + a;
    if (!(sum == AngleFrac(size() - 2, 1)))
        throw std::invalid_argument("interior angles must sum to (k-2)pi, got " + sum.str());
    Polygon poly = polygon();
    std::vector<AngleFrac> dirs = side_directions();
    double back = dirs.back().radians();
    Vec2 closure = poly.vertices.front() -
                   (poly.vertices.back() + lengths.back() * Vec2{std::cos(back), std::sin(back)});
    double scale = *std::max_element(lengths.begin(), lengths.end());
    if (closure.norm() > 1e-9 * std::max(1.0, scale) * size())
        throw std::invalid_argument("polygon does not close up");
}

RationalPolygonSpec RationalPolygonSpec::from_vertices(const std::vector<Vec2>& vertices, int max_den) {
    int k = static_cast<int>(vertices.size());
    if (k < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    Polygon poly{vertices};
    if (poly.area() <= 0) throw std::invalid_argument("vertices must be counterclockwise with positive area");

    // Continued-fraction snap of x (in units of pi) to num/den with den <= max_den.
    auto rationalize = [&](double x) {
        double best_err = 1e300;
        std::int64_t best_n = 0, best_d = 1;
        // Stern-Brocot style scan over convergents.
        double target = x;
        std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        double frac = target;
        for (int it = 0; it < 64; ++it) {
            double ai = std::floor(frac);
            std::int64_t a = static_cast<std::int64_t>(ai);
            std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
            if (q2 > max_den || q2 <= 0) break;
            double err = std::abs(target - static_cast<double>(p2) / static_cast<double>(q2));
            if (err < best_err) { best_err = err; best_n = p2; best_d = q2; }
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            double rem = frac - ai;
            if (rem < 1e-15) break;
            frac = 1.0 / rem;
        }
        if (best_err > 1e-9) throw std::invalid_argument("non-rational angle: " + std::to_string(x) + " pi");
        return AngleFrac(best_n, best_d);
    };

    RationalPolygonSpec spec;
    for (int i = 0; i < k; ++i) {
        spec.angles.push_back(rationalize(corner_angle(poly, i) / M_PI));
        spec.lengths.push_back(poly.edge_vector(i).norm());
    }
    spec.first_direction = rationalize(angle_of(poly.edge_vector(0)) / M_PI);
    spec.check();
    return spec;
}

namespace {

// Element of the finite subgroup of O(2) generated by the side reflections,
// kept exact: det = +1 is z -> e^{i r} z, det = -1 is z -> e^{i r} conj(z),
// with r a rational multiple of pi reduced mod 2pi.
struct O2Elem {
    bool reflection = false;
    AngleFrac rot = AngleFrac(0, 1);

    Mat2 matrix() const {
        double t = rot.radians();
        double c = std::cos(t), s = std::sin(t);
        if (!reflection) return {c, -s, s, c};
        return {c, s, s, -c};
    }

    bool operator<(const O2Elem& o) const {
        if (reflection != o.reflection) return reflection < o.reflection;
        AngleFrac a = rot.mod_two_pi(), b = o.rot.mod_two_pi();
        if (a.num * b.den != b.num * a.den) return a < b;
        return false;
    }
    bool operator==(const O2Elem& o) const {
        return reflection == o.reflection && rot.mod_two_pi() == o.rot.mod_two_pi();
    }
};

// this o other as maps: (this*other)(z) = this(other(z)).
//   (+,a)(+,b) z = e^{ia} e^{ib} z            -> (+, a+b)
//   (+,a)(-,b) z = e^{ia} e^{ib} conj z       -> (-, a+b)
//   (-,a)(+,b) z = e^{ia} conj(e^{ib} z)      -> (-, a-b)
//   (-,a)(-,b) z = e^{ia} conj(e^{ib} conj z) -> (+, a-b)
O2Elem compose(const O2Elem& f, const O2Elem& g) {
    O2Elem r;
    r.reflection = f.reflection != g.reflection;
    r.rot = (f.reflection ? (f.rot - g.rot) : (f.rot + g.rot)).mod_two_pi();
    return r;
}

}  // namespace

TranslationSurface unfold(const RationalPolygonSpec& spec, int group_order_cap) {
    spec.check();
    Polygon base = spec.polygon();
    int k = spec.size();
    std::vector<AngleFrac> dirs = spec.side_directions();

    // Reflection across the line of direction theta is (-, 2 theta).
    std::vector<O2Elem> gens(k);
    for (int e = 0; e < k; ++e) {
        gens[e].reflection = true;
        gens[e].rot = (dirs[e] + dirs[e]).mod_two_pi();
    }

    // Closure of the generated group.
    std::map<O2Elem, int> index;
    std::vector<O2Elem> elems;
    auto intern = [&](const O2Elem& g) {
        auto it = index.find(g);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(elems.size());
        index.emplace(g, id);
        elems.push_back(g);
        return id;
    };
    intern(O2Elem{});
    for (std::size_t head = 0; head < elems.size(); ++head) {
        O2Elem g = elems[head];
        for (const auto& gen : gens) intern(compose(g, gen));
        if (static_cast<int>(elems.size()) > group_order_cap)
            throw std::invalid_argument("reflection group order exceeds cap " + std::to_string(group_order_cap));
    }

    // One polygon copy per element; orientation-reversing copies get their
    // vertex list reversed to stay counterclockwise. Side e of the base
    // appears in copy g at index e (preserving) or k-1-e (reversing).
    TranslationSurface out;
    out.name = "unfold";
    auto side_index = [&](const O2Elem& g, int e) {
        return g.reflection ? (k - 1 - e) : e;
    };
    for (const auto& g : elems) {
        Mat2 m = g.matrix();
        Polygon copy;
        copy.vertices.resize(k);
        for (int v = 0; v < k; ++v) copy.vertices[v] = m * base.vertices[v];
        if (g.reflection) {
            // new list u_m = w_{(k-m) mod k} keeps u_0 = w_0
            std::vector<Vec2> u(k);
            for (int m2 = 0; m2 < k; ++m2) u[m2] = copy.vertices[(k - m2) % k];
            copy.vertices = std::move(u);
        }
        out.polygons.push_back(std::move(copy));
    }

    for (int gi = 0; gi < static_cast<int>(elems.size()); ++gi) {
        for (int e = 0; e < k; ++e) {
            O2Elem mirror = compose(elems[gi], gens[e]);
            int gj = index.at(mirror);
            // mirror flips orientation, so gj != gi; each pair shows up once
            // from either side
            if (gi < gj)
                out.gluings.push_back({EdgeRef{gi, side_index(elems[gi], e)},
                                       EdgeRef{gj, side_index(mirror, e)}});
        }
    }

    return out;
}

RationalPolygonSpec qn_triangle(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("qn_triangle requires odd n >= 3");
    RationalPolygonSpec spec;
    // apex (n-2)pi/n at the origin, unit side along the x-axis
    spec.angles = {AngleFrac(n - 2, n), AngleFrac(1, n), AngleFrac(1, n)};
    spec.lengths = {1.0, 2.0 * std::cos(M_PI / n), 1.0};
    spec.check();
    return spec;
}

RationalPolygonSpec pn_triangle(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("pn_triangle requires odd n >= 3");
    RationalPolygonSpec spec;
    // base 2 sin(pi/n) held vertical, unit legs, apex angle 2pi/n; this is a
    // fan triangle of the circumradius-1 n-gon of the Xn presentation, so
    // the unfolding covers Xn with the vertical cylinder decomposition
    // aligned between the two
    spec.angles = {AngleFrac(n - 2, 2 * n), AngleFrac(n - 2, 2 * n), AngleFrac(2, n)};
    spec.lengths = {2.0 * std::sin(M_PI / n), 1.0, 1.0};
    spec.first_direction = AngleFrac(1, 2);
    spec.check();
    return spec;
}

RationalPolygonSpec square_spec() {
    RationalPolygonSpec spec;
    spec.angles = {AngleFrac(1, 2), AngleFrac(1, 2), AngleFrac(1, 2), AngleFrac(1, 2)};
    spec.lengths = {1.0, 1.0, 1.0, 1.0};
    spec.check();
    return spec;
}

static TranslationSurface bare_triangle(const RationalPolygonSpec& spec, const std::string& name) {
    TranslationSurface s;
    s.name = name;
    s.polygons.push_back(spec.polygon());
    return s;
}

static TranslationSurface double_ngon(int n) {
    // Regular n-gon of circumradius 1 with a vertical side pair on the
    // right, plus its point reflection; side k glued to side k. This is the
    // scale fixed by the unit equal sides of Qn, and the orientation that
    // puts the cylinder decomposition with heights h_j in the vertical
    // direction.
    TranslationSurface s;
    s.name = "X" + std::to_string(n);
    Polygon p1, p2;
    for (int k = 0; k < n; ++k) {
        double a = (2.0 * k - 1.0) * M_PI / n;
        Vec2 v{std::cos(a), std::sin(a)};
        p1.vertices.push_back(v);
        p2.vertices.push_back(Vec2{3.0, 0.0} - v);
    }
    s.polygons = {p1, p2};
    for (int k = 0; k < n; ++k) s.gluings.push_back({EdgeRef{0, k}, EdgeRef{1, k}});
    return s;
}

TranslationSurface build(Family family, int n) {
    auto need_odd = [&](const char* what) {
        if (n < 5 || n % 2 == 0)
            throw std::invalid_argument(std::string(what) + " requires odd n >= 5, got n = " + std::to_string(n));
    };
    switch (family) {
        case Family::SquareTorus: {
            TranslationSurface s;
            s.name = "square-torus";
            s.polygons.push_back(Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}});
            s.gluings = {{EdgeRef{0, 0}, EdgeRef{0, 2}}, {EdgeRef{0, 1}, EdgeRef{0, 3}}};
            return s;
        }
        case Family::Qn:
            need_odd("Qn");
            return bare_triangle(qn_triangle(n), "Q" + std::to_string(n));
        case Family::Pn:
            need_odd("Pn");
            return bare_triangle(pn_triangle(n), "P" + std::to_string(n));
        case Family::Xn:
            need_odd("Xn");
            return double_ngon(n);
        case Family::Sn: {
            need_odd("Sn");
            TranslationSurface s = unfold(pn_triangle(n));
            s.name = "S" + std::to_string(n);
            return s;
        }
    }
    throw std::invalid_argument("unknown family");
}

std::optional<Family> family_from_string(const std::string& name) {
    if (name == "pn") return Family::Pn;
    if (name == "qn") return Family::Qn;
    if (name == "xn") return Family::Xn;
    if (name == "sn") return Family::Sn;
    if (name == "square") return Family::SquareTorus;
    return std::nullopt;
}

}  // namespace flatsurf

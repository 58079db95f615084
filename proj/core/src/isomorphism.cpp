#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "flatsurf/tolerances.hpp"
#include "flatsurf/triangulation.hpp"

namespace flatsurf {

namespace {

struct CellEdge {
    Vec2 vec;
    int partner_cell = -1;
    int partner_index = -1;
};

struct Cell {
    std::vector<CellEdge> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

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

// Delaunay cells: maximal unions of triangles across (near-)cocircular
// edges. The cell decomposition is canonical where the triangulation itself
// is only canonical up to tie-breaking.
std::vector<Cell> delaunay_cells(const Triangulation& tr) {
    const double tie = Tolerances::get().cocircular;
    int n = static_cast<int>(tr.tris.size());

    DSU dsu(n);
    for (int t = 0; t < n; ++t)
        for (int e = 0; e < 3; ++e)
            if (std::abs(tr.incircle_value(t, e)) <= tie) dsu.unite(t, tr.tris[t].mate_tri[e]);

    auto in_same_cell = [&](int t, int e) {
        return dsu.find(t) == dsu.find(tr.tris[t].mate_tri[e]);
    };

    std::map<int, int> cell_id;
    std::vector<Cell> cells;
    // boundary slot (t,e) -> (cell, boundary index)
    std::map<std::pair<int, int>, std::pair<int, int>> slot_of;

    std::vector<char> visited(3 * n, 0);
    for (int t0 = 0; t0 < n; ++t0) {
        for (int e0 = 0; e0 < 3; ++e0) {
            if (visited[3 * t0 + e0] || in_same_cell(t0, e0)) continue;
            int root = dsu.find(t0);
            auto [it, fresh] = cell_id.try_emplace(root, static_cast<int>(cells.size()));
            if (fresh) cells.emplace_back();
            int cid = it->second;
            Cell& cell = cells[cid];

            // Walk the cell boundary counterclockwise starting from (t0,e0).
            int t = t0, e = e0;
            int guard = 3 * n + 1;
            do {
                if (--guard < 0) throw std::logic_error("cell boundary walk does not close");
                visited[3 * t + e] = 1;
                slot_of[{t, e}] = {cid, cell.size()};
                cell.edges.push_back({tr.tris[t].v[(e + 1) % 3] - tr.tris[t].v[e], -1, -1});
                // next boundary edge out of this edge's endpoint
                int rt = t, re = (e + 1) % 3;
                while (in_same_cell(rt, re)) {
                    int nt = tr.tris[rt].mate_tri[re];
                    int ne = (tr.tris[rt].mate_edge[re] + 1) % 3;
                    rt = nt;
                    re = ne;
                }
                t = rt;
                e = re;
            } while (!(t == t0 && e == e0));
        }
    }

    for (const auto& [slot, pos] : slot_of) {
        auto [t, e] = slot;
        auto mate = slot_of.at({tr.tris[t].mate_tri[e], tr.tris[t].mate_edge[e]});
        cells[pos.first].edges[pos.second].partner_cell = mate.first;
        cells[pos.first].edges[pos.second].partner_index = mate.second;
    }

    return cells;
}

bool vectors_match(Vec2 a, Vec2 b, double eps) { return (a - b).norm() <= eps; }

bool cells_match_rotated(const Cell& a, const Cell& b, int rot, double eps) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        if (!vectors_match(a.edges[i].vec, b.edges[(i + rot) % b.size()].vec, eps)) return false;
    return true;
}

// Seeded breadth-first extension of the assignment cell -> (cell, rotation).
bool try_match(const std::vector<Cell>& A, const std::vector<Cell>& B, int seed_cell, int seed_rot) {
    const double eps = Tolerances::get().iso;
    int n = static_cast<int>(A.size());
    std::vector<std::pair<int, int>> image(n, {-1, -1});
    std::vector<int> preimage(n, -1);
    std::vector<int> stack;

    if (!cells_match_rotated(A[0], B[seed_cell], seed_rot, eps)) return false;
    image[0] = {seed_cell, seed_rot};
    preimage[seed_cell] = 0;
    stack.push_back(0);

    int assigned = 1;
    while (!stack.empty()) {
        int ca = stack.back();
        stack.pop_back();
        auto [cb, rot] = image[ca];
        int sz = A[ca].size();
        for (int i = 0; i < sz; ++i) {
            const CellEdge& ea = A[ca].edges[i];
            const CellEdge& eb = B[cb].edges[(i + rot) % sz];
            int da = ea.partner_cell, ia = ea.partner_index;
            int db = eb.partner_cell, ib = eb.partner_index;
            if (A[da].size() != B[db].size()) return false;
            int rd = ((ib - ia) % A[da].size() + A[da].size()) % A[da].size();
            if (image[da].first == -1) {
                if (preimage[db] != -1) return false;
                if (!cells_match_rotated(A[da], B[db], rd, eps)) return false;
                image[da] = {db, rd};
                preimage[db] = da;
                stack.push_back(da);
                ++assigned;
            } else if (image[da] != std::make_pair(db, rd)) {
                return false;
            }
        }
    }
    return assigned == n;
}

}  // namespace

bool is_isomorphic(const TranslationSurface& a, const TranslationSurface& b) {
    require_valid(a);
    require_valid(b);

    double area_a = a.area(), area_b = b.area();
    if (std::abs(area_a - area_b) > 1e-8 * std::max({area_a, area_b, 1.0})) return false;

    auto multiset = [](const TranslationSurface& s) {
        std::vector<int> m;
        for (const auto& c : cone_points(s)) m.push_back(c.angle_multiple);
        std::sort(m.begin(), m.end());
        return m;
    };
    if (multiset(a) != multiset(b)) return false;

    Triangulation ta = Triangulation::from_surface(a);
    ta.delaunay_flips();
    Triangulation tb = Triangulation::from_surface(b);
    tb.delaunay_flips();

    std::vector<Cell> ca = delaunay_cells(ta);
    std::vector<Cell> cb = delaunay_cells(tb);
    if (ca.size() != cb.size()) return false;
    if (ca.empty()) return true;

    for (int j = 0; j < static_cast<int>(cb.size()); ++j)
        for (int rot = 0; rot < cb[j].size(); ++rot)
            if (try_match(ca, cb, j, rot)) return true;
    return false;
}

}  // namespace flatsurf

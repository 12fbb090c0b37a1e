#include "hamgraph/density.hpp"

#include <algorithm>
#include <set>

namespace hg {

Q PLDensity::eval(const Q& y) const {
    if (x.empty() || y < x.front() || y > x.back()) return 0;
    for (size_t i = 0; i + 1 < x.size(); ++i)
        if (y <= x[i + 1]) return v[i] + (v[i + 1] - v[i]) * (y - x[i]) / (x[i + 1] - x[i]);
    return v.back();
}

PLDensity PLDensity::simplified() const {
    if (x.size() <= 2) return *this;
    PLDensity r;
    r.x.push_back(x.front());
    r.v.push_back(v.front());
    for (size_t i = 1; i + 1 < x.size(); ++i) {
        Q s0 = (v[i] - r.v.back()) / (x[i] - r.x.back());
        Q s1 = (v[i + 1] - v[i]) / (x[i + 1] - x[i]);
        if (s0 != s1) r.x.push_back(x[i]), r.v.push_back(v[i]);
    }
    r.x.push_back(x.back());
    r.v.push_back(v.back());
    return r;
}

bool PLDensity::operator==(const PLDensity& o) const {
    PLDensity a = simplified(), b = o.simplified();
    return a.x == b.x && a.v == b.v;
}

std::pair<Q, Q> interior_sums(const Graph& g) {
    Shape s = shape_of(g);
    Q s1 = 0, sy = 0;
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        int v = static_cast<int>(i);
        if (s.extremal(v)) continue;
        Q w = Q(1) / Q(up_weight(g, s, v) * down_weight(g, s, v));
        s1 += w;
        sy += g.vertices[i].moment * w;
    }
    return {s1, sy};
}

ExtremalData extremal_self_intersections(const Graph& g) {
    require_valid(g);
    Shape s = shape_of(g);
    const Vertex& lo = g.vertices[s.min];
    const Vertex& hi = g.vertices[s.max];
    if (lo.moment == hi.moment) throw Error("Degenerate", "y_min = y_max");
    auto [s1, sy] = interior_sums(g);
    Q amin = lo.kind == Kind::Surface ? lo.area : Q(0);
    Q amax = hi.kind == Kind::Surface ? hi.area : Q(0);
    // e_min + e_max = -s1 ; y_min e_min + y_max e_max = a_max - a_min - sy
    Q c2 = amax - amin - sy;
    ExtremalData d;
    d.e_max = (c2 + lo.moment * s1) / (hi.moment - lo.moment);
    d.e_min = -s1 - d.e_max;
    auto check = [&](int v, const Q& e, const char* which) {
        if (g.vertices[v].kind != Kind::Point) return;
        auto [a, b] = extremum_weights(g, s, v);
        if (e != Q(-1) / Q(a * b))
            throw Error("InconsistentGraph", std::string("e_") + which + " = " + str(e) + " but the weights give " +
                                                 str(Q(-1) / Q(a * b)));
    };
    check(s.min, d.e_min, "min");
    check(s.max, d.e_max, "max");
    return d;
}

PLDensity density(const Graph& g) {
    ExtremalData ed = extremal_self_intersections(g);
    Shape s = shape_of(g);
    const Vertex& lo = g.vertices[s.min];
    const Vertex& hi = g.vertices[s.max];
    std::set<Q> pts{lo.moment, hi.moment};
    for (const auto& v : g.vertices) pts.insert(v.moment);
    Q amin = lo.kind == Kind::Surface ? lo.area : Q(0);
    auto at = [&](const Q& y) {
        Q r = amin - ed.e_min * (y - lo.moment);
        for (size_t i = 0; i < g.vertices.size(); ++i) {
            int v = static_cast<int>(i);
            if (s.extremal(v) || g.vertices[i].moment >= y) continue;
            r -= (y - g.vertices[i].moment) / Q(up_weight(g, s, v) * down_weight(g, s, v));
        }
        return r;
    };
    PLDensity rho;
    for (const auto& y : pts) {
        rho.x.push_back(y);
        rho.v.push_back(at(y));
    }
    return rho;
}

Q total_mass(const PLDensity& rho) {
    Q m = 0;
    for (size_t i = 0; i + 1 < rho.x.size(); ++i) m += (rho.v[i] + rho.v[i + 1]) * (rho.x[i + 1] - rho.x[i]) / 2;
    return m;
}

bool check_concave_nonneg(const PLDensity& rho, const Graph&) {
    for (const auto& v : rho.v)
        if (v < 0) return false;
    for (size_t i = 1; i + 1 < rho.x.size(); ++i) {
        Q s0 = (rho.v[i] - rho.v[i - 1]) / (rho.x[i] - rho.x[i - 1]);
        Q s1 = (rho.v[i + 1] - rho.v[i]) / (rho.x[i + 1] - rho.x[i]);
        if (s1 > s0) return false;
    }
    return true;
}

PLDensity polygon_pushforward(const Polygon& p) {
    require_delzant(p);
    std::set<Q> ys;
    for (const auto& q : p.v) ys.insert(q.second);
    size_t n = p.v.size();
    PLDensity rho;
    for (const auto& y : ys) {
        bool any = false;
        Q lo, hi;
        for (size_t i = 0; i < n; ++i) {
            const Point& a = p.v[i];
            const Point& b = p.v[(i + 1) % n];
            Q y0 = std::min(a.second, b.second), y1 = std::max(a.second, b.second);
            if (y < y0 || y > y1) continue;
            std::vector<Q> xs;
            if (a.second == b.second) {
                xs = {a.first, b.first};
            } else {
                xs = {a.first + (b.first - a.first) * (y - a.second) / (b.second - a.second)};
            }
            for (const auto& x : xs) {
                if (!any || x < lo) lo = x;
                if (!any || x > hi) hi = x;
                any = true;
            }
        }
        rho.x.push_back(y);
        rho.v.push_back(hi - lo);
    }
    return rho;
}

}  // namespace hg

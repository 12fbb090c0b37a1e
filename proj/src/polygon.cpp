#include "hamgraph/polygon.hpp"

#include "hamgraph/density.hpp"

#include <algorithm>

namespace hg {

namespace {

Q cross(const Point& a, const Point& b) { return a.first * b.second - a.second * b.first; }
Point sub(const Point& a, const Point& b) { return {a.first - b.first, a.second - b.second}; }

// 0 for directions in [0, pi), 1 for [pi, 2pi)
int half(const Point& d) { return (d.second > 0 || (d.second == 0 && d.first > 0)) ? 0 : 1; }
bool angle_less(const Point& a, const Point& b) {
    int ha = half(a), hb = half(b);
    return ha != hb ? ha < hb : cross(a, b) > 0;
}

// Scales a rational vector to a primitive integer one with the same direction.
LatticeVector primitive(const Q& x, const Q& y) {
    Z l;
    mpz_lcm(l.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
    Q xl = x * l, yl = y * l;
    Z a = xl.get_num(), b = yl.get_num(), g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g == 0) throw Error("DegenerateEdge", "zero-length edge");
    return {a / g, b / g};
}

}  // namespace

LatticeVector primitive_outward(const Point& a, const Point& b) {
    Point d = sub(b, a);
    return primitive(d.second, -d.first);
}

std::vector<LatticeVector> outward_normals(const Polygon& p) {
    std::vector<LatticeVector> out;
    for (size_t i = 0; i < p.v.size(); ++i) out.push_back(primitive_outward(p.v[i], p.v[(i + 1) % p.v.size()]));
    return out;
}

Q lattice_length(const Point& a, const Point& b) {
    Point d = sub(b, a);
    auto u = primitive(d.first, d.second);
    return u.first != 0 ? d.first / Q(u.first) : d.second / Q(u.second);
}

PolygonReport validate_delzant(const Polygon& p) {
    PolygonReport r;
    auto fail = [&](std::string m) {
        r.ok = false;
        r.problems.push_back(std::move(m));
    };
    size_t n = p.v.size();
    if (n < 3) {
        fail("fewer than three vertices");
        return r;
    }
    std::vector<Point> d(n);
    for (size_t i = 0; i < n; ++i) {
        d[i] = sub(p.v[(i + 1) % n], p.v[i]);
        if (d[i].first == 0 && d[i].second == 0) fail("repeated vertex " + std::to_string(i));
    }
    if (!r.ok) return r;
    int wraps = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = d[i];
        const Point& b = d[(i + 1) % n];
        if (cross(a, b) <= 0) fail("not a strict left turn at vertex " + std::to_string((i + 1) % n));
        if (!angle_less(a, b)) ++wraps;
    }
    if (r.ok && wraps != 1) fail("boundary winds more than once");
    if (!r.ok) return r;
    auto nv = outward_normals(p);
    for (size_t i = 0; i < n; ++i)
        if (det(nv[i], nv[(i + 1) % n]) != 1)
            fail("normal determinant is not 1 at vertex " + std::to_string((i + 1) % n));
    return r;
}

void require_delzant(const Polygon& p) {
    auto r = validate_delzant(p);
    if (!r.ok) throw Error("InvalidPolygon", r.problems.front());
}

ExtendedGraph polygon_to_extended(const Polygon& p) {
    require_delzant(p);
    size_t n = p.v.size();
    auto nv = outward_normals(p);
    ExtendedGraph ext;
    Graph& g = ext.base;
    std::vector<std::string> id(n);
    for (size_t i = 0; i < n; ++i) {
        const Point& a = p.v[i];
        const Point& b = p.v[(i + 1) % n];
        if (a.second != b.second) continue;
        Vertex s{"s" + std::to_string(i), Kind::Surface, a.second, abs(b.first - a.first), 0};
        g.vertices.push_back(s);
        id[i] = id[(i + 1) % n] = s.id;
    }
    for (size_t i = 0; i < n; ++i) {
        if (!id[i].empty()) continue;
        id[i] = "p" + std::to_string(i);
        g.vertices.push_back({id[i], Kind::Point, p.v[i].second, 0, 0});
    }
    // right side first: start right after the lowest vertex (or bottom edge)
    size_t start = 0;
    for (size_t i = 1; i < n; ++i)
        if (p.v[i].second < p.v[start].second ||
            (p.v[i].second == p.v[start].second && p.v[i].first > p.v[start].first))
            start = i;
    for (size_t t = 0; t < n; ++t) {
        size_t i = (start + t) % n;
        const Point& a = p.v[i];
        const Point& b = p.v[(i + 1) % n];
        if (a.second == b.second) continue;
        long k = to_ll(abs(nv[i].first));
        Edge e{id[i], id[(i + 1) % n], k};
        if (k >= 2)
            g.edges.push_back(e);
        else
            ext.free_edges.push_back(e);
    }
    return ext;
}

Graph polygon_to_graph(const Polygon& p) { return polygon_to_extended(p).base; }

namespace {

Z inverse_mod(const Z& a, const Z& m) {
    Z r;
    if (m == 1) return 0;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw Error("InconsistentGraph", "weights at the minimum are not coprime");
    return r;
}

// Continues a branch of normals with det(u_{i-1}, u_i) = sign, given the first one.
std::vector<Z> continue_normals(const std::vector<long>& k, Z b1) {
    std::vector<Z> b{std::move(b1)};
    for (size_t i = 1; i < k.size(); ++i) {
        Z num = 1 + b[i - 1] * Z(k[i]);
        if (num % Z(k[i - 1]) != 0)
            throw Error("ClosureFailure", "branch normals are not integral");
        b.push_back(num / Z(k[i - 1]));
    }
    return b;
}

}  // namespace

Polygon graph_to_polygon(const Graph& g, const ExtendedGraph& ext) {
    require_valid(g);
    for (const auto& v : g.vertices)
        if (v.kind == Kind::Surface && v.genus != 0) throw Error("NonzeroGenus", "toric conversion needs genus 0");
    auto br = branches(ext);
    if (br.size() != 2) throw Error("BranchCount", "need exactly two branches, got " + std::to_string(br.size()));
    if (canonical_form(ext.base, IsoMode::Exact) != canonical_form(g, IsoMode::Exact))
        throw Error("BadExtension", "extension does not extend this graph");
    Shape s = shape_of(g);
    const Vertex& lo = g.vertices[s.min];
    const Vertex& hi = g.vertices[s.max];
    const Branch& R = br[0];
    const Branch& L = br[1];

    Z b1, c1;  // first normals (k1, b1) on the right and (-k1', c1) on the left
    if (lo.kind == Kind::Surface) {
        ExtremalData ed = extremal_self_intersections(g);
        if (ed.e_min.get_den() != 1) throw Error("InconsistentGraph", "e_min is not an integer");
        b1 = ed.e_min.get_num();
        c1 = 0;
    } else {
        // det(u'_1, u_1) = -k1' b1 - c1 k1 = 1
        Z k1(R.weights[0]), k1p(L.weights[0]);
        b1 = (k1 - inverse_mod(k1p, k1)) % k1;
        Z num = -1 - k1p * b1;
        if (num % k1 != 0) throw Error("Internal", "seed solve failed");
        c1 = num / k1;
    }
    auto b = continue_normals(R.weights, b1);
    auto c = continue_normals(L.weights, c1);

    Q amin = lo.kind == Kind::Surface ? lo.area : Q(0);
    Q amax = hi.kind == Kind::Surface ? hi.area : Q(0);
    auto y = [&](const std::string& id) { return g.at(id).moment; };
    std::vector<Point> right{{amin, lo.moment}}, left{{Q(0), lo.moment}};
    for (size_t i = 1; i < R.ids.size(); ++i) {
        Q dy = y(R.ids[i]) - y(R.ids[i - 1]);
        right.push_back({right.back().first - dy * Q(b[i - 1]) / Q(R.weights[i - 1]), y(R.ids[i])});
    }
    for (size_t i = 1; i < L.ids.size(); ++i) {
        Q dy = y(L.ids[i]) - y(L.ids[i - 1]);
        left.push_back({left.back().first + dy * Q(c[i - 1]) / Q(L.weights[i - 1]), y(L.ids[i])});
    }
    if (right.back().first - left.back().first != amax)
        throw Error("ClosureFailure", "top gap is " + str(right.back().first - left.back().first) + ", expected " +
                                          str(amax));
    if (hi.kind == Kind::Point) {
        LatticeVector ul{Z(R.weights.back()), b.back()}, us{Z(-L.weights.back()), c.back()};
        if (det(ul, us) != 1) throw Error("ClosureFailure", "Delzant condition fails at the top");
    }

    Polygon P;
    if (lo.kind == Kind::Surface) P.v.push_back(left.front());
    for (size_t i = 0; i + 1 < right.size(); ++i) P.v.push_back(right[i]);
    P.v.push_back(right.back());
    if (hi.kind == Kind::Surface) P.v.push_back(left.back());
    for (size_t i = left.size() - 1; i-- > 1;) P.v.push_back(left[i]);
    require_delzant(P);
    if (!is_isomorphic(polygon_to_graph(P), g, IsoMode::Exact))
        throw Error("ClosureFailure", "constructed polygon has a different graph");
    return P;
}

Polygon apply_affine(const Polygon& p, int sign, const Z& shear, const Q& a) {
    Polygon r;
    for (const auto& q : p.v) r.v.push_back({a + sign * q.first + Q(shear) * q.second, q.second});
    if (sign < 0) std::reverse(r.v.begin(), r.v.end());
    return r;
}

static Polygon normal_form_oriented(const Polygon& p) {
    size_t n = p.v.size(), start = 0;
    for (size_t i = 1; i < n; ++i)
        if (p.v[i].second < p.v[start].second ||
            (p.v[i].second == p.v[start].second && p.v[i].first < p.v[start].first))
            start = i;
    Polygon r;
    for (size_t t = 0; t < n; ++t) r.v.push_back(p.v[(start + t) % n]);
    size_t e = r.v[0].second == r.v[1].second ? 1 : 0;
    auto u = primitive_outward(r.v[e], r.v[e + 1]);
    Z m = floor_div(u.second, u.first);  // (k, b) -> (k, b - m k)
    r = apply_affine(r, 1, m, 0);
    Q x0 = r.v[0].first;
    for (auto& q : r.v) q.first -= x0;
    return r;
}

Polygon affine_normal_form(const Polygon& p) {
    require_delzant(p);
    Polygon a = normal_form_oriented(p);
    Polygon b = normal_form_oriented(apply_affine(p, -1, 0, 0));
    return std::lexicographical_compare(b.v.begin(), b.v.end(), a.v.begin(), a.v.end()) ? b : a;
}

bool polygon_affine_equivalent(const Polygon& a, const Polygon& b) {
    return affine_normal_form(a) == affine_normal_form(b);
}

Polygon polygon_chop(const Polygon& p, size_t vertex, const Q& t) {
    require_delzant(p);
    size_t n = p.v.size();
    if (vertex >= n) throw Error("BadVertex", "vertex index out of range");
    if (t <= 0) throw Error("ChopTooLarge", "chop size must be positive");
    const Point& v = p.v[vertex];
    const Point& prev = p.v[(vertex + n - 1) % n];
    const Point& next = p.v[(vertex + 1) % n];
    if (t >= lattice_length(prev, v) || t >= lattice_length(v, next))
        throw Error("ChopTooLarge", "chop does not fit inside the adjacent edges");
    auto towards = [&](const Point& w) {
        Point d = sub(w, v);
        auto u = primitive(d.first, d.second);
        return Point{v.first + t * Q(u.first), v.second + t * Q(u.second)};
    };
    Polygon r;
    for (size_t i = 0; i < n; ++i) {
        if (i != vertex) {
            r.v.push_back(p.v[i]);
            continue;
        }
        r.v.push_back(towards(prev));
        r.v.push_back(towards(next));
    }
    require_delzant(r);
    return r;
}

Fan polygon_to_fan(const Polygon& p) {
    require_delzant(p);
    Fan f;
    for (const auto& u : outward_normals(p)) f.emplace_back(-u.first, -u.second);
    return f;
}

static Fan ccw(const Fan& f) {
    if (f.size() >= 2 && det(f[0], f[1]) < 0) return Fan(f.rbegin(), f.rend());
    return f;
}

bool fan_is_smooth_complete(const Fan& f0) {
    Fan f = ccw(f0);
    size_t n = f.size();
    if (n < 3) return false;
    int wraps = 0;
    for (size_t i = 0; i < n; ++i) {
        const auto& a = f[i];
        const auto& b = f[(i + 1) % n];
        if (det(a, b) != 1) return false;
        Point pa{Q(a.first), Q(a.second)}, pb{Q(b.first), Q(b.second)};
        if (!angle_less(pa, pb)) ++wraps;
    }
    return wraps == 1;
}

std::vector<size_t> fan_blowdown_sites(const Fan& f) {
    std::vector<size_t> out;
    size_t n = f.size();
    if (n <= 3) return out;
    for (size_t i = 0; i < n; ++i) {
        const auto& a = f[(i + n - 1) % n];
        const auto& c = f[(i + 1) % n];
        if (a.first + c.first == f[i].first && a.second + c.second == f[i].second) out.push_back(i);
    }
    return out;
}

Fan fan_blowdown(const Fan& f, size_t i) {
    auto sites = fan_blowdown_sites(f);
    if (std::find(sites.begin(), sites.end(), i) == sites.end())
        throw Error("NotASite", "ray " + std::to_string(i) + " is not the sum of its neighbours");
    Fan r;
    for (size_t j = 0; j < f.size(); ++j)
        if (j != i) r.push_back(f[j]);
    if (!fan_is_smooth_complete(r)) throw Error("Internal", "blow-down broke the fan");
    return r;
}

FanType minimal_fan_type(const Fan& f0) {
    if (!fan_is_smooth_complete(f0)) throw Error("InvalidFan", "fan is not smooth and complete");
    Fan f = ccw(f0);
    FanType t;
    if (f.size() == 3) {
        t.kind = FanType::CP2;
    } else if (f.size() == 4) {
        t.kind = FanType::Hirzebruch;
        for (size_t i = 0; i < 4; ++i) {
            const auto& a = f[(i + 3) % 4];
            const auto& c = f[(i + 1) % 4];
            // a + c = m u_i; read m off a nonzero coordinate
            Z sx = a.first + c.first, sy = a.second + c.second;
            Z m = f[i].first != 0 ? sx / f[i].first : sy / f[i].second;
            t.n = std::max(t.n, to_ll(abs(m)));
        }
    }
    return t;
}

}  // namespace hg

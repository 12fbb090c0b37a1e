#include "hamgraph/classify.hpp"

#include "hamgraph/density.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hg {

namespace {

void add_edge(Graph& g, const std::string& a, const std::string& b, long k) {
    if (k >= 2) g.edges.push_back({a, b, k});
}

Vertex point(const std::string& id, const Q& y) { return {id, Kind::Point, y, 0, 0}; }
Vertex surface(const std::string& id, const Q& y, const Q& area, int genus) {
    return {id, Kind::Surface, y, area, genus};
}

void need(bool ok, const std::string& what) {
    if (!ok) throw Error("BadParameters", what);
}

}  // namespace

Graph minimal_graph(const MinimalFamily& f) {
    Graph g;
    const Q& a = f.alpha;
    switch (f.type) {
        case MinimalFamily::CP2: {
            need(f.m >= 1 && f.n >= 1 && gcd_ll(f.m, f.n) == 1, "CP2 needs coprime positive m, n");
            need(f.beta > 0, "CP2 needs beta > 0");
            g.vertices = {point("min", a - Q(f.n) * f.beta), point("v", a), point("max", a + Q(f.m) * f.beta)};
            add_edge(g, "min", "v", f.n);
            add_edge(g, "v", "max", f.m);
            add_edge(g, "min", "max", f.m + f.n);
            break;
        }
        case MinimalFamily::CP2Surface: {
            need(f.lambda > 0, "CP2 surface family needs lambda > 0");
            g.vertices = {surface("min", a, f.lambda, 0), point("max", a + f.lambda)};
            break;
        }
        case MinimalFamily::Hirzebruch: {
            need(f.r > 0 && f.s > 0, "Hirzebruch needs r, s > 0");
            Q c(f.c), d(f.d), n(f.n);
            if (f.variant == MinimalFamily::Right) {
                need(f.n >= 1, "right Hirzebruch graph needs n >= 1");
                g.vertices = {surface("min", a, f.s, 0), point("v", a + f.r), point("max", a + f.r + n * f.s)};
                add_edge(g, "v", "max", f.n);
                break;
            }
            need(f.c >= 1 && f.d >= 1 && gcd_ll(f.c, f.d) == 1, "Hirzebruch needs coprime positive c, d");
            if (f.variant == MinimalFamily::Left) {
                need(f.n >= 0, "left Hirzebruch graph needs n >= 0");
                g.vertices = {point("min", a), point("v1", a + f.r * c), point("v2", a + f.s * d),
                              point("max", a + f.r * c + f.s * d + n * f.s * c)};
                add_edge(g, "min", "v1", f.c);
                add_edge(g, "v1", "max", f.n * f.c + f.d);
                add_edge(g, "min", "v2", f.d);
                add_edge(g, "v2", "max", f.c);
            } else {
                need(f.d < f.n * f.c, "middle Hirzebruch graph needs d < nc");
                need(f.r > n * f.s, "middle Hirzebruch graph needs r > ns");
                g.vertices = {point("min", a), point("v1", a + f.s * d),
                              point("v2", a + f.s * d + f.r * c - n * f.s * c), point("max", a + f.r * c)};
                add_edge(g, "min", "max", f.c);
                add_edge(g, "min", "v1", f.d);
                add_edge(g, "v1", "v2", f.c);
                add_edge(g, "v2", "max", f.n * f.c - f.d);
            }
            break;
        }
        case MinimalFamily::Ruled: {
            need(f.genus >= 0, "genus must be non-negative");
            need(f.r > 0 && f.s > 0, "ruled family needs r, s > 0");
            Q amin = f.r + Q(std::max(0L, -f.n)) * f.s, amax = f.r + Q(std::max(0L, f.n)) * f.s;
            g.vertices = {surface("min", a, amin, static_cast<int>(f.genus)),
                          surface("max", a + f.s, amax, static_cast<int>(f.genus))};
            break;
        }
    }
    require_valid(g);
    return f.flipped ? flip(g) : g;
}

MinimalFamily parse_family(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error("BadSeed", "seed must look like family:params");
    std::string fam = text.substr(0, colon);
    std::vector<std::string> p;
    std::stringstream ss(text.substr(colon + 1));
    for (std::string item; std::getline(ss, item, ',');) p.push_back(item);
    MinimalFamily f;
    if (!p.empty() && p.back() == "flip") {
        f.flipped = true;
        p.pop_back();
    }
    auto integer = [&](size_t i) {
        Q q = parse_rational(p.at(i));
        if (q.get_den() != 1) throw Error("BadSeed", "expected an integer, got " + p[i]);
        return to_ll(q.get_num());
    };
    auto count = [&](size_t lo, size_t hi) {
        if (p.size() < lo || p.size() > hi) throw Error("BadSeed", "wrong number of parameters for " + fam);
    };
    try {
        if (fam == "cp2") {
            count(2, 4);
            f.type = MinimalFamily::CP2;
            f.m = integer(0), f.n = integer(1);
            if (p.size() > 2) f.alpha = parse_rational(p[2]);
            if (p.size() > 3) f.beta = parse_rational(p[3]);
        } else if (fam == "cp2s") {
            count(1, 2);
            f.type = MinimalFamily::CP2Surface;
            f.lambda = parse_rational(p[0]);
            if (p.size() > 1) f.alpha = parse_rational(p[1]);
        } else if (fam == "hirz") {
            count(6, 7);
            f.type = MinimalFamily::Hirzebruch;
            if (p[0] == "left") f.variant = MinimalFamily::Left;
            else if (p[0] == "middle") f.variant = MinimalFamily::Middle;
            else if (p[0] == "right") f.variant = MinimalFamily::Right;
            else throw Error("BadSeed", "Hirzebruch variant must be left, middle or right");
            f.n = integer(1), f.c = integer(2), f.d = integer(3);
            f.r = parse_rational(p[4]), f.s = parse_rational(p[5]);
            if (p.size() > 6) f.alpha = parse_rational(p[6]);
        } else if (fam == "ruled") {
            count(4, 5);
            f.type = MinimalFamily::Ruled;
            f.genus = integer(0), f.n = integer(1);
            f.r = parse_rational(p[2]), f.s = parse_rational(p[3]);
            if (p.size() > 4) f.alpha = parse_rational(p[4]);
        } else {
            throw Error("BadSeed", "unknown family '" + fam + "'");
        }
    } catch (const std::out_of_range&) {
        throw Error("BadSeed", "missing parameters for " + fam);
    }
    return f;
}

std::string family_name(const MinimalFamily& f) {
    std::string s;
    switch (f.type) {
        case MinimalFamily::CP2:
            s = "cp2:" + std::to_string(f.m) + "," + std::to_string(f.n) + "," + str(f.alpha) + "," + str(f.beta);
            break;
        case MinimalFamily::CP2Surface: s = "cp2s:" + str(f.lambda) + "," + str(f.alpha); break;
        case MinimalFamily::Hirzebruch: {
            const char* v[] = {"left", "middle", "right"};
            s = std::string("hirz:") + v[f.variant] + "," + std::to_string(f.n) + "," + std::to_string(f.c) + "," +
                std::to_string(f.d) + "," + str(f.r) + "," + str(f.s) + "," + str(f.alpha);
            break;
        }
        case MinimalFamily::Ruled:
            s = "ruled:" + std::to_string(f.genus) + "," + std::to_string(f.n) + "," + str(f.r) + "," + str(f.s) +
                "," + str(f.alpha);
            break;
    }
    return f.flipped ? s + ",flip" : s;
}

bool is_toric_extendable(const Graph& g) {
    require_valid(g);
    for (const auto& v : g.vertices)
        if (v.kind == Kind::Surface && v.genus != 0) return false;
    try {
        extend_graph(g);
        return true;
    } catch (const Error& e) {
        if (e.code == "NoExtension") return false;
        throw;
    }
}

bool is_minimal(const Graph& g) {
    require_valid(g);
    if (is_ruled_shape(g)) return true;
    size_t chi = 0;
    for (const auto& v : g.vertices) {
        if (v.kind == Kind::Surface && v.genus != 0) return false;
        chi += v.kind == Kind::Surface ? 2 : 1;
    }
    return chi <= 4 && is_toric_extendable(g);
}

ExtendedGraph extend_isolated(const Graph& g) {
    require_valid(g);
    Shape s = shape_of(g);
    ExtendedGraph ext{g, {}};
    const std::string& lo = g.vertices[s.min].id;
    const std::string& hi = g.vertices[s.max].id;
    int chains = 0;
    for (int ei : s.up[s.min])
        if (g.find(g.edges[ei].a) == s.max || g.find(g.edges[ei].b) == s.max) ++chains;
    for (const auto& p : interior_paths(g, s)) {
        ++chains;
        if (s.down[p.front()].empty()) ext.free_edges.push_back({lo, g.vertices[p.front()].id, 1});
        if (s.up[p.back()].empty()) ext.free_edges.push_back({g.vertices[p.back()].id, hi, 1});
    }
    if (chains > 2) throw Error("BranchCount", "graph has " + std::to_string(chains) + " chains");
    for (; chains < 2; ++chains) ext.free_edges.push_back({lo, hi, 1});
    auto bad = validate_extended(ext);
    if (!bad.empty()) throw Error("NoExtension", bad[0].message);
    return ext;
}

Polygon classify_isolated(const Graph& g) {
    require_valid(g);
    for (const auto& v : g.vertices)
        if (v.kind == Kind::Surface) throw Error("SurfacePresent", "fixed surface '" + v.id + "' present");
    Polygon p = graph_to_polygon(g, extend_isolated(g));
    Q top = p.v[0].second, bottom = p.v[0].second;
    for (const auto& q : p.v) top = std::max(top, q.second), bottom = std::min(bottom, q.second);
    size_t n = p.v.size();
    auto normals = outward_normals(p);
    for (size_t i = 0; i < n; ++i) {
        const Point& a = p.v[i];
        const Point& b = p.v[(i + 1) % n];
        if (a.second == b.second) throw Error("ConditionI", "polygon has a horizontal edge");
        bool extreme = a.second == top || a.second == bottom || b.second == top || b.second == bottom;
        if (abs(normals[i].first) == 1 && !extreme)
            throw Error("ConditionII", "edge of slope 1/b misses the top and bottom vertices");
    }
    return affine_normal_form(p);
}

std::vector<EnumEntry> enumerate(const EnumConfig& cfg) {
    std::vector<Q> grid = cfg.grid.empty() ? std::vector<Q>{Q(1, 2)} : cfg.grid;
    for (const auto& t : grid)
        if (t <= 0 || t >= 1) throw Error("BadGrid", "grid fractions must lie strictly between 0 and 1");
    std::vector<EnumEntry> out;
    std::unordered_map<std::string, size_t> index;
    auto note = [&](const Graph& g, int seed, int depth) -> bool {
        std::string c = canonical_form(g, IsoMode::Exact);
        auto it = index.find(c);
        if (it != index.end()) {
            auto& prov = out[it->second].provenance;
            if (std::find(prov.begin(), prov.end(), std::make_pair(seed, depth)) == prov.end())
                prov.push_back({seed, depth});
            return false;
        }
        index.emplace(c, out.size());
        out.push_back({g, c, depth, {{seed, depth}}});
        return true;
    };
    // frontier holds (entry index, seed) pairs so every provenance chain gets expanded
    std::vector<std::pair<size_t, int>> frontier;
    std::set<std::pair<size_t, int>> queued;
    for (size_t i = 0; i < cfg.seeds.size(); ++i) {
        require_valid(cfg.seeds[i]);
        note(cfg.seeds[i], static_cast<int>(i), 0);
        auto key = std::make_pair(index[canonical_form(cfg.seeds[i], IsoMode::Exact)], static_cast<int>(i));
        if (queued.insert(key).second) frontier.push_back(key);
    }
    for (int depth = 1; depth <= cfg.max_blowups; ++depth) {
        std::vector<std::pair<size_t, int>> next;
        std::set<std::pair<size_t, int>> next_queued;
        for (auto [idx, seed] : frontier) {
            Graph g = out[idx].graph;
            for (const auto& site : blowup_sites(g)) {
                MaxSize ms = max_size(g, site);
                for (const auto& t : grid) {
                    Q lambda = ms.infinite ? t : t * ms.sup;
                    Graph h = blowup(g, site, lambda);
                    note(h, seed, depth);
                    auto key = std::make_pair(index[canonical_form(h, IsoMode::Exact)], seed);
                    if (next_queued.insert(key).second) next.push_back(key);
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

Graph assign_labels(const Graph& skeleton, const std::map<std::string, Q>& moments, const Q& a_min, const Q& a_max,
                    const Q& e_min, const Q& e_max) {
    Graph g = skeleton;
    for (auto& v : g.vertices) {
        auto it = moments.find(v.id);
        if (it == moments.end()) throw Error("MissingMoment", "no moment label for '" + v.id + "'");
        v.moment = it->second;
    }
    int lo = -1, hi = -1;
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i].kind != Kind::Surface) continue;
        if (lo < 0 || g.vertices[i].moment < g.vertices[lo].moment) lo = static_cast<int>(i);
        if (hi < 0 || g.vertices[i].moment > g.vertices[hi].moment) hi = static_cast<int>(i);
    }
    if (lo < 0 || lo == hi) throw Error("NotTwoSurfaces", "skeleton needs two fixed surfaces");
    if (a_min <= 0 || a_max <= 0) throw Error("NonPositiveArea", "area labels must be positive");
    g.vertices[lo].area = a_min;
    g.vertices[hi].area = a_max;
    auto bad = validate_graph(g);
    if (!bad.empty()) throw Error("InvalidLabels", bad[0].rule + ": " + bad[0].message);
    Shape s = shape_of(g);
    if (s.min != lo || s.max != hi) throw Error("InvalidLabels", "surfaces must be the extrema");
    auto [inv, weighted] = interior_sums(g);
    if (e_min + e_max != -inv)
        throw Error("EulerMismatch", "e_min + e_max must equal " + str(-inv) + ", got " + str(e_min + e_max));
    Q b = -(e_min * g.vertices[lo].moment + weighted + e_max * g.vertices[hi].moment);
    if (a_min - a_max != b)
        throw Error("BConstraint", "a_min - a_max must equal " + str(b) + ", got " + str(a_min - a_max));
    return g;
}

}  // namespace hg

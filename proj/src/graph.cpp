#include "hamgraph/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>

namespace hg {

int Graph::find(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

const Vertex& Graph::at(const std::string& id) const {
    int i = find(id);
    if (i < 0) throw Error("UnknownVertex", "unknown vertex id '" + id + "'");
    return vertices[i];
}

static int other_end(const Graph& g, const Edge& e, int v) {
    int a = g.find(e.a);
    return a == v ? g.find(e.b) : a;
}

Shape shape_of(const Graph& g) {
    Shape s;
    size_t n = g.vertices.size();
    s.up.assign(n, {});
    s.down.assign(n, {});
    if (n == 0) return s;
    int lo = 0, hi = 0;
    for (size_t i = 1; i < n; ++i) {
        if (g.vertices[i].moment < g.vertices[lo].moment) lo = static_cast<int>(i);
        if (g.vertices[i].moment > g.vertices[hi].moment) hi = static_cast<int>(i);
    }
    int nlo = 0, nhi = 0;
    for (const auto& v : g.vertices) {
        nlo += v.moment == g.vertices[lo].moment;
        nhi += v.moment == g.vertices[hi].moment;
    }
    if (n >= 2 && nlo == 1) s.min = lo;
    if (n >= 2 && nhi == 1) s.max = hi;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        int a = g.find(g.edges[i].a), b = g.find(g.edges[i].b);
        if (a < 0 || b < 0 || a == b) continue;
        if (g.vertices[a].moment > g.vertices[b].moment) std::swap(a, b);
        if (g.vertices[a].moment == g.vertices[b].moment) continue;
        s.up[a].push_back(static_cast<int>(i));
        s.down[b].push_back(static_cast<int>(i));
    }
    return s;
}

long up_weight(const Graph& g, const Shape& s, int v) {
    return s.up[v].empty() ? 1 : g.edges[s.up[v][0]].k;
}

long down_weight(const Graph& g, const Shape& s, int v) {
    return s.down[v].empty() ? 1 : g.edges[s.down[v][0]].k;
}

std::pair<long, long> extremum_weights(const Graph& g, const Shape& s, int v) {
    const auto& inc = v == s.min ? s.up[v] : s.down[v];
    long w[2] = {1, 1};
    for (size_t i = 0; i < inc.size() && i < 2; ++i) w[i] = g.edges[inc[i]].k;
    return {w[0], w[1]};
}

std::vector<Violation> validate_graph(const Graph& g) {
    std::vector<Violation> out;
    auto add = [&](std::string rule, std::vector<std::string> ids, std::string msg) {
        out.push_back({std::move(rule), std::move(ids), std::move(msg)});
    };
    std::set<std::string> seen;
    for (const auto& v : g.vertices) {
        if (!seen.insert(v.id).second) add("Structure", {v.id}, "duplicate vertex id");
        if (v.kind == Kind::Surface) {
            if (v.area <= 0) add("Vertex", {v.id}, "surface area must be positive");
            if (v.genus < 0) add("Vertex", {v.id}, "genus must be non-negative");
        } else if (v.area != 0 || v.genus != 0) {
            add("Vertex", {v.id}, "area/genus only allowed on surfaces");
        }
    }
    bool edges_ok = true;
    for (const auto& e : g.edges) {
        int a = g.find(e.a), b = g.find(e.b);
        if (a < 0 || b < 0) {
            add("Structure", {e.a, e.b}, "edge refers to an unknown vertex");
            edges_ok = false;
            continue;
        }
        if (a == b) add("Edge", {e.a}, "edge endpoints must differ"), edges_ok = false;
        if (e.k < 2) add("Edge", {e.a, e.b}, "edge weight must be at least 2");
        if (a != b && g.vertices[a].moment == g.vertices[b].moment)
            add("Edge", {e.a, e.b}, "edge endpoints have equal moment labels"), edges_ok = false;
    }

    int genus = -1;
    for (const auto& v : g.vertices) {
        if (v.kind != Kind::Surface) continue;
        if (genus >= 0 && v.genus != genus) add("G7", {v.id}, "fixed surfaces have different genus");
        genus = v.genus;
    }

    Shape s = shape_of(g);
    if (s.min < 0 || s.max < 0) {
        add("G1", {}, "need a unique minimum and a unique maximum");
        return out;
    }
    if (!edges_ok) return out;

    for (size_t i = 0; i < g.vertices.size(); ++i) {
        const Vertex& v = g.vertices[i];
        int vi = static_cast<int>(i);
        size_t deg = s.up[i].size() + s.down[i].size();
        if (s.extremal(vi)) {
            if (v.kind == Kind::Surface) {
                if (deg) add("G4", {v.id}, "extremal surface is reached by an edge");
            } else if (deg > 2) {
                add("G3", {v.id}, "isolated extremum has more than two edges");
            } else {
                auto [a, b] = extremum_weights(g, s, vi);
                if (gcd_ll(a, b) != 1) add("G6", {v.id}, "isotropy weights not coprime");
            }
            continue;
        }
        if (v.kind != Kind::Point) add("G5", {v.id}, "interior vertex must be an isolated point");
        if (s.up[i].size() > 1 || s.down[i].size() > 1) {
            add("G2", {v.id}, "interior vertex has two edges in the same direction");
            continue;
        }
        if (gcd_ll(up_weight(g, s, vi), down_weight(g, s, vi)) != 1)
            add("G6", {v.id}, "isotropy weights not coprime");
    }
    return out;
}

void require_valid(const Graph& g) {
    auto v = validate_graph(g);
    if (!v.empty()) {
        std::string ids;
        for (const auto& id : v[0].ids) ids += (ids.empty() ? "" : ",") + id;
        throw Error("InvalidGraph", v[0].rule + ": " + v[0].message + (ids.empty() ? "" : " [" + ids + "]"));
    }
}

WeightPair isotropy_weights(const Graph& g, const std::string& id) {
    int v = g.find(id);
    if (v < 0) throw Error("UnknownVertex", "unknown vertex id '" + id + "'");
    Shape s = shape_of(g);
    if (s.min < 0 || s.max < 0) throw Error("InvalidGraph", "G1: no unique extremum");
    long a, b;
    if (v == s.min || v == s.max) {
        int sign = v == s.min ? 1 : -1;
        if (g.vertices[v].kind == Kind::Surface) {
            a = 0, b = sign;
        } else {
            auto w = extremum_weights(g, s, v);
            a = sign * w.first, b = sign * w.second;
        }
    } else {
        a = up_weight(g, s, v), b = -down_weight(g, s, v);
    }
    if (a > b) std::swap(a, b);
    return {a, b};
}

std::vector<std::vector<int>> interior_paths(const Graph& g, const Shape& s) {
    std::vector<std::vector<int>> paths;
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        int v = static_cast<int>(i);
        if (s.extremal(v)) continue;
        if (!s.down[v].empty()) {
            int below = other_end(g, g.edges[s.down[v][0]], v);
            if (!s.extremal(below)) continue;  // not the bottom of its path
        }
        std::vector<int> path{v};
        while (!s.up[path.back()].empty()) {
            int next = other_end(g, g.edges[s.up[path.back()][0]], path.back());
            if (s.extremal(next)) break;
            path.push_back(next);
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

Order compare(const Graph& g, const std::string& vid, const std::string& wid) {
    int v = g.find(vid), w = g.find(wid);
    if (v < 0) throw Error("UnknownVertex", "unknown vertex id '" + vid + "'");
    if (w < 0) throw Error("UnknownVertex", "unknown vertex id '" + wid + "'");
    if (v == w) return Order::EqualId;
    const Q& a = g.vertices[v].moment;
    const Q& b = g.vertices[w].moment;
    if (a == b) return Order::Incomparable;
    Shape s = shape_of(g);
    bool related = s.extremal(v) || s.extremal(w);
    if (!related) {
        for (const auto& p : interior_paths(g, s)) {
            bool hv = std::find(p.begin(), p.end(), v) != p.end();
            bool hw = std::find(p.begin(), p.end(), w) != p.end();
            if (hv || hw) {
                related = hv && hw;
                break;
            }
        }
    }
    if (!related) return Order::Incomparable;
    return a < b ? Order::Less : Order::Greater;
}

static std::string vertex_label(const Vertex& v, const Q& offset) {
    std::string s = (v.kind == Kind::Surface ? "S(" : "P(") + str(v.moment - offset);
    if (v.kind == Kind::Surface) s += "," + str(v.area) + ",g" + std::to_string(v.genus);
    return s + ")";
}

static uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string canonical_form(const Graph& g, IsoMode mode) {
    require_valid(g);
    Shape s = shape_of(g);
    Q off = mode == IsoMode::UpToShift ? g.vertices[s.min].moment : Q(0);
    std::vector<std::string> desc;
    for (const auto& p : interior_paths(g, s)) {
        std::string d = "b" + std::to_string(s.down[p.front()].empty() ? 0 : g.edges[s.down[p.front()][0]].k) + "[";
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) d += "-" + std::to_string(g.edges[s.up[p[i - 1]][0]].k) + "-";
            d += str(g.vertices[p[i]].moment - off);
        }
        d += "]t" + std::to_string(s.up[p.back()].empty() ? 0 : g.edges[s.up[p.back()][0]].k);
        desc.push_back(d);
    }
    for (int ei : s.up[s.min]) {
        if (other_end(g, g.edges[ei], s.min) == s.max) desc.push_back("d" + std::to_string(g.edges[ei].k));
    }
    std::sort(desc.begin(), desc.end());
    std::string listing = "min " + vertex_label(g.vertices[s.min], off) + "\nmax " + vertex_label(g.vertices[s.max], off);
    for (const auto& d : desc) listing += "\n" + d;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(listing)));
    return std::string(hex) + "\n" + listing;
}

bool is_isomorphic(const Graph& a, const Graph& b, IsoMode mode) {
    return canonical_form(a, mode) == canonical_form(b, mode);
}

Graph flip(const Graph& g) {
    Graph r = g;
    for (auto& v : r.vertices) v.moment = -v.moment;
    return r;
}

Graph shift(const Graph& g, const Q& c) {
    Graph r = g;
    for (auto& v : r.vertices) v.moment += c;
    return r;
}

std::string fresh_id(const Graph& g, const std::string& base) {
    if (g.find(base) < 0) return base;
    for (int i = 2;; ++i) {
        std::string c = base + "_" + std::to_string(i);
        if (g.find(c) < 0) return c;
    }
}

ExtendedGraph extend_graph(const Graph& g) {
    require_valid(g);
    for (const auto& v : g.vertices)
        if (v.kind == Kind::Surface && v.genus != 0)
            throw Error("NonzeroGenus", "extension needs genus-0 surfaces");
    Shape s = shape_of(g);
    size_t n = g.vertices.size();
    std::vector<int> ups(n), downs(n);
    for (size_t i = 0; i < n; ++i) ups[i] = s.up[i].size(), downs[i] = s.down[i].size();

    ExtendedGraph ext{g, {}};
    auto capacity_ok = [&](int v) {
        if (g.vertices[v].kind == Kind::Surface) return true;
        return ups[v] + downs[v] < 2;
    };
    std::vector<int> order;
    for (size_t i = 0; i < n; ++i)
        if (!s.extremal(static_cast<int>(i))) order.push_back(static_cast<int>(i));
    auto key_less = [&](int a, int b) {
        if (g.vertices[a].moment != g.vertices[b].moment) return g.vertices[a].moment < g.vertices[b].moment;
        return g.vertices[a].id < g.vertices[b].id;
    };
    std::sort(order.begin(), order.end(), key_less);

    for (int v : order) {
        if (ups[v]) continue;
        int best = -1;
        for (size_t j = 0; j < n; ++j) {
            int w = static_cast<int>(j);
            if (g.vertices[w].moment <= g.vertices[v].moment) continue;
            bool ok = w == s.max ? capacity_ok(w) : (!s.extremal(w) && downs[w] == 0);
            if (ok && (best < 0 || key_less(w, best))) best = w;
        }
        if (best < 0)
            throw Error("NoExtension", "no free edge can leave '" + g.vertices[v].id + "' upward");
        ext.free_edges.push_back({g.vertices[v].id, g.vertices[best].id, 1});
        ups[v]++, downs[best]++;
    }
    for (int v : order) {
        if (downs[v]) continue;
        if (!capacity_ok(s.min))
            throw Error("NoExtension", "minimum cannot absorb a free edge from '" + g.vertices[v].id + "'");
        ext.free_edges.push_back({g.vertices[v].id, g.vertices[s.min].id, 1});
        downs[v]++, ups[s.min]++;
    }
    if (ups[s.min] > 2)
        throw Error("NoExtension", "more than two branches leave the minimum");
    while (ups[s.min] < 2) {
        ext.free_edges.push_back({g.vertices[s.min].id, g.vertices[s.max].id, 1});
        ups[s.min]++, downs[s.max]++;
    }
    return ext;
}

std::vector<Violation> validate_extended(const ExtendedGraph& e) {
    std::vector<Violation> out = validate_graph(e.base);
    if (!out.empty()) return out;
    Graph all = e.base;
    for (const auto& f : e.free_edges) {
        if (f.k != 1) out.push_back({"Extended", {f.a, f.b}, "free edge must have weight 1"});
        all.edges.push_back(f);
    }
    Shape s = shape_of(all);
    for (size_t i = 0; i < all.vertices.size(); ++i) {
        int v = static_cast<int>(i);
        const auto& id = all.vertices[i].id;
        size_t deg = s.up[i].size() + s.down[i].size();
        if (s.extremal(v)) {
            if (all.vertices[i].kind == Kind::Point && deg > 2)
                out.push_back({"Extended", {id}, "isolated extremum on more than two edges"});
        } else if (s.up[i].size() != 1 || s.down[i].size() != 1) {
            out.push_back({"Extended", {id}, "interior vertex not on exactly two edges"});
        }
    }
    for (const auto& f : e.free_edges) {
        int a = all.find(f.a), b = all.find(f.b);
        if (a < 0 || b < 0 || all.vertices[a].moment == all.vertices[b].moment)
            out.push_back({"Extended", {f.a, f.b}, "free edge not monotone"});
    }
    return out;
}

std::vector<Branch> branches(const ExtendedGraph& e) {
    auto bad = validate_extended(e);
    if (!bad.empty()) throw Error("InvalidExtension", bad[0].message);
    Graph all = e.base;
    for (const auto& f : e.free_edges) all.edges.push_back(f);
    Shape s = shape_of(all);
    std::vector<Branch> out;
    for (int ei : s.up[s.min]) {
        Branch b;
        b.ids.push_back(all.vertices[s.min].id);
        int cur = s.min, edge = ei;
        while (true) {
            int next = other_end(all, all.edges[edge], cur);
            b.weights.push_back(all.edges[edge].k);
            b.ids.push_back(all.vertices[next].id);
            cur = next;
            if (cur == s.max) break;
            edge = s.up[cur][0];
        }
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace hg

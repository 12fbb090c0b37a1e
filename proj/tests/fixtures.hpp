#pragma once
#include "hamgraph/blowup.hpp"
#include "hamgraph/chain.hpp"
#include "hamgraph/classify.hpp"
#include "hamgraph/density.hpp"
#include "hamgraph/graph.hpp"
#include "hamgraph/homology.hpp"
#include "hamgraph/io.hpp"
#include "hamgraph/polygon.hpp"
#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace fx {
using namespace hg;

inline Q q(const std::string& s) { return parse_rational(s); }

inline Polygon P(std::vector<std::pair<long, long>> pts) {
    Polygon p;
    for (auto [x, y] : pts) p.v.push_back({Q(x), Q(y)});
    if (!validate_delzant(p).ok) std::reverse(p.v.begin(), p.v.end());
    return p;
}

inline Vertex pt(const std::string& id, const Q& y) { return Vertex{id, Kind::Point, y, 0, 0}; }
inline Vertex surf(const std::string& id, const Q& y, const Q& area, int genus = 0) {
    return Vertex{id, Kind::Surface, y, area, genus};
}

// min y=0 weights {1,1}, interior points at 1 and 3, max at 4; no edges
inline Graph tent() { return Graph{{pt("min", 0), pt("v1", 1), pt("v3", 3), pt("max", 4)}, {}}; }

inline Graph s2s2() {
    return Graph{{pt("a", -3), pt("b", -1), pt("c", 1), pt("d", 3)}, {{"a", "c", 2}, {"b", "d", 2}}};
}

inline Graph ruled(const Q& amin, const Q& amax, const Q& y0, const Q& y1, int genus = 0) {
    return Graph{{surf("min", y0, amin, genus), surf("max", y1, amax, genus)}, {}};
}

// surfaces of areas 6 and 4, edgeless point at 3, heights 0..5
inline Polygon chopped_square() { return P({{0, 0}, {6, 0}, {6, 5}, {2, 5}, {0, 3}}); }

inline std::vector<Polygon> s2s2_polygons() {
    return {P({{0, 6}, {0, 4}, {2, 0}, {2, 2}}), P({{2, 6}, {2, 4}, {0, 0}, {0, 2}}), P({{4, 6}, {2, 4}, {0, 0}, {2, 2}})};
}
inline std::vector<Polygon> five_polygons() {
    return {P({{0, 0}, {1, 1}, {1, 4}, {0, 3}}), P({{1, 0}, {1, 4}, {0, 3}, {0, 1}}),
            P({{0, 0}, {1, 1}, {2, 3}, {2, 4}, {1, 3}, {0, 1}}), P({{2, 0}, {2, 4}, {0, 4}, {0, 2}}),
            P({{0, 0}, {2, 2}, {2, 4}})};
}
inline Polygon three_chain_polygon() { return P({{0, 0}, {1, 0}, {2, 1}, {9, 15}, {1, 3}, {0, 1}}); }
inline std::vector<Polygon> corner_chops() {
    return {chopped_square(), P({{0, 2}, {2, 0}, {6, 0}, {6, 5}, {2, 5}, {0, 3}}),
            P({{0, 0}, {4, 0}, {6, 2}, {6, 5}, {2, 5}, {0, 3}})};
}
inline std::vector<Polygon> ruled_chops() {
    return {chopped_square(), P({{0, 0}, {6, 0}, {6, 5}, {0, 5}}), P({{0, 0}, {9, 0}, {9, 5}, {5, 5}})};
}

inline Polygon scaled(const Polygon& p, const Q& s) {
    Polygon r = p;
    for (auto& v : r.v) v = {v.first * s, v.second * s};
    return r;
}

// Reference polygons plus the standard families and chops of everything with room to spare.
inline std::vector<Polygon> corpus() {
    std::vector<Polygon> base;
    for (auto& p : s2s2_polygons()) base.push_back(p);
    for (auto& p : five_polygons()) base.push_back(p);
    base.push_back(three_chain_polygon());
    for (auto& p : corner_chops()) base.push_back(p);
    for (auto& p : ruled_chops()) base.push_back(p);
    base.push_back(P({{0, 0}, {1, 0}, {2, 1}, {0, 1}}));
    base.push_back(P({{0, 0}, {3, 0}, {0, 3}}));
    base.push_back(P({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    for (long n = 0; n <= 3; ++n) base.push_back(P({{0, 0}, {2 + n, 0}, {2, 1}, {0, 1}}));
    std::vector<Polygon> out = base;
    for (auto& p : base) {
        Polygon big = scaled(p, 4);
        for (size_t i = 0; i < big.v.size(); ++i) {
            try {
                out.push_back(polygon_chop(big, i, Q(1, 2)));
            } catch (const Error&) {
            }
        }
    }
    std::vector<Polygon> uniq;
    for (auto& p : out)
        if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
    return uniq;
}

// Id of the graph vertex polygon_to_graph makes for polygon vertex i.
inline std::string graph_vertex_of(const Polygon& p, size_t i) {
    size_t n = p.v.size(), prev = (i + n - 1) % n;
    if (p.v[i].second == p.v[(i + 1) % n].second) return "s" + std::to_string(i);
    if (p.v[prev].second == p.v[i].second) return "s" + std::to_string(prev);
    return "p" + std::to_string(i);
}

inline std::vector<std::string> acceptance_seed_names() {
    std::vector<std::string> names;
    for (long m = 1; m <= 5; ++m)
        for (long n = 1; m + n <= 6; ++n)
            if (gcd_ll(m, n) == 1) names.push_back("cp2:" + std::to_string(m) + "," + std::to_string(n));
    for (int n = -3; n <= 3; ++n) names.push_back("ruled:0," + std::to_string(n) + ",1,1");
    return names;
}

// Random valid chain via k_{i+1} = c_i k_i - k_{i-1}, retried until it stays in [1, 50].
inline std::vector<long> random_chain(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> len(2, 8), ent(1, 50), cc(1, 6);
    for (;;) {
        long k0 = ent(rng), k1 = ent(rng);
        if (gcd_ll(k0, k1) != 1) continue;
        std::vector<long> k{k0, k1};
        long l = len(rng);
        bool ok = true;
        while (static_cast<long>(k.size()) < l) {
            long c = cc(rng);
            long nx = c * k.back() - k[k.size() - 2];
            if (nx < 1 || nx > 50) {
                ok = false;
                break;
            }
            k.push_back(nx);
        }
        if (ok) return k;
    }
}
}  // namespace fx

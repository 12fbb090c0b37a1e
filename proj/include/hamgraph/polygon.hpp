#pragma once

#include "hamgraph/chain.hpp"
#include "hamgraph/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hg {

using Point = std::pair<Q, Q>;

// Counterclockwise; edge i runs from v[i] to v[i+1].
struct Polygon {
    std::vector<Point> v;
    bool operator==(const Polygon& o) const { return v == o.v; }
};

struct PolygonReport {
    bool ok = true;
    std::vector<std::string> problems;
};

PolygonReport validate_delzant(const Polygon& p);
void require_delzant(const Polygon& p);

LatticeVector primitive_outward(const Point& a, const Point& b);
std::vector<LatticeVector> outward_normals(const Polygon& p);
Q lattice_length(const Point& a, const Point& b);

Graph polygon_to_graph(const Polygon& p);
// Same graph plus the k = 1 boundary edges as free edges; the path up the
// right side of the polygon is the first branch.
ExtendedGraph polygon_to_extended(const Polygon& p);
Polygon graph_to_polygon(const Graph& g, const ExtendedGraph& ext);

Polygon affine_normal_form(const Polygon& p);
bool polygon_affine_equivalent(const Polygon& a, const Polygon& b);
Polygon apply_affine(const Polygon& p, int sign, const Z& shear, const Q& a);

Polygon polygon_chop(const Polygon& p, size_t vertex, const Q& t);

using Fan = std::vector<LatticeVector>;

struct FanType {
    enum Kind { CP2, Hirzebruch, NotMinimal } kind = NotMinimal;
    long n = 0;
};

Fan polygon_to_fan(const Polygon& p);  // primitive inward normals
bool fan_is_smooth_complete(const Fan& f);
std::vector<size_t> fan_blowdown_sites(const Fan& f);
Fan fan_blowdown(const Fan& f, size_t i);
FanType minimal_fan_type(const Fan& f);

}  // namespace hg

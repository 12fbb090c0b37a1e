#pragma once

#include "hamgraph/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hg {

enum class SiteTag {
    Interior,
    SurfaceMin,
    SurfaceMax,
    IsolatedMinDistinct,
    IsolatedMaxDistinct,
    IsolatedMin11,
    IsolatedMax11
};
std::string tag_name(SiteTag t);

struct BlowupSite {
    std::string vertex;
    SiteTag tag = SiteTag::Interior;
};

// a + c*lambda
struct Affine {
    Q a, c;
    Q at(const Q& lambda) const { return a + c * lambda; }
    bool operator<(const Affine& o) const { return a != o.a ? a < o.a : c < o.c; }  // lambda infinitesimal
};

struct SymVertex {
    std::string id;
    Kind kind = Kind::Point;
    Affine moment, area;
    int genus = 0;
};

// The blown-up graph for all small lambda. Edges are stored with `a` below `b`
// in the carried order.
struct SymbolicBlowup {
    std::vector<SymVertex> vertices;
    std::vector<Edge> edges;
    std::string min, max;
    BlowupSite site;
    std::vector<std::string> created;  // ids of vertices the rewrite introduced
};

std::vector<BlowupSite> blowup_sites(const Graph& g);
BlowupSite site_at(const Graph& g, const std::string& vertex);
SymbolicBlowup blowup_symbolic(const Graph& g, const BlowupSite& site);
Graph instantiate(const SymbolicBlowup& sb, const Q& lambda);
bool monotone_check(const SymbolicBlowup& sb, const Q& lambda);
// Every constraint has the form A + B*lambda > 0.
std::vector<Affine> monotone_constraints(const SymbolicBlowup& sb);

struct MaxSize {
    bool infinite = false;
    Q sup;
    bool attainable = false;
};
MaxSize max_size(const Graph& g, const BlowupSite& site);

// Checked blow-up; throws NotMonotone.
Graph blowup(const Graph& g, const BlowupSite& site, const Q& lambda);

enum class Pattern { A, B, C, D };
std::string pattern_name(Pattern p);

struct BlowdownSite {
    Pattern pattern = Pattern::A;
    std::vector<std::string> ids;  // A: lower, upper; B: point, surface; C: extremum, partner; D: surface
    Q lambda;
    bool at_max = false;  // which extremum B/C/D act on
    long weight = 0;      // A: edge weight
};

std::vector<BlowdownSite> blowdown_sites(const Graph& g);
Graph blowdown(const Graph& g, const BlowdownSite& site);

struct Reduction {
    Graph minimal;
    std::vector<BlowdownSite> steps;
};
Reduction reduce_to_minimal(const Graph& g);
bool is_ruled_shape(const Graph& g);  // two surfaces, nothing else

}  // namespace hg

#pragma once

#include "hamgraph/blowup.hpp"
#include "hamgraph/polygon.hpp"

#include <map>
#include <string>
#include <vector>

namespace hg {

struct MinimalFamily {
    enum Type { CP2, CP2Surface, Hirzebruch, Ruled } type = CP2;
    enum Variant { Left, Middle, Right } variant = Left;  // Hirzebruch only
    long m = 1, n = 1, c = 1, d = 1, genus = 0;
    Q alpha = 0, beta = 1, lambda = 1, r = 1, s = 1;
    bool flipped = false;
};

Graph minimal_graph(const MinimalFamily& f);
// "cp2:m,n[,alpha,beta]", "cp2s:lambda[,alpha]", "hirz:left|middle|right,n,c,d,r,s[,alpha]"
// (right ignores c,d), "ruled:g,n,r,s[,alpha]"; a trailing ",flip" flips the graph.
MinimalFamily parse_family(const std::string& text);
std::string family_name(const MinimalFamily& f);

bool is_toric_extendable(const Graph& g);
bool is_minimal(const Graph& g);

// Extension with one branch per interior chain, hung from the extrema.
ExtendedGraph extend_isolated(const Graph& g);
Polygon classify_isolated(const Graph& g);

struct EnumConfig {
    std::vector<Graph> seeds;
    int max_blowups = 1;
    std::vector<Q> grid;  // blow-up sizes as fractions of the supremum; empty means {1/2}
};

struct EnumEntry {
    Graph graph;
    std::string canonical;
    int depth = 0;                               // first depth reached
    std::vector<std::pair<int, int>> provenance;  // (seed index, number of blow-ups)
};

std::vector<EnumEntry> enumerate(const EnumConfig& cfg);

Graph assign_labels(const Graph& skeleton, const std::map<std::string, Q>& moments, const Q& a_min, const Q& a_max,
                    const Q& e_min, const Q& e_max);

}  // namespace hg

#pragma once

#include "hamgraph/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hg {

enum class Kind { Point, Surface };

struct Vertex {
    std::string id;
    Kind kind = Kind::Point;
    Q moment;
    Q area;         // surfaces only
    int genus = 0;  // surfaces only
};

// Only weights k >= 2 live here; weight-1 spheres belong to ExtendedGraph.
struct Edge {
    std::string a, b;
    long k = 2;
};

struct Graph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int find(const std::string& id) const;  // -1 when absent
    const Vertex& at(const std::string& id) const;
};

struct Violation {
    std::string rule;  // G1..G7, or a structural tag
    std::vector<std::string> ids;
    std::string message;
};

std::vector<Violation> validate_graph(const Graph& g);
void require_valid(const Graph& g);

// Per-vertex incidence split by direction of the moment label.
struct Shape {
    int min = -1, max = -1;
    std::vector<std::vector<int>> up, down;  // edge indices
    bool extremal(int v) const { return v == min || v == max; }
};
Shape shape_of(const Graph& g);

struct WeightPair {
    long first = 0, second = 0;  // ascending
};

WeightPair isotropy_weights(const Graph& g, const std::string& id);
// Up/down weights of an interior vertex, missing edges counting as 1.
long up_weight(const Graph& g, const Shape& s, int v);
long down_weight(const Graph& g, const Shape& s, int v);
// Absolute weights at an isolated extremum, incident edges first, padded with 1.
std::pair<long, long> extremum_weights(const Graph& g, const Shape& s, int v);

enum class Order { Less, Greater, Incomparable, EqualId };
Order compare(const Graph& g, const std::string& v, const std::string& w);

enum class IsoMode { Exact, UpToShift };
std::string canonical_form(const Graph& g, IsoMode mode);
bool is_isomorphic(const Graph& a, const Graph& b, IsoMode mode);

Graph flip(const Graph& g);
Graph shift(const Graph& g, const Q& c);

struct ExtendedGraph {
    Graph base;
    std::vector<Edge> free_edges;  // k = 1
};

// One branch: vertex ids from min to max and the weights of the edges in between.
struct Branch {
    std::vector<std::string> ids;
    std::vector<long> weights;
};

ExtendedGraph extend_graph(const Graph& g);
std::vector<Branch> branches(const ExtendedGraph& e);
std::vector<Violation> validate_extended(const ExtendedGraph& e);

// Interior path components: each is a maximal chain of interior vertices joined by edges.
std::vector<std::vector<int>> interior_paths(const Graph& g, const Shape& s);

std::string fresh_id(const Graph& g, const std::string& base);

}  // namespace hg

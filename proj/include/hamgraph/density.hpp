#pragma once

#include "hamgraph/graph.hpp"
#include "hamgraph/polygon.hpp"

#include <vector>

namespace hg {

// Piecewise linear, zero outside [x.front(), x.back()]. Values at the two ends
// are the one-sided limits from inside the support.
struct PLDensity {
    std::vector<Q> x, v;

    Q eval(const Q& y) const;
    bool empty() const { return x.empty(); }
    PLDensity simplified() const;  // drops breakpoints where the slope does not change
    bool operator==(const PLDensity& o) const;
};

struct ExtremalData {
    Q e_min, e_max;
};

ExtremalData extremal_self_intersections(const Graph& g);
PLDensity density(const Graph& g);
Q total_mass(const PLDensity& rho);
bool check_concave_nonneg(const PLDensity& rho, const Graph& g);
PLDensity polygon_pushforward(const Polygon& p);

// Sum over interior vertices of 1/(m_p n_p), and of y_p/(m_p n_p).
std::pair<Q, Q> interior_sums(const Graph& g);

}  // namespace hg

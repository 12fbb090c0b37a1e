#pragma once

#include "hamgraph/blowup.hpp"

#include <map>
#include <string>
#include <vector>

namespace hg {

struct Curve {
    enum Tag { Bmin, Bmax, F, E } tag = E;
    std::string key;  // "Bmin", "Bmax", "F", or "south->north"
    int chain = -1;   // E only
    int pos = 0;      // 1-based position in the chain, bottom to top
    long k = 1;
};

struct IntersectionData {
    std::vector<Curve> curves;
    std::vector<std::vector<Z>> pairing;
    std::vector<size_t> basis;  // Bmax, F, and E_i with i >= 2
};

// Needs two fixed surfaces as extrema.
IntersectionData intersection_matrix(const Graph& g);
std::map<std::string, Q> class_values(const Graph& g);

// Class values along a symbolic blow-up, as affine functions of lambda.
std::map<std::string, Affine> class_values_symbolic(const SymbolicBlowup& sb);
bool positivity_equiv(const Graph& g, const BlowupSite& site, const std::vector<Q>& lambdas);

std::map<std::string, Q> blowup_class_transform(const Graph& g, const std::map<std::string, Q>& values,
                                                const BlowupSite& site, const Q& lambda);

struct Decomposition {
    bool ok = false;
    std::vector<Q> coefficients;  // over IntersectionData::basis
    std::string failure;          // named inequality when !ok
};
// `numbers` holds the class's intersection numbers with every spanning curve.
Decomposition decompose_positive(const IntersectionData& d, const std::vector<Z>& numbers);

// Intersection numbers with every spanning curve of the class with the given basis coefficients.
std::vector<Z> pair_with_curves(const IntersectionData& d, const std::vector<Q>& coefficients);
Q self_pairing(const IntersectionData& d, const std::vector<Q>& coefficients);
// Coefficients over the basis of the class pairing to v against the basis curves.
std::vector<Q> solve_basis(const IntersectionData& d, const std::vector<Q>& v);

}  // namespace hg

#pragma once

#include "hamgraph/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hg {

enum class EndKind { Surface, Isolated };

// At an isolated end, `other` is the absolute value of the extremum's other
// isotropy weight; it enters the end formula with a minus sign.
struct ChainEnd {
    EndKind kind = EndKind::Surface;
    long other = 0;
};

struct WeightChain {
    std::vector<long> k;
    ChainEnd bottom, top;
};

struct ChainReport {
    bool ok = true;
    std::vector<std::string> violations;
};

using LatticeVector = std::pair<Z, Z>;

ChainReport validate_chain(const WeightChain& c);
std::vector<long> self_intersections(const WeightChain& c);
bool mg_check(long m, long n, long e, long k);
std::vector<Z> b_sequence(const WeightChain& c, const Z& b1, const Z& b2);
std::pair<Z, Z> default_seed(const WeightChain& c);
Z kho_d(const WeightChain& c);
std::vector<LatticeVector> chain_fan(const WeightChain& c, const Z& b1, const Z& b2);

Z det(const LatticeVector& u, const LatticeVector& v);

}  // namespace hg

#include "hamgraph/chain.hpp"

namespace hg {

Z det(const LatticeVector& u, const LatticeVector& v) { return u.first * v.second - u.second * v.first; }

ChainReport validate_chain(const WeightChain& c) {
    ChainReport r;
    auto fail = [&](std::string m) {
        r.ok = false;
        r.violations.push_back(std::move(m));
    };
    const auto& k = c.k;
    if (k.empty()) fail("empty chain");
    for (size_t i = 0; i < k.size(); ++i)
        if (k[i] < 1) fail("weight " + std::to_string(i + 1) + " is not positive");
    if (!r.ok) return r;
    for (size_t i = 0; i + 1 < k.size(); ++i)
        if (gcd_ll(k[i], k[i + 1]) != 1)
            fail("gcd(k" + std::to_string(i + 1) + ",k" + std::to_string(i + 2) + ") != 1");
    for (size_t i = 1; i + 1 < k.size(); ++i)
        if ((k[i - 1] + k[i + 1]) % k[i] != 0)
            fail("(k" + std::to_string(i) + "+k" + std::to_string(i + 2) + ")/k" + std::to_string(i + 1) +
                 " is not an integer");
    if (c.bottom.kind == EndKind::Surface && k.front() != 1) fail("surface end at bottom needs k1 = 1");
    if (c.top.kind == EndKind::Surface && k.back() != 1) fail("surface end at top needs kl = 1");
    if (c.bottom.kind == EndKind::Isolated && c.bottom.other < 1) fail("isolated bottom end needs a positive other weight");
    if (c.top.kind == EndKind::Isolated && c.top.other < 1) fail("isolated top end needs a positive other weight");
    return r;
}

static void require_chain(const WeightChain& c) {
    auto r = validate_chain(c);
    if (!r.ok) throw Error("InvalidChain", r.violations.front());
}

std::vector<long> self_intersections(const WeightChain& c) {
    require_chain(c);
    const auto& k = c.k;
    size_t l = k.size();
    auto neighbour = [&](long i) -> long {
        if (i < 0) return c.bottom.kind == EndKind::Surface ? 0 : -c.bottom.other;
        if (i >= static_cast<long>(l)) return c.top.kind == EndKind::Surface ? 0 : -c.top.other;
        return k[i];
    };
    std::vector<long> e(l);
    for (size_t i = 0; i < l; ++i) {
        long s = neighbour(static_cast<long>(i) - 1) + neighbour(static_cast<long>(i) + 1);
        if (s % k[i] != 0)
            throw Error("NonIntegral", "self intersection of sphere " + std::to_string(i + 1) + " is not an integer");
        e[i] = -s / k[i];
    }
    return e;
}

bool mg_check(long m, long n, long e, long k) { return m - n == -e * k; }

std::vector<Z> b_sequence(const WeightChain& c, const Z& b1, const Z& b2) {
    require_chain(c);
    const auto& k = c.k;
    if (k.size() == 1) return {b1};
    if (Z(k[0]) * b2 - b1 * Z(k[1]) != 1) throw Error("BadSeed", "seed violates k1*b2 - b1*k2 = 1");
    std::vector<Z> b{b1, b2};
    for (size_t i = 1; i + 1 < k.size(); ++i) {
        Z ci = (k[i + 1] + k[i - 1]) / k[i];
        b.push_back(-b[i - 1] + ci * b[i]);
    }
    for (size_t i = 0; i + 1 < k.size(); ++i)
        if (Z(k[i]) * b[i + 1] - b[i] * Z(k[i + 1]) != 1) throw Error("Internal", "b-sequence determinant drifted");
    return b;
}

std::pair<Z, Z> default_seed(const WeightChain& c) {
    require_chain(c);
    const auto& k = c.k;
    if (k.size() == 1) return {0, 0};
    // smallest b1 >= 0 with k1 | 1 + b1*k2
    Z k1(k[0]), k2(k[1]), inv;
    if (k1 == 1) return {0, 1};
    mpz_invert(inv.get_mpz_t(), k2.get_mpz_t(), k1.get_mpz_t());
    Z b1 = (k1 - inv) % k1;
    return {b1, (1 + b1 * k2) / k1};
}

Z kho_d(const WeightChain& c) {
    require_chain(c);
    const auto& k = c.k;
    if (k.size() < 2) throw Error("ChainTooShort", "kho_d needs at least two spheres");
    Q sum = 0;
    for (size_t i = 0; i + 1 < k.size(); ++i) sum += Q(1, 1) / (Z(k[i]) * Z(k[i + 1]));
    Q d = sum * Z(k.front()) * Z(k.back());
    if (d.get_den() != 1 || d <= 0) throw Error("Internal", "kho_d is not a positive integer");
    auto [b1, b2] = default_seed(c);
    auto fan = chain_fan(c, b1, b2);
    if (det(fan.front(), fan.back()) != d.get_num()) throw Error("Internal", "kho_d disagrees with det(u1,ul)");
    return d.get_num();
}

std::vector<LatticeVector> chain_fan(const WeightChain& c, const Z& b1, const Z& b2) {
    auto b = b_sequence(c, b1, b2);
    std::vector<LatticeVector> u;
    for (size_t i = 0; i < c.k.size(); ++i) u.emplace_back(Z(c.k[i]), b[i]);
    return u;
}

}  // namespace hg

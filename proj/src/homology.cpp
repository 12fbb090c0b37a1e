#include "hamgraph/homology.hpp"

#include "hamgraph/chain.hpp"
#include "hamgraph/density.hpp"

#include <algorithm>

namespace hg {

namespace {

struct Layout {
    std::vector<Curve> curves;
    // for chain spheres: south and north vertex ids ("" for the surfaces)
    std::vector<std::pair<std::string, std::string>> ends;
    std::string lo, hi;
};

Layout layout(const Graph& g) {
    require_valid(g);
    Shape s = shape_of(g);
    if (g.vertices[s.min].kind != Kind::Surface || g.vertices[s.max].kind != Kind::Surface)
        throw Error("NotTwoSurface", "homology needs fixed surfaces at both extrema");
    Layout L;
    L.lo = g.vertices[s.min].id;
    L.hi = g.vertices[s.max].id;
    L.curves.push_back({Curve::Bmin, "Bmin"});
    L.curves.push_back({Curve::Bmax, "Bmax"});
    L.curves.push_back({Curve::F, "F"});
    L.ends.resize(3);
    int chain = 0;
    for (const auto& p : interior_paths(g, s)) {
        std::vector<std::string> ids{""};
        std::vector<long> k{1};
        for (size_t i = 0; i < p.size(); ++i) {
            ids.push_back(g.vertices[p[i]].id);
            if (i + 1 < p.size()) k.push_back(g.edges[s.up[p[i]][0]].k);
        }
        ids.push_back("");
        k.push_back(1);
        for (size_t i = 0; i < k.size(); ++i) {
            std::string south = ids[i].empty() ? "Bmin" : ids[i];
            std::string north = ids[i + 1].empty() ? "Bmax" : ids[i + 1];
            L.curves.push_back({Curve::E, south + "->" + north, chain, static_cast<int>(i) + 1, k[i]});
            L.ends.push_back({ids[i], ids[i + 1]});
        }
        ++chain;
    }
    return L;
}

using Matrix = std::vector<std::vector<Q>>;

// Gaussian elimination; throws when singular.
std::vector<Q> solve(Matrix a, std::vector<Q> b) {
    size_t n = b.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw Error("Singular", "pairing matrix is singular");
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Q f = a[r][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    for (size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

}  // namespace

IntersectionData intersection_matrix(const Graph& g) {
    Layout L = layout(g);
    ExtremalData ed = extremal_self_intersections(g);
    if (ed.e_min.get_den() != 1 || ed.e_max.get_den() != 1)
        throw Error("InconsistentGraph", "surface self-intersections are not integers");
    size_t n = L.curves.size();
    IntersectionData d;
    d.curves = L.curves;
    d.pairing.assign(n, std::vector<Z>(n, 0));
    auto set = [&](size_t i, size_t j, const Z& v) { d.pairing[i][j] = d.pairing[j][i] = v; };
    set(0, 0, ed.e_min.get_num());
    set(1, 1, ed.e_max.get_num());
    set(2, 0, 1);
    set(2, 1, 1);
    for (size_t i = 3; i < n;) {
        size_t j = i;
        while (j < n && d.curves[j].chain == d.curves[i].chain) ++j;
        WeightChain wc;
        for (size_t t = i; t < j; ++t) wc.k.push_back(d.curves[t].k);
        auto e = self_intersections(wc);
        for (size_t t = i; t < j; ++t) {
            set(t, t, e[t - i]);
            if (t + 1 < j) set(t, t + 1, 1);
        }
        set(i, 0, 1);
        set(j - 1, 1, 1);
        i = j;
    }
    for (size_t i = 0; i < n; ++i)
        if (d.curves[i].tag == Curve::Bmax || d.curves[i].tag == Curve::F ||
            (d.curves[i].tag == Curve::E && d.curves[i].pos >= 2))
            d.basis.push_back(i);
    return d;
}

std::map<std::string, Q> class_values(const Graph& g) {
    Layout L = layout(g);
    std::map<std::string, Q> out;
    const Vertex& lo = g.at(L.lo);
    const Vertex& hi = g.at(L.hi);
    auto y = [&](const std::string& id, bool north) { return id.empty() ? (north ? hi.moment : lo.moment) : g.at(id).moment; };
    for (size_t i = 0; i < L.curves.size(); ++i) {
        const Curve& c = L.curves[i];
        switch (c.tag) {
            case Curve::Bmin: out[c.key] = lo.area; break;
            case Curve::Bmax: out[c.key] = hi.area; break;
            case Curve::F: out[c.key] = hi.moment - lo.moment; break;
            case Curve::E: out[c.key] = (y(L.ends[i].second, true) - y(L.ends[i].first, false)) / Q(c.k); break;
        }
    }
    return out;
}

std::map<std::string, Affine> class_values_symbolic(const SymbolicBlowup& sb) {
    // the carried structure is the one seen at any small lambda
    Q small = 1;
    for (const auto& c : monotone_constraints(sb))
        if (c.c < 0) small = std::min(small, Q(c.a / -c.c));
    Graph g0 = instantiate(sb, small / 2);
    Layout L = layout(g0);
    auto sym = [&](const std::string& id) -> const SymVertex& {
        for (const auto& v : sb.vertices)
            if (v.id == id) return v;
        throw Error("Internal", "missing vertex");
    };
    const SymVertex& lo = sym(L.lo);
    const SymVertex& hi = sym(L.hi);
    auto y = [&](const std::string& id, bool north) {
        return id.empty() ? (north ? hi.moment : lo.moment) : sym(id).moment;
    };
    auto minus = [](const Affine& a, const Affine& b) { return Affine{a.a - b.a, a.c - b.c}; };
    std::map<std::string, Affine> out;
    for (size_t i = 0; i < L.curves.size(); ++i) {
        const Curve& c = L.curves[i];
        switch (c.tag) {
            case Curve::Bmin: out[c.key] = lo.area; break;
            case Curve::Bmax: out[c.key] = hi.area; break;
            case Curve::F: out[c.key] = minus(hi.moment, lo.moment); break;
            case Curve::E: {
                Affine d = minus(y(L.ends[i].second, true), y(L.ends[i].first, false));
                out[c.key] = {d.a / Q(c.k), d.c / Q(c.k)};
                break;
            }
        }
    }
    return out;
}

bool positivity_equiv(const Graph& g, const BlowupSite& site, const std::vector<Q>& lambdas) {
    SymbolicBlowup sb = blowup_symbolic(g, site);
    auto vals = class_values_symbolic(sb);
    for (const auto& l : lambdas) {
        bool pos = true;
        for (const auto& [k, v] : vals) pos = pos && v.at(l) > 0;
        if (pos != monotone_check(sb, l)) return false;
    }
    return true;
}

std::map<std::string, Q> blowup_class_transform(const Graph& g, const std::map<std::string, Q>& values,
                                                const BlowupSite& site, const Q& lambda) {
    SymbolicBlowup sb = blowup_symbolic(g, site);
    Graph h = blowup(g, site, lambda);
    Layout L = layout(h);
    // proper transforms: new key -> (old key or "" for the exceptional curve, intersection with it)
    std::map<std::string, std::pair<std::string, int>> src;
    const std::string& p = site.vertex;
    switch (site.tag) {
        case SiteTag::Interior: {
            const std::string& plo = sb.created[0];
            const std::string& phi = sb.created[1];
            src[plo + "->" + phi] = {"", -1};
            for (const auto& c : L.curves) {
                if (c.tag != Curve::E) continue;
                auto arrow = c.key.find("->");
                std::string south = c.key.substr(0, arrow), north = c.key.substr(arrow + 2);
                if (north == plo) src[c.key] = {south + "->" + p, 1};
                if (south == phi) src[c.key] = {p + "->" + north, 1};
            }
            break;
        }
        case SiteTag::SurfaceMin: {
            const std::string& x = sb.created[0];
            src["Bmin"] = {"Bmin", 1};
            src["Bmin->" + x] = {"", -1};
            src[x + "->Bmax"] = {"F", 1};
            break;
        }
        case SiteTag::SurfaceMax: {
            const std::string& x = sb.created[0];
            src["Bmax"] = {"Bmax", 1};
            src[x + "->Bmax"] = {"", -1};
            src["Bmin->" + x] = {"F", 1};
            break;
        }
        default: throw Error("NoIncidence", "site is not on a two-surface graph");
    }
    std::map<std::string, Q> out;
    for (const auto& c : L.curves) {
        auto it = src.find(c.key);
        std::string old = it == src.end() ? c.key : it->second.first;
        int meet = it == src.end() ? 0 : it->second.second;
        Q base = 0;
        if (!old.empty()) {
            auto v = values.find(old);
            if (v == values.end()) throw Error("NoIncidence", "no value for curve " + old);
            base = v->second;
        }
        out[c.key] = base - lambda * Q(meet);
    }
    return out;
}

std::vector<Q> solve_basis(const IntersectionData& d, const std::vector<Q>& v) {
    size_t n = d.basis.size();
    Matrix a(n, std::vector<Q>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = d.pairing[d.basis[i]][d.basis[j]];
    return solve(a, v);
}

std::vector<Z> pair_with_curves(const IntersectionData& d, const std::vector<Q>& x) {
    std::vector<Z> out;
    for (size_t i = 0; i < d.curves.size(); ++i) {
        Q s = 0;
        for (size_t j = 0; j < d.basis.size(); ++j) s += x[j] * Q(d.pairing[i][d.basis[j]]);
        if (s.get_den() != 1) throw Error("Internal", "non-integral intersection number");
        out.push_back(s.get_num());
    }
    return out;
}

Q self_pairing(const IntersectionData& d, const std::vector<Q>& x) {
    Q s = 0;
    for (size_t i = 0; i < d.basis.size(); ++i)
        for (size_t j = 0; j < d.basis.size(); ++j) s += x[i] * x[j] * Q(d.pairing[d.basis[i]][d.basis[j]]);
    return s;
}

Decomposition decompose_positive(const IntersectionData& d, const std::vector<Z>& numbers) {
    if (numbers.size() != d.curves.size()) throw Error("BadClass", "need one intersection number per curve");
    for (size_t i = 0; i < numbers.size(); ++i)
        if (numbers[i] < 0) throw Error("BadClass", "negative intersection with " + d.curves[i].key);
    std::vector<Q> v;
    for (size_t i : d.basis) v.push_back(Q(numbers[i]));
    Decomposition r;
    r.coefficients = solve_basis(d, v);
    if (pair_with_curves(d, r.coefficients) != numbers)
        throw Error("InconsistentClass", "intersection numbers are not those of a homology class");
    auto fail = [&](std::string why) {
        r.failure = std::move(why);
        return r;
    };
    for (size_t j = 0; j < d.basis.size(); ++j) {
        const Curve& c = d.curves[d.basis[j]];
        if (c.tag == Curve::Bmax && r.coefficients[j] < 0) return fail("alpha_max >= 0");
        if (c.tag == Curve::F && r.coefficients[j] < 0) return fail("alpha_F >= 0");
    }
    // along each chain alpha_i / k_i is non-decreasing, starting from alpha_1 = 0
    Q prev = 0;
    int chain = -1;
    for (size_t j = 0; j < d.basis.size(); ++j) {
        const Curve& c = d.curves[d.basis[j]];
        if (c.tag != Curve::E) continue;
        if (c.chain != chain) chain = c.chain, prev = 0;
        Q ratio = r.coefficients[j] / Q(c.k);
        if (ratio < prev)
            return fail("alpha_" + std::to_string(c.pos) + "/k_" + std::to_string(c.pos) + " >= alpha_" +
                        std::to_string(c.pos - 1) + "/k_" + std::to_string(c.pos - 1) + " on chain " +
                        std::to_string(c.chain));
        prev = ratio;
    }
    r.ok = true;
    return r;
}

}  // namespace hg

#include "hamgraph/blowup.hpp"

#include "hamgraph/density.hpp"

#include <algorithm>

namespace hg {

std::string tag_name(SiteTag t) {
    switch (t) {
        case SiteTag::Interior: return "Interior";
        case SiteTag::SurfaceMin: return "SurfaceMin";
        case SiteTag::SurfaceMax: return "SurfaceMax";
        case SiteTag::IsolatedMinDistinct: return "IsolatedMinDistinct";
        case SiteTag::IsolatedMaxDistinct: return "IsolatedMaxDistinct";
        case SiteTag::IsolatedMin11: return "IsolatedMin11";
        case SiteTag::IsolatedMax11: return "IsolatedMax11";
    }
    return "?";
}

std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::A: return "A";
        case Pattern::B: return "B";
        case Pattern::C: return "C";
        case Pattern::D: return "D";
    }
    return "?";
}

BlowupSite site_at(const Graph& g, const std::string& id) {
    require_valid(g);
    int v = g.find(id);
    if (v < 0) throw Error("UnknownVertex", "unknown vertex id '" + id + "'");
    Shape s = shape_of(g);
    const Vertex& x = g.vertices[v];
    if (!s.extremal(v)) return {id, SiteTag::Interior};
    bool lo = v == s.min;
    if (x.kind == Kind::Surface) return {id, lo ? SiteTag::SurfaceMin : SiteTag::SurfaceMax};
    auto w = extremum_weights(g, s, v);
    if (w.first == w.second) return {id, lo ? SiteTag::IsolatedMin11 : SiteTag::IsolatedMax11};
    return {id, lo ? SiteTag::IsolatedMinDistinct : SiteTag::IsolatedMaxDistinct};
}

std::vector<BlowupSite> blowup_sites(const Graph& g) {
    std::vector<BlowupSite> out;
    for (const auto& v : g.vertices) out.push_back(site_at(g, v.id));
    return out;
}

namespace {

SiteTag mirror(SiteTag t) {
    switch (t) {
        case SiteTag::SurfaceMin: return SiteTag::SurfaceMax;
        case SiteTag::SurfaceMax: return SiteTag::SurfaceMin;
        case SiteTag::IsolatedMinDistinct: return SiteTag::IsolatedMaxDistinct;
        case SiteTag::IsolatedMaxDistinct: return SiteTag::IsolatedMinDistinct;
        case SiteTag::IsolatedMin11: return SiteTag::IsolatedMax11;
        case SiteTag::IsolatedMax11: return SiteTag::IsolatedMin11;
        default: return t;
    }
}

bool max_side(SiteTag t) {
    return t == SiteTag::SurfaceMax || t == SiteTag::IsolatedMaxDistinct || t == SiteTag::IsolatedMax11;
}

int sym_find(const SymbolicBlowup& sb, const std::string& id) {
    for (size_t i = 0; i < sb.vertices.size(); ++i)
        if (sb.vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

void finish(SymbolicBlowup& sb) {
    auto pos = [&](const std::string& id) { return sb.vertices[sym_find(sb, id)].moment; };
    for (auto& e : sb.edges)
        if (pos(e.b) < pos(e.a)) std::swap(e.a, e.b);
    size_t lo = 0, hi = 0;
    for (size_t i = 1; i < sb.vertices.size(); ++i) {
        if (sb.vertices[i].moment < sb.vertices[lo].moment) lo = i;
        if (sb.vertices[hi].moment < sb.vertices[i].moment) hi = i;
    }
    sb.min = sb.vertices[lo].id;
    sb.max = sb.vertices[hi].id;
}

std::string fresh2(const Graph& g, const SymbolicBlowup& sb, const std::string& base) {
    std::string id = fresh_id(g, base);
    for (int i = 2; sym_find(sb, id) >= 0; ++i) id = fresh_id(g, base + "_" + std::to_string(i));
    return id;
}

SymbolicBlowup blowup_min_side(const Graph& g, const BlowupSite& site) {
    Shape s = shape_of(g);
    int v = g.find(site.vertex);
    SymbolicBlowup sb;
    for (const auto& x : g.vertices) sb.vertices.push_back({x.id, x.kind, {x.moment, 0}, {x.area, 0}, x.genus});
    sb.edges = g.edges;
    sb.site = site;
    SymVertex& sv = sb.vertices[v];
    const Q alpha = g.vertices[v].moment;
    auto rename = [&](int ei, const std::string& from, const std::string& to) {
        Edge& e = sb.edges[ei];
        (e.a == from ? e.a : e.b) = to;
    };
    switch (site.tag) {
        case SiteTag::Interior: {
            long m = up_weight(g, s, v), n = down_weight(g, s, v);
            std::string hi = fresh2(g, sb, sv.id + ".hi");
            std::string lo = fresh2(g, sb, sv.id + ".lo");
            if (!s.up[v].empty()) rename(s.up[v][0], sv.id, hi);
            if (!s.down[v].empty()) rename(s.down[v][0], sv.id, lo);
            sv.id = lo;
            sv.moment = {alpha, Q(-n)};
            sb.vertices.push_back({hi, Kind::Point, {alpha, Q(m)}, {0, 0}, 0});
            sb.edges.push_back({lo, hi, m + n});
            sb.created = {lo, hi};
            break;
        }
        case SiteTag::SurfaceMin: {
            sv.area.c = -1;
            std::string p = fresh2(g, sb, sv.id + ".x");
            sb.vertices.push_back({p, Kind::Point, {alpha, 1}, {0, 0}, 0});
            sb.created = {p};
            break;
        }
        case SiteTag::IsolatedMinDistinct: {
            auto w = extremum_weights(g, s, v);
            long n = std::min(w.first, w.second), m = std::max(w.first, w.second);
            std::string u = fresh2(g, sb, sv.id + ".x");
            for (int ei : s.up[v])
                if (g.edges[ei].k == m) rename(ei, sv.id, u);
            sv.moment = {alpha, Q(n)};
            std::string self = sv.id;
            sb.vertices.push_back({u, Kind::Point, {alpha, Q(m)}, {0, 0}, 0});  // invalidates sv
            if (m - n >= 2) sb.edges.push_back({self, u, m - n});
            sb.created = {u};
            break;
        }
        case SiteTag::IsolatedMin11: {
            sv.kind = Kind::Surface;
            sv.moment = {alpha, 1};
            sv.area = {0, 1};
            sv.genus = 0;
            break;
        }
        default: throw Error("Internal", "unexpected site tag");
    }
    finish(sb);
    return sb;
}

}  // namespace

SymbolicBlowup blowup_symbolic(const Graph& g, const BlowupSite& site) {
    BlowupSite actual = site_at(g, site.vertex);
    if (actual.tag != site.tag)
        throw Error("TagMismatch", "vertex '" + site.vertex + "' is a " + tag_name(actual.tag) + " site, not " +
                                       tag_name(site.tag));
    if (!max_side(site.tag)) return blowup_min_side(g, site);
    SymbolicBlowup sb = blowup_min_side(flip(g), {site.vertex, mirror(site.tag)});
    for (auto& v : sb.vertices) v.moment = {-v.moment.a, -v.moment.c};
    for (auto& e : sb.edges) std::swap(e.a, e.b);
    std::swap(sb.min, sb.max);
    sb.site = site;
    return sb;
}

Graph instantiate(const SymbolicBlowup& sb, const Q& lambda) {
    if (lambda <= 0) throw Error("BadLambda", "blow-up size must be positive");
    Graph g;
    for (const auto& v : sb.vertices) g.vertices.push_back({v.id, v.kind, v.moment.at(lambda), v.area.at(lambda), v.genus});
    g.edges = sb.edges;
    return g;
}

std::vector<Affine> monotone_constraints(const SymbolicBlowup& sb) {
    std::vector<Affine> out{{0, 1}};
    auto diff = [](const Affine& hi, const Affine& lo) { return Affine{hi.a - lo.a, hi.c - lo.c}; };
    const Affine& lo = sb.vertices[sym_find(sb, sb.min)].moment;
    const Affine& hi = sb.vertices[sym_find(sb, sb.max)].moment;
    for (const auto& v : sb.vertices) {
        if (v.id != sb.min) out.push_back(diff(v.moment, lo));
        if (v.id != sb.max && v.id != sb.min) out.push_back(diff(hi, v.moment));
        if (v.kind == Kind::Surface) out.push_back(v.area);
    }
    for (const auto& e : sb.edges)
        out.push_back(diff(sb.vertices[sym_find(sb, e.b)].moment, sb.vertices[sym_find(sb, e.a)].moment));
    return out;
}

bool monotone_check(const SymbolicBlowup& sb, const Q& lambda) {
    for (const auto& c : monotone_constraints(sb))
        if (c.at(lambda) <= 0) return false;
    return true;
}

MaxSize max_size(const Graph& g, const BlowupSite& site) {
    SymbolicBlowup sb = blowup_symbolic(g, site);
    MaxSize r;
    r.infinite = true;
    for (const auto& c : monotone_constraints(sb)) {
        if (c.c >= 0) continue;
        Q bound = c.a / -c.c;
        if (r.infinite || bound < r.sup) r.sup = bound;
        r.infinite = false;
    }
    r.attainable = !r.infinite && r.sup > 0 && monotone_check(sb, r.sup);
    return r;
}

Graph blowup(const Graph& g, const BlowupSite& site, const Q& lambda) {
    SymbolicBlowup sb = blowup_symbolic(g, site);
    if (!monotone_check(sb, lambda)) {
        if (lambda <= 0) throw Error("NotMonotone", "monotonicity violated: lambda must be positive");
        MaxSize m = max_size(g, site);
        throw Error("NotMonotone", "monotonicity violated: lambda >= " + str(m.sup));
    }
    Graph out = instantiate(sb, lambda);
    require_valid(out);
    return out;
}

// ---- blow-down ----

namespace {

void rename_edges(Graph& g, const std::string& from, const std::string& to) {
    for (auto& e : g.edges) {
        if (e.a == from) e.a = to;
        if (e.b == from) e.b = to;
    }
}

void erase_vertex(Graph& g, const std::string& id) {
    g.vertices.erase(g.vertices.begin() + g.find(id));
}

void erase_edge_between(Graph& g, const std::string& a, const std::string& b) {
    std::erase_if(g.edges, [&](const Edge& e) { return (e.a == a && e.b == b) || (e.a == b && e.b == a); });
}

// C and D sites (and B toward a surface) at the minimum.
std::vector<BlowdownSite> min_side_sites(const Graph& g) {
    std::vector<BlowdownSite> out;
    Shape s = shape_of(g);
    const Vertex& lo = g.vertices[s.min];
    if (lo.kind == Kind::Surface) {
        for (size_t i = 0; i < g.vertices.size(); ++i) {
            int p = static_cast<int>(i);
            if (s.extremal(p) || !s.up[p].empty() || !s.down[p].empty()) continue;
            out.push_back({Pattern::B, {g.vertices[p].id, lo.id}, g.vertices[p].moment - lo.moment, false, 0});
        }
        if (lo.genus == 0) {
            try {
                if (extremal_self_intersections(g).e_min == -1) out.push_back({Pattern::D, {lo.id}, lo.area, false, 0});
            } catch (const Error&) {
            }
        }
        return out;
    }
    auto w = extremum_weights(g, s, s.min);
    std::vector<std::pair<long, long>> orders{{w.first, w.second}};
    if (w.first != w.second) orders.push_back({w.second, w.first});
    for (auto [w1, w2] : orders) {
        for (size_t i = 0; i < g.vertices.size(); ++i) {
            int u = static_cast<int>(i);
            if (s.extremal(u) || s.up[u].empty()) continue;
            if (up_weight(g, s, u) != w1 + w2 || down_weight(g, s, u) != w2) continue;
            if (w2 >= 2) {
                const Edge& d = g.edges[s.down[u][0]];
                if (d.a != lo.id && d.b != lo.id) continue;
            }
            Q lambda = (g.vertices[u].moment - lo.moment) / Q(w2);
            out.push_back({Pattern::C, {lo.id, g.vertices[u].id}, lambda, false, w1});
        }
    }
    return out;
}

Graph blowdown_min_side(const Graph& g, const BlowdownSite& site) {
    Graph r = g;
    switch (site.pattern) {
        case Pattern::B: {
            erase_vertex(r, site.ids[0]);
            r.vertices[r.find(site.ids[1])].area += site.lambda;
            break;
        }
        case Pattern::C: {
            const std::string& v = site.ids[0];
            const std::string& u = site.ids[1];
            erase_edge_between(r, v, u);
            rename_edges(r, u, v);
            erase_vertex(r, u);
            r.vertices[r.find(v)].moment -= Q(site.weight) * site.lambda;
            break;
        }
        case Pattern::D: {
            Vertex& v = r.vertices[r.find(site.ids[0])];
            v.kind = Kind::Point;
            v.moment -= v.area;
            v.area = 0;
            v.genus = 0;
            break;
        }
        default: throw Error("Internal", "not a min-side pattern");
    }
    return r;
}

bool same_site(const BlowdownSite& a, const BlowdownSite& b) {
    return a.pattern == b.pattern && a.ids == b.ids && a.lambda == b.lambda && a.at_max == b.at_max &&
           a.weight == b.weight;
}

}  // namespace

std::vector<BlowdownSite> blowdown_sites(const Graph& g) {
    require_valid(g);
    Shape s = shape_of(g);
    std::vector<BlowdownSite> out;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        int u = g.find(e.a), w = g.find(e.b);
        if (g.vertices[w].moment < g.vertices[u].moment) std::swap(u, w);
        if (s.extremal(u) || s.extremal(w)) continue;
        if (down_weight(g, s, u) + up_weight(g, s, w) != e.k) continue;
        out.push_back({Pattern::A, {g.vertices[u].id, g.vertices[w].id},
                       (g.vertices[w].moment - g.vertices[u].moment) / Q(e.k), false, e.k});
    }
    for (auto& x : min_side_sites(g)) out.push_back(x);
    for (auto& x : min_side_sites(flip(g))) {
        x.at_max = true;
        out.push_back(x);
    }
    return out;
}

Graph blowdown(const Graph& g, const BlowdownSite& site) {
    auto sites = blowdown_sites(g);
    if (std::none_of(sites.begin(), sites.end(), [&](const BlowdownSite& x) { return same_site(x, site); }))
        throw Error("NotASite", "no " + pattern_name(site.pattern) + " blow-down site matches");
    Graph r;
    if (site.pattern == Pattern::A) {
        r = g;
        const std::string& lo = site.ids[0];
        const std::string& hi = site.ids[1];
        Q y = g.at(hi).moment - Q(up_weight(g, shape_of(g), g.find(hi))) * site.lambda;
        std::string merged = lo;
        if (lo.size() > 3 && hi.size() > 3 && lo.ends_with(".lo") && hi.ends_with(".hi") &&
            lo.substr(0, lo.size() - 3) == hi.substr(0, hi.size() - 3) && g.find(lo.substr(0, lo.size() - 3)) < 0)
            merged = lo.substr(0, lo.size() - 3);
        erase_edge_between(r, lo, hi);
        rename_edges(r, hi, lo);
        erase_vertex(r, hi);
        rename_edges(r, lo, merged);
        Vertex& v = r.vertices[r.find(lo)];
        v.id = merged;
        v.moment = y;
    } else if (site.at_max) {
        BlowdownSite m = site;
        m.at_max = false;
        r = flip(blowdown_min_side(flip(g), m));
    } else {
        r = blowdown_min_side(g, site);
    }
    require_valid(r);
    return r;
}

bool is_ruled_shape(const Graph& g) {
    return g.vertices.size() == 2 && g.vertices[0].kind == Kind::Surface && g.vertices[1].kind == Kind::Surface;
}

Reduction reduce_to_minimal(const Graph& g) {
    require_valid(g);
    Reduction red{g, {}};
    for (size_t guard = 0;; ++guard) {
        if (guard > 10000) throw Error("Internal", "reduction does not terminate");
        if (is_ruled_shape(red.minimal)) break;
        auto sites = blowdown_sites(red.minimal);
        if (sites.empty()) break;
        const BlowdownSite* pick = nullptr;
        for (const auto& x : sites)
            if (x.pattern == Pattern::A && (!pick || x.weight > pick->weight)) pick = &x;
        // B before C and D: an edgeless point goes back into a surface when it can
        for (const auto& x : sites) {
            if (x.pattern != Pattern::B || (pick && pick->pattern != Pattern::B)) continue;
            if (!pick || x.lambda < pick->lambda || (x.lambda == pick->lambda && x.at_max && !pick->at_max))
                pick = &x;
        }
        for (Pattern p : {Pattern::C, Pattern::D})
            for (const auto& x : sites)
                if (!pick && x.pattern == p) pick = &x;
        red.minimal = blowdown(red.minimal, *pick);
        red.steps.push_back(*pick);
    }
    return red;
}

}  // namespace hg

#include "fixtures.hpp"
#include <doctest.h>

using namespace hg;
using fx::pt;
using fx::surf;

static bool has_rule(const std::vector<Violation>& v, const std::string& rule) {
    for (auto& x : v)
        if (x.rule == rule) return true;
    return false;
}

TEST_CASE("validate_graph") {
    CHECK(validate_graph(fx::s2s2()).empty());
    CHECK(validate_graph(fx::tent()).empty());
    CHECK(has_rule(validate_graph(Graph{{surf("x", 0, 1)}, {}}), "G1"));
    // interior vertex with two upward edges
    Graph g{{pt("min", 0), pt("v", 1), pt("a", 2), pt("b", 3), pt("max", 4)}, {{"v", "a", 2}, {"v", "b", 3}}};
    CHECK(has_rule(validate_graph(g), "G2"));
    // an edge into an extremal surface
    Graph h{{surf("min", 0, 1), pt("v", 1), surf("max", 2, 1)}, {{"min", "v", 2}}};
    CHECK(has_rule(validate_graph(h), "G4"));
    // an interior surface
    Graph i{{surf("min", 0, 1), surf("mid", 1, 1), surf("max", 2, 1)}, {}};
    CHECK(has_rule(validate_graph(i), "G5"));
    // weights {2,4} at the min
    Graph j{{pt("min", 0), pt("a", 1), pt("b", 2), pt("max", 3)}, {{"min", "a", 2}, {"min", "b", 4}}};
    CHECK(has_rule(validate_graph(j), "G6"));
    Graph k{{surf("min", 0, 1, 0), surf("max", 1, 1, 1)}, {}};
    CHECK(has_rule(validate_graph(k), "G7"));
}

TEST_CASE("isotropy_weights") {
    auto g = fx::s2s2();
    auto w = isotropy_weights(g, "c");
    CHECK(w.first == -2);
    CHECK(w.second == 1);
    w = isotropy_weights(g, "d");
    CHECK(w.first == -2);
    CHECK(w.second == -1);
    w = isotropy_weights(fx::tent(), "min");
    CHECK(w.first == 1);
    CHECK(w.second == 1);
    auto r = fx::ruled(1, 1, 0, 1);
    CHECK(isotropy_weights(r, "min").first == 0);
    CHECK(isotropy_weights(r, "min").second == 1);
    CHECK(isotropy_weights(r, "max").first == -1);
    CHECK(isotropy_weights(r, "max").second == 0);
    CHECK_THROWS(isotropy_weights(g, "nope"));
}

TEST_CASE("compare") {
    auto g = fx::s2s2();
    CHECK(compare(g, "a", "b") == Order::Less);
    CHECK(compare(g, "c", "a") == Order::Greater);
    CHECK(compare(g, "b", "c") == Order::Incomparable);
    CHECK(compare(g, "a", "c") == Order::Less);  // joined by an edge
    CHECK(compare(g, "b", "b") == Order::EqualId);
    CHECK_THROWS(compare(g, "b", "zz"));
}

TEST_CASE("canonical_form") {
    auto g = fx::s2s2();
    Graph r{{pt("q", 1), pt("w", -3), pt("e", 3), pt("t", -1)}, {{"t", "e", 2}, {"q", "w", 2}}};
    CHECK(canonical_form(g, IsoMode::Exact) == canonical_form(r, IsoMode::Exact));
    auto s = shift(g, 3);
    CHECK(canonical_form(g, IsoMode::Exact) != canonical_form(s, IsoMode::Exact));
    CHECK(canonical_form(g, IsoMode::UpToShift) == canonical_form(s, IsoMode::UpToShift));
    CHECK(is_isomorphic(g, s, IsoMode::UpToShift));
    CHECK_FALSE(is_isomorphic(g, s, IsoMode::Exact));
    auto cp2 = minimal_graph(parse_family("cp2:1,1"));
    CHECK(canonical_form(g, IsoMode::Exact) != canonical_form(cp2, IsoMode::Exact));
    // edge weight matters
    Graph t = g;
    t.edges[0].k = 3;
    CHECK(canonical_form(g, IsoMode::Exact) != canonical_form(t, IsoMode::Exact));
    Graph bad{{surf("x", 0, 1)}, {}};
    CHECK_THROWS(canonical_form(bad, IsoMode::Exact));
}

TEST_CASE("property: canonical form ignores ids and vertex order") {
    std::mt19937_64 rng(3);
    EnumConfig cfg;
    cfg.seeds = {minimal_graph(parse_family("cp2:1,2")), minimal_graph(parse_family("ruled:0,1,1,1"))};
    cfg.max_blowups = 2;
    for (auto& e : enumerate(cfg)) {
        Graph g = e.graph;
        std::map<std::string, std::string> ren;
        for (size_t i = 0; i < g.vertices.size(); ++i) ren[g.vertices[i].id] = "x" + std::to_string(rng() % 1000) + "_" + std::to_string(i);
        for (auto& v : g.vertices) v.id = ren[v.id];
        for (auto& ed : g.edges) {
            ed.a = ren[ed.a];
            ed.b = ren[ed.b];
            if (rng() % 2) std::swap(ed.a, ed.b);
        }
        std::shuffle(g.vertices.begin(), g.vertices.end(), rng);
        std::shuffle(g.edges.begin(), g.edges.end(), rng);
        CHECK(canonical_form(g, IsoMode::Exact) == e.canonical);
    }
}

TEST_CASE("flip is an involution and swaps extremal weights") {
    auto g = minimal_graph(parse_family("cp2:1,2"));
    auto f = flip(g);
    CHECK(validate_graph(f).empty());
    CHECK(is_isomorphic(flip(f), g, IsoMode::Exact));
    CHECK_FALSE(is_isomorphic(f, g, IsoMode::UpToShift));
}

TEST_CASE("extend_graph") {
    auto e = extend_graph(fx::s2s2());
    CHECK(validate_extended(e).empty());
    auto br = branches(e);
    CHECK(br.size() == 2);
    auto t = extend_graph(fx::tent());
    CHECK(validate_extended(t).empty());
    // every interior vertex ends up in exactly two edges
    std::map<std::string, int> deg;
    for (auto& ed : t.base.edges) deg[ed.a]++, deg[ed.b]++;
    for (auto& ed : t.free_edges) deg[ed.a]++, deg[ed.b]++;
    CHECK(deg["v1"] == 2);
    CHECK(deg["v3"] == 2);
}

#include "hamgraph.h"

#include "hamgraph/classify.hpp"
#include "hamgraph/io.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct hg_graph {
    hg::Graph g;
};
struct hg_polygon {
    hg::Polygon p;
};

namespace {

thread_local std::string last_error, last_code;

hg_status fail(hg_status s, const std::string& code, const std::string& msg) {
    last_code = code;
    last_error = msg;
    return s;
}

hg_status status_for(const std::string& code) {
    if (code == "ParseError" || code == "BadRational") return HG_EPARSE;
    if (code == "BadSeed" || code == "BadGrid" || code == "BadArgument") return HG_EARG;
    if (code == "Internal") return HG_EINTERNAL;
    return HG_EDOMAIN;
}

template <class F>
hg_status guard(F&& f) {
    try {
        f();
        last_code.clear();
        last_error.clear();
        return HG_OK;
    } catch (const hg::Error& e) {
        return fail(status_for(e.code), e.code, e.what());
    } catch (const std::bad_alloc&) {
        return fail(HG_EINTERNAL, "OutOfMemory", "out of memory");
    } catch (const std::exception& e) {
        return fail(HG_EINTERNAL, "Internal", e.what());
    }
}

void need(const void* p, const char* what) {
    if (!p) throw hg::Error("BadArgument", std::string(what) + " is null");
}

char* dup(const std::string& s) {
    char* r = static_cast<char*>(std::malloc(s.size() + 1));
    if (!r) throw std::bad_alloc();
    std::memcpy(r, s.c_str(), s.size() + 1);
    return r;
}

char* dump(const hg::Json& j) { return dup(j.dump(2) + "\n"); }

hg::IsoMode iso_mode(int mode) {
    if (mode == 0) return hg::IsoMode::Exact;
    if (mode == 1) return hg::IsoMode::UpToShift;
    throw hg::Error("BadArgument", "mode must be 0 or 1");
}

hg::Json violations_json(const std::vector<hg::Violation>& v) {
    hg::Json a = hg::Json::array();
    for (const auto& x : v) a.push_back({{"rule", x.rule}, {"ids", x.ids}, {"message", x.message}});
    return {{"valid", v.empty()}, {"violations", a}};
}

}  // namespace

extern "C" {

const char* hg_last_error(void) { return last_error.c_str(); }
const char* hg_last_error_code(void) { return last_code.c_str(); }
void hg_string_free(char* s) { std::free(s); }

hg_status hg_graph_from_json(const char* json, hg_graph** out) {
    return guard([&] {
        need(json, "json"), need(out, "out");
        *out = new hg_graph{hg::graph_from(hg::parse_json(json))};
    });
}

hg_status hg_graph_to_json(const hg_graph* g, char** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        *out = dump(hg::graph_json(g->g));
    });
}

void hg_graph_free(hg_graph* g) { delete g; }

hg_status hg_polygon_from_json(const char* json, hg_polygon** out) {
    return guard([&] {
        need(json, "json"), need(out, "out");
        *out = new hg_polygon{hg::polygon_from(hg::parse_json(json))};
    });
}

hg_status hg_polygon_to_json(const hg_polygon* p, char** out) {
    return guard([&] {
        need(p, "polygon"), need(out, "out");
        *out = dump(hg::polygon_json(p->p));
    });
}

void hg_polygon_free(hg_polygon* p) { delete p; }

hg_status hg_graph_validate(const hg_graph* g, char** report) {
    return guard([&] {
        need(g, "graph"), need(report, "report");
        *report = dump(violations_json(hg::validate_graph(g->g)));
    });
}

hg_status hg_polygon_validate(const hg_polygon* p, char** report) {
    return guard([&] {
        need(p, "polygon"), need(report, "report");
        auto r = hg::validate_delzant(p->p);
        *report = dump({{"valid", r.ok}, {"problems", r.problems}});
    });
}

hg_status hg_graph_canonical(const hg_graph* g, int mode, char** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        *out = dup(hg::canonical_form(g->g, iso_mode(mode)) + "\n");
    });
}

hg_status hg_graph_isomorphic(const hg_graph* a, const hg_graph* b, int mode, int* result) {
    return guard([&] {
        need(a, "first graph"), need(b, "second graph"), need(result, "result");
        *result = hg::is_isomorphic(a->g, b->g, iso_mode(mode));
    });
}

hg_status hg_graph_weights(const hg_graph* g, char** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        hg::require_valid(g->g);
        hg::Json j = hg::Json::object();
        for (const auto& v : g->g.vertices) {
            auto w = hg::isotropy_weights(g->g, v.id);
            j[v.id] = {w.first, w.second};
        }
        *out = dump(j);
    });
}

hg_status hg_graph_extend(const hg_graph* g, char** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        *out = dump(hg::extended_json(hg::extend_graph(g->g)));
    });
}

hg_status hg_graph_density(const hg_graph* g, char** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        hg::require_valid(g->g);
        *out = dump(hg::density_json(hg::density(g->g)));
    });
}

hg_status hg_polygon_density(const hg_polygon* p, char** out) {
    return guard([&] {
        need(p, "polygon"), need(out, "out");
        *out = dump(hg::density_json(hg::polygon_pushforward(p->p)));
    });
}

hg_status hg_polygon_to_graph(const hg_polygon* p, hg_graph** out) {
    return guard([&] {
        need(p, "polygon"), need(out, "out");
        *out = new hg_graph{hg::polygon_to_graph(p->p)};
    });
}

hg_status hg_graph_to_polygon(const hg_graph* g, hg_polygon** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        *out = new hg_polygon{hg::graph_to_polygon(g->g, hg::extend_graph(g->g))};
    });
}

hg_status hg_polygon_normal_form(const hg_polygon* p, hg_polygon** out) {
    return guard([&] {
        need(p, "polygon"), need(out, "out");
        *out = new hg_polygon{hg::affine_normal_form(p->p)};
    });
}

hg_status hg_polygon_equivalent(const hg_polygon* a, const hg_polygon* b, int* result) {
    return guard([&] {
        need(a, "first polygon"), need(b, "second polygon"), need(result, "result");
        *result = hg::polygon_affine_equivalent(a->p, b->p);
    });
}

hg_status hg_polygon_fan(const hg_polygon* p, char** out) {
    return guard([&] {
        need(p, "polygon"), need(out, "out");
        hg::Fan f = hg::polygon_to_fan(p->p);
        hg::Json sites = hg::Json::array();
        for (size_t i : hg::fan_blowdown_sites(f)) sites.push_back(i);
        *out = dump({{"rays", hg::fan_json(f)}, {"blowdown_rays", sites}});
    });
}

hg_status hg_blowup_sites(const hg_graph* g, char** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        hg::Json a = hg::Json::array();
        for (const auto& s : hg::blowup_sites(g->g)) a.push_back(hg::site_json(s, hg::max_size(g->g, s)));
        *out = dump(a);
    });
}

hg_status hg_blowup(const hg_graph* g, const char* vertex, const char* lambda, hg_graph** out) {
    return guard([&] {
        need(g, "graph"), need(vertex, "vertex"), need(lambda, "lambda"), need(out, "out");
        hg::Q l = hg::parse_rational(lambda);
        *out = new hg_graph{hg::blowup(g->g, hg::site_at(g->g, vertex), l)};
    });
}

hg_status hg_blowdown_sites(const hg_graph* g, char** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        hg::Json a = hg::Json::array();
        for (const auto& s : hg::blowdown_sites(g->g)) a.push_back(hg::blowdown_json(s));
        *out = dump(a);
    });
}

hg_status hg_blowdown(const hg_graph* g, size_t site_index, hg_graph** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        auto sites = hg::blowdown_sites(g->g);
        if (site_index >= sites.size())
            throw hg::Error("NotASite", "site index " + std::to_string(site_index) + " out of range (" +
                                            std::to_string(sites.size()) + " sites)");
        *out = new hg_graph{hg::blowdown(g->g, sites[site_index])};
    });
}

hg_status hg_reduce(const hg_graph* g, char** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        auto r = hg::reduce_to_minimal(g->g);
        hg::Json steps = hg::Json::array();
        for (const auto& s : r.steps) steps.push_back(hg::blowdown_json(s));
        *out = dump({{"minimal", hg::graph_json(r.minimal)}, {"steps", steps}, {"recognized", hg::is_minimal(r.minimal)}});
    });
}

hg_status hg_minimal_graph(const char* family, hg_graph** out) {
    return guard([&] {
        need(family, "family"), need(out, "out");
        *out = new hg_graph{hg::minimal_graph(hg::parse_family(family))};
    });
}

hg_status hg_enumerate(const char* const* seeds, size_t n_seeds, int max_blowups, const char* grid, char** out) {
    return guard([&] {
        need(out, "out");
        if (n_seeds) need(seeds, "seeds");
        if (max_blowups < 0) throw hg::Error("BadArgument", "max_blowups must be non-negative");
        hg::EnumConfig cfg;
        cfg.max_blowups = max_blowups;
        std::vector<std::string> names;
        for (size_t i = 0; i < n_seeds; ++i) {
            need(seeds[i], "seed");
            names.push_back(seeds[i]);
            cfg.seeds.push_back(hg::minimal_graph(hg::parse_family(seeds[i])));
        }
        if (grid) {
            std::string s = grid;
            for (size_t pos = 0; pos <= s.size();) {
                size_t comma = s.find(',', pos);
                if (comma == std::string::npos) comma = s.size();
                cfg.grid.push_back(hg::parse_rational(s.substr(pos, comma - pos)));
                pos = comma + 1;
            }
        }
        auto entries = hg::enumerate(cfg);
        hg::Json classes = hg::Json::array();
        for (const auto& e : entries) {
            hg::Json prov = hg::Json::array();
            for (auto [seed, depth] : e.provenance) prov.push_back({{"seed", names[seed]}, {"blowups", depth}});
            classes.push_back({{"hash", e.canonical.substr(0, 16)},
                               {"blowups", e.depth},
                               {"provenance", prov},
                               {"graph", hg::graph_json(e.graph)}});
        }
        *out = dump({{"count", entries.size()}, {"classes", classes}});
    });
}

hg_status hg_classify(const hg_graph* g, char** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        *out = dump(hg::polygon_json(hg::classify_isolated(g->g)));
    });
}

hg_status hg_homology(const hg_graph* g, char** out) {
    return guard([&] {
        need(g, "graph"), need(out, "out");
        auto d = hg::intersection_matrix(g->g);
        hg::Json j = hg::intersection_json(d);
        hg::Json rows = hg::Json::object();
        for (size_t i = 0; i < d.curves.size(); ++i) rows[d.curves[i].key] = j["pairing"][i];
        j["rows"] = rows;
        j["values"] = hg::values_json(hg::class_values(g->g));
        *out = dump(j);
    });
}

hg_status hg_render(const char* kind, const char* json, const char* format, char** out) {
    return guard([&] {
        need(kind, "kind"), need(json, "json"), need(format, "format"), need(out, "out");
        std::string k = kind, f = format;
        if (f != "svg" && f != "dot") throw hg::Error("BadArgument", "format must be svg or dot");
        hg::Json j = hg::parse_json(json);
        if (k == "graph") {
            hg::Graph g = hg::graph_from(j);
            *out = dup(f == "svg" ? hg::render_graph_svg(g) : hg::render_graph_dot(g));
        } else if (f == "dot") {
            throw hg::Error("BadArgument", "dot output is only available for graphs");
        } else if (k == "polygon") {
            *out = dup(hg::render_polygon_svg(hg::polygon_from(j)));
        } else if (k == "density") {
            *out = dup(hg::render_density_svg(hg::density_from(j)));
        } else {
            throw hg::Error("BadArgument", "kind must be graph, polygon or density");
        }
    });
}

}  // extern "C"

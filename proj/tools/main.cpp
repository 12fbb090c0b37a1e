// Command-line front end; everything goes through the C API.
#include "hamgraph.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

struct Failure {
    int exit_code;
    std::string message;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{1, "cannot read " + path};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Failure{1, "cannot write " + path};
}

void check(hg_status s) {
    if (s == HG_OK) return;
    std::string code = hg_last_error_code();
    std::string msg = hg_last_error();
    throw Failure{s == HG_EDOMAIN ? 2 : 1, (code.empty() ? "" : code + ": ") + msg};
}

// RAII for library strings and handles
struct Str {
    char* p = nullptr;
    ~Str() { hg_string_free(p); }
    std::string s() const { return p ? p : ""; }
};
struct G {
    hg_graph* p = nullptr;
    ~G() { hg_graph_free(p); }
};
struct P {
    hg_polygon* p = nullptr;
    ~P() { hg_polygon_free(p); }
};

G load_graph(const std::string& path) {
    G g;
    check(hg_graph_from_json(read_input(path).c_str(), &g.p));
    return g;
}

P load_polygon(const std::string& path) {
    P p;
    check(hg_polygon_from_json(read_input(path).c_str(), &p.p));
    return p;
}

std::string graph_text(const G& g) {
    Str s;
    check(hg_graph_to_json(g.p, &s.p));
    return s.s();
}

int mode_flag(const std::string& m) {
    if (m == "exact") return 0;
    if (m == "shift") return 1;
    throw Failure{1, "--mode must be exact or shift"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decorated graphs, Delzant polygons and blow-ups of Hamiltonian circle actions on 4-manifolds"};
    app.require_subcommand(1);
    std::string in, out, mode = "exact", lambda, vertex, svg, grid, kind = "graph", format = "svg";
    std::vector<std::string> seeds, files;
    int max_blowups = 1;
    long site = -1;
    bool polygon = false;

    auto* validate = app.add_subcommand("validate", "check a graph (or a polygon with --polygon)");
    validate->add_option("--in", in, "input JSON (default stdin)");
    validate->add_flag("--polygon", polygon, "input is a polygon");

    auto* iso = app.add_subcommand("iso", "compare two graphs");
    iso->add_option("files", files, "two graph files")->required()->expected(2);
    iso->add_option("--mode", mode, "exact or shift");

    auto* dh = app.add_subcommand("dh", "Duistermaat-Heckman density");
    dh->add_option("--in", in);
    dh->add_flag("--polygon", polygon, "input is a polygon; push its area forward");
    dh->add_option("--svg", svg, "also write a plot");

    auto* p2g = app.add_subcommand("polygon2graph", "graph of a Delzant polygon");
    p2g->add_option("--in", in);
    auto* g2p = app.add_subcommand("graph2polygon", "Delzant polygon of an extendable graph");
    g2p->add_option("--in", in);

    auto* bu = app.add_subcommand("blowup", "blow up at a vertex; lists sites when --vertex is absent");
    bu->add_option("--in", in);
    bu->add_option("--vertex", vertex);
    bu->add_option("--lambda", lambda, "size p/q");

    auto* bd = app.add_subcommand("blowdown", "blow down; lists sites when --site is absent");
    bd->add_option("--in", in);
    bd->add_option("--site", site, "index into the site list");

    auto* mn = app.add_subcommand("minimal", "reduce to a minimal graph, or emit a family graph with --seed");
    mn->add_option("--in", in);
    mn->add_option("--seed", seeds, "family, e.g. cp2:1,2");

    auto* en = app.add_subcommand("enumerate", "blow-up closure of minimal graphs");
    en->add_option("--seed", seeds, "family, repeatable")->required();
    en->add_option("--max-blowups", max_blowups);
    en->add_option("--grid", grid, "sizes as fractions of the maximum, e.g. 1/4,1/2");

    auto* cl = app.add_subcommand("classify", "normal-form polygon of a graph with isolated fixed points");
    cl->add_option("--in", in);

    auto* ho = app.add_subcommand("homology", "intersection pairing and class values");
    ho->add_option("--in", in);

    auto* re = app.add_subcommand("render", "draw a graph, polygon or density");
    re->add_option("--in", in);
    re->add_option("--kind", kind, "graph, polygon or density");
    re->add_option("--format", format, "svg or dot");

    for (auto* sub : app.get_subcommands({})) sub->add_option("--out", out, "output path (default stdout; a directory for enumerate)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        Str s;
        if (validate->parsed()) {
            if (polygon) {
                P p = load_polygon(in);
                check(hg_polygon_validate(p.p, &s.p));
            } else {
                G g = load_graph(in);
                check(hg_graph_validate(g.p, &s.p));
            }
            write_output(out, s.s());
            return nlohmann::json::parse(s.s())["valid"].get<bool>() ? 0 : 2;
        }
        if (iso->parsed()) {
            G a = load_graph(files[0]), b = load_graph(files[1]);
            int r = 0;
            check(hg_graph_isomorphic(a.p, b.p, mode_flag(mode), &r));
            write_output(out, std::string("isomorphic: ") + (r ? "true" : "false") + "\n");
            return 0;
        }
        if (dh->parsed()) {
            if (polygon) {
                P p = load_polygon(in);
                check(hg_polygon_density(p.p, &s.p));
            } else {
                G g = load_graph(in);
                check(hg_graph_density(g.p, &s.p));
            }
            write_output(out, s.s());
            if (!svg.empty()) {
                Str pic;
                check(hg_render("density", s.p, "svg", &pic.p));
                write_output(svg, pic.s());
            }
            return 0;
        }
        if (p2g->parsed()) {
            P p = load_polygon(in);
            G g;
            check(hg_polygon_to_graph(p.p, &g.p));
            write_output(out, graph_text(g));
            return 0;
        }
        if (g2p->parsed()) {
            G g = load_graph(in);
            P p;
            check(hg_graph_to_polygon(g.p, &p.p));
            check(hg_polygon_to_json(p.p, &s.p));
            write_output(out, s.s());
            return 0;
        }
        if (bu->parsed()) {
            G g = load_graph(in);
            if (vertex.empty()) {
                check(hg_blowup_sites(g.p, &s.p));
                write_output(out, s.s());
                return 0;
            }
            if (lambda.empty()) throw Failure{1, "--lambda is required with --vertex"};
            G h;
            check(hg_blowup(g.p, vertex.c_str(), lambda.c_str(), &h.p));
            write_output(out, graph_text(h));
            return 0;
        }
        if (bd->parsed()) {
            G g = load_graph(in);
            if (site < 0) {
                check(hg_blowdown_sites(g.p, &s.p));
                write_output(out, s.s());
                return 0;
            }
            G h;
            check(hg_blowdown(g.p, static_cast<size_t>(site), &h.p));
            write_output(out, graph_text(h));
            return 0;
        }
        if (mn->parsed()) {
            if (!seeds.empty()) {
                if (seeds.size() != 1) throw Failure{1, "minimal takes one --seed"};
                G g;
                check(hg_minimal_graph(seeds[0].c_str(), &g.p));
                write_output(out, graph_text(g));
                return 0;
            }
            G g = load_graph(in);
            check(hg_reduce(g.p, &s.p));
            write_output(out, s.s());
            return 0;
        }
        if (en->parsed()) {
            std::vector<const char*> cs;
            for (const auto& x : seeds) cs.push_back(x.c_str());
            check(hg_enumerate(cs.data(), cs.size(), max_blowups, grid.empty() ? nullptr : grid.c_str(), &s.p));
            if (out.empty() || out == "-") {
                write_output(out, s.s());
                return 0;
            }
            namespace fs = std::filesystem;
            std::error_code ec;
            fs::create_directories(out, ec);
            if (ec) throw Failure{1, "cannot create " + out + ": " + ec.message()};
            auto doc = nlohmann::ordered_json::parse(s.s());
            nlohmann::ordered_json index = nlohmann::ordered_json::array();
            size_t i = 0;
            for (auto& c : doc["classes"]) {
                char name[32];
                std::snprintf(name, sizeof name, "class_%04zu.json", i++);
                write_output((fs::path(out) / name).string(), c["graph"].dump(2) + "\n");
                index.push_back({{"file", name}, {"hash", c["hash"]}, {"blowups", c["blowups"]}, {"provenance", c["provenance"]}});
            }
            write_output((fs::path(out) / "index.json").string(),
                         nlohmann::ordered_json{{"count", doc["count"]}, {"classes", index}}.dump(2) + "\n");
            return 0;
        }
        if (cl->parsed()) {
            G g = load_graph(in);
            check(hg_classify(g.p, &s.p));
            write_output(out, s.s());
            return 0;
        }
        if (ho->parsed()) {
            G g = load_graph(in);
            check(hg_homology(g.p, &s.p));
            write_output(out, s.s());
            return 0;
        }
        if (re->parsed()) {
            std::string text = read_input(in);
            check(hg_render(kind.c_str(), text.c_str(), format.c_str(), &s.p));
            write_output(out, s.s());
            return 0;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.exit_code;
    }
    return 1;
}

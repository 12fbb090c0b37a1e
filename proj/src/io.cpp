#include "hamgraph/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hg {

Json rational_json(const Q& q) { return str(q); }

Q rational_from(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Q(static_cast<long>(j.get<long long>()));
    throw Error("ParseError", "expected a rational as \"p/q\" or an integer, got " + j.dump());
}

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw Error("ParseError", std::string("missing field '") + name + "'");
    return j.at(name);
}

Json edge_json(const Edge& e) { return {{"a", e.a}, {"b", e.b}, {"k", e.k}}; }

}  // namespace

Json graph_json(const Graph& g) {
    Json vs = Json::array(), es = Json::array();
    for (const auto& v : g.vertices) {
        Json x = {{"id", v.id}, {"kind", v.kind == Kind::Surface ? "surface" : "point"}, {"moment", rational_json(v.moment)}};
        if (v.kind == Kind::Surface) {
            x["area"] = rational_json(v.area);
            x["genus"] = v.genus;
        }
        vs.push_back(x);
    }
    for (const auto& e : g.edges) es.push_back(edge_json(e));
    return {{"vertices", vs}, {"edges", es}};
}

Graph graph_from(const Json& j) {
    Graph g;
    try {
        for (const auto& x : field(j, "vertices")) {
            Vertex v;
            v.id = field(x, "id").get<std::string>();
            std::string kind = x.value("kind", std::string("point"));
            if (kind == "surface") v.kind = Kind::Surface;
            else if (kind != "point") throw Error("ParseError", "vertex kind must be point or surface");
            v.moment = rational_from(field(x, "moment"));
            if (v.kind == Kind::Surface) {
                v.area = rational_from(field(x, "area"));
                v.genus = x.value("genus", 0);
            }
            g.vertices.push_back(v);
        }
        if (j.contains("edges"))
            for (const auto& x : j.at("edges"))
                g.edges.push_back({field(x, "a").get<std::string>(), field(x, "b").get<std::string>(),
                                   static_cast<long>(field(x, "k").get<long long>())});
    } catch (const nlohmann::json::exception& e) {
        throw Error("ParseError", e.what());
    }
    return g;
}

Json extended_json(const ExtendedGraph& e) {
    Json j = graph_json(e.base);
    Json fs = Json::array();
    for (const auto& f : e.free_edges) fs.push_back(edge_json(f));
    j["free_edges"] = fs;
    return j;
}

Json polygon_json(const Polygon& p) {
    Json vs = Json::array();
    for (const auto& q : p.v) vs.push_back(Json::array({rational_json(q.first), rational_json(q.second)}));
    return {{"vertices", vs}};
}

Polygon polygon_from(const Json& j) {
    Polygon p;
    const Json& vs = j.is_array() ? j : field(j, "vertices");
    for (const auto& x : vs) {
        if (!x.is_array() || x.size() != 2) throw Error("ParseError", "polygon vertex must be a pair");
        p.v.push_back({rational_from(x[0]), rational_from(x[1])});
    }
    return p;
}

Json density_json(const PLDensity& d) {
    Json bs = Json::array();
    for (size_t i = 0; i < d.x.size(); ++i) bs.push_back({{"y", rational_json(d.x[i])}, {"value", rational_json(d.v[i])}});
    return {{"breakpoints", bs}, {"mass", rational_json(total_mass(d))}};
}

PLDensity density_from(const Json& j) {
    PLDensity d;
    for (const auto& b : field(j, "breakpoints")) {
        d.x.push_back(rational_from(field(b, "y")));
        d.v.push_back(rational_from(field(b, "value")));
    }
    return d;
}

Json blowdown_json(const BlowdownSite& s) {
    Json j = {{"pattern", pattern_name(s.pattern)}, {"ids", s.ids}, {"lambda", rational_json(s.lambda)}};
    j["side"] = s.at_max ? "max" : "min";
    if (s.pattern == Pattern::A || s.pattern == Pattern::C) j["weight"] = s.weight;
    return j;
}

BlowdownSite blowdown_from(const Json& j) {
    BlowdownSite s;
    std::string p = field(j, "pattern").get<std::string>();
    if (p == "A") s.pattern = Pattern::A;
    else if (p == "B") s.pattern = Pattern::B;
    else if (p == "C") s.pattern = Pattern::C;
    else if (p == "D") s.pattern = Pattern::D;
    else throw Error("ParseError", "unknown pattern " + p);
    s.ids = field(j, "ids").get<std::vector<std::string>>();
    s.lambda = rational_from(field(j, "lambda"));
    s.at_max = j.value("side", std::string("min")) == "max";
    s.weight = j.value("weight", 0L);
    return s;
}

Json site_json(const BlowupSite& s, const MaxSize& m) {
    Json j = {{"vertex", s.vertex}, {"tag", tag_name(s.tag)}};
    j["max_size"] = m.infinite ? Json("inf") : rational_json(m.sup);
    j["attainable"] = m.attainable;
    return j;
}

Json intersection_json(const IntersectionData& d) {
    Json curves = Json::array(), rows = Json::array(), basis = Json::array();
    for (const auto& c : d.curves) curves.push_back(c.key);
    for (const auto& r : d.pairing) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(to_ll(x));
        rows.push_back(row);
    }
    for (size_t b : d.basis) basis.push_back(d.curves[b].key);
    return {{"curves", curves}, {"pairing", rows}, {"basis", basis}};
}

Json values_json(const std::map<std::string, Q>& v) {
    Json j = Json::object();
    for (const auto& [k, x] : v) j[k] = rational_json(x);
    return j;
}

Json fan_json(const Fan& f) {
    Json j = Json::array();
    for (const auto& r : f) j.push_back(Json::array({to_ll(r.first), to_ll(r.second)}));
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("ParseError", e.what());
    }
}

// ---- rendering ----

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string esc(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '<') o += "&lt;";
        else if (c == '>') o += "&gt;";
        else if (c == '&') o += "&amp;";
        else if (c == '"') o += "&quot;";
        else o += c;
    }
    return o;
}

struct Frame {
    double x0, x1, y0, y1, w, h, pad = 40;
    double X(double x) const { return pad + (x1 == x0 ? 0.5 : (x - x0) / (x1 - x0)) * (w - 2 * pad); }
    double Y(double y) const { return h - pad - (y1 == y0 ? 0.5 : (y - y0) / (y1 - y0)) * (h - 2 * pad); }
};

std::string header(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
           "\" font-family=\"sans-serif\" font-size=\"11\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_graph_svg(const Graph& g) {
    require_valid(g);
    Shape s = shape_of(g);
    Q lo = g.vertices[s.min].moment, hi = g.vertices[s.max].moment;
    // columns: extrema in the middle, each interior path in its own column
    std::vector<double> col(g.vertices.size(), 0);
    auto paths = interior_paths(g, s);
    for (size_t i = 0; i < paths.size(); ++i) {
        double c = (i % 2 ? -1.0 : 1.0) * static_cast<double>(i / 2 + 1);
        for (int v : paths[i]) col[v] = c;
    }
    double span = std::max<double>(1, static_cast<double>(paths.size() / 2 + 1));
    Frame f{-span, span, lo.get_d(), hi.get_d(), 120 + 80 * 2 * span, 480};
    std::ostringstream o;
    o << header(f.w, f.h);
    for (const auto& e : g.edges) {
        int a = g.find(e.a), b = g.find(e.b);
        double ax = f.X(col[a]), ay = f.Y(g.vertices[a].moment.get_d());
        double bx = f.X(col[b]), by = f.Y(g.vertices[b].moment.get_d());
        o << "<line x1=\"" << num(ax) << "\" y1=\"" << num(ay) << "\" x2=\"" << num(bx) << "\" y2=\"" << num(by)
          << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num((ax + bx) / 2 + 6) << "\" y=\"" << num((ay + by) / 2) << "\">" << e.k << "</text>\n";
    }
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        const Vertex& v = g.vertices[i];
        double x = f.X(col[i]), y = f.Y(v.moment.get_d());
        if (v.kind == Kind::Surface) {
            o << "<ellipse cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" rx=\"40\" ry=\"7\" fill=\"black\"/>\n";
            o << "<text x=\"" << num(x + 46) << "\" y=\"" << num(y + 4) << "\">" << esc(v.id) << " y=" << str(v.moment)
              << " area=" << str(v.area) << " g=" << v.genus << "</text>\n";
        } else {
            o << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"4\" fill=\"black\"/>\n";
            o << "<text x=\"" << num(x + 8) << "\" y=\"" << num(y + 4) << "\">" << esc(v.id) << " y=" << str(v.moment)
              << "</text>\n";
        }
    }
    o << "</svg>\n";
    return o.str();
}

std::string render_graph_dot(const Graph& g) {
    std::ostringstream o;
    o << "graph G {\n  rankdir=BT;\n";
    for (const auto& v : g.vertices) {
        o << "  \"" << v.id << "\" [label=\"" << v.id << "\\ny=" << str(v.moment);
        if (v.kind == Kind::Surface) o << "\\narea=" << str(v.area) << " g=" << v.genus << "\", shape=box, style=filled";
        else o << "\", shape=point, width=0.1, xlabel=\"" << v.id << " y=" << str(v.moment);
        o << "\"];\n";
    }
    for (const auto& e : g.edges) o << "  \"" << e.a << "\" -- \"" << e.b << "\" [label=\"" << e.k << "\"];\n";
    o << "}\n";
    return o.str();
}

std::string render_polygon_svg(const Polygon& p) {
    require_delzant(p);
    Q x0 = p.v[0].first, x1 = x0, y0 = p.v[0].second, y1 = y0;
    for (const auto& q : p.v) {
        x0 = std::min(x0, q.first), x1 = std::max(x1, q.first);
        y0 = std::min(y0, q.second), y1 = std::max(y1, q.second);
    }
    Z gx0 = floor_q(x0), gy0 = floor_q(y0), gx1 = -floor_q(-x1), gy1 = -floor_q(-y1);
    double unit = 40;
    double w = Z(gx1 - gx0).get_d() * unit + 80, h = Z(gy1 - gy0).get_d() * unit + 80;
    auto X = [&](double x) { return 40 + (x - gx0.get_d()) * unit; };
    auto Y = [&](double y) { return h - 40 - (y - gy0.get_d()) * unit; };
    std::ostringstream o;
    o << header(w, h);
    o << "<polygon points=\"";
    for (size_t i = 0; i < p.v.size(); ++i)
        o << (i ? " " : "") << num(X(p.v[i].first.get_d())) << "," << num(Y(p.v[i].second.get_d()));
    o << "\" fill=\"#ddd\" stroke=\"black\"/>\n";
    for (Z x = gx0; x <= gx1; ++x)
        for (Z y = gy0; y <= gy1; ++y)
            o << "<circle cx=\"" << num(X(x.get_d())) << "\" cy=\"" << num(Y(y.get_d())) << "\" r=\"1.5\"/>\n";
    for (const auto& q : p.v)
        o << "<text x=\"" << num(X(q.first.get_d()) + 4) << "\" y=\"" << num(Y(q.second.get_d()) - 4) << "\">("
          << str(q.first) << "," << str(q.second) << ")</text>\n";
    o << "</svg>\n";
    return o.str();
}

std::string render_density_svg(const PLDensity& d) {
    if (d.empty()) throw Error("EmptyDensity", "nothing to plot");
    Q vmax = 0;
    for (const auto& v : d.v) vmax = std::max(vmax, v);
    Frame f{d.x.front().get_d(), d.x.back().get_d(), 0, std::max(1.0, vmax.get_d()), 560, 360};
    std::ostringstream o;
    o << header(f.w, f.h);
    o << "<line x1=\"" << num(f.X(f.x0)) << "\" y1=\"" << num(f.Y(0)) << "\" x2=\"" << num(f.X(f.x1)) << "\" y2=\""
      << num(f.Y(0)) << "\" stroke=\"gray\"/>\n";
    o << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    o << num(f.X(d.x.front().get_d())) << "," << num(f.Y(0));
    for (size_t i = 0; i < d.x.size(); ++i) o << " " << num(f.X(d.x[i].get_d())) << "," << num(f.Y(d.v[i].get_d()));
    o << " " << num(f.X(d.x.back().get_d())) << "," << num(f.Y(0)) << "\"/>\n";
    for (const auto& x : d.x) {
        double px = f.X(x.get_d());
        o << "<line x1=\"" << num(px) << "\" y1=\"" << num(f.Y(0)) << "\" x2=\"" << num(px) << "\" y2=\""
          << num(f.Y(0) + 5) << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num(px - 6) << "\" y=\"" << num(f.Y(0) + 18) << "\">" << str(x) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace hg

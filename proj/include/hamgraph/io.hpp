#pragma once

#include "hamgraph/blowup.hpp"
#include "hamgraph/density.hpp"
#include "hamgraph/homology.hpp"
#include "hamgraph/polygon.hpp"

#include <json.hpp>

#include <string>

namespace hg {

using Json = nlohmann::ordered_json;

Json rational_json(const Q& q);
Q rational_from(const Json& j);

Json graph_json(const Graph& g);
Graph graph_from(const Json& j);
Json extended_json(const ExtendedGraph& e);
Json polygon_json(const Polygon& p);
Polygon polygon_from(const Json& j);
Json density_json(const PLDensity& d);
PLDensity density_from(const Json& j);
Json blowdown_json(const BlowdownSite& s);
BlowdownSite blowdown_from(const Json& j);
Json site_json(const BlowupSite& s, const MaxSize& m);
Json intersection_json(const IntersectionData& d);
Json values_json(const std::map<std::string, Q>& v);
Json fan_json(const Fan& f);

// Parses text, rethrowing JSON errors as Error("ParseError").
Json parse_json(const std::string& text);

std::string render_graph_svg(const Graph& g);
std::string render_graph_dot(const Graph& g);
std::string render_polygon_svg(const Polygon& p);
std::string render_density_svg(const PLDensity& d);

}  // namespace hg

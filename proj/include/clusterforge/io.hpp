#pragma once

#include "clusterforge/cluster.hpp"
#include "clusterforge/gfan.hpp"
#include "clusterforge/qp.hpp"
#include "clusterforge/quiver.hpp"
#include "clusterforge/surface.hpp"

#include <json.hpp>

#include <string>

// Text and JSON codecs. Vertices and arrow ids are 1-based in every external
// format; array positions (ray indices of a fan) are 0-based. Every reader
// throws Error(ParseError) on malformed input.
namespace cf::io {

using json = nlohmann::json;

// `.quiver` text: first line n, then "i j m" per bundle (m parallel arrows
// i -> j). Blank lines and lines starting with '#' are ignored.
Quiver parse_quiver_text(const std::string& text);
std::string quiver_text(const Quiver& q);

json quiver_json(const Quiver& q);  // {"n", "arrows": [[i, j, m], ...]}
Quiver quiver_from_json(const json& j);

// Either format, told apart by a leading '{'.
Quiver parse_quiver(const std::string& text);
Quiver read_quiver_file(const std::string& path);

// Rows of b as integers. Reading also accepts decimal strings.
json b_matrix_json(const Quiver& q);
Quiver quiver_from_b_matrix_json(const json& j);

// {"quiver", "arrows": [{"from", "to", "name"}], "terms": [{"coeff", "cycle"}], "trunc"}.
// "quiver" is omitted while the arrows contain a 2-cycle. On reading,
// "arrows" wins over "quiver"; without it arrow ids follow the bundle
// expansion of "quiver".
json qp_json(const QP& qp);
QP qp_from_json(const json& j);
QP read_qp_file(const std::string& path);

// {"n", "b_matrix" (framed, 2n x 2n), "cluster": [Laurent text], "history"}.
json seed_json(const Seed& s);

json fan_json(const GFan& f);  // {"n", "rays", "cones", "status"}
GFan fan_from_json(const json& j);

json surface_json(const MarkedSurface& s);
MarkedSurface surface_from_json(const json& j);
json arc_json(const TaggedArc& a);
TaggedArc arc_from_json(const json& j);
json laminate_json(const Laminate& l);
Laminate laminate_from_json(const json& j);

// `.surf`: {"surface", "triangulation": [arcs], "lamination": [{"laminate", "count"}]};
// the last two are optional.
struct SurfFile {
    MarkedSurface surface;
    std::vector<TaggedArc> triangulation;
    Lamination lamination;
};
json surf_json(const SurfFile& f);
SurfFile surf_from_json(const json& j);

std::string read_file(const std::string& path);
json parse_json(const std::string& text);
// Compact dump with sorted keys and a trailing newline; the golden-file form.
std::string canonical(const json& j);

}  // namespace cf::io

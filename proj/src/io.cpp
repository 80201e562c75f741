#include "clusterforge/io.hpp"

#include "clusterforge/error.hpp"

#include <fstream>
#include <sstream>

namespace cf::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

long get_long(const json& j, const char* what) {
    if (j.is_number_integer()) return j.get<long>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            bad(std::string(what) + ": not an integer: " + s);
        }
        if (used != s.size()) bad(std::string(what) + ": not an integer: " + s);
        return v;
    }
    bad(std::string(what) + ": expected an integer");
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(e.what());
    }
}

std::string canonical(const json& j) { return j.dump() + "\n"; }

Quiver parse_quiver_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Arrow> arrows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1) bad("line " + std::to_string(lineno) + ": expected the vertex count");
        } else {
            int i, j, m;
            if (!(ls >> i >> j >> m)) bad("line " + std::to_string(lineno) + ": expected \"i j m\"");
            arrows.push_back({i - 1, j - 1, m});
        }
        std::string rest;
        if (ls >> rest) bad("line " + std::to_string(lineno) + ": trailing text");
    }
    if (n < 0) bad("empty quiver file");
    return Quiver::from_arrows(n, arrows);
}

std::string quiver_text(const Quiver& q) {
    std::ostringstream out;
    out << q.size() << "\n";
    for (const Arrow& a : q.arrows()) out << a.from + 1 << " " << a.to + 1 << " " << a.mult << "\n";
    return out.str();
}

json quiver_json(const Quiver& q) {
    json arrows = json::array();
    for (const Arrow& a : q.arrows()) arrows.push_back({a.from + 1, a.to + 1, a.mult});
    return {{"n", q.size()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
    const long n = get_long(field(j, "n"), "n");
    if (n < 1) bad("n must be positive");
    std::vector<Arrow> arrows;
    const json& list = field(j, "arrows");
    if (!list.is_array()) bad("\"arrows\" must be an array");
    for (const json& a : list) {
        if (!a.is_array() || a.size() != 3) bad("each arrow is [i, j, m]");
        arrows.push_back({static_cast<int>(get_long(a[0], "i")) - 1, static_cast<int>(get_long(a[1], "j")) - 1,
                          static_cast<int>(get_long(a[2], "m"))});
    }
    return Quiver::from_arrows(static_cast<int>(n), arrows);
}

Quiver parse_quiver(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return quiver_from_json(parse_json(text));
    return parse_quiver_text(text);
}

Quiver read_quiver_file(const std::string& path) { return parse_quiver(read_file(path)); }

json b_matrix_json(const Quiver& q) { return q.b_matrix(); }

Quiver quiver_from_b_matrix_json(const json& j) {
    if (!j.is_array() || j.empty()) bad("b_matrix must be a nonempty array of rows");
    std::vector<std::vector<int>> b;
    for (const json& row : j) {
        if (!row.is_array()) bad("b_matrix rows must be arrays");
        std::vector<int> r;
        for (const json& x : row) r.push_back(static_cast<int>(get_long(x, "b_matrix entry")));
        b.push_back(std::move(r));
    }
    return Quiver::from_b_matrix(b);
}

json qp_json(const QP& qp) {
    json j;
    if (!qp.has_two_cycles()) j["quiver"] = quiver_json(qp.quiver());
    json arrows = json::array();
    for (const QArrow& a : qp.arrows) arrows.push_back({{"from", a.from + 1}, {"to", a.to + 1}, {"name", a.name}});
    j["arrows"] = arrows;
    json terms = json::array();
    for (const auto& [cycle, c] : qp.potential.terms) {
        json ids = json::array();
        for (int a : cycle) ids.push_back(a + 1);
        terms.push_back({{"coeff", to_string(c)}, {"cycle", ids}});
    }
    j["terms"] = terms;
    j["trunc"] = qp.potential.trunc;
    return j;
}

QP qp_from_json(const json& j) {
    int trunc = 12;
    if (j.contains("trunc")) trunc = static_cast<int>(get_long(j.at("trunc"), "trunc"));
    if (trunc < 2) bad("trunc must be at least 2");
    QP qp;
    if (j.contains("arrows")) {
        int n = 0;
        if (j.contains("quiver")) n = static_cast<int>(get_long(field(j.at("quiver"), "n"), "n"));
        if (j.contains("n")) n = static_cast<int>(get_long(j.at("n"), "n"));
        for (const json& a : j.at("arrows")) {
            QArrow x;
            x.from = static_cast<int>(get_long(field(a, "from"), "from")) - 1;
            x.to = static_cast<int>(get_long(field(a, "to"), "to")) - 1;
            x.name = a.contains("name") ? a.at("name").get<std::string>() : "a" + std::to_string(qp.arrows.size() + 1);
            n = std::max({n, x.from + 1, x.to + 1});
            if (x.from < 0 || x.to < 0) bad("arrow endpoints are 1-based");
            qp.arrows.push_back(std::move(x));
        }
        qp.n = n;
        qp.potential.trunc = trunc;
    } else {
        qp = QP::from_quiver(quiver_from_json(field(j, "quiver")), trunc);
    }
    if (j.contains("terms"))
        for (const json& t : j.at("terms")) {
            Path cycle;
            for (const json& a : field(t, "cycle")) cycle.push_back(static_cast<int>(get_long(a, "arrow id")) - 1);
            const json& c = field(t, "coeff");
            const Rational coeff = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(get_long(c, "coeff"));
            qp.add_term(cycle, coeff);
        }
    return qp;
}

QP read_qp_file(const std::string& path) { return qp_from_json(parse_json(read_file(path))); }

json seed_json(const Seed& s) {
    json cluster = json::array();
    for (const auto& x : s.cluster) cluster.push_back(x.to_string());
    json history = json::array();
    for (int k : s.history) history.push_back(k + 1);
    return {{"n", s.rank()}, {"b_matrix", s.framed.b_matrix()}, {"cluster", cluster}, {"history", history}};
}

json fan_json(const GFan& f) {
    return {{"n", f.n}, {"rays", f.rays}, {"cones", f.cones}, {"status", to_string(f.status)}};
}

GFan fan_from_json(const json& j) {
    const int n = static_cast<int>(get_long(field(j, "n"), "n"));
    std::vector<GVector> rays;
    for (const json& r : field(j, "rays")) {
        GVector v;
        for (const json& x : r) v.push_back(get_long(x, "ray entry"));
        if (static_cast<int>(v.size()) != n) bad("ray of the wrong length");
        rays.push_back(std::move(v));
    }
    std::vector<std::vector<GVector>> cones;
    for (const json& c : field(j, "cones")) {
        std::vector<GVector> cone;
        for (const json& i : c) {
            const long idx = get_long(i, "ray index");
            if (idx < 0 || idx >= static_cast<long>(rays.size())) bad("ray index out of range");
            cone.push_back(rays[static_cast<std::size_t>(idx)]);
        }
        if (static_cast<int>(cone.size()) != n) bad("cone with the wrong number of rays");
        cones.push_back(std::move(cone));
    }
    FanStatus status = FanStatus::Exhausted;
    if (j.contains("status")) {
        const std::string s = j.at("status").get<std::string>();
        if (s == "Truncated") status = FanStatus::Truncated;
        else if (s != "Exhausted") bad("unknown fan status " + s);
    }
    return GFan::from_cones(n, cones, status);
}

json surface_json(const MarkedSurface& s) {
    switch (s.kind) {
        case SurfaceKind::Disc: return {{"family", "disc"}, {"m", s.m}};
        case SurfaceKind::PuncturedDisc: return {{"family", "punctured_disc"}, {"m", s.m}};
        case SurfaceKind::Annulus: return {{"family", "annulus"}, {"p", s.m}, {"q", s.q}};
    }
    return {};
}

MarkedSurface surface_from_json(const json& j) {
    const std::string family = field(j, "family").get<std::string>();
    if (family == "disc") return MarkedSurface::disc(static_cast<int>(get_long(field(j, "m"), "m")));
    if (family == "punctured_disc") return MarkedSurface::punctured_disc(static_cast<int>(get_long(field(j, "m"), "m")));
    if (family == "annulus")
        return MarkedSurface::annulus(static_cast<int>(get_long(field(j, "p"), "p")),
                                      static_cast<int>(get_long(field(j, "q"), "q")));
    bad("unknown surface family " + family);
}

namespace {

const std::pair<ArcKind, const char*> kArcNames[] = {
    {ArcKind::Chord, "chord"}, {ArcKind::Radius, "radius"}, {ArcKind::Bridge, "bridge"},
    {ArcKind::Outer, "outer"}, {ArcKind::Inner, "inner"},
};

}  // namespace

json arc_json(const TaggedArc& a) {
    for (const auto& [kind, name] : kArcNames)
        if (kind == a.kind) {
            if (a.kind == ArcKind::Radius)
                return {{"kind", name}, {"a", a.a}, {"tag", a.tag == Tag::Plain ? "plain" : "notched"}};
            return {{"kind", name}, {"a", a.a}, {"b", a.b}};
        }
    bad("arc kind has no external form");
}

TaggedArc arc_from_json(const json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    for (const auto& [k, name] : kArcNames)
        if (kind == name) {
            TaggedArc a;
            a.kind = k;
            a.a = static_cast<int>(get_long(field(j, "a"), "a"));
            if (k == ArcKind::Radius) {
                const std::string tag = j.contains("tag") ? j.at("tag").get<std::string>() : "plain";
                if (tag != "plain" && tag != "notched") bad("tag must be plain or notched");
                a.tag = tag == "plain" ? Tag::Plain : Tag::Notched;
            } else {
                a.b = get_long(field(j, "b"), "b");
            }
            return a;
        }
    bad("unknown arc kind " + kind);
}

json laminate_json(const Laminate& l) {
    switch (l.kind) {
        case LaminateKind::Elementary: return {{"kind", "elementary"}, {"arc", arc_json(l.arc)}};
        case LaminateKind::Exceptional: return {{"kind", "exceptional"}, {"segment", l.segment}};
        case LaminateKind::ClosedCore: return {{"kind", "core"}};
    }
    return {};
}

Laminate laminate_from_json(const json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "elementary") return Laminate::elementary(arc_from_json(field(j, "arc")));
    if (kind == "exceptional") return Laminate::exceptional(static_cast<int>(get_long(field(j, "segment"), "segment")));
    if (kind == "core") return Laminate::closed_core();
    bad("unknown laminate kind " + kind);
}

json surf_json(const SurfFile& f) {
    json j{{"surface", surface_json(f.surface)}};
    json t = json::array();
    for (const auto& a : f.triangulation) t.push_back(arc_json(a));
    j["triangulation"] = t;
    json l = json::array();
    for (const auto& [lam, c] : f.lamination) l.push_back({{"laminate", laminate_json(lam)}, {"count", c}});
    j["lamination"] = l;
    return j;
}

SurfFile surf_from_json(const json& j) {
    SurfFile f;
    f.surface = surface_from_json(field(j, "surface"));
    if (j.contains("triangulation"))
        for (const json& a : j.at("triangulation")) f.triangulation.push_back(arc_from_json(a));
    if (j.contains("lamination"))
        for (const json& e : j.at("lamination")) {
            const int count = e.contains("count") ? static_cast<int>(get_long(e.at("count"), "count")) : 1;
            if (count < 1) bad("laminate counts are positive");
            f.lamination.emplace_back(laminate_from_json(field(e, "laminate")), count);
        }
    return f;
}

}  // namespace cf::io

// clusterforge command-line interface.
//
// Exit status: 0 success, 1 domain error (bad input, failed check),
// 2 inconclusive (budget reached, Unknown verdict, density below threshold),
// 64 usage error.
#include "clusterforge/api.hpp"
#include "clusterforge/catalog.hpp"
#include "clusterforge/cluster.hpp"
#include "clusterforge/error.hpp"
#include "clusterforge/gfan.hpp"
#include "clusterforge/io.hpp"
#include "clusterforge/qp.hpp"
#include "clusterforge/quiver.hpp"
#include "clusterforge/surface.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cf;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 64;

bool g_json = false;

struct QuiverSource {
    std::string file;
    std::string named;

    void add_to(CLI::App* cmd) {
        cmd->add_option("file", file, "quiver file (.quiver text or JSON)");
        cmd->add_option("--named", named, "catalog quiver instead of a file, e.g. X7, E6^(1), K3");
    }
    Quiver load() const {
        if (!named.empty()) return catalog::by_name(named);
        if (file.empty()) throw CLI::RequiredError("file or --named");
        return io::read_quiver_file(file);
    }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

template <class T>
std::string vec_text(const std::vector<T>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) {
        std::ostringstream s;
        s << x;
        parts.push_back(s.str());
    }
    return "(" + join(parts, ", ") + ")";
}

std::string rational_vec_text(const std::vector<Rational>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(to_string(x));
    return "(" + join(parts, ", ") + ")";
}

std::string history_text(const std::vector<int>& h) {
    std::vector<std::string> parts;
    for (int k : h) parts.push_back(std::to_string(k + 1));
    return "[" + join(parts, ", ") + "]";
}

json history_json(const std::vector<int>& h) {
    json a = json::array();
    for (int k : h) a.push_back(k + 1);
    return a;
}

void emit(const json& j, const std::string& text) {
    if (g_json) std::cout << io::canonical(j);
    else std::cout << text;
}

std::vector<Rational> parse_vector(const std::string& s) {
    std::vector<Rational> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" ");
        const auto e = item.find_last_not_of(" ");
        if (b == std::string::npos) throw Error(Errc::ParseError, "empty vector entry");
        v.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    if (v.empty()) throw Error(Errc::ParseError, "empty vector");
    return v;
}

MarkedSurface parse_surface(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw Error(Errc::ParseError, "surface is family:marks, e.g. disc:5");
    const std::string family = s.substr(0, colon);
    const std::string rest = s.substr(colon + 1);
    try {
        if (family == "disc") return MarkedSurface::disc(std::stoi(rest));
        if (family == "punctured-disc") return MarkedSurface::punctured_disc(std::stoi(rest));
        if (family == "annulus") {
            const auto comma = rest.find(',');
            if (comma == std::string::npos) throw Error(Errc::ParseError, "annulus:p,q");
            return MarkedSurface::annulus(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
        }
    } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "bad mark count in " + s);
    }
    throw Error(Errc::ParseError, "unknown surface family " + family + " (disc, punctured-disc, annulus)");
}

int vertex_arg(int k, int n) {
    if (k < 1 || k > n) throw Error(Errc::InvalidVertex, "vertex " + std::to_string(k) + " outside 1.." + std::to_string(n));
    return k - 1;
}

TaggedTriangulation load_triangulation(const io::SurfFile& f) {
    TaggedTriangulation t{f.surface, f.triangulation};
    validate_triangulation(t);
    return t;
}

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::PrecisionExhausted:
        case Errc::SearchExhausted: return kInconclusive;
        default: return kDomain;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clusterforge: quiver mutation, quivers with potentials, cluster algebras, g-vector fans, surfaces"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "machine-readable JSON on stdout");
    app.fallthrough();
    int status = kOk;

    // mutate
    auto* c_mutate = app.add_subcommand("mutate", "mutate a quiver at one or more vertices (in order)");
    QuiverSource mutate_src;
    mutate_src.add_to(c_mutate);
    std::vector<int> mutate_at;
    c_mutate->add_option("--at", mutate_at, "vertex (1-based), repeatable")->required();
    c_mutate->callback([&] {
        Quiver q = mutate_src.load();
        for (int k : mutate_at) q = mutate(q, vertex_arg(k, q.size()));
        emit(io::quiver_json(q), io::quiver_text(q));
    });

    // class
    auto* c_class = app.add_subcommand("class", "enumerate the mutation class up to isomorphism");
    QuiverSource class_src;
    class_src.add_to(c_class);
    std::size_t class_budget = 100000;
    int class_weight = 3;
    bool class_serial = false;
    c_class->add_option("--budget", class_budget, "maximum number of classes")->capture_default_str();
    c_class->add_option("--max-weight", class_weight, "stop at an arrow of this multiplicity")->capture_default_str();
    c_class->add_flag("--serial", class_serial, "use the serial frontier expansion");
    c_class->callback([&] {
        const Quiver q = class_src.load();
        const auto r = mutation_class(q, class_budget, class_weight, class_serial ? Exec::Serial : Exec::Parallel);
        json reps = json::array();
        for (const auto& rep : r.representatives) reps.push_back(io::quiver_json(rep));
        std::ostringstream text;
        text << "size " << r.representatives.size() << "\nstatus " << to_string(r.status) << "\n";
        if (r.status == ClassStatus::MultiplicityBlowup)
            text << "blowup " << r.blowup_from + 1 << " " << r.blowup_to + 1 << " " << r.blowup_weight << "\n";
        emit({{"size", r.representatives.size()}, {"status", to_string(r.status)}, {"representatives", reps}},
             text.str());
        if (r.status == ClassStatus::BudgetExceeded) status = kInconclusive;
    });

    // classify
    auto* c_classify = app.add_subcommand("classify", "mutation type: Dynkin, affine, exceptional, other finite, infinite");
    QuiverSource classify_src;
    classify_src.add_to(c_classify);
    std::size_t classify_budget = 100000;
    c_classify->add_option("--budget", classify_budget, "mutation class budget")->capture_default_str();
    c_classify->callback([&] {
        const Classification c = classify(classify_src.load(), classify_budget);
        emit({{"verdict", to_string(c)}, {"type", to_string(c.type)}, {"name", c.name}, {"class_size", c.class_size}},
             to_string(c) + "\n");
        if (c.type == MutationType::Unknown) status = kInconclusive;
    });

    // qp-mutate
    auto* c_qpm = app.add_subcommand("qp-mutate", "mutate a quiver with potential");
    std::string qpm_file;
    std::vector<int> qpm_at;
    c_qpm->add_option("file", qpm_file, ".qp JSON file")->required();
    c_qpm->add_option("--at", qpm_at, "vertex (1-based), repeatable")->required();
    c_qpm->callback([&] {
        QP qp = io::read_qp_file(qpm_file);
        for (int k : qpm_at) qp = qp_mutate(qp, vertex_arg(k, qp.n));
        std::ostringstream text;
        text << io::quiver_text(qp.quiver());
        for (const auto& [cycle, c] : qp.potential.terms) text << "term " << to_string(c) << " " << qp.term_text(cycle) << "\n";
        emit(io::qp_json(qp), text.str());
    });

    // jacobian-dim
    auto* c_jac = app.add_subcommand("jacobian-dim", "dimensions of the truncated Jacobian algebra");
    std::string jac_file;
    int jac_trunc = 10;
    c_jac->add_option("file", jac_file, ".qp JSON file")->required();
    c_jac->add_option("--trunc", jac_trunc, "truncation degree N (paths of length >= N vanish)")->capture_default_str();
    c_jac->callback([&] {
        const DimProfile p = jacobian_dim_truncated(io::read_qp_file(jac_file), jac_trunc);
        emit({{"dims", p.dims},
              {"verdict", p.verdict == Verdict::StabilizedAt ? "StabilizedAt" : "GrowingAtBound"},
              {"stable_from", p.stable_from}},
             to_string(p) + "\n");
        if (p.verdict == Verdict::GrowingAtBound) status = kInconclusive;
    });

    // cluster-vars
    auto* c_vars = app.add_subcommand("cluster-vars", "cluster variables with principal coefficients");
    QuiverSource vars_src;
    vars_src.add_to(c_vars);
    int vars_depth = 3;
    std::size_t vars_budget = 100000;
    c_vars->add_option("--depth", vars_depth, "mutation depth")->capture_default_str();
    c_vars->add_option("--budget", vars_budget, "seed budget")->capture_default_str();
    c_vars->callback([&] {
        const auto vars = cluster_variables(vars_src.load(), vars_depth, vars_budget);
        json arr = json::array();
        std::ostringstream text;
        for (const auto& v : vars) {
            arr.push_back({{"g", v.g}, {"value", v.value.to_string()}, {"history", history_json(v.history)}});
            text << "g=" << vec_text(v.g) << " " << v.value.to_string() << "\n";
        }
        emit(arr, text.str());
    });

    // gfan
    auto* c_gfan = app.add_subcommand("gfan", "g-vector fan of all clusters found");
    QuiverSource gfan_src;
    gfan_src.add_to(c_gfan);
    std::size_t gfan_budget = 100000;
    int gfan_depth = -1;
    std::string gfan_out;
    c_gfan->add_option("--budget", gfan_budget, "cluster budget")->capture_default_str();
    c_gfan->add_option("--depth", gfan_depth, "maximum mutation depth (-1: none)")->capture_default_str();
    c_gfan->add_option("--out", gfan_out, "write fan.json here");
    c_gfan->callback([&] {
        const GFan f = build_gfan(gfan_src.load(), gfan_budget, gfan_depth);
        if (!gfan_out.empty()) {
            std::ofstream out(gfan_out);
            if (!out) throw Error(Errc::ParseError, "cannot write " + gfan_out);
            out << io::canonical(io::fan_json(f));
        }
        std::ostringstream text;
        text << "rays " << f.rays.size() << "\ncones " << f.cones.size() << "\nstatus " << to_string(f.status) << "\n";
        emit(io::fan_json(f), text.str());
        if (f.status == FanStatus::Truncated) status = kInconclusive;
    });

    // check-complete
    auto* c_cc = app.add_subcommand("check-complete", "decide whether a fan covers the whole space");
    std::string cc_file;
    c_cc->add_option("file", cc_file, "fan.json")->required();
    c_cc->callback([&] {
        const GFan f = io::fan_from_json(io::parse_json(io::read_file(cc_file)));
        const CompletenessReport r = is_complete(f);
        json w = json::array();
        for (const auto& x : r.witness) w.push_back(to_string(x));
        std::string text = to_string(r.verdict) + "\n";
        if (!r.witness.empty()) text += "witness " + rational_vec_text(r.witness) + "\n";
        emit({{"verdict", to_string(r.verdict)}, {"witness", w}}, text);
        if (r.verdict == Completeness::Unknown) status = kInconclusive;
    });

    // check-dense
    auto* c_cd = app.add_subcommand("check-dense", "estimate the fraction of directions covered by the fan");
    QuiverSource cd_src;
    cd_src.add_to(c_cd);
    int cd_samples = 1000, cd_depth = 20;
    std::uint64_t cd_seed = 0;
    double cd_threshold = 0.999;
    bool cd_serial = false;
    c_cd->add_option("--samples", cd_samples, "number of random directions")->capture_default_str();
    c_cd->add_option("--depth", cd_depth, "greedy descent depth")->capture_default_str();
    c_cd->add_option("--seed", cd_seed, "random seed")->required();
    c_cd->add_option("--threshold", cd_threshold, "exit 0 only at or above this fraction")->capture_default_str();
    c_cd->add_flag("--serial", cd_serial, "evaluate samples serially");
    c_cd->callback([&] {
        if (cd_samples < 1) throw Error(Errc::ParseError, "--samples must be positive");
        const double d = density_estimate(cd_src.load(), cd_samples, cd_depth, cd_seed,
                                          cd_serial ? Exec::Serial : Exec::Parallel);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", d);
        emit({{"density", buf}, {"samples", cd_samples}, {"depth", cd_depth}, {"seed", cd_seed}},
             std::string("density ") + buf + "\n");
        if (d < cd_threshold) status = kInconclusive;
    });

    // contains
    auto* c_contains = app.add_subcommand("contains", "is a vector inside some cone of the g-fan");
    QuiverSource contains_src;
    contains_src.add_to(c_contains);
    std::string contains_v;
    int contains_depth = 50;
    bool contains_all = false;
    c_contains->add_option("--v", contains_v, "comma separated rationals, e.g. -1,1/2")->required();
    c_contains->add_option("--depth", contains_depth, "mutation depth")->capture_default_str();
    c_contains->add_flag("--exhaustive", contains_all, "search every cluster within the depth instead of descending");
    c_contains->callback([&] {
        const Quiver q = contains_src.load();
        const std::vector<Rational> v = parse_vector(contains_v);
        if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
            throw Error(Errc::InvalidVertex, "v must be nonzero");
        const Membership m = contains_all ? contains_point_exhaustive(q, v, contains_depth)
                                          : contains_point(q, v, contains_depth);
        const std::string verdict = m.in_cone ? "InCone" : "NotFoundWithin(" + std::to_string(contains_depth) + ")";
        json coords = json::array();
        for (const auto& c : m.coords) coords.push_back(to_string(c));
        std::string text = verdict + "\n";
        if (m.in_cone) text += "history " + history_text(m.history) + "\ncoords " + rational_vec_text(m.coords) + "\n";
        emit({{"verdict", verdict}, {"history", history_json(m.history)}, {"coords", coords}}, text);
        if (!m.in_cone) status = kInconclusive;
    });

    // surface
    auto* c_surf = app.add_subcommand("surface", "tagged arcs, triangulations and laminations");
    c_surf->require_subcommand(1);
    std::string surf_spec, surf_file;
    int surf_winding = 2, surf_arc = 0;
    bool surf_snake = false;

    auto* s_arcs = c_surf->add_subcommand("arcs", "list tagged arcs");
    s_arcs->add_option("--surface", surf_spec, "disc:m, punctured-disc:m or annulus:p,q")->required();
    s_arcs->add_option("--winding", surf_winding, "annulus winding bound")->capture_default_str();
    s_arcs->callback([&] {
        const MarkedSurface s = parse_surface(surf_spec);
        json arr = json::array();
        std::string text;
        for (const auto& a : enumerate_tagged_arcs(s, surf_winding)) {
            arr.push_back(io::arc_json(a));
            text += to_string(a) + "\n";
        }
        emit(arr, text);
    });

    auto* s_tri = c_surf->add_subcommand("triangulate", "write a .surf with the standard triangulation");
    s_tri->add_option("--surface", surf_spec, "disc:m, punctured-disc:m or annulus:p,q")->required();
    s_tri->add_flag("--snake", surf_snake, "zigzag triangulation of a disc");
    s_tri->callback([&] {
        const MarkedSurface s = parse_surface(surf_spec);
        const TaggedTriangulation t = surf_snake ? snake_triangulation(s) : standard_triangulation(s);
        std::cout << io::canonical(io::surf_json({s, t.arcs, {}}));
    });

    auto* s_flip = c_surf->add_subcommand("flip", "flip the arc at a position (1-based) and write the new .surf");
    s_flip->add_option("file", surf_file, ".surf file")->required();
    s_flip->add_option("--arc", surf_arc, "position of the arc in the triangulation")->required();
    s_flip->callback([&] {
        io::SurfFile f = io::surf_from_json(io::parse_json(io::read_file(surf_file)));
        const TaggedTriangulation t = load_triangulation(f);
        if (surf_arc < 1 || surf_arc > static_cast<int>(t.arcs.size()))
            throw Error(Errc::ArcNotInTriangulation, "no arc at position " + std::to_string(surf_arc));
        f.triangulation = flip(t, surf_arc - 1).arcs;
        std::cout << io::canonical(io::surf_json(f));
    });

    auto* s_quiver = c_surf->add_subcommand("quiver", "quiver of the triangulation in a .surf");
    s_quiver->add_option("file", surf_file, ".surf file")->required();
    s_quiver->callback([&] {
        const Quiver q = quiver_of(load_triangulation(io::surf_from_json(io::parse_json(io::read_file(surf_file)))));
        emit(io::quiver_json(q), io::quiver_text(q));
    });

    auto* s_shear = c_surf->add_subcommand("shear", "shear coordinates of the lamination in a .surf");
    s_shear->add_option("file", surf_file, ".surf file")->required();
    s_shear->callback([&] {
        const io::SurfFile f = io::surf_from_json(io::parse_json(io::read_file(surf_file)));
        const TaggedTriangulation t = load_triangulation(f);
        for (std::size_t i = 0; i < f.lamination.size(); ++i)
            for (std::size_t j = i; j < f.lamination.size(); ++j)
                if (!laminates_compatible(f.surface, f.lamination[i].first, f.lamination[j].first))
                    throw Error(Errc::InvalidArc, to_string(f.lamination[i].first) + " crosses " +
                                                      to_string(f.lamination[j].first));
        const std::vector<long> b = shear_coordinates(t, f.lamination);
        emit({{"shear", b}}, vec_text(b) + "\n");
    });

    // verify
    auto* c_verify = app.add_subcommand("verify", "check arcs against g-vectors along parallel flips and mutations");
    std::string verify_surface;
    int verify_depth = -1, verify_winding = 3;
    std::size_t verify_budget = 100000;
    bool verify_snake = false;
    c_verify->add_option("--surface", verify_surface, "disc:m, punctured-disc:m or annulus:p,q")->required();
    c_verify->add_flag("--snake", verify_snake, "start from the zigzag triangulation of a disc");
    c_verify->add_option("--depth", verify_depth, "maximum number of flips (-1: none)")->capture_default_str();
    c_verify->add_option("--winding", verify_winding, "annulus winding bound")->capture_default_str();
    c_verify->add_option("--budget", verify_budget, "maximum number of triangulations")->capture_default_str();
    c_verify->callback([&] {
        const MarkedSurface s = parse_surface(verify_surface);
        const TaggedTriangulation t = verify_snake ? snake_triangulation(s) : standard_triangulation(s);
        const CorrespondenceReport r = verify_arc_gvector_correspondence(t, verify_budget, verify_depth, verify_winding);
        std::ostringstream text;
        text << "triangulations " << r.triangulations << "\narcs " << r.arcs << "\ng-vector mismatches "
             << r.gvector_mismatches << "\nquiver mismatches " << r.quiver_mismatches << "\n"
             << (r.exhausted ? "exhausted" : "bounded") << "\n";
        for (const auto& f : r.failures) text << "failure " << f << "\n";
        emit({{"triangulations", r.triangulations},
              {"arcs", r.arcs},
              {"gvector_mismatches", r.gvector_mismatches},
              {"quiver_mismatches", r.quiver_mismatches},
              {"exhausted", r.exhausted},
              {"failures", r.failures}},
             text.str());
        if (!r.ok()) status = kDomain;
    });

    // serve
    auto* c_serve = app.add_subcommand("serve", "JSON-over-HTTP service for the explorer");
    std::string serve_host = "127.0.0.1";
    int serve_port = 8080;
    c_serve->add_option("--host", serve_host, "bind address")->capture_default_str();
    c_serve->add_option("--port", serve_port, "port")->capture_default_str();
    c_serve->callback([&] {
        std::cerr << "listening on " << serve_host << ":" << serve_port << "\n";
        if (!api::serve(serve_host, serve_port)) throw Error(Errc::ParseError, "cannot bind " + serve_host);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const io::json::exception& e) {
        std::cerr << "error: ParseError: " << e.what() << "\n";
        return kDomain;
    }
    return status;
}

#include "clusterforge/surface.hpp"

#include "clusterforge/error.hpp"
#include "clusterforge/rational.hpp"
#include "surface_internal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace cf {

using detail::Chord;

MarkedSurface MarkedSurface::disc(int m) {
    if (m < 4) throw Error(Errc::ExcludedSurface, "a disc needs at least 4 marks");
    return {SurfaceKind::Disc, m, 0};
}

MarkedSurface MarkedSurface::punctured_disc(int m) {
    if (m < 2) throw Error(Errc::ExcludedSurface, "a once-punctured monogon is excluded");
    return {SurfaceKind::PuncturedDisc, m, 0};
}

MarkedSurface MarkedSurface::annulus(int p, int q) {
    if (p < 1 || q < 1) throw Error(Errc::ExcludedSurface, "both boundary circles of an annulus need a mark");
    return {SurfaceKind::Annulus, p, q};
}

int MarkedSurface::rank() const {
    switch (kind) {
        case SurfaceKind::Disc: return m - 3;
        case SurfaceKind::PuncturedDisc: return m;
        case SurfaceKind::Annulus: return m + q;
    }
    return 0;
}

std::string MarkedSurface::name() const {
    switch (kind) {
        case SurfaceKind::Disc: return "Disc(" + std::to_string(m) + ")";
        case SurfaceKind::PuncturedDisc: return "PuncturedDisc(" + std::to_string(m) + ")";
        case SurfaceKind::Annulus: return "Annulus(" + std::to_string(m) + "," + std::to_string(q) + ")";
    }
    return "?";
}

std::string to_string(const TaggedArc& arc) {
    const std::string ab = "(" + std::to_string(arc.a) + "," + std::to_string(arc.b) + ")";
    switch (arc.kind) {
        case ArcKind::Chord: return "chord" + ab;
        case ArcKind::Radius:
            return "radius(" + std::to_string(arc.a) + (arc.tag == Tag::Plain ? ",plain)" : ",notched)");
        case ArcKind::Bridge: return "bridge" + ab;
        case ArcKind::Outer: return "outer" + ab;
        case ArcKind::Inner: return "inner" + ab;
        case ArcKind::Loop: return "loop" + ab;
    }
    return "?";
}

std::string to_string(const Laminate& l) {
    switch (l.kind) {
        case LaminateKind::Elementary: return "e(" + to_string(l.arc) + ")";
        case LaminateKind::Exceptional: return "exceptional(" + std::to_string(l.segment) + ")";
        case LaminateKind::ClosedCore: return "core";
    }
    return "?";
}

long winding(const MarkedSurface& s, const TaggedArc& arc) {
    if (s.kind != SurfaceKind::Annulus || arc.kind != ArcKind::Bridge) return 0;
    long w = arc.b / s.q;
    if (arc.b % s.q != 0 && arc.b < 0) --w;
    return w;
}

void validate_arc(const MarkedSurface& s, const TaggedArc& x) {
    auto fail = [&](const char* why) { throw Error(Errc::InvalidArc, to_string(x) + " on " + s.name() + ": " + why); };
    if (x.kind != ArcKind::Radius && x.tag != Tag::Plain) fail("only radii carry a notched tag");
    const long len = x.b - x.a;
    switch (s.kind) {
        case SurfaceKind::Disc:
            if (x.kind != ArcKind::Chord) fail("discs only have chords");
            if (x.a < 0 || x.b >= s.m || len < 2 || (x.a == 0 && x.b == s.m - 1)) fail("not a diagonal");
            return;
        case SurfaceKind::PuncturedDisc:
            if (x.a < 0 || x.a >= s.m) fail("first mark out of range");
            if (x.kind == ArcKind::Radius) {
                if (x.b != 0) fail("radius carries no second mark");
                return;
            }
            if (x.kind != ArcKind::Chord) fail("wrong arc kind");
            if (len < 2 || len > s.m - 1) fail("chord length out of range");
            return;
        case SurfaceKind::Annulus:
            if (x.kind == ArcKind::Bridge) {
                if (x.a < 0 || x.a >= s.m) fail("outer mark out of range");
                return;
            }
            if (x.kind == ArcKind::Outer) {
                if (x.a < 0 || x.a >= s.m || len < 2 || len > s.m) fail("not an outer arc");
                return;
            }
            if (x.kind == ArcKind::Inner) {
                if (x.a < 0 || x.a >= s.q || len < 2 || len > s.q) fail("not an inner arc");
                return;
            }
            fail("wrong arc kind");
    }
}

std::vector<TaggedArc> enumerate_tagged_arcs(const MarkedSurface& s, int w) {
    std::vector<TaggedArc> out;
    switch (s.kind) {
        case SurfaceKind::Disc:
            for (int a = 0; a < s.m; ++a)
                for (int b = a + 2; b < s.m; ++b)
                    if (!(a == 0 && b == s.m - 1)) out.push_back({ArcKind::Chord, a, b});
            break;
        case SurfaceKind::PuncturedDisc:
            for (int a = 0; a < s.m; ++a) {
                for (int len = 2; len <= s.m - 1; ++len) out.push_back({ArcKind::Chord, a, a + len});
                out.push_back({ArcKind::Radius, a, 0, Tag::Plain});
                out.push_back({ArcKind::Radius, a, 0, Tag::Notched});
            }
            break;
        case SurfaceKind::Annulus:
            for (int a = 0; a < s.m; ++a) {
                for (long b = -static_cast<long>(w) * s.q; b < (static_cast<long>(w) + 1) * s.q; ++b)
                    out.push_back({ArcKind::Bridge, a, b});
                for (int len = 2; len <= s.m; ++len) out.push_back({ArcKind::Outer, a, a + len});
            }
            for (int a = 0; a < s.q; ++a)
                for (int len = 2; len <= s.q; ++len) out.push_back({ArcKind::Inner, a, a + len});
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool compatible(const MarkedSurface& s, const TaggedArc& x, const TaggedArc& y) {
    if (x == y) return true;
    if (x.kind == ArcKind::Radius && y.kind == ArcKind::Radius) return x.a == y.a || x.tag == y.tag;
    return !detail::lifts_cross(s, detail::lift(s, x), detail::lift(s, y));
}

bool compatible(const MarkedSurface& s, const TaggedArc& x, const MarkedSurface& t, const TaggedArc& y) {
    if (!(s == t)) throw Error(Errc::DifferentSurface, s.name() + " vs " + t.name());
    return compatible(s, x, y);
}

void validate_triangulation(const TaggedTriangulation& t) {
    const MarkedSurface& s = t.surface;
    if (static_cast<int>(t.arcs.size()) != s.rank())
        throw Error(Errc::InvalidTriangulation, "expected " + std::to_string(s.rank()) + " arcs, got " +
                                                    std::to_string(t.arcs.size()));
    for (const auto& a : t.arcs) validate_arc(s, a);
    for (std::size_t i = 0; i < t.arcs.size(); ++i)
        for (std::size_t j = i + 1; j < t.arcs.size(); ++j) {
            if (t.arcs[i] == t.arcs[j]) throw Error(Errc::InvalidTriangulation, "repeated arc " + to_string(t.arcs[i]));
            if (!compatible(s, t.arcs[i], t.arcs[j]))
                throw Error(Errc::InvalidTriangulation,
                            to_string(t.arcs[i]) + " and " + to_string(t.arcs[j]) + " are not compatible");
        }
}

TaggedTriangulation standard_triangulation(const MarkedSurface& s) {
    TaggedTriangulation t{s, {}};
    switch (s.kind) {
        case SurfaceKind::Disc:
            for (int j = 2; j <= s.m - 2; ++j) t.arcs.push_back({ArcKind::Chord, 0, j});
            break;
        case SurfaceKind::PuncturedDisc:
            for (int a = 0; a < s.m; ++a) t.arcs.push_back({ArcKind::Radius, a, 0, Tag::Plain});
            break;
        case SurfaceKind::Annulus:
            for (int x = 0; x < s.m; ++x) t.arcs.push_back({ArcKind::Bridge, x, 0});
            for (int y = 0; y < s.q; ++y) t.arcs.push_back({ArcKind::Bridge, 0, y - s.q});
            break;
    }
    return t;
}

TaggedTriangulation snake_triangulation(const MarkedSurface& s) {
    if (s.kind != SurfaceKind::Disc) return standard_triangulation(s);
    std::vector<int> walk{0, 2};
    int lo = 3, hi = s.m - 1;
    bool from_top = true;
    while (static_cast<int>(walk.size()) < s.m - 2) {
        walk.push_back(from_top ? hi-- : lo++);
        from_top = !from_top;
    }
    TaggedTriangulation t{s, {}};
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        t.arcs.push_back({ArcKind::Chord, std::min(walk[i], walk[i + 1]), std::max(walk[i], walk[i + 1])});
    return t;
}

TaggedTriangulation flip(const TaggedTriangulation& t, int index) {
    if (index < 0 || index >= static_cast<int>(t.arcs.size()))
        throw Error(Errc::ArcNotInTriangulation, "no arc at position " + std::to_string(index));
    const MarkedSurface& s = t.surface;
    long w = 0;
    for (const auto& a : t.arcs) w = std::max(w, std::labs(winding(s, a)));
    const TaggedArc& old = t.arcs[index];
    std::vector<TaggedArc> found;
    for (const TaggedArc& c : enumerate_tagged_arcs(s, static_cast<int>(w) + 2)) {
        if (c == old || std::find(t.arcs.begin(), t.arcs.end(), c) != t.arcs.end()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < t.arcs.size() && ok; ++i)
            if (static_cast<int>(i) != index) ok = compatible(s, c, t.arcs[i]);
        if (ok) found.push_back(c);
    }
    if (found.size() != 1)
        throw Error(Errc::InvalidTriangulation, std::to_string(found.size()) + " ways to flip " + to_string(old));
    TaggedTriangulation out = t;
    out.arcs[index] = found.front();
    return out;
}

TaggedTriangulation flip(const TaggedTriangulation& t, const TaggedArc& arc) {
    auto it = std::find(t.arcs.begin(), t.arcs.end(), arc);
    if (it == t.arcs.end()) throw Error(Errc::ArcNotInTriangulation, to_string(arc));
    return flip(t, static_cast<int>(it - t.arcs.begin()));
}

Quiver quiver_of(const TaggedTriangulation& t) {
    const int n = static_cast<int>(t.arcs.size());
    const detail::IdealForm f = detail::ideal_form(t);
    std::vector<int> b = detail::ideal_exchange_matrix(t.surface, f.arcs);
    if (f.radius >= 0) {
        // The radius inside a self-folded triangle copies the enclosing loop.
        const auto r = static_cast<std::size_t>(f.radius);
        const auto l = static_cast<std::size_t>(f.loop);
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
            b[r * n + j] = b[l * n + j];
            b[j * n + r] = b[j * n + l];
        }
        b[r * n + l] = b[l * n + r] = b[r * n + r] = 0;
    }
    return Quiver::from_b_flat(n, b);
}

bool laminates_compatible(const MarkedSurface& s, const Laminate& x, const Laminate& y) {
    return !detail::lifts_cross(s, detail::laminate_chord(s, x), detail::laminate_chord(s, y));
}

std::vector<long> shear_coordinates(const TaggedTriangulation& t, const Laminate& l) {
    const MarkedSurface& s = t.surface;
    if (l.kind == LaminateKind::Exceptional && s.kind != SurfaceKind::PuncturedDisc)
        throw Error(Errc::InvalidArc, "exceptional laminates live on punctured discs");
    if (l.kind == LaminateKind::ClosedCore && s.kind != SurfaceKind::Annulus)
        throw Error(Errc::InvalidArc, "the closed core lives on an annulus");
    if (l.kind == LaminateKind::Elementary) validate_arc(s, l.arc);

    const detail::IdealForm f = detail::ideal_form(t);
    const bool closed = l.kind == LaminateKind::ClosedCore;
    Chord c = detail::laminate_chord(s, l);
    if (f.retagged) c = detail::reverse_spirals(s, c);
    std::vector<long> v = detail::ideal_shear(s, f.arcs, c, closed);
    if (f.radius >= 0) {
        const std::vector<long> r = detail::ideal_shear(s, f.arcs, detail::reverse_spirals(s, c), closed);
        v[static_cast<std::size_t>(f.radius)] = r[static_cast<std::size_t>(f.loop)];
    }
    return v;
}

std::vector<long> shear_coordinates(const TaggedTriangulation& t, const Lamination& l) {
    std::vector<long> v(t.arcs.size(), 0);
    for (const auto& [lam, count] : l) {
        const std::vector<long> w = shear_coordinates(t, lam);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += count * w[i];
    }
    return v;
}

std::pair<Laminate, Laminate> pq_split(const MarkedSurface& s, const Laminate& l) {
    if (l.kind != LaminateKind::Exceptional || s.kind != SurfaceKind::PuncturedDisc)
        throw Error(Errc::NotExceptional, to_string(l));
    const int mark = ((l.segment % s.m) + s.m) % s.m;
    return {Laminate::elementary({ArcKind::Radius, mark, 0, Tag::Plain}),
            Laminate::elementary({ArcKind::Radius, mark, 0, Tag::Notched})};
}

std::vector<Laminate> enumerate_laminates(const MarkedSurface& s, int w) {
    std::vector<Laminate> out;
    for (const TaggedArc& a : enumerate_tagged_arcs(s, w)) out.push_back(Laminate::elementary(a));
    if (s.kind == SurfaceKind::PuncturedDisc)
        for (int seg = 0; seg < s.m; ++seg) out.push_back(Laminate::exceptional(seg));
    if (s.kind == SurfaceKind::Annulus) out.push_back(Laminate::closed_core());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Bron-Kerbosch with pivoting over a compatibility graph.
void maximal_cliques(const std::vector<std::vector<bool>>& adj, std::vector<int>& r, std::vector<int> p,
                     std::vector<int> x, std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = !p.empty() ? p.front() : x.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x})
        for (int u : *set) {
            std::size_t c = 0;
            for (int v : p) c += adj[u][v];
            if (c >= best) {
                best = c;
                pivot = u;
            }
        }
    const std::vector<int> candidates = p;
    for (int v : candidates) {
        if (adj[pivot][v]) continue;
        std::vector<int> p2, x2;
        for (int u : p)
            if (u != v && adj[v][u]) p2.push_back(u);
        for (int u : x)
            if (adj[v][u]) x2.push_back(u);
        r.push_back(v);
        maximal_cliques(adj, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

// Nonnegative integer c with sum c_i cols[i] = v, for linearly independent
// columns; false if there is none.
bool solve_nonnegative(const std::vector<std::vector<long>>& cols, const std::vector<long>& v, std::vector<long>& c) {
    const int n = static_cast<int>(v.size());
    const int k = static_cast<int>(cols.size());
    std::vector<Rational> m(static_cast<std::size_t>(n) * (k + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(i) * (k + 1) + j] = Rational(cols[j][i]);
        m[static_cast<std::size_t>(i) * (k + 1) + k] = Rational(v[i]);
    }
    auto at = [&](int i, int j) -> Rational& { return m[static_cast<std::size_t>(i) * (k + 1) + j]; };
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < k && row < n; ++col) {
        int piv = row;
        while (piv < n && at(piv, col) == 0) ++piv;
        if (piv == n) return false;  // dependent columns
        for (int j = 0; j <= k; ++j) std::swap(at(row, j), at(piv, j));
        for (int i = 0; i < n; ++i) {
            if (i == row || at(i, col) == 0) continue;
            const Rational f = at(i, col) / at(row, col);
            for (int j = col; j <= k; ++j) at(i, j) -= f * at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row < k) return false;
    for (int i = row; i < n; ++i)
        if (at(i, k) != 0) return false;
    c.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        const Rational x = at(i, k) / at(i, pivot_col[i]);
        if (x < 0 || x.get_den() != 1) return false;
        c[static_cast<std::size_t>(pivot_col[i])] = x.get_num().get_si();
    }
    return true;
}

}  // namespace

Lamination laminate_of_vector(const TaggedTriangulation& t, const std::vector<long>& v, int max_winding) {
    const MarkedSurface& s = t.surface;
    if (v.size() != t.arcs.size()) throw Error(Errc::InvalidVertex, "vector length differs from the triangulation");
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) return {};

    for (int w = 1;; w *= 2) {
        const int bound = std::min(w, max_winding);
        const std::vector<Laminate> lams = enumerate_laminates(s, bound);
        const std::size_t L = lams.size();
        std::vector<std::vector<long>> vec(L);
        for (std::size_t i = 0; i < L; ++i) vec[i] = shear_coordinates(t, lams[i]);
        std::vector<std::vector<bool>> adj(L, std::vector<bool>(L, false));
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t j = i + 1; j < L; ++j) adj[i][j] = adj[j][i] = laminates_compatible(s, lams[i], lams[j]);

        std::vector<std::vector<int>> cliques;
        std::vector<int> r, p(L), x;
        for (std::size_t i = 0; i < L; ++i) p[i] = static_cast<int>(i);
        maximal_cliques(adj, r, p, x, cliques);

        for (auto& clique : cliques) {
            std::sort(clique.begin(), clique.end());
            std::vector<std::vector<long>> cols;
            for (int i : clique) cols.push_back(vec[i]);
            std::vector<long> c;
            if (!solve_nonnegative(cols, v, c)) continue;
            Lamination out;
            for (std::size_t i = 0; i < clique.size(); ++i)
                if (c[i] > 0) out.emplace_back(lams[clique[i]], static_cast<int>(c[i]));
            return out;
        }
        if (s.kind != SurfaceKind::Annulus || bound >= max_winding) break;
    }
    throw Error(Errc::SearchExhausted, "no lamination found within winding " + std::to_string(max_winding));
}

namespace {

std::vector<TaggedArc> sorted_arcs(const TaggedTriangulation& t) {
    std::vector<TaggedArc> a = t.arcs;
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace

CorrespondenceReport verify_arc_gvector_correspondence(const TaggedTriangulation& t0, std::size_t budget, int max_depth,
                                                        int max_winding) {
    validate_triangulation(t0);
    const MarkedSurface& s = t0.surface;
    const int n = s.rank();
    CorrespondenceReport rep;
    rep.exhausted = true;

    struct Node {
        TaggedTriangulation t;
        TropicalSeed seed;
        int depth;
    };
    std::deque<Node> queue;
    std::set<std::vector<TaggedArc>> seen;
    std::map<TaggedArc, GVector> arc_g;
    queue.push_back({t0, initial_tropical_seed(quiver_of(t0)), 0});
    seen.insert(sorted_arcs(t0));

    auto note = [&](const std::string& msg) {
        if (rep.failures.size() < 8) rep.failures.push_back(msg);
    };

    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        ++rep.triangulations;

        if (!(quiver_of(node.t) == node.seed.exchange_quiver())) {
            ++rep.quiver_mismatches;
            note("quiver differs after flips " + std::to_string(node.seed.history.size()));
        }
        for (int j = 0; j < n; ++j) {
            const TaggedArc& arc = node.t.arcs[static_cast<std::size_t>(j)];
            const GVector g = node.seed.gvector(j);
            auto [it, fresh] = arc_g.emplace(arc, g);
            if (!fresh) {
                if (it->second != g) {
                    ++rep.gvector_mismatches;
                    note(to_string(arc) + " reached with two g-vectors");
                }
                continue;
            }
            const std::vector<long> b = shear_coordinates(t0, Laminate::elementary(arc));
            GVector expect(b.size());
            for (std::size_t i = 0; i < b.size(); ++i) expect[i] = -b[i];
            if (expect != g) {
                ++rep.gvector_mismatches;
                note(to_string(arc) + ": g-vector differs from -b_T(e)");
            }
        }
        if (max_depth >= 0 && node.depth >= max_depth) {
            rep.exhausted = false;
            continue;
        }
        for (int k = 0; k < n; ++k) {
            TaggedTriangulation next = flip(node.t, k);
            if (s.kind == SurfaceKind::Annulus &&
                std::labs(winding(s, next.arcs[static_cast<std::size_t>(k)])) > max_winding) {
                rep.exhausted = false;
                continue;
            }
            if (!seen.insert(sorted_arcs(next)).second) continue;
            if (seen.size() > budget) {
                rep.exhausted = false;
                queue.clear();
                break;
            }
            queue.push_back({std::move(next), mutate_tropical(node.seed, k), node.depth + 1});
        }
    }
    rep.arcs = arc_g.size();
    return rep;
}

}  // namespace cf

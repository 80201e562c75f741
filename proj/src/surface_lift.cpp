// Geometry in the universal cover: lifts, deck translations, triangles of a
// lifted triangulation, and the crossing walk behind shear coordinates.
#include "surface_internal.hpp"

#include "clusterforge/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace cf::detail {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr Pos bottom(long x) { return {0, 4 * x}; }
constexpr Pos top(long y) { return {2, -4 * y}; }
constexpr Pos puncture() { return {2, 0}; }

bool is_annulus(const MarkedSurface& s) { return s.kind == SurfaceKind::Annulus; }
bool is_punctured(const MarkedSurface& s) { return s.kind == SurfaceKind::PuncturedDisc; }

// Point on a boundary line, in mark units (floor). Only for sec 0, and sec 2 of an annulus.
long bottom_coord(const Pos& p) { return floor_div(p.key, 4); }
long top_coord(const Pos& p) { return floor_div(-p.key, 4); }

bool on_bottom(const MarkedSurface&, const Pos& p) { return p.sec == 0; }
bool on_top(const MarkedSurface& s, const Pos& p) { return is_annulus(s) && p.sec == 2; }

struct Curve {
    Chord c;
    int arc = -1;  // index into the arc list, -1 for a boundary segment
    long k = 0;    // deck translation applied to the arc's base lift
};

// Open cyclic interval from x forward to y.
bool strictly_between(const Pos& x, const Pos& y, const Pos& w) {
    if (x < y) return x < w && w < y;
    return w > x || w < y;
}

struct Anchors {
    std::vector<long> bottom;
    std::vector<long> top;
};

// Deck translations k for which the lift of `base` comes near an anchor.
void translation_range(const MarkedSurface& s, const Chord& base, const Anchors& anchors, long& lo, long& hi) {
    lo = 1;
    hi = 0;
    auto consider = [&](long anchor, long coord, long period) {
        const long k0 = floor_div(anchor - coord, period);
        if (lo > hi) {
            lo = k0 - 3;
            hi = k0 + 4;
        } else {
            lo = std::min(lo, k0 - 3);
            hi = std::max(hi, k0 + 4);
        }
    };
    const long pb = s.m;
    const long pt = s.q;
    for (const Pos& p : {base.first, base.second}) {
        if (on_bottom(s, p))
            for (long a : anchors.bottom) consider(a, bottom_coord(p), pb);
        if (on_top(s, p))
            for (long a : anchors.top) consider(a, top_coord(p), pt);
    }
}

void add_segments(const MarkedSurface& s, std::vector<Curve>& curves, const std::vector<Pos>& extra) {
    if (s.kind == SurfaceKind::Disc) {
        for (int x = 0; x + 1 < s.m; ++x) curves.push_back({make_chord(bottom(x), bottom(x + 1)), -1, 0});
        curves.push_back({make_chord(bottom(0), bottom(s.m - 1)), -1, 0});
        return;
    }
    long blo = 0, bhi = 0, tlo = 0, thi = 0;
    bool have_top = false;
    auto see = [&](const Pos& p) {
        if (on_bottom(s, p)) {
            blo = std::min(blo, bottom_coord(p));
            bhi = std::max(bhi, bottom_coord(p) + 1);
        } else if (on_top(s, p)) {
            if (!have_top) {
                tlo = thi = top_coord(p);
                have_top = true;
            }
            tlo = std::min(tlo, top_coord(p));
            thi = std::max(thi, top_coord(p) + 1);
        }
    };
    for (const Curve& c : curves) {
        see(c.c.first);
        see(c.c.second);
    }
    for (const Pos& p : extra) see(p);
    for (long x = blo - 1; x <= bhi; ++x) curves.push_back({make_chord(bottom(x), bottom(x + 1)), -1, 0});
    if (is_annulus(s)) {
        if (!have_top) tlo = thi = 0;
        for (long y = tlo - 1; y <= thi; ++y) curves.push_back({make_chord(top(y), top(y + 1)), -1, 0});
    }
}

// Lifts of `arcs` near the anchors, then a second round anchored at what the
// first round reached, plus the boundary segments spanning all of it.
std::vector<Curve> build_cover(const MarkedSurface& s, const std::vector<TaggedArc>& arcs, Anchors anchors,
                               const std::vector<Pos>& extra) {
    std::vector<Curve> curves;
    if (s.kind == SurfaceKind::Disc) {
        for (std::size_t i = 0; i < arcs.size(); ++i) curves.push_back({lift(s, arcs[i]), static_cast<int>(i), 0});
        add_segments(s, curves, extra);
        return curves;
    }
    for (int round = 0; round < 2; ++round) {
        curves.clear();
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const Chord base = lift(s, arcs[i]);
            long lo, hi;
            translation_range(s, base, anchors, lo, hi);
            for (long k = lo; k <= hi; ++k) curves.push_back({shift(s, base, k), static_cast<int>(i), k});
        }
        if (round == 0) {
            for (const Curve& c : curves)
                for (const Pos& p : {c.c.first, c.c.second}) {
                    if (on_bottom(s, p)) anchors.bottom.push_back(bottom_coord(p));
                    if (on_top(s, p)) anchors.top.push_back(top_coord(p));
                }
            std::sort(anchors.bottom.begin(), anchors.bottom.end());
            std::sort(anchors.top.begin(), anchors.top.end());
            // Only the extremes matter for the ranges.
            if (anchors.bottom.size() > 2) anchors.bottom = {anchors.bottom.front(), anchors.bottom.back()};
            if (anchors.top.size() > 2) anchors.top = {anchors.top.front(), anchors.top.back()};
        }
    }
    add_segments(s, curves, extra);
    return curves;
}

const Pos* shared_endpoint(const Chord& a, const Chord& b) {
    if (a.first == b.first || a.first == b.second) return &a.first;
    if (a.second == b.first || a.second == b.second) return &a.second;
    return nullptr;
}

const Pos& other_endpoint(const Chord& c, const Pos& p) { return c.first == p ? c.second : c.first; }

}  // namespace

Chord make_chord(Pos a, Pos b) { return a < b ? Chord{a, b} : Chord{b, a}; }

bool chords_cross(const Chord& x, const Chord& y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
}

Pos shift(const MarkedSurface& s, Pos p, long k) {
    if (k == 0 || s.kind == SurfaceKind::Disc) return p;
    if (p.sec == 0) p.key += 4 * k * s.m;
    else if (is_annulus(s) && p.sec == 2) p.key -= 4 * k * s.q;
    return p;
}

Chord shift(const MarkedSurface& s, const Chord& c, long k) { return make_chord(shift(s, c.first, k), shift(s, c.second, k)); }

Chord lift(const MarkedSurface& s, const TaggedArc& arc) {
    switch (arc.kind) {
        case ArcKind::Chord:
        case ArcKind::Loop:
        case ArcKind::Outer: return make_chord(bottom(arc.a), bottom(arc.b));
        case ArcKind::Radius: return make_chord(bottom(arc.a), puncture());
        case ArcKind::Bridge: return make_chord(bottom(arc.a), top(arc.b));
        case ArcKind::Inner: return make_chord(top(arc.a), top(arc.b));
    }
    throw Error(Errc::InvalidArc, "unknown arc kind");
}

Chord laminate_chord(const MarkedSurface& s, const Laminate& l) {
    auto nudge = [](Pos p) {
        p.key += 1;
        return p;
    };
    switch (l.kind) {
        case LaminateKind::Elementary: {
            const TaggedArc& a = l.arc;
            if (a.kind == ArcKind::Radius)
                return make_chord(nudge(bottom(a.a)), Pos{a.tag == Tag::Plain ? -1 : 1, 0});
            const Chord c = lift(s, a);
            return make_chord(nudge(c.first), nudge(c.second));
        }
        case LaminateKind::Exceptional:
            return make_chord(Pos{0, 4L * l.segment + 3}, Pos{0, 4L * (l.segment + s.m) + 1});
        case LaminateKind::ClosedCore: return make_chord(Pos{1, 0}, Pos{3, 0});
    }
    throw Error(Errc::InvalidArc, "unknown laminate kind");
}

Chord reverse_spirals(const MarkedSurface& s, const Chord& c) {
    if (!is_punctured(s)) return c;
    auto flip = [](Pos p) {
        if (p.sec == -1) p.sec = 1;
        else if (p.sec == 1) p.sec = -1;
        return p;
    };
    return make_chord(flip(c.first), flip(c.second));
}

bool lifts_cross(const MarkedSurface& s, const Chord& x, const Chord& y) {
    if (s.kind == SurfaceKind::Disc) return chords_cross(x, y);
    long span = 0;
    for (const Pos& p : {x.first, x.second, y.first, y.second})
        if (p.sec == 0 || (is_annulus(s) && p.sec == 2)) span = std::max(span, std::labs(p.key) / 4);
    const long period = is_annulus(s) ? std::min(s.m, s.q) : s.m;
    const long K = 2 * span / period + 3;
    for (long k = -K; k <= K; ++k)
        if (chords_cross(x, shift(s, y, k))) return true;
    return false;
}

IdealForm ideal_form(const TaggedTriangulation& t) {
    IdealForm f;
    f.arcs = t.arcs;
    if (t.surface.kind != SurfaceKind::PuncturedDisc) return f;
    std::map<int, std::vector<int>> radii;
    bool any_notched = false;
    for (std::size_t i = 0; i < t.arcs.size(); ++i)
        if (t.arcs[i].kind == ArcKind::Radius) {
            radii[t.arcs[i].a].push_back(static_cast<int>(i));
            any_notched = any_notched || t.arcs[i].tag == Tag::Notched;
        }
    for (const auto& [mark, idx] : radii)
        if (idx.size() == 2) {
            const int plain = t.arcs[idx[0]].tag == Tag::Plain ? idx[0] : idx[1];
            const int notched = plain == idx[0] ? idx[1] : idx[0];
            f.radius = plain;
            f.loop = notched;
            f.arcs[notched] = TaggedArc{ArcKind::Loop, mark, mark + t.surface.m, Tag::Plain};
            return f;
        }
    if (any_notched) {
        f.retagged = true;
        for (auto& a : f.arcs) a.tag = Tag::Plain;
    }
    return f;
}

std::vector<int> ideal_exchange_matrix(const MarkedSurface& s, const std::vector<TaggedArc>& arcs) {
    const int n = static_cast<int>(arcs.size());
    std::vector<int> b(static_cast<std::size_t>(n) * n, 0);
    Anchors anchors{{0, s.m}, {0, s.q}};
    const std::vector<Curve> curves = build_cover(s, arcs, anchors, {});

    std::map<std::pair<Pos, Pos>, int> edge;
    std::map<Pos, std::vector<Pos>> adj;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const Chord& c = curves[i].c;
        if (edge.emplace(c, static_cast<int>(i)).second) {
            adj[c.first].push_back(c.second);
            adj[c.second].push_back(c.first);
        }
    }

    auto representative = [&](const Pos& u, const Pos& v, const Pos& w) {
        if (s.kind == SurfaceKind::Disc) return true;
        long min_bottom = 0;
        bool has_bottom = false;
        long max_top_key = 0;
        bool has_top = false;
        for (const Pos* p : {&u, &v, &w}) {
            if (p->sec == 0) {
                min_bottom = has_bottom ? std::min(min_bottom, p->key) : p->key;
                has_bottom = true;
            } else if (on_top(s, *p)) {
                max_top_key = has_top ? std::max(max_top_key, p->key) : p->key;
                has_top = true;
            }
        }
        if (has_bottom) return 0 <= min_bottom && min_bottom < 4L * s.m;
        return has_top && -4L * s.q < max_top_key && max_top_key <= 0;
    };

    for (const Curve& cu : curves) {
        const Pos& u = cu.c.first;
        const Pos& v = cu.c.second;
        for (const Pos& w : adj[u]) {
            if (!(v < w)) continue;
            auto vw = edge.find({v, w});
            if (vw == edge.end()) continue;
            if (!representative(u, v, w)) continue;
            // Sides in circle order around the triangle: uv, vw, wu.
            const int side[3] = {edge.at({u, v}), vw->second, edge.at({u, w})};
            int label[3];
            for (int i = 0; i < 3; ++i) label[i] = curves[side[i]].arc;
            if ((label[0] >= 0 && (label[0] == label[1] || label[0] == label[2])) ||
                (label[1] >= 0 && label[1] == label[2]))
                continue;  // self-folded
            for (int i = 0; i < 3; ++i) {
                const int cur = label[i];
                const int next = label[(i + 1) % 3];
                if (cur < 0 || next < 0) continue;
                b[static_cast<std::size_t>(next) * n + cur] += 1;
                b[static_cast<std::size_t>(cur) * n + next] -= 1;
            }
        }
    }
    return b;
}

std::vector<long> ideal_shear(const MarkedSurface& s, const std::vector<TaggedArc>& arcs, const Chord& l, bool closed) {
    Anchors anchors;
    for (const Pos& p : {l.first, l.second}) {
        if (on_bottom(s, p)) anchors.bottom.push_back(bottom_coord(p));
        if (on_top(s, p)) anchors.top.push_back(top_coord(p));
    }
    if (is_punctured(s)) {
        // Room for the first turns of a spiral on either side.
        const long lo = anchors.bottom.empty() ? 0 : *std::min_element(anchors.bottom.begin(), anchors.bottom.end());
        const long hi = anchors.bottom.empty() ? 0 : *std::max_element(anchors.bottom.begin(), anchors.bottom.end());
        anchors.bottom.push_back(lo - 2L * s.m);
        anchors.bottom.push_back(hi + 2L * s.m);
    }
    if (is_annulus(s) && closed) anchors.bottom = {-2L * s.m, 3L * s.m};
    const std::vector<Curve> curves = build_cover(s, arcs, anchors, {l.first, l.second});

    // Curves crossing l, ordered along l from l.first.
    const Pos& A = l.first;
    auto from_a = [&](const Pos& p) { return std::pair<int, Pos>{p < A ? 1 : 0, p}; };
    struct Crossing {
        const Curve* curve;
        Pos near;  // endpoint between A and B going forward from A
        Pos far;
    };
    std::vector<Crossing> xs;
    for (const Curve& c : curves) {
        if (!chords_cross(l, c.c)) continue;
        const bool first_near = strictly_between(l.first, l.second, c.c.first);
        xs.push_back({&c, first_near ? c.c.first : c.c.second, first_near ? c.c.second : c.c.first});
    }
    std::sort(xs.begin(), xs.end(), [&](const Crossing& x, const Crossing& y) {
        if (x.near != y.near) return from_a(x.near) < from_a(y.near);
        return from_a(x.far) > from_a(y.far);
    });

    std::vector<long> out(arcs.size(), 0);
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const Curve& g = *xs[i].curve;
        if (g.arc < 0) continue;
        if (closed && g.k != 0) continue;
        const Chord& alpha = xs[i - 1].curve->c;
        const Chord& beta = xs[i + 1].curve->c;
        const Pos* x = shared_endpoint(alpha, g.c);
        const Pos* y = shared_endpoint(beta, g.c);
        if (x == nullptr || y == nullptr) continue;  // cut off by the window
        if (*x == *y) continue;
        const Pos& w = other_endpoint(alpha, *x);
        out[static_cast<std::size_t>(g.arc)] += strictly_between(*x, *y, w) ? -1 : 1;
    }
    return out;
}

}  // namespace cf::detail

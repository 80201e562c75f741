#pragma once

// Chord model of the universal cover, shared by surface.cpp and surface_lift.cpp.
//
// The cover of each supported surface is a disc whose boundary circle carries
// the lifted marks. A point of that circle is a Pos ordered lexicographically:
//   sec 0          lifted boundary line (Disc, PuncturedDisc) or bottom line (Annulus), key 4x at mark x
//   sec 2          the puncture (PuncturedDisc, key 0) or the top line (Annulus, key -4y at mark y)
//   sec -1, sec 1  PuncturedDisc only: just after / just before the puncture,
//                  the two ends of curves spiralling into it
//   sec 1, sec 3   Annulus only: the two ends of the strip
// Keys 4x+1, 4x+2, 4x+3 are points on the boundary segment after mark x.
// Curves in the cover are chords, and two curves cross iff their endpoints
// strictly interleave.

#include "clusterforge/surface.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace cf::detail {

struct Pos {
    int sec = 0;
    long key = 0;
    auto operator<=>(const Pos&) const = default;
};

using Chord = std::pair<Pos, Pos>;  // normalized: first < second

Chord make_chord(Pos a, Pos b);
bool chords_cross(const Chord& x, const Chord& y);
// Image under the k-th power of the deck translation.
Pos shift(const MarkedSurface& s, Pos p, long k);
Chord shift(const MarkedSurface& s, const Chord& c, long k);

// Lift of an arc with its first endpoint in the fundamental domain.
Chord lift(const MarkedSurface& s, const TaggedArc& arc);
// The laminate as a chord; closed cores become the chord between the strip ends.
Chord laminate_chord(const MarkedSurface& s, const Laminate& l);
// Reverses every spiral end (swaps sec -1 and sec 1) on a punctured disc.
Chord reverse_spirals(const MarkedSurface& s, const Chord& c);

// True iff some deck translate of y crosses x.
bool lifts_cross(const MarkedSurface& s, const Chord& x, const Chord& y);

// An ideal triangulation standing in for a tagged one. `arcs` is aligned with
// the tagged arcs. Either all tags were flipped to plain (`retagged`), or a
// conjugate pair at a mark became a plain radius (`radius`) inside a loop
// (`loop`), or nothing changed.
struct IdealForm {
    std::vector<TaggedArc> arcs;
    bool retagged = false;
    int radius = -1;
    int loop = -1;
};
IdealForm ideal_form(const TaggedTriangulation& t);

// Exchange matrix b(i, j) of an ideal triangulation, row-major.
std::vector<int> ideal_exchange_matrix(const MarkedSurface& s, const std::vector<TaggedArc>& arcs);
// Shear coordinates of a single curve against an ideal triangulation.
// `closed` counts each crossing once per period of the curve.
std::vector<long> ideal_shear(const MarkedSurface& s, const std::vector<TaggedArc>& arcs, const Chord& l, bool closed);

}  // namespace cf::detail

#pragma once

#include "clusterforge/cluster.hpp"
#include "clusterforge/quiver.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// Marked surfaces of three families, studied through their universal covers.
//
// Disc(m): marks 0..m-1 in counterclockwise order on the boundary circle.
// PuncturedDisc(m): boundary marks lift to the integers (x stands for x mod m)
//   on the boundary line of a half-plane whose point at infinity is the
//   puncture; deck translation x -> x + m.
// Annulus(p, q): the cover is a strip; outer marks lift to the integers on the
//   bottom line (x mod p), inner marks to the integers on the top line (y mod q);
//   deck translation (x, y) -> (x + p, y + q).
//
// All coordinates below are these 0-based lift coordinates.
namespace cf {

enum class SurfaceKind { Disc, PuncturedDisc, Annulus };

struct MarkedSurface {
    SurfaceKind kind = SurfaceKind::Disc;
    int m = 0;  // marks (Disc, PuncturedDisc) or outer marks p (Annulus)
    int q = 0;  // inner marks (Annulus)

    // Throw Error(ExcludedSurface) for the excluded small cases: Disc(m < 4),
    // PuncturedDisc(m < 2), Annulus with p < 1 or q < 1.
    static MarkedSurface disc(int m);
    static MarkedSurface punctured_disc(int m);
    static MarkedSurface annulus(int p, int q);

    int rank() const;
    std::string name() const;  // "Disc(5)", "PuncturedDisc(3)", "Annulus(1,1)"
    bool operator==(const MarkedSurface&) const = default;
};

enum class Tag { Plain, Notched };

enum class ArcKind {
    Chord,   // Disc: marks a < b. PuncturedDisc: lift [a, b], a in [0, m), 2 <= b - a <= m - 1
    Radius,  // PuncturedDisc: mark a to the puncture, with the tag at the puncture
    Bridge,  // Annulus: outer mark a in [0, p) to inner lift b (any integer)
    Outer,   // Annulus: outer lift [a, b], a in [0, p), 2 <= b - a <= p
    Inner,   // Annulus: inner lift [a, b], a in [0, q), 2 <= b - a <= q
    Loop,    // PuncturedDisc: [a, a + m] around the puncture; only inside ideal triangulations
};

struct TaggedArc {
    ArcKind kind = ArcKind::Chord;
    int a = 0;
    long b = 0;
    Tag tag = Tag::Plain;  // meaningful for radii only

    auto operator<=>(const TaggedArc&) const = default;
};

std::string to_string(const TaggedArc& arc);
// Annulus bridges: floor(b / q). Zero for every other arc.
long winding(const MarkedSurface& s, const TaggedArc& arc);
// Throws Error(InvalidArc) if `arc` is not a tagged arc of `s` in normal form.
void validate_arc(const MarkedSurface& s, const TaggedArc& arc);

// All tagged arcs, annulus bridges restricted to |winding| <= w, sorted.
std::vector<TaggedArc> enumerate_tagged_arcs(const MarkedSurface& s, int w = 6);

// The three clauses: underlying arcs do not cross, equal underlying arcs are
// equal or conjugate, radii at different marks carry equal tags.
bool compatible(const MarkedSurface& s, const TaggedArc& x, const TaggedArc& y);
bool compatible(const MarkedSurface& s, const TaggedArc& x, const MarkedSurface& t, const TaggedArc& y);

struct TaggedTriangulation {
    MarkedSurface surface;
    std::vector<TaggedArc> arcs;  // position i is quiver vertex i
};

// Throws Error(InvalidTriangulation) on wrong size, duplicates or incompatibility.
void validate_triangulation(const TaggedTriangulation& t);

// Fan at mark 0 for discs, plain radii for punctured discs, the ladder
// (x, 0) for x < p and (0, y - q) for y < q for annuli.
TaggedTriangulation standard_triangulation(const MarkedSurface& s);
// Zigzag 0, 2, m-1, 3, m-2, ... for discs; the standard one otherwise.
TaggedTriangulation snake_triangulation(const MarkedSurface& s);

// Replaces arcs[index] by the unique other arc completing the remaining ones.
TaggedTriangulation flip(const TaggedTriangulation& t, int index);
// Same, addressed by arc; Error(ArcNotInTriangulation) if absent.
TaggedTriangulation flip(const TaggedTriangulation& t, const TaggedArc& arc);

Quiver quiver_of(const TaggedTriangulation& t);

enum class LaminateKind { Elementary, Exceptional, ClosedCore };

struct Laminate {
    LaminateKind kind = LaminateKind::Elementary;
    TaggedArc arc;    // Elementary: the arc it runs along
    int segment = 0;  // Exceptional: boundary segment [segment, segment + 1] it starts and ends on

    static Laminate elementary(const TaggedArc& a) { return {LaminateKind::Elementary, a, 0}; }
    static Laminate exceptional(int segment) { return {LaminateKind::Exceptional, {}, segment}; }
    static Laminate closed_core() { return {LaminateKind::ClosedCore, {}, 0}; }
    auto operator<=>(const Laminate&) const = default;
};

std::string to_string(const Laminate& l);

// A finite multiset of pairwise compatible laminates.
using Lamination = std::vector<std::pair<Laminate, int>>;

bool laminates_compatible(const MarkedSurface& s, const Laminate& x, const Laminate& y);

std::vector<long> shear_coordinates(const TaggedTriangulation& t, const Laminate& l);
std::vector<long> shear_coordinates(const TaggedTriangulation& t, const Lamination& l);

// (l_p, l_q) for an exceptional laminate; Error(NotExceptional) otherwise.
std::pair<Laminate, Laminate> pq_split(const MarkedSurface& s, const Laminate& l);

// Elementary laminates of all arcs within winding w, the exceptional
// laminates and the closed core, sorted.
std::vector<Laminate> enumerate_laminates(const MarkedSurface& s, int w);

// The lamination with shear coordinates v, searched over maximal compatible
// families with winding bound growing 1, 2, 4, ... up to `max_winding`.
// Error(SearchExhausted) if none is found.
Lamination laminate_of_vector(const TaggedTriangulation& t, const std::vector<long>& v, int max_winding = 16);

struct CorrespondenceReport {
    std::size_t triangulations = 0;  // distinct triangulations visited
    std::size_t arcs = 0;            // distinct arcs checked
    std::size_t gvector_mismatches = 0;
    std::size_t quiver_mismatches = 0;
    bool exhausted = false;          // the walk closed up within its limits
    std::vector<std::string> failures;  // first few mismatches, human readable

    bool ok() const { return gvector_mismatches == 0 && quiver_mismatches == 0; }
};

// Walks flips and mutations in parallel from t. At every reached seed it
// compares the g-vector of each cluster variable with -b_t(e(arc)) and
// quiver_of with the seed's exchange matrix. Walks stop at `max_depth`
// flips, `budget` triangulations, and annulus arcs winding more than
// `max_winding`.
CorrespondenceReport verify_arc_gvector_correspondence(const TaggedTriangulation& t, std::size_t budget = 100000,
                                                        int max_depth = -1, int max_winding = 3);

}  // namespace cf

#pragma once

#include "clusterforge/cluster.hpp"
#include "clusterforge/quiver.hpp"
#include "clusterforge/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cf {

enum class FanStatus { Exhausted, Truncated };
std::string to_string(FanStatus s);

// A simplicial fan given by its rays and maximal cones. Each cone lists n ray
// indices in increasing order; `facets` maps every (n-1)-subset that occurs to
// the cones containing it.
struct GFan {
    int n = 0;
    std::vector<GVector> rays;
    std::vector<std::vector<int>> cones;
    std::map<std::vector<int>, std::vector<int>> facets;
    FanStatus status = FanStatus::Exhausted;

    // Builds from explicit rays and cones, deduplicating rays and filling `facets`.
    static GFan from_cones(int n, const std::vector<std::vector<GVector>>& cones, FanStatus status);
    // Cones as sorted lists of ray vectors, sorted; equal for equal fans.
    std::vector<std::vector<GVector>> normalized() const;
};

// Fan of all clusters found by enumerate_clusters. Truncated when the search
// stopped on the budget or the depth.
GFan build_gfan(const Quiver& q, std::size_t budget = 100000, int max_depth = -1);

enum class Completeness { Complete, Incomplete, Unknown };
std::string to_string(Completeness c);

struct CompletenessReport {
    Completeness verdict = Completeness::Unknown;
    std::vector<Rational> witness;  // a point outside every cone when Incomplete
};

CompletenessReport is_complete(const GFan& f);

// |det| of a maximal cone's generator matrix.
Integer cone_determinant(const GFan& f, int cone);

struct Membership {
    bool in_cone = false;
    std::vector<int> history;       // mutations from the initial cluster
    std::vector<Rational> coords;   // v in the final g-basis
};

// Greedy descent: write v in the current g-basis, stop if all coordinates are
// nonnegative, otherwise mutate at the smallest index with a negative
// coordinate. Gives up after `depth` mutations.
Membership contains_point(const Quiver& q, const std::vector<Rational>& v, int depth);

// Tries every cluster within `depth` mutations (at most `budget` of them) in
// breadth-first order. Unlike the greedy descent it cannot be led past a gap
// of the fan, at exponential cost.
Membership contains_point_exhaustive(const Quiver& q, const std::vector<Rational>& v, int depth,
                                     std::size_t budget = 100000);

// Fraction of `samples` random directions found InCone within `depth`.
// Directions are Gaussian vectors scaled to length about 10^6 and rounded.
double density_estimate(const Quiver& q, int samples, int depth, std::uint64_t rng_seed,
                        Exec exec = Exec::Parallel);
// The integer sample points used by density_estimate.
std::vector<std::vector<Rational>> density_samples(int n, int samples, std::uint64_t rng_seed);

// True iff no row of the n x n matrix has both a positive and a negative entry.
bool check_sign_coherence(int n, const std::vector<std::int64_t>& g);

// Applies mutate_gvector(., k, b) to every ray.
GFan fan_transition(const GFan& f, int k, const Quiver& b);

}  // namespace cf

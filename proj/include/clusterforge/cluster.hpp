#pragma once

#include "clusterforge/laurent.hpp"
#include "clusterforge/quiver.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cf {

using GVector = std::vector<std::int64_t>;

// A seed with principal coefficients. The framed quiver has mutable vertices
// 0..n-1 and frozen vertices n..2n-1, frozen vertex n+i standing for i'.
struct Seed {
    Quiver framed;
    std::vector<LaurentPoly> cluster;
    std::vector<int> history;  // mutation sequence from the initial seed, 0-based

    int rank() const { return static_cast<int>(cluster.size()); }
    Quiver exchange_quiver() const;  // the mutable part

    // Compares quiver and cluster, not the history.
    bool operator==(const Seed& o) const { return framed == o.framed && cluster == o.cluster; }
};

Seed initial_seed(const Quiver& q);

// Exchange relation x_k x'_k = prod_{j->k} x_j y_{j-n} + prod_{k->j} x_j y_{j-n},
// with x_j = 1 at frozen j and y only at frozen j. Throws Error(InexactDivision)
// if the Laurent ring division fails.
Seed mutate_seed(const Seed& s, int k);

// Multidegree under deg(x_i) = e_i, deg(y_j) = -(column j of B0).
// Throws Error(NotHomogeneous) if terms disagree.
GVector g_vector_of(const LaurentPoly& p, const Quiver& b0);

// g'_k = -g_k and g'_i = g_i + [b_ik]_+ g_k - b_ik min(g_k, 0) for i != k.
// `b` is the exchange matrix of the seed being mutated.
GVector mutate_gvector(const GVector& g, int k, const Quiver& b);

// Framed exchange matrix plus g-matrix, without Laurent data. This is what the
// enumeration, the fan and the membership search run on.
struct TropicalSeed {
    int n = 0;
    std::vector<std::int64_t> b;  // 2n x 2n framed exchange matrix, row-major
    std::vector<std::int64_t> g;  // n x n, column j is the g-vector of x_j
    std::vector<int> history;

    std::int64_t bij(int i, int j) const { return b[static_cast<std::size_t>(i) * 2 * n + j]; }
    std::int64_t gij(int i, int j) const { return g[static_cast<std::size_t>(i) * n + j]; }
    GVector gvector(int j) const;
    Quiver exchange_quiver() const;
    // Columns of g sorted lexicographically and flattened: the cluster's identity.
    std::vector<std::int64_t> cluster_key() const;
};

TropicalSeed initial_tropical_seed(const Quiver& q);
// Throws Error(SignCoherenceViolation) if the c-vector at k has mixed signs and
// Error(Overflow) if an entry leaves int64.
TropicalSeed mutate_tropical(const TropicalSeed& s, int k);

enum class EnumStatus { Exhausted, BudgetExceeded };
std::string to_string(EnumStatus s);

struct ClusterEdge {
    int from;
    int vertex;
    int to;
};

struct ClusterEnumeration {
    std::vector<TropicalSeed> seeds;  // one per distinct cluster, in BFS order
    std::vector<ClusterEdge> edges;
    std::vector<GVector> variables;   // distinct g-vectors, sorted
    EnumStatus status = EnumStatus::Exhausted;
};

// Breadth-first search over clusters, deduplicated by TropicalSeed::cluster_key.
// Stops with BudgetExceeded once more than `budget` clusters would be stored
// or a seed beyond `max_depth` mutations would be needed (max_depth < 0 means
// unbounded).
ClusterEnumeration enumerate_clusters(const Quiver& q, std::size_t budget = 100000, int max_depth = -1);

struct ClusterVariable {
    GVector g;
    LaurentPoly value;
    std::vector<int> history;  // shortest mutation sequence producing it
};

// Distinct cluster variables reachable within `depth` mutations, sorted by g.
std::vector<ClusterVariable> cluster_variables(const Quiver& q, int depth, std::size_t budget = 100000);

}  // namespace cf

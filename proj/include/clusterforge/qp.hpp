#pragma once

#include "clusterforge/quiver.hpp"
#include "clusterforge/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace cf {

// A single arrow of a QP quiver. QP quivers keep arrows individually (they
// carry names and may contain 2-cycles right after premutation).
struct QArrow {
    int from = 0;
    int to = 0;
    std::string name;
    bool operator==(const QArrow& o) const { return from == o.from && to == o.to; }
};

// A path is a sequence of arrow ids in traversal order: path[0] is walked first.
using Path = std::vector<int>;
// Noncommutative polynomial: open or closed paths with rational coefficients.
using PathPoly = std::map<Path, Rational>;

// Rotation of a closed path with the lexicographically smallest id sequence.
Path canonical_rotation(const Path& cycle);

struct Potential {
    std::map<Path, Rational> terms;  // keys are canonical rotations
    int trunc = 12;                  // terms longer than this are dropped

    void add(const Path& cycle, const Rational& c);  // rotates, merges, truncates
    bool is_zero() const { return terms.empty(); }
    bool operator==(const Potential& o) const { return trunc == o.trunc && terms == o.terms; }
};

struct QP {
    int n = 0;
    std::vector<QArrow> arrows;
    Potential potential;

    // One QArrow per parallel arrow of q, bundles expanded in Quiver::arrows()
    // order and named a1, a2, ...
    static QP from_quiver(const Quiver& q, int trunc = 12);

    // Adds a term after checking that the ids form a closed path.
    void add_term(const Path& cycle, const Rational& c);
    bool has_two_cycles() const;
    // Throws Error(TwoCycleInOutput) if the arrows contain a 2-cycle.
    Quiver quiver() const;
    int arrow_id(const std::string& name) const;  // Error(UnknownArrow) if absent
    std::string term_text(const Path& p) const;     // names joined in traversal order

    bool operator==(const QP& o) const { return n == o.n && arrows == o.arrows && potential == o.potential; }
};

// Linear extension of c -> sum over occurrences c = u a v of v u.
// Throws Error(UnknownArrow) for an id outside the QP.
PathPoly cyclic_derivative(const QP& qp, int arrow);

// Composite arrows [ba] for a: j -> k, b: k -> i, reversed arrows a*, b*, and
// W~ = [W] + sum [ba] b* a* (in traversal order). Arrow order of the result:
// arrows away from k, then composites (a-major), then a* (incoming order),
// then b* (outgoing order). Throws Error(VertexOnTwoCycle).
QP premutate(const QP& qp, int k);

// Reduced part: removes every 2-cycle term c ab together with a and b by
// Gaussian elimination of the quadratic part followed by iterated
// substitutions a -> a - c^-1 (...) or b -> b - c^-1 (...), working modulo
// paths longer than the truncation degree. Throws Error(PrecisionExhausted)
// if the substitution loop does not settle within its work cap.
QP reduce(const QP& qp);

// reduce(premutate(qp, k)); throws Error(TwoCycleInOutput) if the result still
// has a 2-cycle.
QP qp_mutate(const QP& qp, int k);

// Full subquiver on `vertices` (renumbered in the given order) and the terms
// whose arrows all survive. Throws Error(EmptySubset).
QP restrict_qp(const QP& qp, const std::vector<int>& vertices);

enum class Verdict { StabilizedAt, GrowingAtBound };

struct DimProfile {
    std::vector<long> dims;  // dims[l] = dim of the Jacobian algebra modulo paths of length > l
    Verdict verdict = Verdict::GrowingAtBound;
    int stable_from = -1;    // l with StabilizedAt(l)
    bool operator==(const DimProfile& o) const = default;
};
std::string to_string(const DimProfile& p);

// Standard basis of the Jacobian ideal in KQ / (paths of length >= N) with
// leading word = shortest, then lexicographically smallest under `arrow_rank`
// (identity when empty). dims has N entries d_0..d_{N-1}.
DimProfile jacobian_dim_truncated(const QP& qp, int N, const std::vector<int>& arrow_rank = {});

struct NondegeneracyReport {
    bool two_cycle_found = false;
    int depth = 0;
    std::vector<int> sequence;  // the offending mutation sequence when found
    std::size_t explored = 0;   // distinct QPs visited
};

// Breadth-first over mutation sequences of length <= depth, skipping QPs
// already seen (exact equality) and immediate repeats.
NondegeneracyReport probe_nondegenerate(const QP& qp, int depth);

// The potentials of the classification tables, vertices and arrows numbered
// as in their figures (vertex v of a figure is v - 1 here).
namespace qp_catalog {
QP a3_zero();           // 1 -> 2 -> 3, W = 0
QP three_cycle();       // 1 -> 2 -> 3 -> 1, W = the cycle
QP kronecker_zero(int m);
QP t1_w1();
QP t1_w1_prime();
QP t2_tame();
QP t2_wild();
QP x6_w6();
}  // namespace qp_catalog

}  // namespace cf

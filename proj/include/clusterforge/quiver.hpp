#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cf {

// An arrow bundle: `mult` parallel arrows from `from` to `to` (0-based).
struct Arrow {
    int from = 0;
    int to = 0;
    int mult = 1;
    bool operator==(const Arrow&) const = default;
};

// A loop-free, 2-cycle-free quiver stored as its exchange matrix with
// b(i, j) = #{arrows j -> i} - #{arrows i -> j}. Vertices are 0-based in the
// library; the text formats and the CLI are 1-based.
class Quiver {
public:
    Quiver() = default;
    explicit Quiver(int n);

    static Quiver from_arrows(int n, const std::vector<Arrow>& arrows);
    static Quiver from_b_matrix(const std::vector<std::vector<int>>& b);
    static Quiver from_b_flat(int n, std::vector<int> b);

    int size() const { return n_; }
    int b(int i, int j) const { return b_[static_cast<std::size_t>(i) * n_ + j]; }
    int arrow_count(int from, int to) const;
    std::vector<Arrow> arrows() const;
    std::vector<std::vector<int>> b_matrix() const;
    const std::vector<int>& b_flat() const { return b_; }
    int max_weight() const;
    bool is_connected() const;
    bool is_acyclic() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    // Equality ignores labels.
    bool operator==(const Quiver& o) const { return n_ == o.n_ && b_ == o.b_; }

private:
    int n_ = 0;
    std::vector<int> b_;
    std::vector<std::string> labels_;
};

// Mutation at k by the three-step procedure: compose paths through k,
// reverse the arrows at k, cancel 2-cycles.
Quiver mutate(const Quiver& q, int k);
Quiver mutate_sequence(Quiver q, const std::vector<int>& ks);

// The closed-form matrix rule b'_ij = -b_ij if k in {i, j}, otherwise
// b_ij + sgn(b_ik) [b_ik b_kj]_+. Works on any square skew-symmetric matrix.
std::vector<int> mutate_b_matrix(const std::vector<int>& b, int n, int k);

// Induced subquiver on `vertices` (kept in the given order).
Quiver restrict(const Quiver& q, const std::vector<int>& vertices);

// Relabel: vertex i of the result is vertex perm[i] of q.
Quiver permute(const Quiver& q, const std::vector<int>& perm);

struct Canonical {
    Quiver quiver;          // permute(input, perm)
    std::vector<int> perm;  // perm[i] = input vertex placed at position i
};

// Canonical representative: vertices are first ordered by a color-refinement
// invariant, then the lexicographically minimal lower triangle of B is chosen
// among the permutations compatible with that order.
Canonical canonicalize(const Quiver& q);

enum class ClassStatus { Exhausted, BudgetExceeded, MultiplicityBlowup };

struct ClassEdge {
    int from;
    int vertex;
    int to;
};

struct MutationClassResult {
    std::vector<Quiver> representatives;  // canonical, in discovery order
    std::vector<ClassEdge> edges;         // vertex refers to the canonical labelling of `from`
    ClassStatus status = ClassStatus::Exhausted;
    int blowup_from = -1, blowup_to = -1, blowup_weight = 0;
    Quiver blowup_quiver;
};

enum class Exec { Serial, Parallel };

MutationClassResult mutation_class(const Quiver& q, std::size_t max_quivers = 100000,
                                   int max_weight = 3, Exec exec = Exec::Parallel);

enum class MutationType { Dynkin, Affine, ExceptionalFiniteMut, FiniteMutOther, InfiniteMut, Unknown };

struct Classification {
    MutationType type = MutationType::Unknown;
    std::string name;             // e.g. "A3", "E6^(1)", "X7"; empty when not applicable
    std::size_t class_size = 0;   // representatives found before stopping
};

Classification classify(const Quiver& q, std::size_t budget = 100000);
std::string to_string(ClassStatus s);
std::string to_string(MutationType t);
std::string to_string(const Classification& c);

// Name of an acyclic quiver's underlying diagram if it is Dynkin or affine,
// e.g. {Dynkin, "D5"} or {Affine, "A1^(1)"}; {Unknown, ""} otherwise.
Classification diagram_name(const Quiver& q);

}  // namespace cf

#include "clusterforge/catalog.hpp"
#include "clusterforge/error.hpp"
#include "clusterforge/quiver.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace cf;

namespace {

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::ParseError;
}

}  // namespace

TEST_CASE("exchange matrix follows the arrow convention") {
    const Quiver q = Quiver::from_arrows(3, {{0, 1, 1}, {1, 2, 2}});
    CHECK(q.b(1, 0) == 1);
    CHECK(q.b(0, 1) == -1);
    CHECK(q.b(2, 1) == 2);
    CHECK(q.arrow_count(1, 2) == 2);
    CHECK(q.arrow_count(2, 1) == 0);
    CHECK(q.max_weight() == 2);
    CHECK(q.is_acyclic());
    CHECK_FALSE(catalog::oriented_cycle(3).is_acyclic());
}

TEST_CASE("malformed input is rejected with the right code") {
    CHECK(code_of([] { Quiver::from_b_matrix({{0, 1}, {0, 0}}); }) == Errc::NotSkewSymmetric);
    CHECK(code_of([] { mutate(catalog::linear_a(3), 3); }) == Errc::InvalidVertex);
    CHECK(code_of([] { mutate(catalog::linear_a(3), -1); }) == Errc::InvalidVertex);
    CHECK(code_of([] { restrict(catalog::linear_a(3), {}); }) == Errc::EmptySubset);
}

TEST_CASE("mutation of the oriented 3-cycle gives linear A3") {
    const Quiver q = mutate(catalog::oriented_cycle(3), 0);
    CHECK(q.arrows().size() == 2);
    CHECK(q.is_acyclic());
    CHECK(canonicalize(q).quiver == canonicalize(catalog::linear_a(3)).quiver);
}

TEST_CASE("Kronecker and Markov quivers are fixed up to isomorphism") {
    for (int m : {2, 3, 5}) {
        const Quiver k = catalog::kronecker(m);
        CHECK(canonicalize(mutate(k, 0)).quiver == canonicalize(k).quiver);
    }
    const Quiver mk = catalog::markov();
    for (int k = 0; k < 3; ++k) CHECK(canonicalize(mutate(mk, k)).quiver == canonicalize(mk).quiver);
}

TEST_CASE("property: three-step mutation equals the matrix rule and the oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 5;
        const Quiver q = oracle::random_quiver(rng, n, 3);
        for (int k = 0; k < n; ++k) {
            const Quiver m = mutate(q, k);
            CHECK(m.b_flat() == mutate_b_matrix(q.b_flat(), n, k));
            CHECK(oracle::to_matrix(m) == oracle::mutate(oracle::to_matrix(q), k));
        }
    }
}

TEST_CASE("property: mutation is an involution and commutes with relabelling") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 5;
        const Quiver q = oracle::random_quiver(rng, n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int k = 0; k < n; ++k) {
            CHECK(mutate(mutate(q, k), k) == q);
            // vertex i of permute(q, perm) is vertex perm[i] of q
            const int i = static_cast<int>(std::find(perm.begin(), perm.end(), k) - perm.begin());
            CHECK(mutate(permute(q, perm), i) == permute(mutate(q, k), perm));
        }
    }
}

TEST_CASE("property: canonical form is a complete isomorphism invariant") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + trial % 5;
        const Quiver a = oracle::random_quiver(rng, n);
        const Quiver b = oracle::random_quiver(rng, n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Canonical ca = canonicalize(a);
        CHECK(canonicalize(permute(a, perm)).quiver == ca.quiver);
        CHECK(permute(a, ca.perm) == ca.quiver);
        const bool same = oracle::canonical(oracle::to_matrix(a)) == oracle::canonical(oracle::to_matrix(b));
        CHECK((canonicalize(b).quiver == ca.quiver) == same);
    }
}

TEST_CASE("mutation class sizes agree with the brute-force oracle") {
    // Frozen from the oracle; the oracle is rerun here for the smaller ones.
    const std::vector<std::pair<std::string, std::size_t>> sizes = {
        {"A2", 1}, {"A3", 4}, {"A4", 6}, {"A5", 19}, {"D4", 6}, {"D5", 26},
        {"E6", 67}, {"K2", 1}, {"X6", 5}, {"X7", 2}, {"E6^(1,1)", 49}, {"T2", 1},
    };
    for (const auto& [name, size] : sizes) {
        CAPTURE(name);
        const Quiver q = catalog::by_name(name);
        const MutationClassResult r = mutation_class(q);
        CHECK(r.status == ClassStatus::Exhausted);
        CHECK(r.representatives.size() == size);
        if (q.size() <= 6) CHECK(oracle::mutation_class_size(q).size == size);
    }
    CHECK(mutation_class(catalog::affine_e(6)).representatives.size() == 132);
}

TEST_CASE("serial and parallel class enumeration agree") {
    for (const char* name : {"A5", "D5", "E6", "X6"}) {
        const Quiver q = catalog::by_name(name);
        const auto s = mutation_class(q, 100000, 3, Exec::Serial);
        const auto p = mutation_class(q, 100000, 3, Exec::Parallel);
        CHECK(s.representatives == p.representatives);
        CHECK(s.edges.size() == p.edges.size());
    }
}

TEST_CASE("class edges are mutations of the canonical representatives") {
    const auto r = mutation_class(catalog::type_d(5));
    for (const ClassEdge& e : r.edges) {
        const Quiver m = mutate(r.representatives[e.from], e.vertex);
        CHECK(canonicalize(m).quiver == r.representatives[e.to]);
    }
}

TEST_CASE("budget and multiplicity stops") {
    const auto b = mutation_class(catalog::type_e(6), 10);
    CHECK(b.status == ClassStatus::BudgetExceeded);
    const Quiver wild = Quiver::from_b_matrix({{0, 2, 2}, {-2, 0, 2}, {-2, -2, 0}});
    const auto w = mutation_class(wild);
    CHECK(w.status == ClassStatus::MultiplicityBlowup);
    CHECK(w.blowup_weight >= 3);
    CHECK(w.blowup_quiver.max_weight() == w.blowup_weight);
}

TEST_CASE("classifier buckets") {
    const std::vector<std::pair<std::string, std::string>> expect = {
        {"A4", "Dynkin(A4)"},
        {"D5", "Dynkin(D5)"},
        {"E6", "Dynkin(E6)"},
        {"cycle3", "Dynkin(A3)"},
        {"K2", "Affine(A1^(1))"},
        {"E6^(1)", "Affine(E6^(1))"},
        {"K3", "ExceptionalFiniteMut(K3)"},
        {"X6", "ExceptionalFiniteMut(X6)"},
        {"X7", "ExceptionalFiniteMut(X7)"},
        {"E6^(1,1)", "ExceptionalFiniteMut(E6^(1,1))"},
        {"markov", "FiniteMutOther"},
    };
    for (const auto& [name, verdict] : expect) {
        CAPTURE(name);
        CHECK(to_string(classify(catalog::by_name(name))) == verdict);
    }
    const Quiver wild = Quiver::from_b_matrix({{0, 2, 2}, {-2, 0, 2}, {-2, -2, 0}});
    CHECK(classify(wild).type == MutationType::InfiniteMut);
    CHECK(classify(catalog::type_e(6), 5).type == MutationType::Unknown);
}

TEST_CASE("diagram names of acyclic quivers") {
    CHECK(diagram_name(catalog::linear_a(5)).name == "A5");
    CHECK(diagram_name(catalog::type_d(6)).name == "D6");
    CHECK(diagram_name(catalog::kronecker(2)).name == "A1^(1)");
    CHECK(diagram_name(catalog::kronecker(3)).type == MutationType::Unknown);
}

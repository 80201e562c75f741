#include "clusterforge/catalog.hpp"
#include "clusterforge/cluster.hpp"
#include "clusterforge/error.hpp"
#include "clusterforge/gfan.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace cf;

namespace {

// Exact numeric seed: values of the cluster at a fixed rational point, with
// the frozen values standing in for the coefficients.
struct NumericSeed {
    oracle::Matrix b;             // framed, 2n x 2n
    std::vector<Rational> x;      // 2n values, frozen ones fixed
};

Rational power(const Rational& a, long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= a;
    return r;
}

NumericSeed numeric_initial(const Quiver& q, const std::vector<Rational>& point) {
    return {oracle::to_matrix(initial_seed(q).framed), point};
}

NumericSeed numeric_mutate(const NumericSeed& s, int k) {
    Rational plus = 1, minus = 1;
    for (std::size_t j = 0; j < s.x.size(); ++j) {
        const long e = s.b[j][k];
        if (e > 0) plus *= power(s.x[j], e);
        if (e < 0) minus *= power(s.x[j], -e);
    }
    NumericSeed r{oracle::mutate(s.b, k), s.x};
    r.x[k] = (plus + minus) / s.x[k];
    return r;
}

Rational evaluate(const LaurentPoly& p, const std::vector<Rational>& point) {
    const int n = p.nx();
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (int i = 0; i < n; ++i) t *= e[i] >= 0 ? power(point[i], e[i]) : 1 / power(point[i], -e[i]);
        for (int j = 0; j < p.ny(); ++j) t *= power(point[n + j], e[n + j]);
        sum += t;
    }
    return sum;
}

std::vector<Rational> test_point(int n) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<Rational> v;
    for (int i = 0; i < 2 * n; ++i) v.push_back(Rational(primes[i], primes[(i + 3) % 12]));
    return v;
}

// Clusters counted as sets of numeric values, reached by breadth-first search.
std::size_t numeric_cluster_count(const Quiver& q) {
    const int n = q.size();
    auto key = [n](const NumericSeed& s) {
        std::vector<Rational> v(s.x.begin(), s.x.begin() + n);
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<NumericSeed> frontier{numeric_initial(q, test_point(n))};
    std::set<std::vector<Rational>> seen{key(frontier[0])};
    while (!frontier.empty()) {
        std::vector<NumericSeed> next;
        for (const auto& s : frontier)
            for (int k = 0; k < n; ++k) {
                NumericSeed m = numeric_mutate(s, k);
                if (seen.insert(key(m)).second) next.push_back(std::move(m));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace

TEST_CASE("initial seed has principal coefficients") {
    const Seed s = initial_seed(catalog::linear_a(3));
    CHECK(s.rank() == 3);
    CHECK(s.framed.size() == 6);
    CHECK(s.exchange_quiver() == catalog::linear_a(3));
    for (int i = 0; i < 3; ++i) {
        CHECK(s.cluster[i] == LaurentPoly::x(3, 3, i));
        CHECK(std::abs(s.framed.b(i + 3, i)) == 1);
    }
}

TEST_CASE("A2 exchange relations by hand") {
    const Seed s = mutate_seed(initial_seed(catalog::linear_a(2)), 0);
    const LaurentPoly& x = s.cluster[0];
    CHECK(check_laurent(x));
    CHECK(x.term_count() == 2);
    CHECK(x.denominator() == std::vector<int>{1, 0});
    // the pentagon closes: five alternating mutations return the initial cluster up to swapping
    Seed t = initial_seed(catalog::linear_a(2));
    for (int i = 0; i < 5; ++i) t = mutate_seed(t, i % 2);
    CHECK(t.cluster[0] == LaurentPoly::x(2, 2, 1));
    CHECK(t.cluster[1] == LaurentPoly::x(2, 2, 0));
}

TEST_CASE("property: Laurent seeds agree with exact numeric exchange") {
    std::mt19937_64 rng(21);
    std::vector<Quiver> quivers = {catalog::linear_a(3), catalog::type_d(4), catalog::kronecker(2),
                                   catalog::oriented_cycle(3), catalog::markov()};
    for (int i = 0; i < 6; ++i) quivers.push_back(oracle::random_quiver(rng, 2 + i % 3, 1));
    for (const Quiver& q : quivers) {
        const int n = q.size();
        const std::vector<Rational> pt = test_point(n);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int walk = 0; walk < 4; ++walk) {
            Seed s = initial_seed(q);
            NumericSeed ns = numeric_initial(q, pt);
            for (int step = 0; step < 5; ++step) {
                const int k = pick(rng);
                s = mutate_seed(s, k);
                ns = numeric_mutate(ns, k);
                CHECK(oracle::to_matrix(s.framed) == ns.b);
                for (int i = 0; i < n; ++i) CHECK(evaluate(s.cluster[i], pt) == ns.x[i]);
            }
        }
    }
}

TEST_CASE("property: every variable is Laurent with positive integer coefficients") {
    // Depth 8 where variables stay small; K3, Markov and T2 grow exponentially
    // in term count and stop at depth 5.
    const std::vector<std::pair<std::string, int>> corpus = {
        {"A2", 8}, {"A3", 8}, {"A4", 8}, {"D4", 8}, {"K2", 8}, {"cycle3", 8}, {"K3", 5}, {"markov", 5}, {"T2", 5},
    };
    for (const auto& [name, depth] : corpus) {
        CAPTURE(name);
        for (const ClusterVariable& v : cluster_variables(catalog::by_name(name), depth)) {
            CHECK(check_laurent(v.value));
            CHECK(check_laurent(v.value.numerator(), v.value.denominator()));
            CHECK(has_positive_integer_coefficients(v.value));
        }
    }
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const Quiver q = oracle::random_quiver(rng, 2 + trial % 3, 1);
        for (const ClusterVariable& v : cluster_variables(q, 5)) {
            CHECK(check_laurent(v.value));
            CHECK(has_positive_integer_coefficients(v.value));
        }
    }
}

TEST_CASE("check_laurent rejects a numerator divisible by a denominator variable") {
    LaurentPoly f(2, 0);  // x2 + x1 x2^2
    f.add_term({0, 1}, 1);
    f.add_term({1, 2}, 1);
    CHECK_FALSE(check_laurent(f, {0, 1}));
    CHECK(check_laurent(f, {1, 0}));
    CHECK(check_laurent(LaurentPoly::x(2, 0, 0)));
    LaurentPoly half(1, 0);
    half.add_term({0}, Rational(1, 2));
    CHECK_FALSE(check_laurent(half));
}

TEST_CASE("property: seed mutation is an involution on Laurent data") {
    for (const char* name : {"A3", "D4", "K2", "markov"}) {
        const Seed s = initial_seed(catalog::by_name(name));
        for (int k = 0; k < s.rank(); ++k) {
            const Seed once = mutate_seed(s, k);
            CHECK(mutate_seed(once, k) == s);
            for (int j = 0; j < s.rank(); ++j) CHECK(mutate_seed(mutate_seed(once, j), j) == once);
        }
    }
}

TEST_CASE("property: tropical seeds track the degrees of the variables") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        const Quiver q = oracle::random_quiver(rng, 2 + trial % 3, 1);
        const int n = q.size();
        std::uniform_int_distribution<int> pick(0, n - 1);
        Seed s = initial_seed(q);
        TropicalSeed t = initial_tropical_seed(q);
        for (int step = 0; step < 6; ++step) {
            const int k = pick(rng);
            s = mutate_seed(s, k);
            t = mutate_tropical(t, k);
            CHECK(t.exchange_quiver() == s.exchange_quiver());
            for (int j = 0; j < n; ++j) CHECK(g_vector_of(s.cluster[j], q) == t.gvector(j));
            CHECK(check_sign_coherence(n, t.g));
        }
    }
}

TEST_CASE("property: the transition rule moves g-vectors to the mutated base seed") {
    // Iterating the rule on e_j along a path gives the degree of the initial
    // variable x_j seen from the far seed, i.e. the variable reached from the
    // far seed along the reversed path.
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 12; ++trial) {
        const Quiver q = oracle::random_quiver(rng, 2 + trial % 3, 1);
        const int n = q.size();
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<int> path;
        for (int i = 0; i < 6; ++i) path.push_back(pick(rng));
        std::vector<GVector> g(n, GVector(n, 0));
        for (int j = 0; j < n; ++j) g[j][j] = 1;
        Quiver b = q;
        for (int k : path) {
            for (GVector& x : g) x = mutate_gvector(x, k, b);
            b = mutate(b, k);
        }
        Seed back = initial_seed(b);
        for (auto it = path.rbegin(); it != path.rend(); ++it) back = mutate_seed(back, *it);
        for (int j = 0; j < n; ++j) CHECK(g_vector_of(back.cluster[j], b) == g[j]);
    }
}

TEST_CASE("g-vector degree examples") {
    const Quiver a2 = catalog::linear_a(2);
    CHECK(g_vector_of(LaurentPoly::x(2, 2, 0), a2) == GVector{1, 0});
    CHECK(g_vector_of(mutate_seed(initial_seed(a2), 0).cluster[0], a2) == GVector{-1, 0});
    LaurentPoly bad(2, 2);
    bad.add_term({1, 0, 0, 0}, 1);
    bad.add_term({0, 1, 0, 0}, 1);
    CHECK_THROWS_AS(g_vector_of(bad, a2), Error);
}

TEST_CASE("mutate_gvector follows the transition rule") {
    // g'_k = -g_k, g'_i = g_i + [b_ik]_+ g_k - b_ik min(g_k, 0)
    const Quiver b = Quiver::from_b_matrix({{0, 2, -1}, {-2, 0, 3}, {1, -3, 0}});
    const GVector g = {4, -1, 2};
    CHECK(mutate_gvector(g, 1, b) == GVector{4 + 2 * -1 - 2 * -1, 1, 2 + 0 - (-3) * -1});
    CHECK(mutate_gvector(g, 0, b) == GVector{-4, -1, 2 + 1 * 4});
}

TEST_CASE("g-vectors of finite type seeds are sign coherent and unimodular") {
    const ClusterEnumeration e = enumerate_clusters(catalog::type_d(4));
    for (const TropicalSeed& s : e.seeds) {
        CHECK(check_sign_coherence(4, s.g));
        std::vector<std::int64_t> m(s.g.begin(), s.g.end());
        const Integer d = determinant(4, m);
        CHECK(abs(d) == 1);
    }
}

TEST_CASE("cluster counts for finite types") {
    // numeric oracle first, then the frozen values
    const std::vector<std::tuple<std::string, std::size_t, std::size_t>> expect = {
        {"A2", 5, 5}, {"A3", 14, 9}, {"A4", 42, 14}, {"D4", 50, 16}, {"cycle3", 14, 9},
    };
    for (const auto& [name, clusters, variables] : expect) {
        CAPTURE(name);
        const Quiver q = catalog::by_name(name);
        CHECK(numeric_cluster_count(q) == clusters);
        const ClusterEnumeration e = enumerate_clusters(q);
        CHECK(e.status == EnumStatus::Exhausted);
        CHECK(e.seeds.size() == clusters);
        CHECK(e.variables.size() == variables);
        CHECK(cluster_variables(q, 20).size() == variables);
    }
}

TEST_CASE("enumeration budget and depth") {
    CHECK(enumerate_clusters(catalog::kronecker(2), 40).status == EnumStatus::BudgetExceeded);
    const ClusterEnumeration d = enumerate_clusters(catalog::kronecker(2), 100000, 5);
    CHECK(d.status == EnumStatus::BudgetExceeded);
    CHECK(d.seeds.size() == 11);
    CHECK(enumerate_clusters(catalog::linear_a(4), 100000, 3).status == EnumStatus::BudgetExceeded);
}

TEST_CASE("cluster edges are mutations") {
    const ClusterEnumeration e = enumerate_clusters(catalog::linear_a(3));
    for (const ClusterEdge& ed : e.edges)
        CHECK(mutate_tropical(e.seeds[ed.from], ed.vertex).cluster_key() == e.seeds[ed.to].cluster_key());
}

TEST_CASE("Kronecker variables at depth 3") {
    const auto vars = cluster_variables(catalog::kronecker(2), 3);
    CHECK(vars.size() == 8);  // two initial, three in each direction
    for (const auto& v : vars) {
        CHECK(check_laurent(v.value));
        CHECK(g_vector_of(v.value, catalog::kronecker(2)) == v.g);
        CHECK(v.history.size() <= 3);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(mutate_seed(initial_seed(catalog::linear_a(2)), 2), Error);
    CHECK_THROWS_AS(mutate_gvector({1, 0}, 3, catalog::linear_a(2)), Error);
}

#include "clusterforge/catalog.hpp"
#include "clusterforge/error.hpp"
#include "clusterforge/gfan.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace cf;

namespace {

// Exact cone membership by Cramer's rule, independent of the library solver.
bool in_cone(const std::vector<GVector>& gens, const std::vector<Rational>& v) {
    const int n = static_cast<int>(v.size());
    auto det = [n](std::vector<std::vector<Rational>> a) {
        Rational d = 1;
        for (int c = 0; c < n; ++c) {
            int p = c;
            while (p < n && a[p][c] == 0) ++p;
            if (p == n) return Rational(0);
            if (p != c) {
                std::swap(a[p], a[c]);
                d = -d;
            }
            d *= a[c][c];
            for (int r = c + 1; r < n; ++r) {
                const Rational f = a[r][c] / a[c][c];
                for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            }
        }
        return d;
    };
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(gens[j][i]));
    const Rational d = det(m);
    if (d == 0) return false;
    for (int j = 0; j < n; ++j) {
        auto mj = m;
        for (int i = 0; i < n; ++i) mj[i][j] = v[i];
        if (det(mj) / d < 0) return false;
    }
    return true;
}

std::vector<GVector> cone_rays(const GFan& f, int c) {
    std::vector<GVector> out;
    for (int r : f.cones[c]) out.push_back(f.rays[r]);
    return out;
}

}  // namespace

TEST_CASE("finite type fans are complete with the expected cone counts") {
    const std::vector<std::pair<std::string, std::size_t>> expect = {{"A2", 5}, {"A3", 14}, {"A4", 42}, {"D4", 50}};
    for (const auto& [name, cones] : expect) {
        CAPTURE(name);
        const GFan f = build_gfan(catalog::by_name(name));
        CHECK(f.status == FanStatus::Exhausted);
        CHECK(f.cones.size() == cones);
        CHECK(is_complete(f).verdict == Completeness::Complete);
        // closed pseudomanifold: every facet lies in exactly two cones
        for (const auto& [facet, owners] : f.facets) CHECK(owners.size() == 2);
        for (int c = 0; c < static_cast<int>(f.cones.size()); ++c) CHECK(cone_determinant(f, c) == 1);
    }
}

TEST_CASE("property: random directions of a finite type fan land in a cone") {
    const GFan f = build_gfan(catalog::type_d(4));
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coord(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> v(4);
        for (auto& x : v) x = coord(rng);
        bool found = false;
        for (int c = 0; c < static_cast<int>(f.cones.size()) && !found; ++c) found = in_cone(cone_rays(f, c), v);
        CHECK(found);
    }
}

TEST_CASE("a fan with a missing cone is Incomplete with a genuine witness") {
    const GFan full = build_gfan(catalog::linear_a(2));
    std::vector<std::vector<GVector>> cones = full.normalized();
    cones.erase(cones.begin() + 2);
    const GFan holed = GFan::from_cones(2, cones, FanStatus::Exhausted);
    const CompletenessReport r = is_complete(holed);
    REQUIRE(r.verdict == Completeness::Incomplete);
    for (const auto& c : cones) CHECK_FALSE(in_cone(c, r.witness));
    CHECK(in_cone(full.normalized()[2], r.witness));
}

TEST_CASE("truncated fans are Unknown") {
    for (std::size_t budget : {10u, 100u, 1000u}) {
        const GFan f = build_gfan(catalog::kronecker(2), budget);
        CHECK(f.status == FanStatus::Truncated);
        CHECK(is_complete(f).verdict == Completeness::Unknown);
    }
}

TEST_CASE("Kronecker rays accumulate on the missing direction") {
    const GFan f = build_gfan(catalog::kronecker(2), 200);
    std::size_t near = 0;
    for (const GVector& r : f.rays) {
        CHECK(std::abs(r[0] + r[1]) <= 1);
        if (std::abs(r[0]) > 50) ++near;
    }
    CHECK(near > 0);
    const std::vector<Rational> limit = {1, -1};
    for (int c = 0; c < static_cast<int>(f.cones.size()); ++c) CHECK_FALSE(in_cone(cone_rays(f, c), limit));
    CHECK_FALSE(contains_point(catalog::kronecker(2), limit, 50).in_cone);
    CHECK_FALSE(contains_point_exhaustive(catalog::kronecker(2), limit, 30).in_cone);
}

TEST_CASE("property: fan transition equals the fan of the mutated quiver") {
    for (const char* name : {"A2", "A3", "D4", "cycle3"}) {
        const Quiver q = catalog::by_name(name);
        const GFan f = build_gfan(q);
        for (int k = 0; k < q.size(); ++k) {
            const GFan moved = fan_transition(f, k, q);
            CHECK(moved.normalized() == build_gfan(mutate(q, k)).normalized());
            CHECK(is_complete(moved).verdict == Completeness::Complete);
            CHECK(fan_transition(moved, k, mutate(q, k)).normalized() == f.normalized());
        }
    }
}

TEST_CASE("property: greedy membership certificates are exact") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> coord(-20, 20);
    for (const char* name : {"A3", "D4", "cycle3"}) {
        const Quiver q = catalog::by_name(name);
        const int n = q.size();
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Rational> v(n);
            for (auto& x : v) {
                x = Rational(coord(rng), 1 + trial % 3);
                x.canonicalize();
            }
            if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) continue;
            const Membership m = contains_point(q, v, 50);
            REQUIRE(m.in_cone);
            TropicalSeed s = initial_tropical_seed(q);
            for (int k : m.history) s = mutate_tropical(s, k);
            for (int i = 0; i < n; ++i) {
                Rational sum = 0;
                for (int j = 0; j < n; ++j) {
                    CHECK(m.coords[j] >= 0);
                    sum += m.coords[j] * Rational(static_cast<long>(s.gij(i, j)));
                }
                CHECK(sum == v[i]);
            }
        }
    }
}

TEST_CASE("exhaustive membership finds what greedy descent misses") {
    const Quiver k2 = catalog::kronecker(2);
    const std::vector<Rational> v = {0, -1};
    CHECK_FALSE(contains_point(k2, v, 50).in_cone);
    const Membership m = contains_point_exhaustive(k2, v, 30);
    REQUIRE(m.in_cone);
    TropicalSeed s = initial_tropical_seed(k2);
    for (int k : m.history) s = mutate_tropical(s, k);
    std::vector<GVector> gens = {s.gvector(0), s.gvector(1)};
    CHECK(in_cone(gens, v));
}

TEST_CASE("density estimates") {
    CHECK(density_estimate(catalog::linear_a(3), 200, 30, 1) == 1.0);
    // regression constant frozen from the first run
    const double k3 = density_estimate(catalog::kronecker(3), 1000, 20, 7);
    CHECK(k3 == doctest::Approx(0.822).epsilon(1e-9));
    CHECK(density_estimate(catalog::kronecker(3), 1000, 20, 7, Exec::Serial) == k3);
    CHECK(density_samples(3, 10, 4) == density_samples(3, 10, 4));
    CHECK(density_samples(3, 10, 4) != density_samples(3, 10, 5));
}

TEST_CASE("sign coherence") {
    CHECK(check_sign_coherence(2, {1, 0, 0, 1}));
    CHECK_FALSE(check_sign_coherence(2, {1, -1, 0, 1}));
    const ClusterEnumeration e = enumerate_clusters(catalog::linear_a(3));
    for (const auto& s : e.seeds) CHECK(check_sign_coherence(3, s.g));
}

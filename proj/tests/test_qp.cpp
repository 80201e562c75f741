#include "clusterforge/catalog.hpp"
#include "clusterforge/error.hpp"
#include "clusterforge/qp.hpp"

#include <doctest.h>

#include <map>
#include <utility>

using namespace cf;
using namespace cf::qp_catalog;

namespace {

// Brute-force Jacobian dimension: span every u * dW/da * v inside the space
// of paths of length <= l and subtract its rank from the number of paths.
using Word = std::pair<int, std::vector<int>>;  // start vertex, arrows in order
using Row = std::map<Word, Rational>;

int end_of(const QP& qp, const Word& w) { return w.second.empty() ? w.first : qp.arrows[w.second.back()].to; }

std::vector<Word> paths_up_to(const QP& qp, int l) {
    std::vector<Word> out;
    std::vector<Word> layer;
    for (int v = 0; v < qp.n; ++v) layer.push_back({v, {}});
    for (int len = 0; len <= l; ++len) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Word> next;
        for (const Word& w : layer)
            for (int a = 0; a < static_cast<int>(qp.arrows.size()); ++a)
                if (qp.arrows[a].from == end_of(qp, w)) {
                    Word x = w;
                    x.second.push_back(a);
                    next.push_back(x);
                }
        layer = std::move(next);
    }
    return out;
}

std::size_t rank_of(std::vector<Row> rows) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) continue;
        const auto [pivot, pv] = *rows[i].begin();
        ++rank;
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            auto it = rows[j].find(pivot);
            if (it == rows[j].end()) continue;
            const Rational f = it->second / pv;
            for (const auto& [w, c] : rows[i]) {
                Rational& x = rows[j][w];
                x -= f * c;
                if (x == 0) rows[j].erase(w);
            }
        }
    }
    return rank;
}

long brute_force_dim(const QP& qp, int l) {
    const std::vector<Word> paths = paths_up_to(qp, l);
    std::vector<Row> rows;
    for (int a = 0; a < static_cast<int>(qp.arrows.size()); ++a) {
        const PathPoly d = cyclic_derivative(qp, a);
        if (d.empty()) continue;
        // dW/da runs from the head of a back to its tail
        const int s = qp.arrows[a].to, t = qp.arrows[a].from;
        for (const Word& u : paths) {
            if (end_of(qp, u) != s) continue;
            for (const Word& v : paths) {
                if (v.first != t) continue;
                Row r;
                for (const auto& [p, c] : d) {
                    if (u.second.size() + p.size() + v.second.size() > static_cast<std::size_t>(l)) continue;
                    Word w{u.first, u.second};
                    w.second.insert(w.second.end(), p.begin(), p.end());
                    w.second.insert(w.second.end(), v.second.begin(), v.second.end());
                    r[w] += c;
                    if (r[w] == 0) r.erase(w);
                }
                if (!r.empty()) rows.push_back(std::move(r));
            }
        }
    }
    return static_cast<long>(paths.size() - rank_of(std::move(rows)));
}

}  // namespace

TEST_CASE("cyclic derivative of the 3-cycle") {
    const QP qp = three_cycle();
    for (int a = 0; a < 3; ++a) {
        const PathPoly d = cyclic_derivative(qp, a);
        REQUIRE(d.size() == 1);
        const Path& p = d.begin()->first;
        CHECK(p.size() == 2);
        CHECK(qp.arrows[p.front()].from == qp.arrows[a].to);
        CHECK(qp.arrows[p.back()].to == qp.arrows[a].from);
    }
    CHECK_THROWS_AS(cyclic_derivative(qp, 7), Error);
}

TEST_CASE("potential terms are stored up to rotation") {
    QP qp = QP::from_quiver(catalog::oriented_cycle(3));
    qp.add_term({1, 2, 0}, 2);
    qp.add_term({2, 0, 1}, Rational(-1, 2));
    REQUIRE(qp.potential.terms.size() == 1);
    CHECK(qp.potential.terms.begin()->first == Path{0, 1, 2});
    CHECK(qp.potential.terms.begin()->second == Rational(3, 2));
    CHECK_THROWS_AS(qp.add_term({0, 2}, 1), Error);
}

TEST_CASE("premutation shape") {
    const QP pre = premutate(three_cycle(), 1);
    // one composite arrow, two reversed arrows, one arrow away from k
    CHECK(pre.arrows.size() == 4);
    CHECK(pre.has_two_cycles());
    CHECK_THROWS_AS(premutate(QP::from_quiver(Quiver::from_b_matrix({{0, 1}, {-1, 0}})), 5), Error);
}

TEST_CASE("mutating the 3-cycle with its potential gives linear A3 with zero potential") {
    const QP m = qp_mutate(three_cycle(), 0);
    CHECK(m.quiver() == mutate(catalog::oriented_cycle(3), 0));
    CHECK(m.potential.is_zero());
}

TEST_CASE("mutating linear A3 at the middle restores a 3-cycle with a cubic term") {
    const QP m = qp_mutate(a3_zero(), 1);
    CHECK(m.quiver() == mutate(catalog::linear_a(3), 1));
    REQUIRE(m.potential.terms.size() == 1);
    CHECK(m.potential.terms.begin()->first.size() == 3);
}

TEST_CASE("property: qp mutation lifts quiver mutation and is an involution on profiles") {
    for (const QP& qp : {a3_zero(), three_cycle(), t2_tame()}) {
        const Quiver q = qp.quiver();
        const DimProfile base = jacobian_dim_truncated(qp, 10);
        for (int k = 0; k < qp.n; ++k) {
            CAPTURE(k);
            const QP once = qp_mutate(qp, k);
            CHECK(once.quiver() == mutate(q, k));
            const QP twice = qp_mutate(once, k);
            CHECK(twice.quiver() == q);
            CHECK(jacobian_dim_truncated(twice, 10) == base);
        }
    }
}

TEST_CASE("Jacobian dimensions match the brute-force span") {
    for (const QP& qp : {a3_zero(), three_cycle(), t2_tame(), qp_mutate(t2_tame(), 0)}) {
        const DimProfile p = jacobian_dim_truncated(qp, 5);
        REQUIRE(p.dims.size() == 5);
        for (int l = 0; l < 5; ++l) {
            CAPTURE(l);
            CHECK(p.dims[l] == brute_force_dim(qp, l));
        }
    }
}

TEST_CASE("Jacobian dimension profiles (regression)") {
    CHECK(to_string(jacobian_dim_truncated(three_cycle(), 8)) == "[3, 6, 6, 6, 6, 6, 6, 6] StabilizedAt(1)");
    CHECK(jacobian_dim_truncated(a3_zero(), 6).dims == std::vector<long>{3, 5, 6, 6, 6, 6});
    const DimProfile t2 = jacobian_dim_truncated(t2_tame(), 12);
    CHECK(t2.dims == std::vector<long>{4, 11, 17, 22, 26, 29, 31, 32, 32, 32, 32, 32});
    CHECK(t2.verdict == Verdict::StabilizedAt);
    CHECK(t2.stable_from == 7);
    const DimProfile x6 = jacobian_dim_truncated(x6_w6(), 12);
    CHECK(x6.verdict == Verdict::StabilizedAt);
    CHECK(x6.stable_from == 7);
    CHECK(x6.dims[7] == 49);
    // acyclic, so the path algebra itself is finite: 2 vertices and 3 arrows
    CHECK(to_string(jacobian_dim_truncated(kronecker_zero(3), 4)) == "[2, 5, 5, 5] StabilizedAt(1)");
}

TEST_CASE("T1 with the primed potential keeps growing") {
    const DimProfile p = jacobian_dim_truncated(t1_w1_prime(), 20);
    CHECK(p.verdict == Verdict::GrowingAtBound);
    CHECK(p.dims.back() > p.dims[p.dims.size() - 2]);
}

TEST_CASE("leading-word order does not change dimensions") {
    const QP qp = t2_tame();
    std::vector<int> reversed(qp.arrows.size());
    for (std::size_t i = 0; i < reversed.size(); ++i) reversed[i] = static_cast<int>(reversed.size() - 1 - i);
    CHECK(jacobian_dim_truncated(qp, 10).dims == jacobian_dim_truncated(qp, 10, reversed).dims);
}

TEST_CASE("restriction keeps the surviving terms") {
    const QP r = restrict_qp(three_cycle(), {0, 1});
    CHECK(r.n == 2);
    CHECK(r.arrows.size() == 1);
    CHECK(r.potential.is_zero());
    CHECK_THROWS_AS(restrict_qp(three_cycle(), {}), Error);
}

TEST_CASE("nondegeneracy probe") {
    const NondegeneracyReport ok = probe_nondegenerate(t2_tame(), 3);
    CHECK_FALSE(ok.two_cycle_found);
    CHECK(ok.explored > 1);
    const NondegeneracyReport a3 = probe_nondegenerate(a3_zero(), 4);
    CHECK_FALSE(a3.two_cycle_found);
}

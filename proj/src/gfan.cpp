#include "clusterforge/gfan.hpp"

#include "clusterforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>

namespace cf {

std::string to_string(FanStatus s) { return s == FanStatus::Exhausted ? "Exhausted" : "Truncated"; }

std::string to_string(Completeness c) {
    switch (c) {
        case Completeness::Complete: return "Complete";
        case Completeness::Incomplete: return "Incomplete";
        case Completeness::Unknown: return "Unknown";
    }
    return "?";
}

GFan GFan::from_cones(int n, const std::vector<std::vector<GVector>>& cones, FanStatus status) {
    GFan f;
    f.n = n;
    f.status = status;
    std::map<GVector, int> ray_index;
    for (const auto& c : cones)
        for (const auto& r : c) ray_index.emplace(r, 0);
    for (auto& [r, i] : ray_index) {
        i = static_cast<int>(f.rays.size());
        f.rays.push_back(r);
    }
    for (std::size_t ci = 0; ci < cones.size(); ++ci) {
        std::vector<int> idx;
        for (const auto& r : cones[ci]) idx.push_back(ray_index.at(r));
        std::sort(idx.begin(), idx.end());
        for (std::size_t drop = 0; drop < idx.size(); ++drop) {
            std::vector<int> facet;
            for (std::size_t j = 0; j < idx.size(); ++j)
                if (j != drop) facet.push_back(idx[j]);
            f.facets[facet].push_back(static_cast<int>(ci));
        }
        f.cones.push_back(std::move(idx));
    }
    return f;
}

std::vector<std::vector<GVector>> GFan::normalized() const {
    std::vector<std::vector<GVector>> out;
    for (const auto& c : cones) {
        std::vector<GVector> v;
        for (int i : c) v.push_back(rays[i]);
        std::sort(v.begin(), v.end());
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

GFan build_gfan(const Quiver& q, std::size_t budget, int max_depth) {
    const ClusterEnumeration e = enumerate_clusters(q, budget, max_depth);
    std::vector<std::vector<GVector>> cones;
    for (const auto& s : e.seeds) {
        std::vector<GVector> c;
        for (int j = 0; j < s.n; ++j) c.push_back(s.gvector(j));
        cones.push_back(std::move(c));
    }
    return GFan::from_cones(q.size(), cones,
                            e.status == EnumStatus::Exhausted ? FanStatus::Exhausted : FanStatus::Truncated);
}

namespace {

// Coordinates of v in the basis given by the cone's rays; false if singular.
bool cone_coords(const GFan& f, const std::vector<int>& cone, const std::vector<Rational>& v,
                 std::vector<Rational>& x) {
    const int n = f.n;
    std::vector<Rational> a(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) a[i * n + j] = f.rays[cone[j]][i];
    return solve_exact(n, a, v, x);
}

bool in_some_cone(const GFan& f, const std::vector<Rational>& v) {
    std::vector<Rational> x;
    for (const auto& c : f.cones)
        if (cone_coords(f, c, v, x) && std::all_of(x.begin(), x.end(), [](const Rational& r) { return r >= 0; }))
            return true;
    return false;
}

// Integer vector orthogonal to the n-1 given rays, via cofactors.
std::vector<Integer> facet_normal(const GFan& f, const std::vector<int>& facet) {
    const int n = f.n;
    std::vector<Integer> normal(n);
    for (int col = 0; col < n; ++col) {
        std::vector<std::int64_t> minor;
        for (int r : facet)
            for (int i = 0; i < n; ++i)
                if (i != col) minor.push_back(f.rays[r][i]);
        Integer d = n == 1 ? Integer(1) : determinant(n - 1, minor);
        normal[col] = (col % 2 == 0) ? d : Integer(-d);
    }
    return normal;
}

}  // namespace

CompletenessReport is_complete(const GFan& f) {
    CompletenessReport rep;
    if (f.status == FanStatus::Truncated) return rep;
    rep.verdict = Completeness::Incomplete;
    if (f.cones.empty()) {
        rep.witness.assign(f.n, Rational(1));
        return rep;
    }
    for (const auto& [facet, owners] : f.facets) {
        if (owners.size() == 2) continue;
        // Push the facet centroid across the facet, away from its only cone.
        const std::vector<int>& cone = f.cones[owners[0]];
        int apex = -1;
        for (int r : cone)
            if (!std::binary_search(facet.begin(), facet.end(), r)) apex = r;
        std::vector<Integer> normal = facet_normal(f, facet);
        Integer side = 0;
        for (int i = 0; i < f.n; ++i) side += normal[i] * f.rays[apex][i];
        if (side > 0)
            for (auto& x : normal) x = -x;
        std::vector<Rational> centroid(f.n, Rational(0));
        for (int r : facet)
            for (int i = 0; i < f.n; ++i) centroid[i] += Rational(Integer(static_cast<long>(f.rays[r][i])), Integer(static_cast<long>(facet.size())));
        for (Integer scale = 1; scale < 1024; scale *= 2) {
            std::vector<Rational> w(f.n);
            for (int i = 0; i < f.n; ++i) w[i] = centroid[i] * scale + Rational(normal[i]);
            if (!in_some_cone(f, w)) {
                rep.witness = std::move(w);
                return rep;
            }
        }
        return rep;
    }
    // Every facet is shared by two cones; the fan must also be facet-connected.
    std::vector<char> seen(f.cones.size(), 0);
    std::vector<std::vector<int>> adj(f.cones.size());
    for (const auto& [facet, owners] : f.facets) {
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
    }
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (int d : adj[c])
            if (!seen[d]) {
                seen[d] = 1;
                ++count;
                stack.push_back(d);
            }
    }
    if (count == f.cones.size()) rep.verdict = Completeness::Complete;
    return rep;
}

Integer cone_determinant(const GFan& f, int cone) {
    const int n = f.n;
    std::vector<std::int64_t> m(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m[i * n + j] = f.rays[f.cones[cone][j]][i];
    return abs(determinant(n, m));
}

Membership contains_point(const Quiver& q, const std::vector<Rational>& v, int depth) {
    const int n = q.size();
    if (static_cast<int>(v.size()) != n) throw Error(Errc::InvalidVertex, "vector length does not match rank");
    TropicalSeed s = initial_tropical_seed(q);
    Membership m;
    std::vector<Rational> a(static_cast<std::size_t>(n) * n);
    for (int step = 0;; ++step) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i * n + j] = s.gij(i, j);
        if (!solve_exact(n, a, v, m.coords))
            throw Error(Errc::SingularBasis, "g-matrix after " + std::to_string(step) + " mutations is singular");
        int neg = -1;
        for (int i = 0; i < n && neg < 0; ++i)
            if (m.coords[i] < 0) neg = i;
        if (neg < 0) {
            m.in_cone = true;
            break;
        }
        if (step == depth) break;
        s = mutate_tropical(s, neg);
    }
    m.history = s.history;
    return m;
}

Membership contains_point_exhaustive(const Quiver& q, const std::vector<Rational>& v, int depth,
                                     std::size_t budget) {
    const int n = q.size();
    if (static_cast<int>(v.size()) != n) throw Error(Errc::InvalidVertex, "vector length does not match rank");
    const ClusterEnumeration e = enumerate_clusters(q, budget, depth);
    Membership m;
    std::vector<Rational> a(static_cast<std::size_t>(n) * n);
    for (const TropicalSeed& s : e.seeds) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i * n + j] = s.gij(i, j);
        if (!solve_exact(n, a, v, m.coords)) throw Error(Errc::SingularBasis, "singular g-matrix");
        if (std::all_of(m.coords.begin(), m.coords.end(), [](const Rational& c) { return c >= 0; })) {
            m.in_cone = true;
            m.history = s.history;
            return m;
        }
    }
    m.coords.clear();
    return m;
}

std::vector<std::vector<Rational>> density_samples(int n, int samples, std::uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::vector<Rational>> out;
    out.reserve(samples);
    while (static_cast<int>(out.size()) < samples) {
        std::vector<double> d(n);
        double len = 0;
        for (auto& x : d) {
            x = normal(rng);
            len += x * x;
        }
        len = std::sqrt(len);
        if (len < 1e-9) continue;
        std::vector<Rational> v(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            const long c = std::lround(1e6 * d[i] / len);
            v[i] = Rational(c);
            zero &= c == 0;
        }
        if (!zero) out.push_back(std::move(v));
    }
    return out;
}

double density_estimate(const Quiver& q, int samples, int depth, std::uint64_t rng_seed, Exec exec) {
    const auto pts = density_samples(q.size(), samples, rng_seed);
    const long count = static_cast<long>(pts.size());
    long hits = 0;
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : hits)
        for (long i = 0; i < count; ++i) hits += contains_point(q, pts[i], depth).in_cone ? 1 : 0;
    } else {
        for (long i = 0; i < count; ++i) hits += contains_point(q, pts[i], depth).in_cone ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(count);
}

bool check_sign_coherence(int n, const std::vector<std::int64_t>& g) {
    for (int i = 0; i < n; ++i) {
        bool pos = false, neg = false;
        for (int j = 0; j < n; ++j) {
            pos |= g[i * n + j] > 0;
            neg |= g[i * n + j] < 0;
        }
        if (pos && neg) return false;
    }
    return true;
}

GFan fan_transition(const GFan& f, int k, const Quiver& b) {
    std::vector<std::vector<GVector>> cones;
    std::vector<GVector> moved;
    for (const auto& r : f.rays) moved.push_back(mutate_gvector(r, k, b));
    for (const auto& c : f.cones) {
        std::vector<GVector> v;
        for (int i : c) v.push_back(moved[i]);
        cones.push_back(std::move(v));
    }
    return GFan::from_cones(f.n, cones, f.status);
}

}  // namespace cf

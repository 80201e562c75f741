#include "clusterforge/cluster.hpp"

#include "clusterforge/error.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

namespace cf {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (std::int64_t x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
        return h;
    }
};

void check_mutable(int n, int k) {
    if (k < 0 || k >= n)
        throw Error(Errc::InvalidVertex, "mutable vertex " + std::to_string(k + 1) + " out of range 1.." +
                                             std::to_string(n));
}

}  // namespace

Quiver Seed::exchange_quiver() const {
    std::vector<int> v(static_cast<std::size_t>(rank()));
    for (int i = 0; i < rank(); ++i) v[i] = i;
    return restrict(framed, v);
}

Seed initial_seed(const Quiver& q) {
    const int n = q.size();
    std::vector<int> b(static_cast<std::size_t>(4) * n * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) b[i * 2 * n + j] = q.b(i, j);
        b[(n + i) * 2 * n + i] = 1;   // arrow i -> i'
        b[i * 2 * n + n + i] = -1;
    }
    Seed s;
    s.framed = Quiver::from_b_flat(2 * n, std::move(b));
    for (int i = 0; i < n; ++i) s.cluster.push_back(LaurentPoly::x(n, n, i));
    return s;
}

Seed mutate_seed(const Seed& s, int k) {
    const int n = s.rank();
    check_mutable(n, k);
    LaurentPoly in = LaurentPoly::constant(n, n, 1), out = in;
    Exponent yin(static_cast<std::size_t>(2 * n), 0), yout = yin;
    for (int j = 0; j < 2 * n; ++j) {
        const int into = s.framed.arrow_count(j, k), from = s.framed.arrow_count(k, j);
        if (j < n) {
            for (int r = 0; r < into; ++r) in = in * s.cluster[j];
            for (int r = 0; r < from; ++r) out = out * s.cluster[j];
        } else {
            yin[j] += into;   // y_{j-n} sits at position n + (j - n)
            yout[j] += from;
        }
    }
    const LaurentPoly sum = in.times_monomial(yin) + out.times_monomial(yout);
    Seed r;
    r.framed = mutate(s.framed, k);
    r.cluster = s.cluster;
    r.cluster[k] = sum.divide_exact(s.cluster[k]);
    r.history = s.history;
    r.history.push_back(k);
    return r;
}

GVector g_vector_of(const LaurentPoly& p, const Quiver& b0) {
    const int n = b0.size();
    if (p.nx() != n || p.ny() != n) throw Error(Errc::NotHomogeneous, "variable count does not match B0");
    if (p.is_zero()) throw Error(Errc::NotHomogeneous, "zero has no degree");
    GVector deg;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        GVector d(n);
        for (int i = 0; i < n; ++i) {
            d[i] = e[i];
            for (int j = 0; j < n; ++j) d[i] -= static_cast<std::int64_t>(b0.b(i, j)) * e[n + j];
        }
        if (first) {
            deg = std::move(d);
            first = false;
        } else if (d != deg) {
            throw Error(Errc::NotHomogeneous, "terms of " + p.to_string() + " have different degrees");
        }
    }
    return deg;
}

GVector mutate_gvector(const GVector& g, int k, const Quiver& b) {
    const int n = b.size();
    check_mutable(n, k);
    GVector r = g;
    const std::int64_t gk = g[k];
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            r[i] = -gk;
            continue;
        }
        const std::int64_t bik = b.b(i, k);
        std::int64_t delta = checked_mul(std::max<std::int64_t>(bik, 0), gk);
        delta = checked_add(delta, -checked_mul(bik, std::min<std::int64_t>(gk, 0)));
        r[i] = checked_add(g[i], delta);
    }
    return r;
}

GVector TropicalSeed::gvector(int j) const {
    GVector v(n);
    for (int i = 0; i < n; ++i) v[i] = gij(i, j);
    return v;
}

Quiver TropicalSeed::exchange_quiver() const {
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[i * n + j] = static_cast<int>(bij(i, j));
    return Quiver::from_b_flat(n, std::move(flat));
}

std::vector<std::int64_t> TropicalSeed::cluster_key() const {
    std::vector<GVector> cols;
    for (int j = 0; j < n; ++j) cols.push_back(gvector(j));
    std::sort(cols.begin(), cols.end());
    std::vector<std::int64_t> key;
    key.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& c : cols) key.insert(key.end(), c.begin(), c.end());
    return key;
}

TropicalSeed initial_tropical_seed(const Quiver& q) {
    const int n = q.size();
    TropicalSeed s;
    s.n = n;
    s.b.assign(static_cast<std::size_t>(4) * n * n, 0);
    s.g.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) s.b[i * 2 * n + j] = q.b(i, j);
        s.b[(n + i) * 2 * n + i] = 1;
        s.b[i * 2 * n + n + i] = -1;
        s.g[i * n + i] = 1;
    }
    return s;
}

TropicalSeed mutate_tropical(const TropicalSeed& s, int k) {
    const int n = s.n, m = 2 * n;
    check_mutable(n, k);
    bool pos = false, neg = false;
    for (int i = 0; i < n; ++i) {
        pos |= s.bij(n + i, k) > 0;
        neg |= s.bij(n + i, k) < 0;
    }
    if (pos && neg)
        throw Error(Errc::SignCoherenceViolation, "c-vector " + std::to_string(k + 1) + " has mixed signs");
    const int sign = pos ? 1 : -1;

    TropicalSeed r = s;
    for (int i = 0; i < n; ++i) {
        std::int64_t v = -s.gij(i, k);
        for (int j = 0; j < n; ++j) {
            const std::int64_t w = std::max<std::int64_t>(sign * s.bij(k, j), 0);
            if (w != 0) v = checked_add(v, checked_mul(w, s.gij(i, j)));
        }
        r.g[i * n + k] = v;
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const std::int64_t bij = s.bij(i, j);
            if (i == k || j == k) {
                r.b[i * m + j] = -bij;
                continue;
            }
            const std::int64_t bik = s.bij(i, k), bkj = s.bij(k, j);
            if ((bik > 0 && bkj > 0) || (bik < 0 && bkj < 0)) {
                const std::int64_t prod = checked_mul(bik, bkj);
                r.b[i * m + j] = checked_add(bij, bik > 0 ? prod : -prod);
            }
        }
    r.history.push_back(k);
    return r;
}

std::string to_string(EnumStatus s) { return s == EnumStatus::Exhausted ? "Exhausted" : "BudgetExceeded"; }

ClusterEnumeration enumerate_clusters(const Quiver& q, std::size_t budget, int max_depth) {
    ClusterEnumeration res;
    const int n = q.size();
    std::unordered_map<std::vector<std::int64_t>, int, KeyHash> index;
    TropicalSeed start = initial_tropical_seed(q);
    index.emplace(start.cluster_key(), 0);
    res.seeds.push_back(std::move(start));
    std::vector<std::vector<std::int64_t>> vars;

    std::queue<int> queue;
    queue.push(0);
    while (!queue.empty()) {
        const int from = queue.front();
        queue.pop();
        const int depth = static_cast<int>(res.seeds[from].history.size());
        for (int k = 0; k < n; ++k) {
            TropicalSeed next = mutate_tropical(res.seeds[from], k);
            auto key = next.cluster_key();
            auto it = index.find(key);
            int to;
            if (it != index.end()) {
                to = it->second;
            } else {
                if (res.seeds.size() >= budget || (max_depth >= 0 && depth + 1 > max_depth)) {
                    res.status = EnumStatus::BudgetExceeded;
                    continue;
                }
                to = static_cast<int>(res.seeds.size());
                index.emplace(std::move(key), to);
                res.seeds.push_back(std::move(next));
                queue.push(to);
            }
            res.edges.push_back({from, k, to});
        }
    }
    for (const auto& s : res.seeds)
        for (int j = 0; j < n; ++j) vars.push_back(s.gvector(j));
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    res.variables = std::move(vars);
    return res;
}

std::vector<ClusterVariable> cluster_variables(const Quiver& q, int depth, std::size_t budget) {
    const int n = q.size();
    struct Node {
        Seed seed;
        TropicalSeed trop;
    };
    std::vector<Node> nodes{{initial_seed(q), initial_tropical_seed(q)}};
    std::unordered_map<std::vector<std::int64_t>, int, KeyHash> index{{nodes[0].trop.cluster_key(), 0}};
    std::map<GVector, ClusterVariable> found;
    for (std::size_t at = 0; at < nodes.size(); ++at) {
        for (int j = 0; j < n; ++j) {
            GVector g = nodes[at].trop.gvector(j);
            if (!found.count(g)) found.emplace(g, ClusterVariable{g, nodes[at].seed.cluster[j], nodes[at].seed.history});
        }
        if (static_cast<int>(nodes[at].seed.history.size()) >= depth) continue;
        for (int k = 0; k < n; ++k) {
            TropicalSeed t = mutate_tropical(nodes[at].trop, k);
            auto key = t.cluster_key();
            if (index.count(key) || nodes.size() >= budget) continue;
            index.emplace(std::move(key), static_cast<int>(nodes.size()));
            Seed s = mutate_seed(nodes[at].seed, k);
            nodes.push_back({std::move(s), std::move(t)});
        }
    }
    std::vector<ClusterVariable> out;
    for (auto& [g, v] : found) out.push_back(std::move(v));
    return out;
}

}  // namespace cf

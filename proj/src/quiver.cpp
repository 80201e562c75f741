#include "clusterforge/quiver.hpp"

#include "clusterforge/catalog.hpp"
#include "clusterforge/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace cf {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

void check_vertex(const Quiver& q, int k) {
    if (k < 0 || k >= q.size())
        throw Error(Errc::InvalidVertex,
                    "vertex " + std::to_string(k + 1) + " out of range 1.." + std::to_string(q.size()));
}

}  // namespace

Quiver::Quiver(int n) : n_(n), b_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw Error(Errc::InvalidQuiver, "a quiver needs at least one vertex");
}

Quiver Quiver::from_arrows(int n, const std::vector<Arrow>& arrows) {
    Quiver q(n);
    std::vector<int> count(static_cast<std::size_t>(n) * n, 0);
    for (const Arrow& a : arrows) {
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
            throw Error(Errc::InvalidVertex, "arrow endpoint out of range");
        if (a.from == a.to) throw Error(Errc::InvalidQuiver, "loop at vertex " + std::to_string(a.from + 1));
        if (a.mult < 1) throw Error(Errc::InvalidQuiver, "arrow multiplicity must be positive");
        count[a.from * n + a.to] += a.mult;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (count[i * n + j] > 0 && count[j * n + i] > 0)
                throw Error(Errc::InvalidQuiver, "2-cycle between vertices " + std::to_string(i + 1) +
                                                     " and " + std::to_string(j + 1));
            q.b_[i * n + j] = count[j * n + i] - count[i * n + j];
        }
    return q;
}

Quiver Quiver::from_b_flat(int n, std::vector<int> b) {
    if (n < 1 || b.size() != static_cast<std::size_t>(n) * n)
        throw Error(Errc::NotSkewSymmetric, "matrix shape does not match n");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b[i * n + j] != -b[j * n + i])
                throw Error(Errc::NotSkewSymmetric, "entry (" + std::to_string(i + 1) + "," +
                                                        std::to_string(j + 1) + ")");
    Quiver q(n);
    q.b_ = std::move(b);
    return q;
}

Quiver Quiver::from_b_matrix(const std::vector<std::vector<int>>& b) {
    const int n = static_cast<int>(b.size());
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : b) {
        if (static_cast<int>(row.size()) != n) throw Error(Errc::NotSkewSymmetric, "matrix is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_b_flat(n, std::move(flat));
}

int Quiver::arrow_count(int from, int to) const {
    int v = b(to, from);
    return v > 0 ? v : 0;
}

std::vector<Arrow> Quiver::arrows() const {
    std::vector<Arrow> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (int m = arrow_count(i, j); m > 0) out.push_back({i, j, m});
    return out;
}

std::vector<std::vector<int>> Quiver::b_matrix() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i][j] = b(i, j);
    return out;
}

int Quiver::max_weight() const {
    int w = 0;
    for (int x : b_) w = std::max(w, std::abs(x));
    return w;
}

bool Quiver::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n_; ++u)
            if (!seen[u] && b(v, u) != 0) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n_;
}

bool Quiver::is_acyclic() const {
    std::vector<int> indeg(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (arrow_count(i, j) > 0) ++indeg[j];
    std::vector<int> ready;
    for (int i = 0; i < n_; ++i)
        if (indeg[i] == 0) ready.push_back(i);
    int done = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++done;
        for (int j = 0; j < n_; ++j)
            if (arrow_count(v, j) > 0 && --indeg[j] == 0) ready.push_back(j);
    }
    return done == n_;
}

void Quiver::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw Error(Errc::InvalidQuiver, "label count does not match vertex count");
    labels_ = std::move(labels);
}

Quiver mutate(const Quiver& q, int k) {
    check_vertex(q, k);
    const int n = q.size();
    // count[i][j] = #{i -> j}
    std::vector<int> count(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) count[i * n + j] = q.arrow_count(i, j);

    // (1) a composite arrow j -> i for every path j -> k -> i
    std::vector<int> step1 = count;
    for (int j = 0; j < n; ++j) {
        if (j == k || count[j * n + k] == 0) continue;
        for (int i = 0; i < n; ++i) {
            if (i == k || i == j) continue;
            step1[j * n + i] += count[j * n + k] * count[k * n + i];
        }
    }
    // (2) reverse the arrows incident to k
    for (int v = 0; v < n; ++v) std::swap(step1[v * n + k], step1[k * n + v]);
    // (3) cancel 2-cycles
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int c = std::min(step1[i * n + j], step1[j * n + i]);
            step1[i * n + j] -= c;
            step1[j * n + i] -= c;
        }

    std::vector<int> b(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i * n + j] = step1[j * n + i] - step1[i * n + j];
    Quiver out = Quiver::from_b_flat(n, std::move(b));
    out.set_labels(q.labels());
    return out;
}

Quiver mutate_sequence(Quiver q, const std::vector<int>& ks) {
    for (int k : ks) q = mutate(q, k);
    return q;
}

std::vector<int> mutate_b_matrix(const std::vector<int>& b, int n, int k) {
    std::vector<int> out(b.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int bij = b[i * n + j];
            if (i == k || j == k) {
                out[i * n + j] = -bij;
                continue;
            }
            const int bik = b[i * n + k], bkj = b[k * n + j];
            const int prod = bik * bkj;
            out[i * n + j] = bij + (prod > 0 ? (bik > 0 ? prod : -prod) : 0);
        }
    return out;
}

Quiver restrict(const Quiver& q, const std::vector<int>& vertices) {
    if (vertices.empty()) throw Error(Errc::EmptySubset, "restriction to no vertices");
    for (int v : vertices) check_vertex(q, v);
    const int m = static_cast<int>(vertices.size());
    std::vector<int> b(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b[i * m + j] = q.b(vertices[i], vertices[j]);
    Quiver out = Quiver::from_b_flat(m, std::move(b));
    if (!q.labels().empty()) {
        std::vector<std::string> labels;
        for (int v : vertices) labels.push_back(q.labels()[v]);
        out.set_labels(std::move(labels));
    }
    return out;
}

Quiver permute(const Quiver& q, const std::vector<int>& perm) {
    const int n = q.size();
    std::vector<int> b(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i * n + j] = q.b(perm[i], perm[j]);
    return Quiver::from_b_flat(n, std::move(b));
}

namespace {

// Color refinement on the weighted signed adjacency; the returned colors are
// ranks of sorted signatures, hence invariant under relabelling.
std::vector<int> refine_colors(const Quiver& q) {
    const int n = q.size();
    std::vector<int> color(n, 0);
    int classes = 1;
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<int, int>> nb;
            for (int u = 0; u < n; ++u)
                if (q.b(v, u) != 0) nb.emplace_back(color[u], q.b(v, u));
            std::sort(nb.begin(), nb.end());
            sig[v].push_back(color[v]);
            for (auto [c, w] : nb) {
                sig[v].push_back(c);
                sig[v].push_back(w);
            }
        }
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        const int now = static_cast<int>(sorted.size());
        if (now == classes && round > 0) break;
        classes = now;
    }
    return color;
}

struct CanonSearch {
    const Quiver& q;
    int n;
    std::vector<int> color;
    std::vector<int> slot_color;  // color required at each position
    std::vector<int> perm, best_perm;
    std::vector<int> cur, best;
    std::vector<char> used;
    bool have_best = false;

    // -1: cur < best prefix, 0: equal, 1: greater
    int compare_prefix() const {
        if (!have_best) return -1;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] != best[i]) return cur[i] < best[i] ? -1 : 1;
        }
        return 0;
    }

    bool twins(int v, int w) const {
        if (q.b(v, w) != 0) return false;
        for (int x = 0; x < n; ++x) {
            if (x == v || x == w) continue;
            if (q.b(v, x) != q.b(w, x)) return false;
        }
        return true;
    }

    void run(int pos) {
        if (pos == n) {
            if (!have_best || cur < best) {
                best = cur;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        std::vector<int> cands;
        std::vector<int> min_seg;
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != slot_color[pos]) continue;
            std::vector<int> seg(pos);
            for (int j = 0; j < pos; ++j) seg[j] = q.b(v, perm[j]);
            if (cands.empty() || seg < min_seg) {
                cands.assign(1, v);
                min_seg = std::move(seg);
            } else if (seg == min_seg) {
                cands.push_back(v);
            }
        }
        const std::size_t mark = cur.size();
        cur.insert(cur.end(), min_seg.begin(), min_seg.end());
        if (compare_prefix() <= 0) {
            std::vector<int> tried;
            for (int v : cands) {
                bool redundant = false;
                for (int t : tried)
                    if (twins(v, t)) { redundant = true; break; }
                if (redundant) continue;
                tried.push_back(v);
                used[v] = 1;
                perm.push_back(v);
                run(pos + 1);
                perm.pop_back();
                used[v] = 0;
            }
        }
        cur.resize(mark);
    }
};

}  // namespace

Canonical canonicalize(const Quiver& q) {
    CanonSearch s{q, q.size(), refine_colors(q), {}, {}, {}, {}, {}, {}, false};
    s.slot_color = s.color;
    std::sort(s.slot_color.begin(), s.slot_color.end());
    s.used.assign(s.n, 0);
    s.run(0);
    return {permute(q, s.best_perm), s.best_perm};
}

MutationClassResult mutation_class(const Quiver& q, std::size_t max_quivers, int max_weight, Exec exec) {
    MutationClassResult res;
    const int n = q.size();
    const bool blowup_applies = n >= 3;
    std::unordered_map<std::vector<int>, int, VecHash> index;

    auto blowup = [&](const Quiver& x) {
        if (!blowup_applies || x.max_weight() < max_weight) return false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (x.arrow_count(i, j) >= max_weight) {
                    res.status = ClassStatus::MultiplicityBlowup;
                    res.blowup_from = i;
                    res.blowup_to = j;
                    res.blowup_weight = x.arrow_count(i, j);
                    res.blowup_quiver = x;
                    return true;
                }
        return false;
    };

    Quiver start = canonicalize(q).quiver;
    if (blowup(start)) return res;
    res.representatives.push_back(start);
    index.emplace(start.b_flat(), 0);

    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        const long tasks = static_cast<long>(frontier.size()) * n;
        std::vector<Quiver> produced(static_cast<std::size_t>(tasks));
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
            for (long t = 0; t < tasks; ++t)
                produced[t] = canonicalize(mutate(res.representatives[frontier[t / n]], static_cast<int>(t % n))).quiver;
        } else {
            for (long t = 0; t < tasks; ++t)
                produced[t] = canonicalize(mutate(res.representatives[frontier[t / n]], static_cast<int>(t % n))).quiver;
        }
        std::vector<int> next;
        for (long t = 0; t < tasks; ++t) {
            const int from = frontier[t / n];
            Quiver& cand = produced[t];
            if (blowup(cand)) return res;
            auto it = index.find(cand.b_flat());
            int to;
            if (it == index.end()) {
                if (res.representatives.size() >= max_quivers) {
                    res.status = ClassStatus::BudgetExceeded;
                    return res;
                }
                to = static_cast<int>(res.representatives.size());
                index.emplace(cand.b_flat(), to);
                res.representatives.push_back(std::move(cand));
                next.push_back(to);
            } else {
                to = it->second;
            }
            res.edges.push_back({from, static_cast<int>(t % n), to});
        }
        frontier = std::move(next);
    }
    res.status = ClassStatus::Exhausted;
    return res;
}

std::string to_string(ClassStatus s) {
    switch (s) {
        case ClassStatus::Exhausted: return "Exhausted";
        case ClassStatus::BudgetExceeded: return "BudgetExceeded";
        case ClassStatus::MultiplicityBlowup: return "MultiplicityBlowup";
    }
    return "?";
}

std::string to_string(MutationType t) {
    switch (t) {
        case MutationType::Dynkin: return "Dynkin";
        case MutationType::Affine: return "Affine";
        case MutationType::ExceptionalFiniteMut: return "ExceptionalFiniteMut";
        case MutationType::FiniteMutOther: return "FiniteMutOther";
        case MutationType::InfiniteMut: return "InfiniteMut";
        case MutationType::Unknown: return "Unknown";
    }
    return "?";
}

std::string to_string(const Classification& c) {
    std::string s = to_string(c.type);
    if (!c.name.empty()) s += "(" + c.name + ")";
    return s;
}

Classification diagram_name(const Quiver& q) {
    const int n = q.size();
    Classification none{MutationType::Unknown, "", 0};
    if (!q.is_connected() || !q.is_acyclic()) return none;
    if (n == 1) return {MutationType::Dynkin, "A1", 0};
    if (n == 2) {
        const int w = std::abs(q.b(0, 1));
        if (w == 1) return {MutationType::Dynkin, "A2", 0};
        if (w == 2) return {MutationType::Affine, "A1^(1)", 0};
        return none;
    }
    if (q.max_weight() > 1) return none;
    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && q.b(i, j) != 0) {
                adj[i].push_back(j);
                if (i < j) ++edges;
            }
    std::vector<int> deg(n);
    int maxdeg = 0;
    for (int i = 0; i < n; ++i) {
        deg[i] = static_cast<int>(adj[i].size());
        maxdeg = std::max(maxdeg, deg[i]);
    }
    if (edges == n) {
        if (maxdeg == 2) return {MutationType::Affine, "A" + std::to_string(n - 1) + "^(1)", 0};
        return none;
    }
    if (edges != n - 1) return none;
    if (maxdeg <= 2) return {MutationType::Dynkin, "A" + std::to_string(n), 0};

    std::vector<int> branch;
    for (int i = 0; i < n; ++i)
        if (deg[i] >= 3) branch.push_back(i);
    // length of the arm leaving `center` through `first`, stopping at a branch vertex
    auto arm = [&](int center, int first) {
        int len = 1, prev = center, cur = first;
        while (deg[cur] == 2) {
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        return std::pair<int, int>(len, deg[cur] >= 3 ? cur : -1);
    };
    if (branch.size() == 1) {
        const int c = branch[0];
        if (deg[c] == 4) {
            if (n == 5) return {MutationType::Affine, "D4^(1)", 0};
            return none;
        }
        if (deg[c] != 3) return none;
        std::vector<int> arms;
        for (int u : adj[c]) arms.push_back(arm(c, u).first);
        std::sort(arms.begin(), arms.end());
        const int a = arms[0], b = arms[1], cc = arms[2];
        if (a == 1 && b == 1) return {MutationType::Dynkin, "D" + std::to_string(n), 0};
        if (a == 1 && b == 2 && cc == 2) return {MutationType::Dynkin, "E6", 0};
        if (a == 1 && b == 2 && cc == 3) return {MutationType::Dynkin, "E7", 0};
        if (a == 1 && b == 2 && cc == 4) return {MutationType::Dynkin, "E8", 0};
        if (a == 2 && b == 2 && cc == 2) return {MutationType::Affine, "E6^(1)", 0};
        if (a == 1 && b == 3 && cc == 3) return {MutationType::Affine, "E7^(1)", 0};
        if (a == 1 && b == 2 && cc == 5) return {MutationType::Affine, "E8^(1)", 0};
        return none;
    }
    if (branch.size() == 2 && deg[branch[0]] == 3 && deg[branch[1]] == 3) {
        for (int c : branch) {
            int leaves = 0;
            for (int u : adj[c]) {
                auto [len, end] = arm(c, u);
                if (end < 0 && len == 1) ++leaves;
            }
            if (leaves != 2) return none;
        }
        return {MutationType::Affine, "D" + std::to_string(n - 1) + "^(1)", 0};
    }
    return none;
}

Classification classify(const Quiver& q, std::size_t budget) {
    if (!q.is_connected()) throw Error(Errc::Disconnected, "classify expects a connected quiver");
    const int n = q.size();
    if (n == 2 && std::abs(q.b(0, 1)) >= 3)
        return {MutationType::ExceptionalFiniteMut, "K" + std::to_string(std::abs(q.b(0, 1))), 1};

    MutationClassResult cls = mutation_class(q, budget);
    const std::size_t size = cls.representatives.size();
    if (cls.status == ClassStatus::MultiplicityBlowup) return {MutationType::InfiniteMut, "", size};
    if (cls.status == ClassStatus::BudgetExceeded) return {MutationType::Unknown, "", size};

    for (const Quiver& r : cls.representatives) {
        if (!r.is_acyclic()) continue;
        Classification d = diagram_name(r);
        if (d.type != MutationType::Unknown) {
            d.class_size = size;
            return d;
        }
    }
    std::unordered_map<std::vector<int>, int, VecHash> members;
    for (std::size_t i = 0; i < size; ++i) members.emplace(cls.representatives[i].b_flat(), static_cast<int>(i));
    for (const auto& [name, quiver] : catalog::exceptional_quivers()) {
        if (quiver.size() != n) continue;
        if (members.count(canonicalize(quiver).quiver.b_flat()))
            return {MutationType::ExceptionalFiniteMut, name, size};
    }
    return {MutationType::FiniteMutOther, "", size};
}

}  // namespace cf

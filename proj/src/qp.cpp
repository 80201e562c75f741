#include "clusterforge/qp.hpp"

#include "clusterforge/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace cf {

Path canonical_rotation(const Path& cycle) {
    Path best = cycle;
    Path rot = cycle;
    for (std::size_t s = 1; s < cycle.size(); ++s) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

void Potential::add(const Path& cycle, const Rational& c) {
    if (c == 0 || cycle.empty() || static_cast<int>(cycle.size()) > trunc) return;
    Path key = canonical_rotation(cycle);
    auto [it, inserted] = terms.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

QP QP::from_quiver(const Quiver& q, int trunc) {
    QP qp;
    qp.n = q.size();
    qp.potential.trunc = trunc;
    for (const Arrow& a : q.arrows())
        for (int r = 0; r < a.mult; ++r)
            qp.arrows.push_back({a.from, a.to, "a" + std::to_string(qp.arrows.size() + 1)});
    return qp;
}

void QP::add_term(const Path& cycle, const Rational& c) {
    if (cycle.empty()) throw Error(Errc::UnknownArrow, "empty cycle");
    for (int a : cycle)
        if (a < 0 || a >= static_cast<int>(arrows.size()))
            throw Error(Errc::UnknownArrow, "arrow id " + std::to_string(a + 1));
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const QArrow& cur = arrows[cycle[i]];
        const QArrow& nxt = arrows[cycle[(i + 1) % cycle.size()]];
        if (cur.to != nxt.from) throw Error(Errc::UnknownArrow, "term is not a closed path: " + term_text(cycle));
    }
    potential.add(cycle, c);
}

bool QP::has_two_cycles() const {
    for (const QArrow& a : arrows)
        for (const QArrow& b : arrows)
            if (a.from == b.to && a.to == b.from) return true;
    return false;
}

Quiver QP::quiver() const {
    if (has_two_cycles()) throw Error(Errc::TwoCycleInOutput, "the QP quiver has a 2-cycle");
    std::vector<Arrow> list;
    for (const QArrow& a : arrows) list.push_back({a.from, a.to, 1});
    return Quiver::from_arrows(n, list);
}

int QP::arrow_id(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    throw Error(Errc::UnknownArrow, "no arrow named '" + name + "'");
}

std::string QP::term_text(const Path& p) const {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += " ";
        const int a = p[i];
        s += (a >= 0 && a < static_cast<int>(arrows.size()) && !arrows[a].name.empty()) ? arrows[a].name
                                                                                          : "#" + std::to_string(a + 1);
    }
    return s;
}

PathPoly cyclic_derivative(const QP& qp, int arrow) {
    if (arrow < 0 || arrow >= static_cast<int>(qp.arrows.size()))
        throw Error(Errc::UnknownArrow, "arrow id " + std::to_string(arrow + 1));
    PathPoly out;
    for (const auto& [cycle, c] : qp.potential.terms) {
        const std::size_t len = cycle.size();
        for (std::size_t i = 0; i < len; ++i) {
            if (cycle[i] != arrow) continue;
            // c = u a v  ->  v u, i.e. the cycle read from just after a.
            Path p;
            for (std::size_t s = 1; s < len; ++s) p.push_back(cycle[(i + s) % len]);
            auto [it, inserted] = out.try_emplace(std::move(p), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

QP premutate(const QP& qp, int k) {
    if (k < 0 || k >= qp.n) throw Error(Errc::InvalidVertex, "vertex " + std::to_string(k + 1));
    std::vector<int> in, out;
    for (std::size_t i = 0; i < qp.arrows.size(); ++i) {
        if (qp.arrows[i].to == k) in.push_back(static_cast<int>(i));
        if (qp.arrows[i].from == k) out.push_back(static_cast<int>(i));
    }
    for (int a : in)
        for (int b : out)
            if (qp.arrows[a].from == qp.arrows[b].to)
                throw Error(Errc::VertexOnTwoCycle, "vertex " + std::to_string(k + 1) + " lies on a 2-cycle");

    QP r;
    r.n = qp.n;
    r.potential.trunc = qp.potential.trunc;
    std::vector<int> renumber(qp.arrows.size(), -1);
    for (std::size_t i = 0; i < qp.arrows.size(); ++i) {
        const QArrow& a = qp.arrows[i];
        if (a.from == k || a.to == k) continue;
        renumber[i] = static_cast<int>(r.arrows.size());
        r.arrows.push_back(a);
    }
    const int base = static_cast<int>(r.arrows.size());
    const int nin = static_cast<int>(in.size()), nout = static_cast<int>(out.size());
    auto composite = [&](int ia, int ib) { return base + ia * nout + ib; };
    for (int a : in)
        for (int b : out)
            r.arrows.push_back({qp.arrows[a].from, qp.arrows[b].to,
                                "[" + qp.arrows[b].name + qp.arrows[a].name + "]"});
    const int star_in = static_cast<int>(r.arrows.size());
    for (int a : in) r.arrows.push_back({k, qp.arrows[a].from, qp.arrows[a].name + "*"});
    const int star_out = static_cast<int>(r.arrows.size());
    for (int b : out) r.arrows.push_back({qp.arrows[b].to, k, qp.arrows[b].name + "*"});

    auto pos_in = [&](int a) { return static_cast<int>(std::find(in.begin(), in.end(), a) - in.begin()); };
    auto pos_out = [&](int b) { return static_cast<int>(std::find(out.begin(), out.end(), b) - out.begin()); };

    for (const auto& [cycle, c] : qp.potential.terms) {
        const std::size_t len = cycle.size();
        std::size_t start = 0;
        while (start < len && qp.arrows[cycle[start]].from == k) ++start;
        Path rotated;
        for (std::size_t s = 0; s < len; ++s) rotated.push_back(cycle[(start + s) % len]);
        Path mapped;
        for (std::size_t i = 0; i < len; ++i) {
            const int a = rotated[i];
            if (qp.arrows[a].to == k) {
                mapped.push_back(composite(pos_in(a), pos_out(rotated[i + 1])));
                ++i;
            } else {
                mapped.push_back(renumber[a]);
            }
        }
        r.potential.add(mapped, c);
    }
    for (int ia = 0; ia < nin; ++ia)
        for (int ib = 0; ib < nout; ++ib) r.potential.add({composite(ia, ib), star_out + ib, star_in + ia}, 1);
    return r;
}

namespace {

// Applies the algebra map sending arrow x to `image` (a combination of paths
// parallel to x) and fixing every other arrow.
void substitute(Potential& w, int x, const PathPoly& image) {
    Potential out;
    out.trunc = w.trunc;
    for (const auto& [cycle, c] : w.terms) {
        if (std::find(cycle.begin(), cycle.end(), x) == cycle.end()) {
            out.add(cycle, c);
            continue;
        }
        // Expand position by position, pruning products that exceed trunc.
        std::vector<std::pair<Path, Rational>> partial{{Path{}, c}};
        for (int a : cycle) {
            std::vector<std::pair<Path, Rational>> next;
            if (a != x) {
                for (auto& [p, pc] : partial) {
                    p.push_back(a);
                    if (static_cast<int>(p.size()) <= w.trunc) next.emplace_back(std::move(p), pc);
                }
            } else {
                for (const auto& [p, pc] : partial)
                    for (const auto& [img, ic] : image) {
                        if (static_cast<int>(p.size() + img.size()) > w.trunc) continue;
                        Path q = p;
                        q.insert(q.end(), img.begin(), img.end());
                        next.emplace_back(std::move(q), pc * ic);
                    }
            }
            partial = std::move(next);
        }
        for (const auto& [p, pc] : partial) out.add(p, pc);
    }
    w = std::move(out);
}

constexpr long kReduceWorkCap = 200000;

}  // namespace

QP reduce(const QP& qp) {
    QP r = qp;
    Potential& w = r.potential;
    struct Pivot {
        int a, b;
        Rational c;
    };
    std::vector<Pivot> pivots;
    std::vector<int> role(r.arrows.size(), 0);  // 0 free, 1 pivot a, 2 pivot b
    std::vector<int> pivot_of(r.arrows.size(), -1);

    // Gaussian elimination on the quadratic part, pivots in lexicographic order.
    for (;;) {
        const Path* chosen = nullptr;
        for (const auto& [cycle, c] : w.terms)
            if (cycle.size() == 2 && role[cycle[0]] == 0 && role[cycle[1]] == 0) {
                chosen = &cycle;
                break;
            }
        if (!chosen) break;
        const int a = (*chosen)[0], b = (*chosen)[1];
        const Rational c = w.terms.at(*chosen);
        PathPoly img_b{{Path{b}, Rational(1)}};
        for (const auto& [cycle, cc] : w.terms) {
            if (cycle.size() != 2 || cycle == *chosen) continue;
            const int other = cycle[0] == a ? cycle[1] : (cycle[1] == a ? cycle[0] : -1);
            if (other >= 0) img_b[Path{other}] -= cc / c;
        }
        if (img_b.size() > 1) substitute(w, b, img_b);
        PathPoly img_a{{Path{a}, Rational(1)}};
        const Path key = canonical_rotation({a, b});
        for (const auto& [cycle, cc] : w.terms) {
            if (cycle.size() != 2 || cycle == key) continue;
            const int other = cycle[0] == b ? cycle[1] : (cycle[1] == b ? cycle[0] : -1);
            if (other >= 0) img_a[Path{other}] -= cc / c;
        }
        if (img_a.size() > 1) substitute(w, a, img_a);
        role[a] = 1;
        role[b] = 2;
        pivot_of[a] = pivot_of[b] = static_cast<int>(pivots.size());
        pivots.push_back({a, b, w.terms.at(key)});
    }

    // Push every higher term that still meets a pivot arrow beyond the truncation.
    for (long work = 0;; ++work) {
        if (work > kReduceWorkCap) throw Error(Errc::PrecisionExhausted, "reduction did not settle below the truncation degree");
        const Path* found = nullptr;
        std::size_t best_len = 0;
        for (const auto& [cycle, c] : w.terms) {
            if (cycle.size() < 3) continue;
            if (found && cycle.size() >= best_len) continue;
            if (std::any_of(cycle.begin(), cycle.end(), [&](int x) { return role[x] != 0; })) {
                found = &cycle;
                best_len = cycle.size();
            }
        }
        if (!found) break;
        const Path cycle = *found;
        const Rational t = w.terms.at(cycle);
        std::size_t at = 0;
        while (role[cycle[at]] == 0) ++at;
        const int p = cycle[at];
        PathPoly image;
        Path rest;
        for (std::size_t s = 1; s < cycle.size(); ++s) rest.push_back(cycle[(at + s) % cycle.size()]);
        const Pivot& pv = pivots[pivot_of[p]];
        const int target = role[p] == 1 ? pv.b : pv.a;
        image[Path{target}] = 1;
        image[rest] -= t / pv.c;
        substitute(w, target, image);
    }

    // Drop the trivial summand and renumber the surviving arrows.
    QP out;
    out.n = r.n;
    out.potential.trunc = w.trunc;
    std::vector<int> renumber(r.arrows.size(), -1);
    for (std::size_t i = 0; i < r.arrows.size(); ++i) {
        if (role[i] != 0) continue;
        renumber[i] = static_cast<int>(out.arrows.size());
        out.arrows.push_back(r.arrows[i]);
    }
    for (const auto& [cycle, c] : w.terms) {
        if (cycle.size() == 2 && role[cycle[0]] != 0) continue;
        Path mapped;
        for (int a : cycle) mapped.push_back(renumber[a]);
        out.potential.add(mapped, c);
    }
    return out;
}

QP qp_mutate(const QP& qp, int k) {
    QP r = reduce(premutate(qp, k));
    if (r.has_two_cycles())
        throw Error(Errc::TwoCycleInOutput, "mutation at " + std::to_string(k + 1) + " leaves a 2-cycle");
    return r;
}

QP restrict_qp(const QP& qp, const std::vector<int>& vertices) {
    if (vertices.empty()) throw Error(Errc::EmptySubset, "restriction to no vertices");
    std::vector<int> where(qp.n, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= qp.n) throw Error(Errc::InvalidVertex, "vertex out of range");
        where[vertices[i]] = static_cast<int>(i);
    }
    QP r;
    r.n = static_cast<int>(vertices.size());
    r.potential.trunc = qp.potential.trunc;
    std::vector<int> renumber(qp.arrows.size(), -1);
    for (std::size_t i = 0; i < qp.arrows.size(); ++i) {
        const QArrow& a = qp.arrows[i];
        if (where[a.from] < 0 || where[a.to] < 0) continue;
        renumber[i] = static_cast<int>(r.arrows.size());
        r.arrows.push_back({where[a.from], where[a.to], a.name});
    }
    for (const auto& [cycle, c] : qp.potential.terms) {
        Path mapped;
        for (int a : cycle) mapped.push_back(renumber[a]);
        if (std::find(mapped.begin(), mapped.end(), -1) == mapped.end()) r.potential.add(mapped, c);
    }
    return r;
}

std::string to_string(const DimProfile& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.dims.size(); ++i) os << (i ? ", " : "") << p.dims[i];
    os << "] ";
    if (p.verdict == Verdict::StabilizedAt) os << "StabilizedAt(" << p.stable_from << ")";
    else os << "GrowingAtBound";
    return os.str();
}

namespace {

std::string qp_key(const QP& qp) {
    std::ostringstream os;
    os << qp.n << ';';
    for (const QArrow& a : qp.arrows) os << a.from << '>' << a.to << ',';
    os << ';';
    for (const auto& [cycle, c] : qp.potential.terms) {
        for (int a : cycle) os << a << '.';
        os << '=' << c.get_str() << ';';
    }
    return os.str();
}

}  // namespace

NondegeneracyReport probe_nondegenerate(const QP& qp, int depth) {
    NondegeneracyReport rep;
    rep.depth = depth;
    struct Item {
        QP qp;
        std::vector<int> seq;
    };
    std::set<std::string> seen{qp_key(qp)};
    std::deque<Item> queue{{qp, {}}};
    rep.explored = 1;
    while (!queue.empty()) {
        Item cur = std::move(queue.front());
        queue.pop_front();
        if (static_cast<int>(cur.seq.size()) >= depth) continue;
        for (int k = 0; k < cur.qp.n; ++k) {
            if (!cur.seq.empty() && cur.seq.back() == k) continue;
            std::vector<int> seq = cur.seq;
            seq.push_back(k);
            QP next;
            try {
                next = qp_mutate(cur.qp, k);
            } catch (const Error& e) {
                if (e.code() != Errc::TwoCycleInOutput) throw;
                rep.two_cycle_found = true;
                rep.sequence = seq;
                return rep;
            }
            if (seen.insert(qp_key(next)).second) {
                ++rep.explored;
                queue.push_back({std::move(next), std::move(seq)});
            }
        }
    }
    return rep;
}

namespace qp_catalog {

namespace {

struct Named {
    int from, to;  // 1-based, as in the figures
    std::string name;
};

// Terms are given as written, i.e. composed right to left; they are stored
// in traversal order.
QP build(int n, const std::vector<Named>& arrows, const std::vector<std::vector<std::string>>& written) {
    QP qp;
    qp.n = n;
    for (const auto& a : arrows) qp.arrows.push_back({a.from - 1, a.to - 1, a.name});
    for (const auto& word : written) {
        Path p;
        for (auto it = word.rbegin(); it != word.rend(); ++it) p.push_back(qp.arrow_id(*it));
        qp.add_term(p, 1);
    }
    return qp;
}

}  // namespace

QP a3_zero() { return build(3, {{1, 2, "a"}, {2, 3, "b"}}, {}); }

QP three_cycle() { return build(3, {{1, 2, "a"}, {2, 3, "b"}, {3, 1, "c"}}, {{"c", "b", "a"}}); }

QP kronecker_zero(int m) {
    std::vector<Named> arrows;
    for (int i = 1; i <= m; ++i) arrows.push_back({1, 2, "a" + std::to_string(i)});
    return build(2, arrows, {});
}

namespace {
const std::vector<Named> kT1{{1, 2, "alpha1"}, {1, 2, "alpha2"}, {2, 3, "gamma1"},
                             {2, 3, "gamma2"}, {3, 1, "beta1"},  {3, 1, "beta2"}};
const std::vector<Named> kT2{{1, 2, "alpha1"}, {1, 2, "alpha2"}, {3, 1, "beta1"}, {3, 4, "delta"},
                             {4, 1, "beta2"},  {2, 3, "gamma1"}, {2, 4, "gamma2"}};
}  // namespace

QP t1_w1() { return build(3, kT1, {{"alpha1", "beta1", "gamma1"}, {"alpha2", "beta2", "gamma2"}}); }

QP t1_w1_prime() {
    return build(3, kT1,
                 {{"alpha1", "beta2", "gamma2"}, {"alpha2", "beta1", "gamma2"}, {"alpha2", "beta2", "gamma1"}});
}

QP t2_tame() { return build(4, kT2, {{"alpha1", "beta1", "gamma1"}, {"alpha2", "beta2", "gamma2"}}); }

QP t2_wild() {
    return build(4, kT2,
                 {{"alpha1", "beta1", "gamma1"}, {"alpha1", "beta2", "gamma2"}, {"alpha2", "beta2", "delta", "gamma1"}});
}

QP x6_w6() {
    return build(6,
                 {{1, 3, "alpha1"}, {1, 3, "alpha1'"}, {3, 6, "beta1"}, {6, 5, "delta"}, {6, 2, "gamma2"},
                  {6, 1, "gamma1"}, {2, 4, "alpha2"}, {2, 4, "alpha2'"}, {4, 6, "beta2"}},
                 {{"gamma1", "beta1", "alpha1"},
                  {"gamma2", "beta2", "alpha2"},
                  {"gamma1", "beta2", "alpha2'", "gamma2", "beta1", "alpha1'"}});
}

}  // namespace qp_catalog

}  // namespace cf

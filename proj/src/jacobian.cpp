// Noncommutative standard bases in the truncated path algebra KQ / m^N.
//
// Words are paths (arrow ids in traversal order). The leading word of an
// element is its smallest word: shortest first, ties broken lexicographically
// by arrow rank. Reducing a leading word only produces larger words and the
// set of words of length < N is finite, so reduction terminates; overlaps
// whose combined word has length >= N vanish in the quotient and are skipped.
#include "clusterforge/error.hpp"
#include "clusterforge/qp.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cf {

namespace {

struct WordHash {
    std::size_t operator()(const Path& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int x : p) h = (h ^ static_cast<std::size_t>(x + 1)) * 0x100000001b3ull;
        return h;
    }
};

struct WordLess {
    const std::vector<int>* rank;
    bool operator()(const Path& u, const Path& v) const {
        if (u.size() != v.size()) return u.size() < v.size();
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] != v[i]) return (*rank)[u[i]] < (*rank)[v[i]];
        return false;
    }
};

using Poly = std::map<Path, Rational, WordLess>;

class StandardBasis {
public:
    StandardBasis(const QP& qp, int N, std::vector<int> rank)
        : qp_(qp), N_(N), rank_(std::move(rank)), less_{&rank_} {}

    void add_generator(const PathPoly& f) {
        Poly p(less_);
        for (const auto& [w, c] : f)
            if (static_cast<int>(w.size()) < N_) p.emplace(w, c);
        if (!p.empty()) pending_.push_back(std::move(p));
    }

    void run() {
        while (!pending_.empty()) {
            Poly f = std::move(pending_.front());
            pending_.pop_front();
            reduce(f);
            if (f.empty()) continue;
            insert(std::move(f));
        }
    }

    // Number of normal words of each length 1..N-1.
    std::vector<long> normal_counts() const {
        std::vector<long> count(static_cast<std::size_t>(N_), 0);
        std::vector<Path> layer;
        for (std::size_t a = 0; a < qp_.arrows.size(); ++a) {
            Path w{static_cast<int>(a)};
            if (!leading_.count(w)) layer.push_back(std::move(w));
        }
        for (int len = 1; len < N_ && !layer.empty(); ++len) {
            count[len] = static_cast<long>(layer.size());
            if (len + 1 >= N_) break;
            std::vector<Path> next;
            for (const Path& w : layer) {
                const int head = qp_.arrows[w.back()].to;
                for (std::size_t a = 0; a < qp_.arrows.size(); ++a) {
                    if (qp_.arrows[a].from != head) continue;
                    Path v = w;
                    v.push_back(static_cast<int>(a));
                    if (!has_leading_suffix(v)) next.push_back(std::move(v));
                }
            }
            layer = std::move(next);
        }
        return count;
    }

private:
    struct Element {
        Poly poly;
        Path lead;
        bool alive = true;
    };

    // Position of `sub` inside `w`, or -1.
    static int find_subword(const Path& w, const Path& sub) {
        if (sub.size() > w.size()) return -1;
        auto it = std::search(w.begin(), w.end(), sub.begin(), sub.end());
        return it == w.end() ? -1 : static_cast<int>(it - w.begin());
    }

    bool has_leading_suffix(const Path& w) const {
        Path suffix;
        for (std::size_t len = 1; len <= std::min(w.size(), max_lead_); ++len) {
            suffix.assign(w.end() - static_cast<long>(len), w.end());
            if (leading_.count(suffix)) return true;
        }
        return false;
    }

    // Adds c * u f v to p, dropping words of length >= N.
    void add_multiple(Poly& p, const Rational& c, const Path& u, const Poly& f, const Path& v) const {
        for (const auto& [w, fc] : f) {
            if (static_cast<int>(u.size() + w.size() + v.size()) >= N_) continue;
            Path x = u;
            x.insert(x.end(), w.begin(), w.end());
            x.insert(x.end(), v.begin(), v.end());
            auto [it, inserted] = p.try_emplace(std::move(x), c * fc);
            if (!inserted) {
                it->second += c * fc;
                if (it->second == 0) p.erase(it);
            }
        }
    }

    // Top reduction: rewrite the leading word while some basis lead divides it.
    void reduce(Poly& f) const {
        while (!f.empty()) {
            const Path lead = f.begin()->first;
            const Rational lc = f.begin()->second;
            bool done = true;
            for (std::size_t s = 0; s < lead.size() && done; ++s)
                for (std::size_t e = s + 1; e <= lead.size() && e - s <= max_lead_; ++e) {
                    Path sub(lead.begin() + static_cast<long>(s), lead.begin() + static_cast<long>(e));
                    auto it = by_lead_.find(sub);
                    if (it == by_lead_.end()) continue;
                    const Element& g = elems_[it->second];
                    Path u(lead.begin(), lead.begin() + static_cast<long>(s));
                    Path v(lead.begin() + static_cast<long>(e), lead.end());
                    add_multiple(f, -lc, u, g.poly, v);
                    done = false;
                    break;
                }
            if (done) return;
        }
    }

    void insert(Poly f) {
        const Rational lc = f.begin()->second;
        for (auto& [w, c] : f) c /= lc;
        Element g{std::move(f), {}, true};
        g.lead = g.poly.begin()->first;
        const int id = static_cast<int>(elems_.size());

        // Elements whose lead contains the new lead are no longer reduced.
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            Element& h = elems_[i];
            if (!h.alive || find_subword(h.lead, g.lead) < 0) continue;
            h.alive = false;
            by_lead_.erase(h.lead);
            leading_.erase(h.lead);
            pending_.push_back(h.poly);
        }
        // Overlaps g.lead = p s, h.lead = s q and the symmetric case.
        for (std::size_t i = 0; i <= elems_.size(); ++i) {
            const Element& h = i < elems_.size() ? elems_[i] : g;
            if (!h.alive) continue;
            overlaps(g, h);
            if (i < elems_.size()) overlaps(h, g);
        }
        max_lead_ = std::max(max_lead_, g.lead.size());
        by_lead_[g.lead] = id;
        leading_.insert(g.lead);
        elems_.push_back(std::move(g));
    }

    // S-polynomials for a.lead = p s and b.lead = s q with s nonempty.
    void overlaps(const Element& a, const Element& b) {
        const Path& x = a.lead;
        const Path& y = b.lead;
        for (std::size_t s = 1; s < x.size() && s < y.size(); ++s) {
            if (!std::equal(x.end() - static_cast<long>(s), x.end(), y.begin())) continue;
            const std::size_t total = x.size() + y.size() - s;
            if (static_cast<int>(total) >= N_) continue;
            Path p(x.begin(), x.end() - static_cast<long>(s));
            Path q(y.begin() + static_cast<long>(s), y.end());
            Poly sp(less_);
            add_multiple(sp, 1, {}, a.poly, q);
            add_multiple(sp, -1, p, b.poly, {});
            if (!sp.empty()) pending_.push_back(std::move(sp));
        }
    }

    const QP& qp_;
    int N_;
    std::vector<int> rank_;
    WordLess less_;
    std::vector<Element> elems_;
    std::map<Path, int> by_lead_;
    std::unordered_set<Path, WordHash> leading_;
    std::size_t max_lead_ = 0;
    std::deque<Poly> pending_;
};

}  // namespace

DimProfile jacobian_dim_truncated(const QP& qp, int N, const std::vector<int>& arrow_rank) {
    if (N < 2) throw Error(Errc::PrecisionExhausted, "truncation degree must be at least 2");
    std::vector<int> rank = arrow_rank;
    if (rank.empty()) {
        rank.resize(qp.arrows.size());
        for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = static_cast<int>(i);
    }
    if (rank.size() != qp.arrows.size()) throw Error(Errc::UnknownArrow, "arrow order has the wrong length");

    StandardBasis sb(qp, N, rank);
    for (std::size_t a = 0; a < qp.arrows.size(); ++a) sb.add_generator(cyclic_derivative(qp, static_cast<int>(a)));
    sb.run();
    const std::vector<long> counts = sb.normal_counts();

    DimProfile prof;
    long total = qp.n;
    for (int l = 0; l < N; ++l) {
        if (l > 0) total += counts[l];
        prof.dims.push_back(total);
    }
    int from = N - 1;
    while (from > 0 && prof.dims[from - 1] == prof.dims[N - 1]) --from;
    if (from < N - 1) {
        prof.verdict = Verdict::StabilizedAt;
        prof.stable_from = from;
    }
    return prof;
}

}  // namespace cf

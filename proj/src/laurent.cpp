#include "clusterforge/laurent.hpp"

#include "clusterforge/error.hpp"

#include <algorithm>
#include <limits>

namespace cf {

LaurentPoly LaurentPoly::constant(int nx, int ny, const Rational& c) {
    return monomial(nx, ny, Exponent(static_cast<std::size_t>(nx + ny), 0), c);
}

LaurentPoly LaurentPoly::monomial(int nx, int ny, Exponent e, const Rational& c) {
    LaurentPoly p(nx, ny);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::x(int nx, int ny, int i) {
    Exponent e(static_cast<std::size_t>(nx + ny), 0);
    e[i] = 1;
    return monomial(nx, ny, std::move(e));
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(nx_, ny_);
    Exponent e(static_cast<std::size_t>(nx_ + ny_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::times_monomial(const Exponent& m, const Rational& c) const {
    LaurentPoly r(nx_, ny_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) {
        Exponent s = e;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
        r.terms_.emplace_hint(r.terms_.end(), std::move(s), coef * c);
    }
    return r;
}

// Long division on lex-leading terms. If the division is exact the quotient's
// exponents lie in the box [minA - minD, maxA - maxD] coordinatewise, so any
// quotient term outside that box proves inexactness; lex order strictly
// decreases, so the loop terminates.
LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw Error(Errc::InexactDivision, "division by zero");
    LaurentPoly q(nx_, ny_);
    if (is_zero()) return q;
    const std::size_t m = static_cast<std::size_t>(nx_ + ny_);
    auto bounds = [m](const LaurentPoly& p) {
        std::vector<int> lo(m, std::numeric_limits<int>::max()), hi(m, std::numeric_limits<int>::min());
        for (const auto& [e, c] : p.terms_)
            for (std::size_t i = 0; i < m; ++i) {
                lo[i] = std::min(lo[i], e[i]);
                hi[i] = std::max(hi[i], e[i]);
            }
        return std::pair(lo, hi);
    };
    const auto [alo, ahi] = bounds(*this);
    const auto [dlo, dhi] = bounds(d);
    std::vector<int> qlo(m), qhi(m);
    for (std::size_t i = 0; i < m; ++i) {
        qlo[i] = alo[i] - dlo[i];
        qhi[i] = ahi[i] - dhi[i];
        if (qlo[i] > qhi[i]) throw Error(Errc::InexactDivision, "Newton polytopes do not fit");
        if (i >= static_cast<std::size_t>(nx_) && qlo[i] < 0) qlo[i] = 0;
    }

    const auto& [dlead, dcoef] = *d.terms_.rbegin();
    LaurentPoly rem = *this;
    Exponent qe(m);
    while (!rem.is_zero()) {
        const auto& [rlead, rcoef] = *rem.terms_.rbegin();
        for (std::size_t i = 0; i < m; ++i) {
            qe[i] = rlead[i] - dlead[i];
            if (qe[i] < qlo[i] || qe[i] > qhi[i])
                throw Error(Errc::InexactDivision, "remainder term outside the quotient box");
        }
        const Rational qc = rcoef / dcoef;
        q.add_term(qe, qc);
        for (const auto& [e, c] : d.terms_) {
            Exponent s = e;
            for (std::size_t i = 0; i < m; ++i) s[i] += qe[i];
            rem.add_term(s, -qc * c);
        }
    }
    return q;
}

std::vector<int> LaurentPoly::denominator() const {
    std::vector<int> d(static_cast<std::size_t>(nx_), 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nx_; ++i) d[i] = std::max(d[i], -e[i]);
    return d;
}

LaurentPoly LaurentPoly::numerator() const {
    Exponent shift(static_cast<std::size_t>(nx_ + ny_), 0);
    const std::vector<int> d = denominator();
    std::copy(d.begin(), d.end(), shift.begin());
    return times_monomial(shift);
}

namespace {

std::string monomial_text(const Exponent& e, int nx) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        const bool is_x = static_cast<int>(i) < nx;
        s += (is_x ? "x" : "y") + std::to_string(is_x ? i + 1 : i - nx + 1);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    const std::vector<int> d = denominator();
    const LaurentPoly f = numerator();
    std::string num;
    bool first = true;
    for (const auto& [e, c] : f.terms_) {
        const std::string mono = monomial_text(e, nx_);
        Rational a = abs(c);
        std::string body;
        if (mono.empty()) body = cf::to_string(a);
        else if (a == 1) body = mono;
        else body = cf::to_string(a) + "*" + mono;
        if (first) num = (c < 0 ? "-" : "") + body;
        else num += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    Exponent dexp(static_cast<std::size_t>(nx_ + ny_), 0);
    std::copy(d.begin(), d.end(), dexp.begin());
    const std::string den = monomial_text(dexp, nx_);
    if (den.empty()) return num;
    if (f.term_count() > 1) num = "(" + num + ")";
    const auto factors = std::count_if(d.begin(), d.end(), [](int v) { return v > 0; });
    return num + "/" + (factors > 1 ? "(" + den + ")" : den);
}

bool check_laurent(const LaurentPoly& numerator, const std::vector<int>& denominator) {
    const int nx = numerator.nx();
    if (static_cast<int>(denominator.size()) != nx) return false;
    std::vector<char> free_of(static_cast<std::size_t>(nx), 0);  // some term avoids x_i
    for (const auto& [e, c] : numerator.terms()) {
        if (mpz_cmp_ui(c.get_den_mpz_t(), 1) != 0) return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0) return false;
        for (int i = 0; i < nx; ++i)
            if (e[i] == 0) free_of[i] = 1;
    }
    for (int i = 0; i < nx; ++i)
        if (denominator[i] < 0 || (denominator[i] > 0 && !free_of[i])) return false;
    return !numerator.is_zero();
}

bool check_laurent(const LaurentPoly& p) { return check_laurent(p.numerator(), p.denominator()); }

bool has_positive_integer_coefficients(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c <= 0 || mpz_cmp_ui(c.get_den_mpz_t(), 1) != 0) return false;
    return true;
}

}  // namespace cf

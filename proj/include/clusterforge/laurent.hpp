#pragma once

#include "clusterforge/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace cf {

// Exponent vector of a monomial x^a y^b: the first nx entries are x-exponents
// (any sign), the remaining ny entries are y-exponents (nonnegative).
using Exponent = std::vector<int>;

// Sparse Laurent polynomial in x_1..x_nx with polynomial dependence on
// y_1..y_ny and exact rational coefficients. Terms are kept in lexicographic
// order of their exponent vectors; no zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int nx, int ny) : nx_(nx), ny_(ny) {}

    static LaurentPoly constant(int nx, int ny, const Rational& c);
    static LaurentPoly monomial(int nx, int ny, Exponent e, const Rational& c = 1);
    static LaurentPoly x(int nx, int ny, int i);  // the variable x_{i+1}

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    void add_term(const Exponent& e, const Rational& c);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly times_monomial(const Exponent& e, const Rational& c = 1) const;
    bool operator==(const LaurentPoly& o) const = default;

    // Exact division in the Laurent ring; throws Error(InexactDivision) when the
    // divisor does not divide or the quotient would need negative y-exponents.
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    // Minimal x-exponent of each variable over all terms (as a nonnegative
    // denominator exponent d with p = F / x^d, F a polynomial).
    std::vector<int> denominator() const;
    // F = p * x^d for d = denominator().
    LaurentPoly numerator() const;

    // "(1 + x2*y1)/x1" style text with terms in canonical order.
    std::string to_string() const;

private:
    int nx_ = 0, ny_ = 0;
    std::map<Exponent, Rational> terms_;
};

// True iff p is the reduced fraction F / x^d: F has integer coefficients and
// nonnegative exponents, and no x_i with d_i > 0 divides F.
bool check_laurent(const LaurentPoly& numerator, const std::vector<int>& denominator);
bool check_laurent(const LaurentPoly& p);
// All coefficients are positive integers.
bool has_positive_integer_coefficients(const LaurentPoly& p);

}  // namespace cf

#include "clusterforge/rational.hpp"

#include "clusterforge/error.hpp"

#include <cctype>
#include <limits>

namespace cf {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidVertex: return "InvalidVertex";
        case Errc::NotSkewSymmetric: return "NotSkewSymmetric";
        case Errc::InvalidQuiver: return "InvalidQuiver";
        case Errc::EmptySubset: return "EmptySubset";
        case Errc::Disconnected: return "Disconnected";
        case Errc::UnknownArrow: return "UnknownArrow";
        case Errc::VertexOnTwoCycle: return "VertexOnTwoCycle";
        case Errc::PrecisionExhausted: return "PrecisionExhausted";
        case Errc::DegenerateQuadraticPart: return "DegenerateQuadraticPart";
        case Errc::TwoCycleInOutput: return "TwoCycleInOutput";
        case Errc::InexactDivision: return "InexactDivision";
        case Errc::NotHomogeneous: return "NotHomogeneous";
        case Errc::SignCoherenceViolation: return "SignCoherenceViolation";
        case Errc::Overflow: return "Overflow";
        case Errc::SingularBasis: return "SingularBasis";
        case Errc::ExcludedSurface: return "ExcludedSurface";
        case Errc::InvalidArc: return "InvalidArc";
        case Errc::DifferentSurface: return "DifferentSurface";
        case Errc::ArcNotInTriangulation: return "ArcNotInTriangulation";
        case Errc::InvalidTriangulation: return "InvalidTriangulation";
        case Errc::NotExceptional: return "NotExceptional";
        case Errc::SearchExhausted: return "SearchExhausted";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

static bool all_digits(const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    std::size_t start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
    if (!all_digits(num, start) || !all_digits(den, 0))
        throw Error(Errc::ParseError, "not a rational: '" + s + "'");
    Integer p(num[0] == '+' ? num.substr(1) : num), q(den);
    if (q == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::Overflow, "int64 addition");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::Overflow, "int64 multiplication");
    return out;
}

bool solve_exact(int n, const std::vector<Rational>& a, const std::vector<Rational>& b,
                 std::vector<Rational>& x) {
    std::vector<Rational> m(static_cast<std::size_t>(n) * (n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i * (n + 1) + j] = a[i * n + j];
        m[i * (n + 1) + n] = b[i];
    }
    const int w = n + 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r * w + col] != 0) { piv = r; break; }
        if (piv < 0) return false;
        if (piv != col)
            for (int j = 0; j < w; ++j) std::swap(m[piv * w + j], m[col * w + j]);
        Rational inv = 1 / m[col * w + col];
        for (int j = col; j < w; ++j) m[col * w + j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r * w + col] == 0) continue;
            Rational f = m[r * w + col];
            for (int j = col; j < w; ++j) m[r * w + j] -= f * m[col * w + j];
        }
    }
    x.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) x[i] = m[i * w + n];
    return true;
}

int rank_exact(int rows, int cols, std::vector<Rational> a) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r * cols + col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r * cols + col] == 0) continue;
            Rational f = a[r * cols + col] / a[rank * cols + col];
            for (int j = col; j < cols; ++j) a[r * cols + j] -= f * a[rank * cols + j];
        }
        ++rank;
    }
    return rank;
}

Integer determinant(int n, const std::vector<std::int64_t>& a) {
    std::vector<Rational> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = Rational(static_cast<long>(a[i]));
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r * n + col] != 0) { piv = r; break; }
        if (piv < 0) return Integer(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
            det = -det;
        }
        det *= m[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r * n + col] == 0) continue;
            Rational f = m[r * n + col] / m[col * n + col];
            for (int j = col; j < n; ++j) m[r * n + j] -= f * m[col * n + j];
        }
    }
    return det.get_num();
}

}  // namespace cf

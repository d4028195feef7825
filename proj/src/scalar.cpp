#include "sixv/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace sixv {

void Scalar::require_same_mode(const Scalar& a, const Scalar& b, const char* op) {
    if (a.mode() != b.mode())
        throw ModeMismatchError(std::string("mixed exact/floating operands in scalar ") + op);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b, "add");
    if (a.mode() == Mode::exact) return Scalar(a.as_exact() + b.as_exact());
    return Scalar(a.as_complex() + b.as_complex());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b, "sub");
    if (a.mode() == Mode::exact) return Scalar(a.as_exact() - b.as_exact());
    return Scalar(a.as_complex() - b.as_complex());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b, "mul");
    if (a.mode() == Mode::exact) return Scalar(a.as_exact() * b.as_exact());
    return Scalar(a.as_complex() * b.as_complex());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar::require_same_mode(a, b, "div");
    if (a.mode() == Mode::exact) return Scalar(a.as_exact() / b.as_exact());
    if (b.is_structural_zero()) throw DivisionByZeroError("division by zero scalar");
    return Scalar(a.as_complex() / b.as_complex());
}

Scalar Scalar::operator-() const {
    if (mode() == Mode::exact) return Scalar(-as_exact());
    return Scalar(-as_complex());
}

bool Scalar::is_zero(double eps) const {
    if (mode() == Mode::exact) return as_exact().is_zero();
    // Relative rule |x| <= eps * max(1, |x|) collapses to |x| <= eps.
    return std::abs(as_complex()) <= eps;
}

bool scalar_eq(const Scalar& x, const Scalar& y, double eps) {
    if (x.mode() != y.mode())
        throw ModeMismatchError("mixed exact/floating operands in scalar comparison");
    if (x.mode() == Mode::exact) return x.as_exact() == y.as_exact();
    const std::complex<double> a = x.as_complex(), b = y.as_complex();
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= eps * scale;
}

namespace {

std::string double_str(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, p);
}

double parse_double(std::string_view s) {
    double out = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || p != last)
        throw ParseError("bad numeric literal '" + std::string(s) + "'");
    return out;
}

// Splits "re", "re+imi" or "re-imi". The separator sign may not be the
// leading sign and may not follow an exponent marker.
struct SplitParts {
    std::string_view re;
    std::string_view im; // empty when absent; includes its sign
};

SplitParts split_complex(std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    const bool has_i = text.back() == 'i';
    std::string_view body = has_i ? text.substr(0, text.size() - 1) : text;
    std::size_t sep = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            sep = k;
            break;
        }
    }
    if (!has_i) {
        if (sep != std::string_view::npos)
            throw ParseError("missing trailing 'i' in '" + std::string(text) + "'");
        return {body, {}};
    }
    if (sep == std::string_view::npos)
        throw ParseError("scalar '" + std::string(text) +
                         "' must be '<re>' or '<re>(+|-)<im>i'");
    return {body.substr(0, sep), body.substr(sep)};
}

} // namespace

std::string Scalar::str() const {
    if (mode() == Mode::exact) {
        const auto& g = as_exact();
        if (g.im.is_zero()) return g.re.str();
        std::string s = g.re.str();
        s += g.im.sign() < 0 ? '-' : '+';
        s += (g.im.sign() < 0 ? -g.im : g.im).str();
        s += 'i';
        return s;
    }
    const std::complex<double> z = as_complex();
    if (z.imag() == 0.0) return double_str(z.real());
    std::string s = double_str(z.real());
    s += std::signbit(z.imag()) ? '-' : '+';
    s += double_str(std::abs(z.imag()));
    s += 'i';
    return s;
}

Scalar Scalar::parse(std::string_view text, ScalarMode mode) {
    const SplitParts parts = split_complex(text);
    if (mode.kind == Mode::exact) {
        const Rational re = Rational::parse(parts.re);
        if (parts.im.empty()) return exact(re);
        const int sign = parts.im.front() == '-' ? -1 : 1;
        Rational im = Rational::parse(parts.im.substr(1));
        if (sign < 0) im = -im;
        return exact(re, im);
    }
    const double re = parse_double(parts.re);
    if (parts.im.empty()) return floating(re);
    const int sign = parts.im.front() == '-' ? -1 : 1;
    const double im = parse_double(parts.im.substr(1));
    return floating(re, sign < 0 ? -im : im);
}

} // namespace sixv

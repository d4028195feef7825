#pragma once

#include "sixv/errors.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace sixv {

// Arbitrary-precision rational in canonical form: denominator > 0 and
// gcd(|num|, den) = 1. Backed by GMP; every constructor canonicalizes, and
// GMP arithmetic preserves canonical form from there on.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw DivisionByZeroError("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p" or "p/q" with optional leading '-'.
    static Rational parse(std::string_view text);

    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    double to_double() const { return v_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZeroError("rational division by zero");
        return wrap(a.v_ / b.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    // GMP arithmetic on canonical operands yields canonical results.
    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    mpq_class v_;
};

namespace detail {
inline bool digits_only(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t k = 0;
    if (allow_sign && s[0] == '-') k = 1;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return false;
    return true;
}
} // namespace detail

inline Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    const auto slash = text.find('/');
    const std::string num(text.substr(0, slash));
    if (!detail::digits_only(num, true))
        throw ParseError("bad integer '" + num + "' in rational");
    mpz_class n(num), d(1);
    if (slash != std::string_view::npos) {
        const std::string den(text.substr(slash + 1));
        if (!detail::digits_only(den, false))
            throw ParseError("bad denominator '" + den + "' in rational");
        d = mpz_class(den);
        if (sgn(d) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

inline std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

} // namespace sixv

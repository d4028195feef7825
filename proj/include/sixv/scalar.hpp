#pragma once

#include "sixv/errors.hpp"
#include "sixv/rational.hpp"

#include <complex>
#include <string>
#include <string_view>
#include <variant>

namespace sixv {

// Default relative tolerance for floating-mode comparisons.
inline constexpr double kDefaultEps = 1e-9;

enum class Mode { exact, floating };

// Mode tag plus the tolerance that applies in floating mode.
struct ScalarMode {
    Mode kind = Mode::exact;
    double eps = kDefaultEps;

    static ScalarMode exact() { return {Mode::exact, kDefaultEps}; }
    static ScalarMode floating(double eps = kDefaultEps) {
        if (!(eps > 0)) throw DomainError("floating tolerance must be positive");
        return {Mode::floating, eps};
    }
};

// Element of Q(i): re + im*i with exact rational components.
struct GaussianRational {
    Rational re, im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        const Rational n = b.norm();
        if (n.is_zero()) throw DivisionByZeroError("division by zero Gaussian rational");
        const GaussianRational t = a * b.conj();
        return {t.re / n, t.im / n};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// A field element in exactly one of two modes: an exact Gaussian rational,
// or a complex double compared with a relative tolerance. Arithmetic never
// mixes modes; mixing throws ModeMismatchError.
class Scalar {
public:
    Scalar() : v_(GaussianRational{}) {}
    explicit Scalar(GaussianRational g) : v_(std::move(g)) {}
    explicit Scalar(std::complex<double> z) : v_(z) {}

    static Scalar exact(Rational re, Rational im = Rational()) {
        return Scalar(GaussianRational{std::move(re), std::move(im)});
    }
    static Scalar floating(double re, double im = 0.0) {
        return Scalar(std::complex<double>(re, im));
    }
    static Scalar zero(Mode m) { return from_int(0, m); }
    static Scalar one(Mode m) { return from_int(1, m); }
    static Scalar from_int(long n, Mode m) {
        return m == Mode::exact ? exact(Rational(n)) : floating(static_cast<double>(n));
    }

    Mode mode() const { return std::holds_alternative<GaussianRational>(v_) ? Mode::exact : Mode::floating; }
    const GaussianRational& as_exact() const {
        if (mode() != Mode::exact) throw ModeMismatchError("scalar is not in exact mode");
        return std::get<GaussianRational>(v_);
    }
    std::complex<double> as_complex() const {
        if (mode() != Mode::floating) throw ModeMismatchError("scalar is not in floating mode");
        return std::get<std::complex<double>>(v_);
    }

    // Structural zero; used for sparsity short-cuts, not for tolerance tests.
    bool is_structural_zero() const {
        if (mode() == Mode::exact) return as_exact().is_zero();
        return as_complex() == std::complex<double>(0.0, 0.0);
    }
    // Tolerance-aware zero test: exact mode structural, floating |x| <= eps.
    bool is_zero(double eps = kDefaultEps) const;

    double magnitude() const {
        if (mode() == Mode::exact) {
            const auto& g = as_exact();
            return std::abs(std::complex<double>(g.re.to_double(), g.im.to_double()));
        }
        return std::abs(as_complex());
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar reciprocal() const { return one(mode()) / *this; }

    std::string str() const;
    // Exact mode: "<rational>" or "<rational>(+|-)<rational>i".
    // Floating mode: decimal/complex literal with the same shape.
    static Scalar parse(std::string_view text, ScalarMode mode);

private:
    static void require_same_mode(const Scalar& a, const Scalar& b, const char* op);

    std::variant<GaussianRational, std::complex<double>> v_;
};

// Equality per mode: exact scalars structurally, floating scalars with
// |x - y| <= eps * max(1, |x|, |y|).
bool scalar_eq(const Scalar& x, const Scalar& y, double eps = kDefaultEps);

} // namespace sixv

#pragma once

#include "sixv/scalar.hpp"

#include <cstdint>

namespace sixv {

// Deterministic splitmix64 stream. Standard-library distributions are not
// pinned across implementations, so seeded reports use this directly; state
// for trial i of a run seeded s comes from Rng(s, i).
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {
        next_u64();
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // Uniform integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform double in [0, 1) with 53 bits.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    bool chance(double p) { return unit() < p; }

    // Nonzero integer in [-bound, bound].
    long nonzero_int(long bound) {
        const long v = range(1, bound);
        return chance(0.5) ? v : -v;
    }

    // Small nonzero rational; denominators kept small so exact arithmetic in
    // bulk property tests stays fast.
    Rational nonzero_rational(long num_bound = 9, long den_bound = 4) {
        return Rational(nonzero_int(num_bound), range(1, den_bound));
    }

    Rational rational(long num_bound = 9, long den_bound = 4) {
        return Rational(range(-num_bound, num_bound), range(1, den_bound));
    }

    // Exact scalar, occasionally with a nonzero imaginary part so Q(i) is
    // exercised rather than just Q.
    Scalar exact_scalar(double imag_prob = 0.25) {
        Rational im;
        if (chance(imag_prob)) im = rational();
        return Scalar::exact(rational(), im);
    }

    Scalar nonzero_exact_scalar(double imag_prob = 0.25) {
        if (chance(imag_prob)) return Scalar::exact(rational(), nonzero_rational());
        return Scalar::exact(nonzero_rational(), Rational());
    }

    // Complex double with both parts in [-2, 2], kept away from zero.
    Scalar nonzero_float_scalar() {
        for (;;) {
            const double re = uniform(-2.0, 2.0);
            const double im = uniform(-2.0, 2.0);
            if (re * re + im * im > 0.04) return Scalar::floating(re, im);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace sixv

#include "sixv/groupoid.hpp"

#include "sixv/families.hpp"
#include "sixv/rng.hpp"

#include <cmath>
#include <complex>

namespace sixv {

GroupoidElement GroupoidElement::from_matrix(SixVertexMatrix m, double eps) {
    if (!m.in_S_times(eps))
        throw DomainError("groupoid element must lie in S^x (all six entries nonzero, det != 0)");
    DeltaPair d = m.delta(eps);
    if (d.d1.is_zero(eps) && d.d2.is_zero(eps))
        throw DomainError("free-fermionic matrix (Delta = (0,0)) is not a groupoid element");
    return GroupoidElement(std::move(m), std::move(d));
}

GroupoidElement GroupoidElement::unit(DeltaPair d) {
    if (d.d1.mode() != d.d2.mode())
        throw ModeMismatchError("identity element Delta pair must share one mode");
    return GroupoidElement(std::nullopt, std::move(d));
}

const SixVertexMatrix& GroupoidElement::matrix() const {
    if (is_identity()) throw DomainError("identity element carries no matrix");
    return *m_;
}

GroupoidElement g_inverse(const GroupoidElement& x, double eps) {
    if (x.is_identity()) return x;
    return GroupoidElement::from_matrix(x.matrix().inverse(eps), eps);
}

namespace {

DeltaPair delta_of_inverse(const SixVertexMatrix& m, double eps) {
    return m.inverse(eps).delta(eps);
}

} // namespace

GComposeResult g_compose(const GroupoidElement& x, const GroupoidElement& y, double eps) {
    if (x.is_identity() && y.is_identity()) {
        if (delta_eq(x.delta(), y.delta(), eps)) return {ComposeStatus::defined, x, {}};
        return {ComposeStatus::incompatible, std::nullopt, "identity Delta pairs differ"};
    }
    if (x.is_identity()) {
        if (delta_eq(x.delta(), delta_of_inverse(y.matrix(), eps), eps))
            return {ComposeStatus::defined, y, {}};
        return {ComposeStatus::incompatible, std::nullopt,
                "left identity is not at Delta(v^-1)"};
    }
    if (y.is_identity()) {
        if (delta_eq(x.delta(), y.delta(), eps)) return {ComposeStatus::defined, x, {}};
        return {ComposeStatus::incompatible, std::nullopt, "right identity is not at Delta(u)"};
    }

    if (!delta_eq(x.delta(), delta_of_inverse(y.matrix(), eps), eps))
        return {ComposeStatus::incompatible, std::nullopt, "Delta(u) != Delta(v^-1)"};

    YbSolveResult r = solve_w(x.matrix(), y.matrix(), eps);
    if (r.status == SolveStatus::undefined) {
        // Delta-compatibility and the solve conditions are equivalent on S^x,
        // so this can only be a floating-point boundary disagreement.
        if (x.mode() == Mode::exact)
            throw InternalError("Delta-compatible pair fails the solve conditions");
        return {ComposeStatus::incompatible, std::nullopt, "solve conditions fail at tolerance"};
    }
    if (r.status == SolveStatus::degenerate) {
        std::string detail = "product leaves S:";
        for (const std::string& name : r.vanishing) detail += " " + name + "=0";
        return {ComposeStatus::degenerate, std::nullopt, detail};
    }

    SixVertexMatrix w = std::move(*r.matrix);
    if (projective_eq(w, SixVertexMatrix::identity(w.mode()), eps))
        return {ComposeStatus::defined, GroupoidElement::unit(y.delta()), {}};
    if (w.b1().is_zero(eps) || w.b2().is_zero(eps))
        return {ComposeStatus::degenerate, std::nullopt,
                w.b1().is_zero(eps) && w.b2().is_zero(eps)
                    ? "product is diagonal but not an identity"
                    : "product is a five-vertex matrix"};
    DeltaPair dw = w.delta(eps);
    if (dw.d1.is_zero(eps) && dw.d2.is_zero(eps))
        return {ComposeStatus::degenerate, std::nullopt, "product is free-fermionic"};
    return {ComposeStatus::defined, GroupoidElement::from_matrix(std::move(w), eps), {}};
}

bool g_eq(const GroupoidElement& x, const GroupoidElement& y, double eps) {
    if (x.is_identity() != y.is_identity()) return false;
    if (x.is_identity()) return delta_eq(x.delta(), y.delta(), eps);
    return projective_eq(x.matrix(), y.matrix(), eps);
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxRetries = 500;

struct ExactFamily {
    FamilyParams params;
    std::vector<GroupElem3> elems;
};

bool product_clean(const FamilyParams& p, const GroupElem3& h) {
    // b-entries of the product vanish iff z1 = z2; that is fine only as the
    // identity (w = 1). Otherwise the product must keep a1 and det nonzero.
    if (scalar_eq(h.z1, h.z2)) return scalar_eq(h.w, Scalar::one(h.w.mode()));
    const Scalar a1 = p.q1 * h.z1 - p.q2 * h.z2;
    if (a1.is_zero()) return false;
    const Scalar dq = p.q1 - p.q2;
    const Scalar dz = h.z1 - h.z2;
    return !(h.z1 * h.z2 * dq * dq - p.q1 * p.q2 * dz * dz).is_zero();
}

std::optional<ExactFamily> draw_exact_family(Rng& rng, int chain_len) {
    const Rational q1 = rng.nonzero_rational();
    const Rational q2 = rng.nonzero_rational();
    if (q1 == q2 || q1 == -q2) return std::nullopt; // need c != 0 and Delta != 0
    FamilyParams p{Scalar::exact(q1), Scalar::exact(q2), Scalar::exact(rng.nonzero_rational())};

    std::vector<GroupElem3> gs;
    for (int i = 0; i < chain_len; ++i) {
        const Rational z1 = rng.nonzero_rational();
        const Rational z2 = rng.nonzero_rational();
        if (z1 == z2) return std::nullopt; // members must stay in S^x
        gs.push_back({Scalar::exact(z1), Scalar::exact(z2), Scalar::exact(rng.nonzero_rational())});
        if (!product_clean(p, gs.back())) return std::nullopt;
    }
    // Every sub-product a later composition can produce must stay clean:
    // contiguous products, plus the skip product for identity-inserted chains.
    for (std::size_t i = 0; i < gs.size(); ++i) {
        GroupElem3 acc = gs[i];
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
            acc = group_mul(acc, gs[j]);
            if (!product_clean(p, acc)) return std::nullopt;
        }
    }
    if (gs.size() == 3 && !product_clean(p, group_mul(gs[0], gs[2]))) return std::nullopt;
    return ExactFamily{std::move(p), std::move(gs)};
}

Chain build_family_chain(Rng& rng, int chain_len, double eps) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        auto fam = draw_exact_family(rng, chain_len);
        if (!fam) continue;
        Chain chain;
        bool ok = true;
        for (const GroupElem3& g : fam->elems) {
            try {
                chain.push_back(GroupoidElement::from_matrix(r_family(fam->params, FamilyKind::cf, g), eps));
            } catch (const Error&) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // Occasionally exercise identity laws inside associativity chains;
        // the family identity is composable in any slot.
        if (chain_len == 3 && rng.chance(0.12))
            chain[1 + rng.below(2)] = GroupoidElement::unit(chain[0].delta());
        return chain;
    }
    throw SamplingError("family_exact sampling exhausted retries");
}

// Margin used only to keep floating draws well-conditioned.
bool comfortably_nonzero(const Scalar& s, double margin = 0.05) {
    return s.magnitude() > margin;
}

bool float_nff_ok(const SixVertexMatrix& m, double eps) {
    if (!m.in_S_times(eps)) return false;
    try {
        const DualAuxiliaries s = m.dual_aux(eps);
        if (!comfortably_nonzero(m.a1() - s.a2_star) || !comfortably_nonzero(m.a2() - s.a1_star))
            return false;
        const DeltaPair d = m.delta(eps);
        return comfortably_nonzero(d.d1, 1e-3) || comfortably_nonzero(d.d2, 1e-3);
    } catch (const Error&) {
        return false;
    }
}

std::optional<SixVertexMatrix> draw_float_nff(Rng& rng, double eps) {
    SixVertexMatrix m(rng.nonzero_float_scalar(), rng.nonzero_float_scalar(),
                      rng.nonzero_float_scalar(), rng.nonzero_float_scalar(),
                      rng.nonzero_float_scalar(), rng.nonzero_float_scalar());
    if (!float_nff_ok(m, eps)) return std::nullopt;
    return m;
}

// Given u, constructs w with chosen a/c entries such that the consistency
// conditions for solving [[u,w,v]] = 0 for v hold: with X = c1c2(w) - b1b2(w),
// the product of the two conditions is a quadratic in X; back-substitution
// recovers b1(w), b2(w).
std::optional<SixVertexMatrix> extend_target(Rng& rng, const SixVertexMatrix& u, double eps) {
    const std::complex<double> alpha = (u.a1() - u.dual_aux(eps).a2_star).as_complex();
    const std::complex<double> gamma = (u.a2() - u.dual_aux(eps).a1_star).as_complex();
    const std::complex<double> b1u = u.b1().as_complex();
    const std::complex<double> b2u = u.b2().as_complex();

    const Scalar a1w = rng.nonzero_float_scalar();
    const Scalar a2w = rng.nonzero_float_scalar();
    const Scalar c1w = rng.nonzero_float_scalar();
    const Scalar c2w = rng.nonzero_float_scalar();
    const std::complex<double> M = (a1w * a2w).as_complex();
    const std::complex<double> C = (c1w * c2w).as_complex();
    const std::complex<double> Bu = b1u * b2u;

    // Bu X^2 + (alpha gamma M - 2 M Bu) X + (M^2 Bu - alpha gamma M C) = 0
    const std::complex<double> A = Bu;
    const std::complex<double> B = alpha * gamma * M - 2.0 * M * Bu;
    const std::complex<double> Cq = M * M * Bu - alpha * gamma * M * C;
    const std::complex<double> disc = std::sqrt(B * B - 4.0 * A * Cq);
    const std::complex<double> x1 = (-B + disc) / (2.0 * A);
    const std::complex<double> x2 = (-B - disc) / (2.0 * A);
    const std::complex<double> X = std::abs(x1) >= std::abs(x2) ? x1 : x2;
    if (std::abs(X) < 1e-6) return std::nullopt; // X = det block of w; keep it away from 0

    const std::complex<double> b1w = (a1w.as_complex() - X / a2w.as_complex()) * b1u / alpha;
    if (std::abs(b1w) < 1e-6) return std::nullopt;
    const std::complex<double> b2w = (C - X) / b1w;

    SixVertexMatrix w(a1w, a2w, Scalar(b1w), Scalar(b2w), c1w, c2w);
    if (!float_nff_ok(w, eps)) return std::nullopt;
    // Conditions must balance after back-substitution; guard the root choice.
    const std::complex<double> lhs2 = gamma * b2w;
    const std::complex<double> rhs2 = (a2w.as_complex() - X / a1w.as_complex()) * b2u;
    if (std::abs(lhs2 - rhs2) > 1e-7 * std::max({1.0, std::abs(lhs2), std::abs(rhs2)}))
        return std::nullopt;
    return w;
}

Chain build_cross_chain(Rng& rng, int chain_len, double eps) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        auto u = draw_float_nff(rng, eps);
        if (!u) continue;
        Chain chain{GroupoidElement::from_matrix(*u, eps)};
        SixVertexMatrix cur = *u;
        bool ok = true;
        for (int step = 1; step < chain_len && ok; ++step) {
            ok = false;
            for (int inner = 0; inner < kMaxRetries; ++inner) {
                auto w = extend_target(rng, cur, eps);
                if (!w) continue;
                YbSolveResult rv = solve_v(cur, *w, eps);
                if (!rv.defined()) continue;
                SixVertexMatrix v = std::move(*rv.matrix);
                if (!float_nff_ok(v, eps)) continue;
                if (!delta_eq(cur.delta(eps), delta_of_inverse(v, eps), eps)) continue;
                chain.push_back(GroupoidElement::from_matrix(v, eps));
                cur = std::move(v);
                ok = true;
                break;
            }
        }
        if (ok) return chain;
    }
    throw SamplingError("cross_float sampling exhausted retries");
}

} // namespace

std::vector<Chain> sample_composable(SampleStrategy strategy, std::uint64_t seed, int count,
                                     int chain_len, double eps) {
    if (chain_len < 2 || chain_len > 3)
        throw DomainError("sample_composable supports chain lengths 2 and 3");
    std::vector<Chain> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        out.push_back(strategy == SampleStrategy::family_exact
                          ? build_family_chain(rng, chain_len, eps)
                          : build_cross_chain(rng, chain_len, eps));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fuzzers
// ---------------------------------------------------------------------------

namespace {

struct CheckSink {
    FuzzReport* report;
    std::uint64_t seed;
    const Chain* chain;
    bool failed = false;

    // One failure entry per trial keeps passes + |failures| = trials.
    void fail(const std::string& check) {
        if (failed) return;
        report->failures.push_back({seed, *chain, check});
        failed = true;
    }
};

// Composes and demands success; returns nullopt (recording a failure) when
// the composition is incompatible or degenerate.
std::optional<GroupoidElement> must_compose(CheckSink& sink, const GroupoidElement& a,
                                            const GroupoidElement& b, const std::string& label,
                                            double eps) {
    GComposeResult r = g_compose(a, b, eps);
    if (!r.defined()) {
        sink.fail(label + ": " + (r.detail.empty() ? "composition not defined" : r.detail));
        return std::nullopt;
    }
    return std::move(*r.element);
}

void check_pair_axioms(CheckSink& sink, const GroupoidElement& x, const GroupoidElement& y,
                       double eps) {
    const GroupoidElement xi = g_inverse(x, eps);
    if (!g_eq(g_inverse(xi, eps), x, eps)) sink.fail("(x^-1)^-1 = x");

    // Inverse law: x * x^-1 and x^-1 * x are always defined (identities).
    auto xxi = must_compose(sink, x, xi, "x * x^-1", eps);
    if (xxi && !xxi->is_identity()) sink.fail("x * x^-1 is an identity");
    auto xix = must_compose(sink, xi, x, "x^-1 * x", eps);
    if (xix && !xix->is_identity()) sink.fail("x^-1 * x is an identity");

    // Identity laws at the matching objects.
    auto xr = must_compose(sink, x, GroupoidElement::unit(x.delta()), "x * id", eps);
    if (xr && !g_eq(*xr, x, eps)) sink.fail("x * id = x");
    auto xl = must_compose(sink, GroupoidElement::unit(xi.delta()), x, "id * x", eps);
    if (xl && !g_eq(*xl, x, eps)) sink.fail("id * x = x");
    if (xxi) {
        auto back = must_compose(sink, *xxi, x, "(x * x^-1) * x", eps);
        if (back && !g_eq(*back, x, eps)) sink.fail("(x * x^-1) * x = x");
    }

    auto z = must_compose(sink, x, y, "x * y", eps);
    if (!z) return;
    const GroupoidElement yi = g_inverse(y, eps);

    // The five invertible-magmoid identities.
    auto yixi = must_compose(sink, yi, xi, "y^-1 * x^-1", eps);
    if (yixi && !g_eq(g_inverse(*z, eps), *yixi, eps)) sink.fail("(x*y)^-1 = y^-1 * x^-1");
    auto zyi = must_compose(sink, *z, yi, "(x*y) * y^-1", eps);
    if (zyi && !g_eq(*zyi, x, eps)) sink.fail("(x*y) * y^-1 = x");
    auto xiz = must_compose(sink, xi, *z, "x^-1 * (x*y)", eps);
    if (xiz && !g_eq(*xiz, y, eps)) sink.fail("x^-1 * (x*y) = y");
    auto yzi = must_compose(sink, y, g_inverse(*z, eps), "y * (x*y)^-1", eps);
    if (yzi && !g_eq(*yzi, xi, eps)) sink.fail("y * (x*y)^-1 = x^-1");
    auto zix = must_compose(sink, g_inverse(*z, eps), x, "(x*y)^-1 * x", eps);
    if (zix && !g_eq(*zix, yi, eps)) sink.fail("(x*y)^-1 * x = y^-1");
}

} // namespace

FuzzReport axiom_suite(const std::vector<Chain>& samples, double eps) {
    FuzzReport report;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Chain& chain = samples[i];
        if (chain.size() < 2) throw DomainError("axiom_suite samples need at least two elements");
        ++report.trials;
        CheckSink sink{&report, i, &chain};
        check_pair_axioms(sink, chain[0], chain[1], eps);
        if (!sink.failed) ++report.passes;
    }
    return report;
}

FuzzReport associativity_fuzz(SampleStrategy strategy, std::uint64_t seed, int trials,
                              double eps) {
    const std::vector<Chain> chains = sample_composable(strategy, seed, trials, 3, eps);
    FuzzReport report;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const Chain& c = chains[i];
        ++report.trials;
        CheckSink sink{&report, i, &c};
        auto xy = must_compose(sink, c[0], c[1], "u * v", eps);
        auto yz = must_compose(sink, c[1], c[2], "v * w", eps);
        if (xy && yz) {
            // u*v and v*w defined must force both triple products to exist.
            auto xy_z = must_compose(sink, *xy, c[2], "(u*v) * w", eps);
            auto x_yz = must_compose(sink, c[0], *yz, "u * (v*w)", eps);
            if (xy_z && x_yz && !g_eq(*xy_z, *x_yz, eps)) sink.fail("(u*v)*w = u*(v*w)");
        }
        if (!sink.failed) ++report.passes;
    }
    return report;
}

} // namespace sixv

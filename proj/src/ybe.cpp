#include "sixv/ybe.hpp"

namespace sixv {

SquareMatrix yb_commutator(const SixVertexMatrix& u, const SixVertexMatrix& w,
                           const SixVertexMatrix& v) {
    const Mode m = u.mode();
    if (w.mode() != m || v.mode() != m)
        throw ModeMismatchError("mixed-mode Yang-Baxter triple");
    const SquareMatrix i2 = SquareMatrix::identity(2, m);
    const SquareMatrix u12 = kron(u.as_operator(), i2);
    const SquareMatrix w23 = kron(i2, w.as_operator());
    const SquareMatrix v12 = kron(v.as_operator(), i2);
    const SquareMatrix v23 = kron(i2, v.as_operator());
    const SquareMatrix w12 = kron(w.as_operator(), i2);
    const SquareMatrix u23 = kron(i2, u.as_operator());
    return u12 * w23 * v12 - v23 * w12 * u23;
}

std::array<Scalar, 13> component_residuals(const SixVertexMatrix& u, const SixVertexMatrix& w,
                                           const SixVertexMatrix& v) {
    const Scalar &a1u = u.a1(), &a2u = u.a2(), &b1u = u.b1(), &b2u = u.b2(), &c1u = u.c1(),
                 &c2u = u.c2();
    const Scalar &a1v = v.a1(), &a2v = v.a2(), &b1v = v.b1(), &b2v = v.b2(), &c1v = v.c1(),
                 &c2v = v.c2();
    const Scalar &a1w = w.a1(), &a2w = w.a2(), &b1w = w.b1(), &b2w = w.b2(), &c1w = w.c1(),
                 &c2w = w.c2();
    return {
        c1w * c2u * c2v - c1u * c1v * c2w,
        a1w * c1u * c1v + b1v * b2u * c1w - a1u * a1v * c1w,
        a1w * b1u * c1v + b1v * c1w * c2u - a1u * b1w * c1v,
        a1w * b2v * c1u + b2u * c1w * c2v - a1v * b2w * c1u,
        a1w * b1u * c2v + b1v * c1u * c2w - a1u * b1w * c2v,
        a2w * c1u * c1v + b1u * b2v * c1w - a2u * a2v * c1w,
        a2w * b1v * c1u + b1u * c1w * c2v - a2v * b1w * c1u,
        a1w * b2v * c2u + b2u * c1v * c2w - a1v * b2w * c2u,
        a1w * c2u * c2v + b1v * b2u * c2w - a1u * a1v * c2w,
        a2w * b2u * c1v + b2v * c1w * c2u - a2u * b2w * c1v,
        a2w * b1v * c2u + b1u * c1v * c2w - a2v * b1w * c2u,
        a2w * b2u * c2v + b2v * c1u * c2w - a2u * b2w * c2v,
        a2w * c2u * c2v + b1u * b2v * c2w - a2u * a2v * c2w,
    };
}

bool is_yb_solution(const SixVertexMatrix& u, const SixVertexMatrix& w, const SixVertexMatrix& v,
                    double eps) {
    const bool comm_zero = yb_commutator(u, w, v).is_zero(eps);
    // Every nonzero commutator entry is one of the residuals up to sign, so
    // in exact mode the two verdicts cannot diverge. Floating mode evaluates
    // the two routes with different rounding, so the cross-check is exact-only.
    if (u.mode() == Mode::exact) {
        bool residuals_zero = true;
        for (const Scalar& r : component_residuals(u, w, v))
            if (!r.is_zero(eps)) {
                residuals_zero = false;
                break;
            }
        if (comm_zero != residuals_zero)
            throw InternalError("commutator and component residuals disagree");
    }
    return comm_zero;
}

SolveConditions solve_conditions(const SixVertexMatrix& u, const SixVertexMatrix& v, double eps) {
    const DualAuxiliaries su = u.dual_aux(eps);
    const DualAuxiliaries sv = v.dual_aux(eps);
    SolveConditions c{
        (v.a1() - sv.a2_star) * u.b1(),
        (u.a2() - su.a1_star) * v.b1(),
        (u.a1() - su.a2_star) * v.b2(),
        (v.a2() - sv.a1_star) * u.b2(),
        false,
    };
    c.satisfied = scalar_eq(c.cond1_lhs, c.cond1_rhs, eps) && scalar_eq(c.cond2_lhs, c.cond2_rhs, eps);
    return c;
}

namespace {

// Degeneracy test shared by the three solvers: the product must stay in S.
YbSolveResult finish_solve(SixVertexMatrix w, SolveConditions conds, double eps) {
    std::vector<std::string> vanishing;
    if (w.c1().is_zero(eps)) vanishing.push_back("c1");
    if (w.c2().is_zero(eps)) vanishing.push_back("c2");
    if (w.a1().is_zero(eps)) vanishing.push_back("a1");
    if (w.a2().is_zero(eps)) vanishing.push_back("a2");
    if (w.block_det().is_zero(eps)) vanishing.push_back("c1c2-b1b2");
    if (!vanishing.empty())
        return {SolveStatus::degenerate, std::move(w), std::move(conds), std::move(vanishing)};
    return {SolveStatus::defined, std::move(w), std::move(conds), {}};
}

} // namespace

YbSolveResult solve_w(const SixVertexMatrix& u, const SixVertexMatrix& v, double eps) {
    SolveConditions conds = solve_conditions(u, v, eps);
    if (!conds.satisfied) return {SolveStatus::undefined, std::nullopt, std::move(conds), {}};

    const DualAuxiliaries su = u.dual_aux(eps);
    const DualAuxiliaries sv = v.dual_aux(eps);
    const Scalar a1w = u.a1() * v.a1() - v.b1() * u.b2();
    const Scalar a2w = u.a2() * v.a2() - u.b1() * v.b2();
    const Scalar b1w = su.a1_star * v.b1() + v.a1() * u.b1();
    const Scalar b2w = sv.a1_star * u.b2() + u.a1() * v.b2();
    const Scalar c1w = u.c1() * v.c1();
    const Scalar c2w = u.c2() * v.c2();

    if (u.mode() == Mode::exact) {
        // The satisfied conditions are precisely the statement that the two
        // printed forms of each b-entry coincide.
        const Scalar b1w_alt = sv.a2_star * u.b1() + u.a2() * v.b1();
        const Scalar b2w_alt = su.a2_star * v.b2() + v.a2() * u.b2();
        if (!scalar_eq(b1w, b1w_alt, eps) || !scalar_eq(b2w, b2w_alt, eps))
            throw InternalError("alternative b-entry forms disagree in solve_w");
    }
    return finish_solve(SixVertexMatrix(a1w, a2w, b1w, b2w, c1w, c2w), std::move(conds), eps);
}

YbSolveResult solve_u(const SixVertexMatrix& w, const SixVertexMatrix& v, double eps) {
    const SixVertexMatrix v_inv = v.inverse(eps);
    YbSolveResult via_equiv = solve_w(w, v_inv, eps);
    if (via_equiv.status == SolveStatus::undefined) return via_equiv;

    // Explicit entry formulas; this representative is returned.
    const DualAuxiliaries sw = w.dual_aux(eps);
    const DualAuxiliaries sv = v.dual_aux(eps);
    const Scalar a1u = w.a1() * sv.a1_star + v.b1() * w.b2();
    const Scalar a2u = w.a2() * sv.a2_star + w.b1() * v.b2();
    const Scalar b1u = w.b1() * v.a2() - v.b1() * w.a2();
    const Scalar b2u = v.a1() * w.b2() - w.a1() * v.b2();
    const Scalar c1u = w.c1() * v.c2();
    const Scalar c2u = v.c1() * w.c2();
    SixVertexMatrix u(a1u, a2u, b1u, b2u, c1u, c2u);

    if (w.mode() == Mode::exact) {
        const Scalar b1u_alt = w.b1() * sv.a1_star - v.b1() * sw.a1_star;
        const Scalar b2u_alt = sv.a2_star * w.b2() - sw.a2_star * v.b2();
        if (!scalar_eq(b1u, b1u_alt, eps) || !scalar_eq(b2u, b2u_alt, eps))
            throw InternalError("alternative b-entry forms disagree in solve_u");
        if (!projective_eq(u, *via_equiv.matrix, eps))
            throw InternalError("solve_u: equivalence route and entry formulas disagree");
    }
    return finish_solve(std::move(u), std::move(via_equiv.conditions), eps);
}

YbSolveResult solve_v(const SixVertexMatrix& u, const SixVertexMatrix& w, double eps) {
    const SixVertexMatrix u_inv = u.inverse(eps);
    YbSolveResult via_equiv = solve_w(u_inv, w, eps);
    if (via_equiv.status == SolveStatus::undefined) return via_equiv;

    const DualAuxiliaries su = u.dual_aux(eps);
    const DualAuxiliaries sw = w.dual_aux(eps);
    const Scalar a1v = w.a1() * su.a1_star + w.b1() * u.b2();
    const Scalar a2v = w.a2() * su.a2_star + u.b1() * w.b2();
    const Scalar b1v = w.b1() * u.a1() - u.b1() * w.a1();
    const Scalar b2v = u.a2() * w.b2() - w.a2() * u.b2();
    const Scalar c1v = w.c1() * u.c2();
    const Scalar c2v = u.c1() * w.c2();
    SixVertexMatrix v(a1v, a2v, b1v, b2v, c1v, c2v);

    if (u.mode() == Mode::exact) {
        const Scalar b1v_alt = w.b1() * su.a2_star - u.b1() * sw.a2_star;
        const Scalar b2v_alt = su.a1_star * w.b2() - sw.a1_star * u.b2();
        if (!scalar_eq(b1v, b1v_alt, eps) || !scalar_eq(b2v, b2v_alt, eps))
            throw InternalError("alternative b-entry forms disagree in solve_v");
        if (!projective_eq(v, *via_equiv.matrix, eps))
            throw InternalError("solve_v: equivalence route and entry formulas disagree");
    }
    return finish_solve(std::move(v), std::move(via_equiv.conditions), eps);
}

bool is_commutative_pair(const SixVertexMatrix& u, const SixVertexMatrix& v, double eps) {
    const DualAuxiliaries su = u.dual_aux(eps);
    const DualAuxiliaries sv = v.dual_aux(eps);
    return scalar_eq(u.b1() * v.b2(), v.b1() * u.b2(), eps) &&
           scalar_eq((u.a1() - su.a1_star) * v.b1(), (v.a1() - sv.a1_star) * u.b1(), eps) &&
           scalar_eq((u.a2() - su.a2_star) * v.b2(), (v.a2() - sv.a2_star) * u.b2(), eps);
}

std::array<YbTriple, 6> equivalent_forms(const YbTriple& t, double eps) {
    const SixVertexMatrix ui = t.u.inverse(eps);
    const SixVertexMatrix wi = t.w.inverse(eps);
    const SixVertexMatrix vi = t.v.inverse(eps);
    return {
        YbTriple{t.u, t.w, t.v},
        YbTriple{t.w, t.u, vi},
        YbTriple{ui, t.v, t.w},
        YbTriple{vi, wi, ui},
        YbTriple{t.v, ui, wi},
        YbTriple{wi, vi, t.u},
    };
}

} // namespace sixv

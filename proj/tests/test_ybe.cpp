#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sixv/families.hpp"
#include "sixv/ybe.hpp"

using namespace sixv;
using namespace sixv::testing;

namespace {
const SixVertexMatrix kU = iv(5, 5, 4, 2, 3, 1);
const SixVertexMatrix kW = iv(23, 23, 22, 11, 12, 1);
const SixVertexMatrix kV = iv(7, 7, 6, 3, 4, 1);
} // namespace

TEST_CASE("commutator vanishes on identity-element triples") {
    Rng rng(201);
    const SixVertexMatrix id = SixVertexMatrix::identity(Mode::exact);
    for (int t = 0; t < 25; ++t) {
        const SixVertexMatrix u = random_in_S(rng);
        const SixVertexMatrix ui = u.inverse();
        CHECK(yb_commutator(id, u, u).is_zero());
        CHECK(yb_commutator(u, u, id).is_zero());
        CHECK(yb_commutator(u, id, ui).is_zero());
        CHECK(yb_commutator(ui, id, u).is_zero());
    }
}

TEST_CASE("derived triple is a solution, all-ones is not") {
    CHECK(yb_commutator(kU, kW, kV).is_zero());
    CHECK(is_yb_solution(kU, kW, kV));

    const SixVertexMatrix ones = iv(1, 1, 1, 1, 1, 1);
    CHECK_FALSE(is_yb_solution(ones, ones, ones));
    const auto res = component_residuals(ones, ones, ones);
    CHECK(scalar_eq(res[1], q(1))); // a1c1c1 + b1b2c1 - a1a1c1 = 1 + 1 - 1
}

TEST_CASE("residual order and identity triple") {
    // First equation is c1(w)c2(u)c2(v) - c1(u)c1(v)c2(w).
    const SixVertexMatrix u = iv(1, 1, 1, 1, 2, 3), w = iv(1, 1, 1, 1, 5, 7),
                          v = iv(1, 1, 1, 1, 11, 13);
    const auto res = component_residuals(u, w, v);
    CHECK(scalar_eq(res[0], q(5 * 3 * 13 - 2 * 11 * 7)));

    const SixVertexMatrix id = SixVertexMatrix::identity(Mode::exact);
    for (const Scalar& r : component_residuals(id, id, id)) CHECK(r.is_zero());
}

TEST_CASE("every commutator entry is a residual up to sign") {
    Rng rng(202);
    for (int t = 0; t < 40; ++t) {
        const SixVertexMatrix u = random_six_vertex(rng);
        const SixVertexMatrix w = random_six_vertex(rng);
        const SixVertexMatrix v = random_six_vertex(rng);
        const SquareMatrix c = yb_commutator(u, w, v);
        const auto res = component_residuals(u, w, v);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                const Scalar& e = c.at(i, j);
                if (e.is_zero()) continue;
                bool matched = false;
                for (const Scalar& r : res)
                    if (scalar_eq(e, r) || scalar_eq(e, -r)) {
                        matched = true;
                        break;
                    }
                CHECK(matched);
            }
    }
}

TEST_CASE("oracle equivalence on random triples") {
    Rng rng(203);
    int solutions = 0;
    for (int t = 0; t < 120; ++t) {
        SixVertexMatrix u = random_six_vertex(rng), w = random_six_vertex(rng),
                        v = random_six_vertex(rng);
        if (t % 3 == 0) {
            // mix in genuine solutions through the constant-field family
            const FamilyParams p{rng.nonzero_exact_scalar(), rng.nonzero_exact_scalar(),
                                 rng.nonzero_exact_scalar()};
            try {
                const GroupElem3 g{rng.nonzero_exact_scalar(), rng.nonzero_exact_scalar(),
                                   rng.nonzero_exact_scalar()};
                const GroupElem3 h{rng.nonzero_exact_scalar(), rng.nonzero_exact_scalar(),
                                   rng.nonzero_exact_scalar()};
                u = r_family(p, FamilyKind::cf, g);
                v = r_family(p, FamilyKind::cf, h);
                w = r_family(p, FamilyKind::cf, group_mul(g, h));
            } catch (const NotInSError&) {
                // keep the random triple
            }
        }
        bool res_zero = true;
        for (const Scalar& r : component_residuals(u, w, v))
            if (!r.is_zero()) {
                res_zero = false;
                break;
            }
        const bool comm_zero = yb_commutator(u, w, v).is_zero();
        CHECK(res_zero == comm_zero);
        CHECK(is_yb_solution(u, w, v) == comm_zero);
        if (comm_zero) ++solutions;
    }
    CHECK(solutions > 10); // the mix really contains solutions
}

TEST_CASE("solve conditions worked example") {
    const SolveConditions c = solve_conditions(kU, kV);
    CHECK(c.satisfied);
    CHECK(scalar_eq(c.cond1_lhs, q(36)));
    CHECK(scalar_eq(c.cond1_rhs, q(36)));
    CHECK(scalar_eq(c.cond2_lhs, q(18)));
    CHECK(scalar_eq(c.cond2_rhs, q(18)));
}

TEST_CASE("free-fermionic pairs always satisfy the conditions") {
    Rng rng(204);
    int built = 0;
    while (built < 30) {
        try {
            const Gl2Gl1Element g{rng.nonzero_exact_scalar(), rng.exact_scalar(),
                                  rng.exact_scalar(), rng.nonzero_exact_scalar(),
                                  rng.nonzero_exact_scalar()};
            const Gl2Gl1Element h{rng.nonzero_exact_scalar(), rng.exact_scalar(),
                                  rng.exact_scalar(), rng.nonzero_exact_scalar(),
                                  rng.nonzero_exact_scalar()};
            const SixVertexMatrix u = tau(g), v = tau(h);
            if (!u.in_S() || !v.in_S()) continue;
            CHECK(solve_conditions(u, v).satisfied);
            ++built;
        } catch (const NotInSError&) {
        }
    }
}

TEST_CASE("conditions for u = v force constant-field or free-fermionic") {
    // non-constant-field and non-free-fermionic
    const SixVertexMatrix u = iv(1, 2, 1, 1, 1, 5);
    REQUIRE(u.classify().non_constant_field);
    REQUIRE(u.classify().non_free_fermionic);
    CHECK_FALSE(solve_conditions(u, u).satisfied);

    Rng rng(205);
    for (int t = 0; t < 60; ++t) {
        const SixVertexMatrix m = random_in_S_times(rng);
        const ClassFlags f = m.classify();
        CHECK(solve_conditions(m, m).satisfied == (f.constant_field || f.free_fermionic));
        // degenerate products still witness satisfied conditions
        CHECK((solve_w(m, m).status != SolveStatus::undefined) ==
              (f.constant_field || f.free_fermionic));
    }
}

TEST_CASE("solve_w worked example, exact representative") {
    const YbSolveResult r = solve_w(kU, kV);
    REQUIRE(r.defined());
    CHECK(entrywise_eq(*r.matrix, kW));
    CHECK(is_yb_solution(kU, *r.matrix, kV));
}

TEST_CASE("solve_w with the dual gives the identity pattern") {
    const YbSolveResult r = solve_w(kU, kU.dual());
    REQUIRE(r.defined());
    // all b vanish, diagonal entries all equal c1(u)c2(u)
    CHECK(entrywise_eq(*r.matrix, iv(3, 3, 0, 0, 3, 3)));
    CHECK(projective_eq(*r.matrix, SixVertexMatrix::identity(Mode::exact)));

    Rng rng(206);
    for (int t = 0; t < 30; ++t) {
        const SixVertexMatrix m = random_in_S(rng);
        const YbSolveResult ri = solve_w(m, m.inverse());
        REQUIRE(ri.defined());
        CHECK(projective_eq(*ri.matrix, SixVertexMatrix::identity(Mode::exact)));
    }
}

TEST_CASE("solve_w undefined reports the condition values") {
    const SixVertexMatrix u = iv(1, 2, 1, 1, 1, 5);
    const YbSolveResult r = solve_w(u, u);
    CHECK(r.status == SolveStatus::undefined);
    CHECK_FALSE(r.matrix.has_value());
    CHECK_FALSE(r.conditions.satisfied);
    CHECK_FALSE(scalar_eq(r.conditions.cond1_lhs, r.conditions.cond1_rhs));
}

TEST_CASE("solve_w degenerate product names the vanishing quantity") {
    // free-fermionic pair with a1(u)a1(v) = b1(v)b2(u) so a1(w) = 0
    const SixVertexMatrix u = tau({q(1), q(1), q(-1), q(2), q(3)});
    const SixVertexMatrix v = tau({q(1), q(1), q(-1), q(2), q(1)});
    REQUIRE(u.in_S());
    REQUIRE(v.in_S());
    const YbSolveResult r = solve_w(u, v);
    CHECK(r.status == SolveStatus::degenerate);
    REQUIRE(!r.vanishing.empty());
    CHECK(r.vanishing.front() == "a1");
}

TEST_CASE("solve_w uniqueness against the brute-force linear system") {
    // null space of the 64 linear commutator equations in the entries of w
    const auto basis = brute_solve_w(kU, kV);
    REQUIRE(basis.size() == 1);
    const SixVertexMatrix span(basis[0][0], basis[0][1], basis[0][2], basis[0][3], basis[0][4],
                               basis[0][5]);
    CHECK(projective_eq(span, kW));

    Rng rng(207);
    int done = 0;
    while (done < 20) {
        const SixVertexMatrix m = random_constant_field(rng);
        const SixVertexMatrix v = random_cf_partner(rng, m);
        const YbSolveResult r = solve_w(m, v);
        if (!r.defined()) continue;
        const auto nb = brute_solve_w(m, v);
        REQUIRE(nb.size() == 1);
        const SixVertexMatrix s(nb[0][0], nb[0][1], nb[0][2], nb[0][3], nb[0][4], nb[0][5]);
        CHECK(projective_eq(s, *r.matrix));
        ++done;
    }
}

TEST_CASE("brute force finds no solution when conditions fail") {
    const SixVertexMatrix u = iv(1, 2, 1, 1, 1, 5);
    REQUIRE_FALSE(solve_w(u, u).defined());
    CHECK(brute_solve_w(u, u).empty());
}

TEST_CASE("solve_u inverts the worked example") {
    const YbSolveResult r = solve_u(kW, kV);
    REQUIRE(r.defined());
    CHECK(projective_eq(*r.matrix, kU));
    CHECK(is_yb_solution(*r.matrix, kW, kV));

    // [[I, v, v]] = 0: solving for the first slot from (w, v) = (v, v)
    const YbSolveResult ri = solve_u(kV, kV);
    REQUIRE(ri.defined());
    CHECK(projective_eq(*ri.matrix, SixVertexMatrix::identity(Mode::exact)));
}

TEST_CASE("solve_v inverts the worked example") {
    const YbSolveResult r = solve_v(kU, kW);
    REQUIRE(r.defined());
    CHECK(projective_eq(*r.matrix, kV));
    CHECK(is_yb_solution(kU, kW, *r.matrix));

    // [[u, u, I]] = 0: solving for the last slot from (u, w) = (u, u)
    const YbSolveResult ri = solve_v(kU, kU);
    REQUIRE(ri.defined());
    CHECK(projective_eq(*ri.matrix, SixVertexMatrix::identity(Mode::exact)));

    CHECK_THROWS_AS(solve_v(iv(3, 5, 2, 3, 6, 1), kW), SingularMatrixError);
}

TEST_CASE("solver round trips on the free-fermionic parametrization") {
    Rng rng(208);
    int done = 0;
    while (done < 25) {
        try {
            const Gl2Gl1Element g{rng.nonzero_exact_scalar(), rng.exact_scalar(),
                                  rng.exact_scalar(), rng.nonzero_exact_scalar(),
                                  rng.nonzero_exact_scalar()};
            const Gl2Gl1Element h{rng.nonzero_exact_scalar(), rng.exact_scalar(),
                                  rng.exact_scalar(), rng.nonzero_exact_scalar(),
                                  rng.nonzero_exact_scalar()};
            const SixVertexMatrix tg = tau(g), th = tau(h), tgh = tau(gl_mul(g, h));
            if (!tg.in_S() || !th.in_S() || !tgh.in_S()) continue;

            const YbSolveResult w = solve_w(tg, th);
            REQUIRE(w.defined());
            CHECK(projective_eq(*w.matrix, tgh));
            const YbSolveResult us = solve_u(tgh, th);
            REQUIRE(us.defined());
            CHECK(projective_eq(*us.matrix, tg));
            const YbSolveResult vs = solve_v(tg, tgh);
            REQUIRE(vs.defined());
            CHECK(projective_eq(*vs.matrix, th));
            ++done;
        } catch (const NotInSError&) {
        }
    }
}

TEST_CASE("delta transport across a defined composition") {
    Rng rng(209);
    int done = 0;
    while (done < 30) {
        const SixVertexMatrix m = random_constant_field(rng);
        const SixVertexMatrix v = random_cf_partner(rng, m);
        const YbSolveResult r = solve_w(m, v);
        if (!r.defined() || !r.matrix->in_S_times()) continue;
        CHECK(delta_eq(r.matrix->delta(), v.delta()));
        CHECK(delta_eq(m.delta(), v.inverse().delta()));
        ++done;
    }
}

TEST_CASE("commutative pairs") {
    CHECK(is_commutative_pair(kU, kV)); // same cf family
    CHECK(is_commutative_pair(kU, kU.scaled(q(3))));
    // b2/b1 = 1/2 versus b2/b1 = 1/3 breaks the first condition
    CHECK_FALSE(is_commutative_pair(iv(5, 5, 4, 2, 3, 1), iv(5, 5, 6, 2, 3, 1)));

    const YbSolveResult uv = solve_w(kU, kV);
    const YbSolveResult vu = solve_w(kV, kU);
    REQUIRE(uv.defined());
    REQUIRE(vu.defined());
    CHECK(projective_eq(*uv.matrix, *vu.matrix));
}

TEST_CASE("equivalent forms") {
    const YbTriple t{kU, kW, kV};
    const auto forms = equivalent_forms(t);
    for (const YbTriple& f : forms) CHECK(is_yb_solution(f.u, f.w, f.v));

    // non-solutions stay non-solutions across the transforms
    const SixVertexMatrix nn = iv(1, 2, 1, 1, 1, 5);
    REQUIRE_FALSE(is_yb_solution(nn, nn, nn));
    const auto bad = equivalent_forms({nn, nn, nn});
    for (const YbTriple& f : bad) CHECK_FALSE(is_yb_solution(f.u, f.w, f.v));

    // the all-ones matrix is singular, so the transforms are unavailable
    const SixVertexMatrix ones = iv(1, 1, 1, 1, 1, 1);
    CHECK_THROWS_AS(equivalent_forms({ones, ones, ones}), SingularMatrixError);

    // form 2 applied to (I, u, u) gives (u, I, u^-1)
    const SixVertexMatrix id = SixVertexMatrix::identity(Mode::exact);
    const auto id_forms = equivalent_forms({id, kU, kU});
    CHECK(entrywise_eq(id_forms[1].u, kU));
    CHECK(entrywise_eq(id_forms[1].w, id));
    CHECK(entrywise_eq(id_forms[1].v, kU.inverse()));
    for (const YbTriple& f : id_forms) CHECK(is_yb_solution(f.u, f.w, f.v));

    // the (v^-1, w^-1, u^-1) transform is an involution
    const auto twice = equivalent_forms(forms[3]);
    CHECK(entrywise_eq(twice[3].u, kU));
    CHECK(entrywise_eq(twice[3].w, kW));
    CHECK(entrywise_eq(twice[3].v, kV));
}

TEST_CASE("equivalent forms on a non-commutative free-fermionic solution") {
    const SixVertexMatrix tg = tau({q(1), q(1), q(-1), q(2), q(3)});
    const SixVertexMatrix th = tau({q(2), q(1), q(1), q(1), q(2)});
    const SixVertexMatrix tgh = tau(gl_mul({q(1), q(1), q(-1), q(2), q(3)},
                                           {q(2), q(1), q(1), q(1), q(2)}));
    REQUIRE(is_yb_solution(tg, tgh, th));
    // the reversed triple is not a solution: the parameter group is non-abelian
    CHECK_FALSE(is_yb_solution(th, tgh, tg));
    for (const YbTriple& f : equivalent_forms({tg, tgh, th}))
        CHECK(is_yb_solution(f.u, f.w, f.v));
}

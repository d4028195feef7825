#pragma once

#include "sixv/six_vertex.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sixv {

struct YbTriple {
    SixVertexMatrix u, w, v;
};

// The two consistency conditions that make the Yang-Baxter composition
// solvable for the middle matrix: they state that the two printed
// expressions for b1(w) agree, and likewise for b2(w).
//
//   cond1:  (a1(v) - a2*(v)) b1(u) = (a2(u) - a1*(u)) b1(v)
//   cond2:  (a1(u) - a2*(u)) b2(v) = (a2(v) - a1*(v)) b2(u)
struct SolveConditions {
    Scalar cond1_lhs, cond1_rhs, cond2_lhs, cond2_rhs;
    bool satisfied = false;
};

enum class SolveStatus {
    defined,    // matrix holds the solution
    undefined,  // consistency conditions fail; no solution in S
    degenerate, // formulas evaluate but the product leaves S
};

struct YbSolveResult {
    SolveStatus status;
    std::optional<SixVertexMatrix> matrix; // present for defined and degenerate
    SolveConditions conditions;
    std::vector<std::string> vanishing; // degenerate: names of vanishing quantities

    bool defined() const { return status == SolveStatus::defined; }
};

// [[u,w,v]] = (u(x)1)(1(x)w)(v(x)1) - (1(x)v)(w(x)1)(1(x)u) on V(x)V(x)V,
// with x(x)1 acting on tensor slots (1,2), 1(x)x on slots (2,3), and basis
// vectors e_{i1}(x)e_{i2}(x)e_{i3} ordered lexicographically in (i1,i2,i3).
SquareMatrix yb_commutator(const SixVertexMatrix& u, const SixVertexMatrix& w,
                           const SixVertexMatrix& v);

// The 13 scalar equations equivalent to [[u,w,v]] = 0, as residuals LHS-RHS.
// Each nonzero commutator entry equals one of these up to sign, and every
// residual shows up; the first is c1(w)c2(u)c2(v) - c1(u)c1(v)c2(w).
std::array<Scalar, 13> component_residuals(const SixVertexMatrix& u, const SixVertexMatrix& w,
                                           const SixVertexMatrix& v);

bool is_yb_solution(const SixVertexMatrix& u, const SixVertexMatrix& w,
                    const SixVertexMatrix& v, double eps = kDefaultEps);

SolveConditions solve_conditions(const SixVertexMatrix& u, const SixVertexMatrix& v,
                                 double eps = kDefaultEps);

// Solves [[u,w,v]] = 0 for the middle matrix. Requires u, v in S. The
// returned representative is pinned by c1(w) = c1(u)c1(v) and
// c2(w) = c2(u)c2(v); the solution is unique up to a scalar.
YbSolveResult solve_w(const SixVertexMatrix& u, const SixVertexMatrix& v,
                      double eps = kDefaultEps);

// Solves [[u,w,v]] = 0 for u given w and v, via the equivalence
// [[u,w,v]] = 0 <=> [[w,u,v^-1]] = 0, cross-checked against the explicit
// entry formulas. Returned representative: c1(u) = c1(w)c2(v),
// c2(u) = c1(v)c2(w).
YbSolveResult solve_u(const SixVertexMatrix& w, const SixVertexMatrix& v,
                      double eps = kDefaultEps);

// Solves [[u,w,v]] = 0 for v given u and w, via [[u,w,v]] = 0 <=>
// [[u^-1,v,w]] = 0, cross-checked against the explicit entry formulas.
// Returned representative: c1(v) = c1(w)c2(u), c2(v) = c1(u)c2(w).
YbSolveResult solve_v(const SixVertexMatrix& u, const SixVertexMatrix& w,
                      double eps = kDefaultEps);

// True iff u and v can participate in Yang-Baxter solutions in both orders
// with the same middle matrix:
//   b1(u)b2(v) = b1(v)b2(u),
//   (a1(u) - a1*(u)) b1(v) = (a1(v) - a1*(v)) b1(u),
//   (a2(u) - a2*(u)) b2(v) = (a2(v) - a2*(v)) b2(u).
bool is_commutative_pair(const SixVertexMatrix& u, const SixVertexMatrix& v,
                         double eps = kDefaultEps);

// The six equivalent Yang-Baxter triples
//   (u,w,v), (w,u,v^-1), (u^-1,v,w), (v^-1,w^-1,u^-1), (v,u^-1,w^-1),
//   (w^-1,v^-1,u);
// one is a solution iff all are. Requires all three members invertible.
std::array<YbTriple, 6> equivalent_forms(const YbTriple& t, double eps = kDefaultEps);

} // namespace sixv

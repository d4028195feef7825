#include "sixv/families.hpp"

#include <cmath>
#include <complex>

namespace sixv {

Gl2Gl1Element gl_mul(const Gl2Gl1Element& g, const Gl2Gl1Element& h) {
    return {
        g.m11 * h.m11 + g.m12 * h.m21,
        g.m11 * h.m12 + g.m12 * h.m22,
        g.m21 * h.m11 + g.m22 * h.m21,
        g.m21 * h.m12 + g.m22 * h.m22,
        g.c * h.c,
    };
}

GroupElem3 group_mul(const GroupElem3& g, const GroupElem3& h) {
    return {g.z1 * h.z1, g.z2 * h.z2, g.w * h.w};
}

SixVertexMatrix tau(const Gl2Gl1Element& g) {
    if (g.c.is_zero()) throw NotInSError("tau: c = 0 gives c1 = 0");
    const Scalar a1 = g.m11;
    const Scalar b2 = g.m12;
    const Scalar b1 = -g.m21;
    const Scalar a2 = g.m22;
    const Scalar quad = a1 * a2 + b1 * b2; // equals det of the 2x2 block
    if (quad.is_zero()) throw NotInSError("tau: a1*a2 + b1*b2 = 0 gives c2 = 0");
    return SixVertexMatrix(a1, a2, b1, b2, g.c, quad / g.c);
}

SixVertexMatrix r_family(const FamilyParams& p, FamilyKind kind, const GroupElem3& g) {
    if (p.beta.is_zero()) throw NotInSError("r_family: beta = 0");
    if (scalar_eq(p.q1, p.q2)) throw NotInSError("r_family: q1 = q2 kills the c-entries");
    if (g.z1.is_zero() || g.z2.is_zero() || g.w.is_zero())
        throw NotInSError("r_family: group element has a zero component");
    const Scalar a1 = p.q1 * g.z1 - p.q2 * g.z2;
    if (a1.is_zero()) throw NotInSError("r_family: q1*z1 - q2*z2 = 0 gives a1 = 0");
    Scalar a2 = a1;
    if (kind == FamilyKind::ff) {
        a2 = p.q1 * g.z2 - p.q2 * g.z1;
        if (a2.is_zero()) throw NotInSError("r_family: q1*z2 - q2*z1 = 0 gives a2 = 0");
    }
    const Scalar dz = g.z1 - g.z2;
    const Scalar dq = p.q1 - p.q2;
    const Scalar b1 = p.q1 * dz * p.beta;
    const Scalar b2 = p.q2 * dz / p.beta;
    const Scalar c1 = g.z1 * dq * g.w;
    const Scalar c2 = g.z2 * dq / g.w;
    if ((c1 * c2 - b1 * b2).is_zero())
        throw NotInSError("r_family: z1*z2*(q1-q2)^2 = q1*q2*(z1-z2)^2 gives det = 0");
    return SixVertexMatrix(a1, a2, b1, b2, c1, c2);
}

SixVertexMatrix quantum_r(const Scalar& q, const Scalar& z, FamilyKind kind) {
    if (q.is_zero()) throw NotInSError("quantum_r: q = 0");
    if (z.is_zero()) throw NotInSError("quantum_r: z = 0");
    const Scalar one = Scalar::one(q.mode());
    return r_family({q, q.reciprocal(), one}, kind, {z, z.reciprocal(), one});
}

SixVertexMatrix five_vertex(FamilyKind kind, FiveVertexWhich which, const Scalar& beta,
                            const GroupElem3& g) {
    if (beta.is_zero()) throw NotInSError("five_vertex: beta = 0");
    if (g.z1.is_zero() || g.z2.is_zero() || g.w.is_zero())
        throw NotInSError("five_vertex: group element has a zero component");
    const Scalar zero = Scalar::zero(beta.mode());
    const Scalar b = (g.z1 - g.z2) * beta;
    const Scalar c1 = g.z1 * g.w;
    const Scalar c2 = g.z2 / g.w;
    // Corner entries follow the printed degenerations; the labels here name
    // the entry that vanishes under this library's row convention.
    if (which == FiveVertexWhich::b2_zero) {
        const Scalar a2 = kind == FamilyKind::cf ? g.z1 : g.z2;
        return SixVertexMatrix(g.z1, a2, b, zero, c1, c2);
    }
    const Scalar a2 = kind == FamilyKind::cf ? g.z2 : g.z1;
    return SixVertexMatrix(g.z2, a2, zero, b, c1, c2);
}

SixVertexMatrix asm_matrix() {
    // The cf entry formulas at q1 = z1 = zeta, q2 = z2 = w = beta = zeta^-1
    // with zeta = exp(i pi/3). This point sits outside S (the block
    // determinant vanishes), so the entries are assembled directly instead of
    // going through the checked family constructor.
    const std::complex<double> zeta = std::polar(1.0, M_PI / 3.0);
    const Scalar q1 = Scalar(zeta);
    const Scalar q2 = q1.reciprocal();
    const Scalar beta = q2, z1 = q1, z2 = q2, w = q2;
    const Scalar a = q1 * z1 - q2 * z2;
    return SixVertexMatrix(a, a, q1 * (z1 - z2) * beta, q2 * (z1 - z2) / beta,
                           z1 * (q1 - q2) * w, z2 * (q1 - q2) / w);
}

TlOperator tl_generator(const Scalar& q, int n, int k, int max_legs) {
    if (q.is_zero()) throw DomainError("tl_generator: q = 0");
    if (n < 2 || n > max_legs)
        throw DomainError("tl_generator: n out of range [2, " + std::to_string(max_legs) + "]");
    if (k < 1 || k > n - 1) throw DomainError("tl_generator: k out of range [1, n-1]");
    const Mode m = q.mode();
    const Scalar qi = q.reciprocal();
    SquareMatrix e(4, m);
    e.at(1, 1) = -qi;
    e.at(1, 2) = q;
    e.at(2, 1) = qi;
    e.at(2, 2) = -q;
    SquareMatrix op = k > 1 ? kron(SquareMatrix::identity(1 << (k - 1), m), e) : e;
    if (k < n - 1) op = kron(op, SquareMatrix::identity(1 << (n - 1 - k), m));
    return {n, k, std::move(op)};
}

std::pair<Scalar, Scalar> r_as_tl(const Scalar& q, const Scalar& z1, const Scalar& z2) {
    if (q.is_zero()) throw NotInSError("r_as_tl: q = 0");
    const Scalar one = Scalar::one(q.mode());
    const Scalar scalar_part = q * z1 - z2 / q;
    const Scalar e_part = z1 - z2;
    // Reassemble and compare with the family matrix entry by entry.
    const SixVertexMatrix r = r_family({q, q.reciprocal(), one}, FamilyKind::cf, {z1, z2, one});
    SquareMatrix assembled = SquareMatrix::identity(4, q.mode()).scaled(scalar_part);
    const SquareMatrix e = tl_generator(q, 2, 1).op;
    assembled = assembled + e.scaled(e_part);
    if (!matrix_eq(assembled, r.as_operator()))
        throw InternalError("r_as_tl: decomposition does not reassemble the family matrix");
    return {scalar_part, e_part};
}

} // namespace sixv

#pragma once

#include "sixv/six_vertex.hpp"
#include "sixv/square_matrix.hpp"

#include <utility>

namespace sixv {

// Element of GL2 x GL1: an invertible 2x2 block and a nonzero scalar.
struct Gl2Gl1Element {
    Scalar m11, m12, m21, m22, c;

    Scalar det2() const { return m11 * m22 - m12 * m21; }
};

Gl2Gl1Element gl_mul(const Gl2Gl1Element& g, const Gl2Gl1Element& h);

// Global parameters of a commutative family. q1 != q2 keeps the c-entries
// nonzero; beta != 0.
struct FamilyParams {
    Scalar q1, q2, beta;
};

enum class FamilyKind { cf, ff };

// Element of (C^x)^3 with componentwise multiplication.
struct GroupElem3 {
    Scalar z1, z2, w;
};

GroupElem3 group_mul(const GroupElem3& g, const GroupElem3& h);

// Free-fermionic parametrization: reads the six-vertex entries straight off
// the group element,
//   a1 = m11, b2 = m12, b1 = -m21, a2 = m22, c1 = c,
//   c2 = (a1 a2 + b1 b2)/c1,
// so the image satisfies a1 a2 + b1 b2 = c1 c2 by construction.
SixVertexMatrix tau(const Gl2Gl1Element& g);

// The maximal commutative families
//   a1 = q1 z1 - q2 z2, b1 = q1 (z1-z2) beta, b2 = q2 (z1-z2) beta^-1,
//   c1 = z1 (q1-q2) w,  c2 = z2 (q1-q2) w^-1,
//   a2 = a1 for cf,     a2 = q1 z2 - q2 z1 for ff.
SixVertexMatrix r_family(const FamilyParams& p, FamilyKind kind, const GroupElem3& g);

// Specialization q1 = q, q2 = q^-1, beta = 1, z1 = z, z2 = z^-1, w = 1.
SixVertexMatrix quantum_r(const Scalar& q, const Scalar& z, FamilyKind kind);

// Names the entry that vanishes under this library's convention. The
// degenerations keep only beta and the group element as parameters.
enum class FiveVertexWhich { b1_zero, b2_zero };

SixVertexMatrix five_vertex(FamilyKind kind, FiveVertexWhich which, const Scalar& beta,
                            const GroupElem3& g);

// The cf family at q1 = z1 = exp(i pi/3) (primitive cube root of -1),
// q2 = z2 = w = beta = q1^-1. Floating mode; projectively the all-ones
// six-vertex matrix.
SixVertexMatrix asm_matrix();

// E acting on tensor legs (k, k+1) of V^(x)n, identity elsewhere, where E is
//   [ 0   0    0  0 ]
//   [ 0 -1/q   q  0 ]
//   [ 0  1/q  -q  0 ]
//   [ 0   0    0  0 ].
// The E_k generate a Temperley-Lieb algebra with delta = -(q + q^-1).
struct TlOperator {
    int n = 0;
    int k = 0;
    SquareMatrix op;
};

inline constexpr int kTlDefaultMaxLegs = 6;

TlOperator tl_generator(const Scalar& q, int n, int k, int max_legs = kTlDefaultMaxLegs);

// Coefficients (q z1 - q^-1 z2, z1 - z2) of the decomposition
// R = scalar * I + e * E for the cf family at beta = w = 1; checked against
// the assembled 4x4 before returning.
std::pair<Scalar, Scalar> r_as_tl(const Scalar& q, const Scalar& z1, const Scalar& z2);

} // namespace sixv

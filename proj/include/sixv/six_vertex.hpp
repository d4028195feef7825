#pragma once

#include "sixv/scalar.hpp"
#include "sixv/square_matrix.hpp"

#include <array>

namespace sixv {

// Scale-invariant pair of statistics (Delta1, Delta2).
struct DeltaPair {
    Scalar d1, d2;
};

// P = c1*c2 - b1*b2 together with the starred diagonal entries defined by
// a1 * a1_star = a2 * a2_star = P.
struct DualAuxiliaries {
    Scalar P, a1_star, a2_star;
};

// Independently computed classification predicates. The classes overlap
// (field_free implies constant_field, for instance), so these are flags
// rather than one enum.
struct ClassFlags {
    bool diagonal = false;           // b1 = b2 = 0
    bool five_vertex = false;        // exactly one of b1, b2 zero
    bool free_fermionic = false;     // a1*a2 + b1*b2 = c1*c2
    bool non_free_fermionic = false;
    bool constant_field = false;     // a1 = a2
    bool non_constant_field = false;
    bool field_free = false;         // a1 = a2, b1 = b2, c1 = c2
    bool degenerate = false;         // a1 = a2 = a1_star = a2_star
};

// The six-vertex matrix
//
//     [ a1          ]
//     [    c1  b1   ]
//     [    b2  c2   ]
//     [          a2 ]
//
// acting on V (x) V in the basis e1e1, e1e2, e2e1, e2e2. The middle block
// rows are (c1, b1) and (b2, c2); every module sticks to this convention.
//
// Membership in S requires c1, c2 != 0 and det != 0 (hence a1, a2 != 0);
// S^x additionally requires b1, b2 != 0.
class SixVertexMatrix {
public:
    SixVertexMatrix(Scalar a1, Scalar a2, Scalar b1, Scalar b2, Scalar c1, Scalar c2);

    static SixVertexMatrix identity(Mode m) {
        const Scalar o = Scalar::one(m), z = Scalar::zero(m);
        return SixVertexMatrix(o, o, z, z, o, o);
    }

    const Scalar& a1() const { return e_[0]; }
    const Scalar& a2() const { return e_[1]; }
    const Scalar& b1() const { return e_[2]; }
    const Scalar& b2() const { return e_[3]; }
    const Scalar& c1() const { return e_[4]; }
    const Scalar& c2() const { return e_[5]; }
    const std::array<Scalar, 6>& entries() const { return e_; }
    Mode mode() const { return e_[0].mode(); }

    // a1*a2*(c1*c2 - b1*b2); equals the generic 4x4 determinant.
    Scalar determinant() const;
    // Determinant of the middle block: P = c1*c2 - b1*b2.
    Scalar block_det() const;

    bool in_S(double eps = kDefaultEps) const;
    bool in_S_times(double eps = kDefaultEps) const;

    DualAuxiliaries dual_aux(double eps = kDefaultEps) const;

    // Dual matrix (a1*, a2*, -b1, -b2, c2, c1); satisfies u * dual(u) = P * I.
    SixVertexMatrix dual(double eps = kDefaultEps) const;

    SixVertexMatrix inverse(double eps = kDefaultEps) const;

    // Requires b1, b2 != 0. Both closed forms of each statistic are computed
    // and must agree.
    DeltaPair delta(double eps = kDefaultEps) const;

    // Simplified statistics (a1 - a2)/(2 b1) and (a1 - a1*)/(2 b1).
    Scalar delta_ff(double eps = kDefaultEps) const;
    Scalar delta_cf(double eps = kDefaultEps) const;

    ClassFlags classify(double eps = kDefaultEps) const;

    SquareMatrix as_operator() const;

    SixVertexMatrix scaled(const Scalar& s) const;

private:
    std::array<Scalar, 6> e_; // a1, a2, b1, b2, c1, c2
};

// True iff u = lambda * v for some nonzero lambda. Division-free: the zero
// patterns must coincide and all entry cross-products must balance.
bool projective_eq(const SixVertexMatrix& u, const SixVertexMatrix& v, double eps = kDefaultEps);

bool entrywise_eq(const SixVertexMatrix& u, const SixVertexMatrix& v, double eps = kDefaultEps);

bool delta_eq(const DeltaPair& x, const DeltaPair& y, double eps = kDefaultEps);

} // namespace sixv

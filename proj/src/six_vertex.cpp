#include "sixv/six_vertex.hpp"

namespace sixv {

SixVertexMatrix::SixVertexMatrix(Scalar a1, Scalar a2, Scalar b1, Scalar b2, Scalar c1, Scalar c2)
    : e_{std::move(a1), std::move(a2), std::move(b1), std::move(b2), std::move(c1), std::move(c2)} {
    for (int k = 1; k < 6; ++k)
        if (e_[k].mode() != e_[0].mode())
            throw ModeMismatchError("six-vertex entries must share one scalar mode");
}

Scalar SixVertexMatrix::determinant() const {
    return a1() * a2() * block_det();
}

Scalar SixVertexMatrix::block_det() const {
    return c1() * c2() - b1() * b2();
}

bool SixVertexMatrix::in_S(double eps) const {
    return !c1().is_zero(eps) && !c2().is_zero(eps) && !a1().is_zero(eps) &&
           !a2().is_zero(eps) && !block_det().is_zero(eps);
}

bool SixVertexMatrix::in_S_times(double eps) const {
    return in_S(eps) && !b1().is_zero(eps) && !b2().is_zero(eps);
}

DualAuxiliaries SixVertexMatrix::dual_aux(double eps) const {
    if (a1().is_zero(eps)) throw UndefinedDualError("a1 = 0: a1* undefined");
    if (a2().is_zero(eps)) throw UndefinedDualError("a2 = 0: a2* undefined");
    const Scalar P = block_det();
    return {P, P / a1(), P / a2()};
}

SixVertexMatrix SixVertexMatrix::dual(double eps) const {
    const DualAuxiliaries d = dual_aux(eps);
    return SixVertexMatrix(d.a1_star, d.a2_star, -b1(), -b2(), c2(), c1());
}

SixVertexMatrix SixVertexMatrix::inverse(double eps) const {
    if (determinant().is_zero(eps))
        throw SingularMatrixError("six-vertex matrix is singular");
    const Scalar P = block_det();
    return SixVertexMatrix(a1().reciprocal(), a2().reciprocal(), -b1() / P, -b2() / P,
                           c2() / P, c1() / P);
}

DeltaPair SixVertexMatrix::delta(double eps) const {
    if (b1().is_zero(eps)) throw StatisticsUndefinedError("b1 = 0: Delta undefined");
    if (b2().is_zero(eps)) throw StatisticsUndefinedError("b2 = 0: Delta undefined");
    const Scalar two = Scalar::from_int(2, mode());
    const Scalar num = a1() * a2() + b1() * b2() - c1() * c2();
    const DeltaPair d{num / (two * a1() * b1()), num / (two * a2() * b2())};
    // The closed forms (a2 - a1*)/(2 b1) and (a1 - a2*)/(2 b2) must agree with
    // the quotient forms above. In floating mode the agreement is only as good
    // as the tolerance, so the cross-check is limited to exact mode.
    if (mode() == Mode::exact) {
        const DualAuxiliaries s = dual_aux(eps);
        const Scalar d1_alt = (a2() - s.a1_star) / (two * b1());
        const Scalar d2_alt = (a1() - s.a2_star) / (two * b2());
        if (!scalar_eq(d.d1, d1_alt, eps) || !scalar_eq(d.d2, d2_alt, eps))
            throw InternalError("closed forms of Delta disagree");
    }
    return d;
}

Scalar SixVertexMatrix::delta_ff(double eps) const {
    if (b1().is_zero(eps)) throw StatisticsUndefinedError("b1 = 0: Delta^ff undefined");
    return (a1() - a2()) / (Scalar::from_int(2, mode()) * b1());
}

Scalar SixVertexMatrix::delta_cf(double eps) const {
    if (b1().is_zero(eps)) throw StatisticsUndefinedError("b1 = 0: Delta^cf undefined");
    const DualAuxiliaries s = dual_aux(eps);
    return (a1() - s.a1_star) / (Scalar::from_int(2, mode()) * b1());
}

ClassFlags SixVertexMatrix::classify(double eps) const {
    ClassFlags f;
    const bool b1z = b1().is_zero(eps), b2z = b2().is_zero(eps);
    f.diagonal = b1z && b2z;
    f.five_vertex = b1z != b2z;
    f.free_fermionic = scalar_eq(a1() * a2() + b1() * b2(), c1() * c2(), eps);
    f.non_free_fermionic = !f.free_fermionic;
    f.constant_field = scalar_eq(a1(), a2(), eps);
    f.non_constant_field = !f.constant_field;
    f.field_free = f.constant_field && scalar_eq(b1(), b2(), eps) && scalar_eq(c1(), c2(), eps);
    // a1 = a1* cross-multiplied as a1^2 = P, so the test stays division-free.
    f.degenerate = f.constant_field && scalar_eq(a1() * a1(), block_det(), eps);
    return f;
}

SquareMatrix SixVertexMatrix::as_operator() const {
    SquareMatrix m(4, mode());
    m.at(0, 0) = a1();
    m.at(1, 1) = c1();
    m.at(1, 2) = b1();
    m.at(2, 1) = b2();
    m.at(2, 2) = c2();
    m.at(3, 3) = a2();
    return m;
}

SixVertexMatrix SixVertexMatrix::scaled(const Scalar& s) const {
    return SixVertexMatrix(a1() * s, a2() * s, b1() * s, b2() * s, c1() * s, c2() * s);
}

bool projective_eq(const SixVertexMatrix& u, const SixVertexMatrix& v, double eps) {
    const auto& x = u.entries();
    const auto& y = v.entries();
    for (int i = 0; i < 6; ++i)
        if (x[i].is_zero(eps) != y[i].is_zero(eps)) return false;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!scalar_eq(x[i] * y[j], x[j] * y[i], eps)) return false;
    return true;
}

bool entrywise_eq(const SixVertexMatrix& u, const SixVertexMatrix& v, double eps) {
    for (int i = 0; i < 6; ++i)
        if (!scalar_eq(u.entries()[i], v.entries()[i], eps)) return false;
    return true;
}

bool delta_eq(const DeltaPair& x, const DeltaPair& y, double eps) {
    return scalar_eq(x.d1, y.d1, eps) && scalar_eq(x.d2, y.d2, eps);
}

} // namespace sixv

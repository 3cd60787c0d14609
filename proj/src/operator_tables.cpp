// Entry tables for the operators on the core module, in the basis order
// (T1, Tm1, Tp, Tm, TB, S2, Sm2, S2Sm2).
//
// Convention: entry (row i, column j) is the coefficient of basis element i
// in the image of basis element j -- columns are images of basis vectors.
// The anchor entries pinned in operators.cpp make this convention
// self-enforcing: a transposed table fails the startup checks.

#include "motivic/operators.hpp"
#include "motivic/qpoly.hpp"

namespace motivic {

namespace {

// Polynomial from coefficients by ascending exponent: P({4, 1}) = q + 4.
Scalar P(std::initializer_list<long> asc) { return Scalar(QPoly::from_coeffs(asc)); }

void set_row(CoreMatrix& m, int row, std::array<Scalar, kCoreDim> entries) {
    for (int j = 0; j < kCoreDim; ++j) m.at(row, j) = std::move(entries[j]);
}

}  // namespace

CoreMatrix eta_matrix() {
    CoreMatrix m;
    const Scalar one(1), q = Scalar::q(), q2 = q * q, q2m1 = q2 - one;
    m.at(Basis::T1, Basis::T1) = one;
    m.at(Basis::Tm1, Basis::Tm1) = one;
    m.at(Basis::Tp, Basis::Tp) = q2m1;
    m.at(Basis::Tm, Basis::Tm) = q2m1;
    // eta(TB) = q^2 TB + q S2Sm2, eta(S2Sm2) = q TB + q^2 S2Sm2
    m.at(Basis::TB, Basis::TB) = q2;
    m.at(Basis::S2Sm2, Basis::TB) = q;
    m.at(Basis::TB, Basis::S2Sm2) = q;
    m.at(Basis::S2Sm2, Basis::S2Sm2) = q2;
    // eta(S2) = q^2 S2 + q Sm2, eta(Sm2) = q S2 + q^2 Sm2
    m.at(Basis::S2, Basis::S2) = q2;
    m.at(Basis::Sm2, Basis::S2) = q;
    m.at(Basis::S2, Basis::Sm2) = q;
    m.at(Basis::Sm2, Basis::Sm2) = q2;
    return m;
}

CoreMatrix sigma_matrix() {
    // Swaps T1 <-> Tm1, Tp <-> Tm, S2 <-> Sm2; fixes TB and S2Sm2.
    CoreMatrix m;
    const Scalar one(1);
    m.at(Basis::Tm1, Basis::T1) = one;
    m.at(Basis::T1, Basis::Tm1) = one;
    m.at(Basis::Tm, Basis::Tp) = one;
    m.at(Basis::Tp, Basis::Tm) = one;
    m.at(Basis::TB, Basis::TB) = one;
    m.at(Basis::Sm2, Basis::S2) = one;
    m.at(Basis::S2, Basis::Sm2) = one;
    m.at(Basis::S2Sm2, Basis::S2Sm2) = one;
    return m;
}

// Reduced Jordan tube, up to the global factor q^3 - q.
CoreMatrix cz_jplus_inner() {
    CoreMatrix m;
    set_row(m, 0, {P({0}), P({0}), P({1}), P({0}), P({0}), P({0}), P({0}), P({0})});
    set_row(m, 1, {P({0}), P({0}), P({0}), P({1}), P({0}), P({0}), P({0}), P({0})});
    set_row(m, 2, {P({-1, 0, 1}), P({0}), P({-2, 1}), P({0, 1}), P({1, -2, 1}),
                   P({1, -1}), P({1, -1}), P({2, -2})});
    set_row(m, 3, {P({0}), P({-1, 0, 1}), P({0, 1}), P({-2, 1}), P({1, -2, 1}),
                   P({1, -1}), P({1, -1}), P({2, -2})});
    set_row(m, 4, {P({0}), P({0}), P({0, 1}), P({0, 1}), P({0, -2, 1}),
                   P({1, -1}), P({1, -1}), P({2, -1})});
    set_row(m, 5, {P({0}), P({0}), P({0}), P({0}), P({0}), P({-1}), P({0, 1}), P({0})});
    set_row(m, 6, {P({0}), P({0}), P({0}), P({0}), P({0}), P({0, 1}), P({-1}), P({0})});
    set_row(m, 7, {P({0}), P({0}), P({0}), P({0}), P({0, 1}), P({0}), P({0}), P({-1})});
    return m;
}

// Unreduced genus tube, up to the global factor (q^3 - q)^2.
CoreMatrix zg_l_inner() {
    CoreMatrix m;
    set_row(m, 0, {P({4, 1}), P({1}), P({-3, -2, 1}), P({0, 3, 1}), P({-2, -3, -2, 1}),
                   P({-1, -4, -1}), P({-1, -7, 2}), P({-1, -5})});
    set_row(m, 1, {P({1}), P({4, 1}), P({0, 3, 1}), P({-3, -2, 1}), P({-2, -3, -2, 1}),
                   P({-1, -7, 2}), P({-1, -4, -1}), P({-1, -5})});
    set_row(m, 2, {P({-3, -2, 1}), P({0, 3, 1}), P({3, 3, 0, 1, 1}), P({0, -6, -3, 0, 1}),
                   P({0, 3, 1, -3, -2, 1}), P({0, 3, -4, 2, -1}), P({0, 6, -4, -1, -1}),
                   P({0, 3, -1, -2})});
    set_row(m, 3, {P({0, 3, 1}), P({-3, -2, 1}), P({0, -6, -3, 0, 1}), P({3, 3, 0, 1, 1}),
                   P({0, 3, 1, -3, -2, 1}), P({0, 6, -4, -1, -1}), P({0, 3, -4, 2, -1}),
                   P({0, 3, -1, -2})});
    set_row(m, 4, {P({1, 0, 1}), P({1, 0, 1}), P({0, 0, -2, 0, 1}), P({0, 0, -2, 0, 1}),
                   P({-2, 0, 2, -1, -2, 1}), P({-1, -1, 1, -1, -1}), P({-1, -1, 1, -1, -1}),
                   P({-1, -2, 1, -2})});
    set_row(m, 5, {P({0}), P({0, 3}), P({0, 0, 3}), P({0, -3}), P({0, 0, -3}),
                   P({0, 0, -6, 4}), P({0, 0, -4}), P({0, 0, -3})});
    set_row(m, 6, {P({0, 3}), P({0}), P({0, -3}), P({0, 0, 3}), P({0, 0, -3}),
                   P({0, 0, -4}), P({0, 0, -6, 4}), P({0, 0, -3})});
    set_row(m, 7, {P({0, 1}), P({0, 1}), P({0, 0, 0, 1}), P({0, 0, 0, 1}),
                   P({0, -2, -1, -2, 1}), P({0, -1, -1, -1}), P({0, -1, -1, -1}),
                   P({0, -1, -2, 1})});
    return m;
}

OperatorSet assemble_operators() {
    OperatorSet ops;
    ops.sl2_class = P({0, -1, 0, 1});  // q^3 - q
    ops.eta = eta_matrix();
    ops.eta_inv = ops.eta.inverse();
    ops.sigma = sigma_matrix();
    ops.zg_l = (ops.sl2_class * ops.sl2_class) * zg_l_inner();
    ops.cz_l = ops.zg_l * ops.eta_inv;
    ops.cz_jp = ops.sl2_class * cz_jplus_inner();
    ops.cz_jm = ops.sigma * ops.cz_jp;
    ops.cz_mi = ops.sl2_class * ops.sigma;
    return ops;
}

}  // namespace motivic

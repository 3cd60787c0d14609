#include <doctest.h>

#include "motivic/errors.hpp"
#include "motivic/operators.hpp"

using namespace motivic;

namespace {

const Scalar q = Scalar::q();
const Scalar one(1);

Scalar P(std::initializer_list<long> asc) { return Scalar(QPoly::from_coeffs(asc)); }

CoreMatrix transpose(const CoreMatrix& m) {
    CoreMatrix t;
    for (int i = 0; i < kCoreDim; ++i)
        for (int j = 0; j < kCoreDim; ++j) t.at(i, j) = m.at(j, i);
    return t;
}

Scalar determinant(CoreMatrix m) {
    Scalar det = one;
    for (int col = 0; col < kCoreDim; ++col) {
        int piv = -1;
        for (int r = col; r < kCoreDim; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Scalar(0);
        if (piv != col) {
            for (int j = 0; j < kCoreDim; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        Scalar d = m.at(col, col).inverse();
        for (int r = col + 1; r < kCoreDim; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col) * d;
            for (int j = col; j < kCoreDim; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return det;
}

bool all_pass(const std::vector<IdentityCheck>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

bool check_named(const std::vector<IdentityCheck>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return c.pass;
    FAIL("no identity check named ", name);
    return false;
}

}  // namespace

TEST_CASE("eta columns follow the table") {
    CoreMatrix eta = eta_matrix();
    CHECK(eta * CoreVector::unit(Basis::T1) == CoreVector::unit(Basis::T1));
    CHECK(eta * CoreVector::unit(Basis::Tm1) == CoreVector::unit(Basis::Tm1));

    CoreVector tb = eta * CoreVector::unit(Basis::TB);
    CHECK(tb[Basis::TB] == q * q);
    CHECK(tb[Basis::S2Sm2] == q);
    CHECK(tb[Basis::S2] == Scalar(0));

    CoreVector s2 = eta * CoreVector::unit(Basis::S2);
    CHECK(s2[Basis::S2] == q * q);
    CHECK(s2[Basis::Sm2] == q);

    CHECK(eta.at(Basis::Tp, Basis::Tp) == q * q - one);
}

TEST_CASE("sigma is the swap permutation") {
    CoreMatrix s = sigma_matrix();
    CHECK(s * CoreVector::unit(Basis::T1) == CoreVector::unit(Basis::Tm1));
    CHECK(s * CoreVector::unit(Basis::TB) == CoreVector::unit(Basis::TB));
    CHECK(s * CoreVector::unit(Basis::S2) == CoreVector::unit(Basis::Sm2));
    CHECK(s * s == CoreMatrix::identity());
}

TEST_CASE("tube anchor entries") {
    const OperatorSet& ops = operators();
    Scalar c = q.pow(3) - q;
    CHECK(ops.sl2_class == c);
    CHECK(ops.cz_jp.at(Basis::Tp, Basis::T1) == c * (q * q - one));
    CHECK(ops.cz_mi == c * sigma_matrix());
    CHECK(tube_matrix(Tube::GenusL) * eta_matrix() == ops.zg_l);
    CHECK(ops.zg_l.at(Basis::T1, Basis::T1) == c * c * (q + Scalar(4)));
    CHECK(ops.zg_l.at(Basis::S2Sm2, Basis::T1) == c * c * q);
}

TEST_CASE("J-minus matrix matches its displayed table") {
    // Independent transcription of the printed J-minus matrix; must agree
    // with sigma composed with the J-plus table.
    CoreMatrix jm_inner;
    auto row = [&](int i, std::array<Scalar, kCoreDim> entries) {
        for (int j = 0; j < kCoreDim; ++j) jm_inner.at(i, j) = entries[j];
    };
    row(0, {P({0}), P({0}), P({0}), P({1}), P({0}), P({0}), P({0}), P({0})});
    row(1, {P({0}), P({0}), P({1}), P({0}), P({0}), P({0}), P({0}), P({0})});
    row(2, {P({0}), P({-1, 0, 1}), P({0, 1}), P({-2, 1}), P({1, -2, 1}), P({1, -1}),
            P({1, -1}), P({2, -2})});
    row(3, {P({-1, 0, 1}), P({0}), P({-2, 1}), P({0, 1}), P({1, -2, 1}), P({1, -1}),
            P({1, -1}), P({2, -2})});
    row(4, {P({0}), P({0}), P({0, 1}), P({0, 1}), P({0, -2, 1}), P({1, -1}), P({1, -1}),
            P({2, -1})});
    row(5, {P({0}), P({0}), P({0}), P({0}), P({0}), P({0, 1}), P({-1}), P({0})});
    row(6, {P({0}), P({0}), P({0}), P({0}), P({0}), P({-1}), P({0, 1}), P({0})});
    row(7, {P({0}), P({0}), P({0}), P({0}), P({0, 1}), P({0}), P({0}), P({-1})});

    const OperatorSet& ops = operators();
    CHECK(ops.cz_jm == ops.sl2_class * jm_inner);
}

TEST_CASE("left-reduced genus matrix matches its frozen table") {
    // M = (q^3-q)^(-1) eta^(-1) zg_l, frozen entry by entry. A second route
    // through the same data: zg_l and this table pin each other across the
    // reduction identity.
    const OperatorSet& ops = operators();
    CoreMatrix m = ops.sl2_class.inverse() * (ops.eta_inv * ops.zg_l);
    const std::array<std::array<Scalar, kCoreDim>, kCoreDim> frozen = {{
        {P({0, -4, -1, 4, 1}), P({0, -1, 0, 1}), P({0, 3, 2, -4, -2, 1}),
         P({0, 0, -3, -1, 3, 1}), P({0, 2, 3, 0, -4, -2, 1}), P({0, 1, 4, 0, -4, -1}),
         P({0, 1, 7, -3, -7, 2}), P({0, 1, 5, -1, -5})},
        {P({0, -1, 0, 1}), P({0, -4, -1, 4, 1}), P({0, 0, -3, -1, 3, 1}),
         P({0, 3, 2, -4, -2, 1}), P({0, 2, 3, 0, -4, -2, 1}), P({0, 1, 7, -3, -7, 2}),
         P({0, 1, 4, 0, -4, -1}), P({0, 1, 5, -1, -5})},
        {P({0, -3, -2, 1}), P({0, 0, 3, 1}), P({0, 3, 3, 0, 1, 1}), P({0, 0, -6, -3, 0, 1}),
         P({0, 0, 3, 1, -3, -2, 1}), P({0, 0, 3, -4, 2, -1}), P({0, 0, 6, -4, -1, -1}),
         P({0, 0, 3, -1, -2})},
        {P({0, 0, 3, 1}), P({0, -3, -2, 1}), P({0, 0, -6, -3, 0, 1}), P({0, 3, 3, 0, 1, 1}),
         P({0, 0, 3, 1, -3, -2, 1}), P({0, 0, 6, -4, -1, -1}), P({0, 0, 3, -4, 2, -1}),
         P({0, 0, 3, -1, -2})},
        {P({0, 0, 0, 1}), P({0, 0, 0, 1}), P({0, 0, 0, -3, 0, 1}), P({0, 0, 0, -3, 0, 1}),
         P({0, 0, 1, 4, -2, -2, 1}), P({0, 0, 0, 2, -1, -1}), P({0, 0, 0, 2, -1, -1}),
         P({0, 0, 0, 0, -2})},
        {P({0, -3}), P({0, 0, 3}), P({0, 3, 0, 3}), P({0, 0, -6}), P({0, 0, 3, -3}),
         P({0, 0, 4, -6, 4}), P({0, 0, 6, -8}), P({0, 0, 3, -3})},
        {P({0, 0, 3}), P({0, -3}), P({0, 0, -6}), P({0, 3, 0, 3}), P({0, 0, 3, -3}),
         P({0, 0, 6, -8}), P({0, 0, 4, -6, 4}), P({0, 0, 3, -3})},
        {P({-1}), P({-1}), P({0, 0, 2}), P({0, 0, 2}), P({2, 0, -4}), P({1, 1, -2}),
         P({1, 1, -2}), P({1, 2, -2, 0, 1})},
    }};
    for (int i = 0; i < kCoreDim; ++i)
        for (int j = 0; j < kCoreDim; ++j) {
            INFO(basis_name(Basis(i)), ",", basis_name(Basis(j)));
            CHECK(m.at(i, j) == frozen[size_t(i)][size_t(j)]);
        }
}

TEST_CASE("discs") {
    CoreVector in = disc_in();
    CHECK(in == CoreVector::unit(Basis::T1));
    for (int i = 0; i < kCoreDim; ++i) CHECK(in.at(i).is_polynomial());
    CHECK(operators().sigma * in == CoreVector::unit(Basis::Tm1));

    CHECK(disc_out_coeff(CoreVector::unit(Basis::T1)) == one);
    CHECK(disc_out_coeff(CoreVector::unit(Basis::Tm1)) == Scalar(0));
    Scalar c2 = (q.pow(3) - q).pow(2);
    CHECK(disc_out_coeff(c2 * CoreVector::unit(Basis::T1)) == c2);
}

TEST_CASE("identity suite passes on the shipped operators") {
    auto checks = verify_operator_identities(operators());
    for (const auto& c : checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("identity suite catches a transposed J-plus") {
    OperatorSet ops = assemble_operators();
    ops.cz_jp = transpose(ops.cz_jp);
    auto checks = verify_operator_identities(ops);
    CHECK_FALSE(all_pass(checks));
    CHECK_FALSE(check_named(checks, "cz_jm = sigma * cz_jp"));
    CHECK_FALSE(check_named(checks, "cz_l commutes with cz_jp"));
}

TEST_CASE("identity suite catches a corrupted eta") {
    OperatorSet ops = assemble_operators();
    ops.eta.at(Basis::TB, Basis::S2Sm2) = Scalar(0);
    auto checks = verify_operator_identities(ops);
    CHECK_FALSE(check_named(checks, "eta * eta_inv = I"));
}

TEST_CASE("eta commutes with sigma") {
    CHECK(eta_matrix().commutes_with(sigma_matrix()));
}

TEST_CASE("sigma commutes with every tube") {
    // Not required by any identity above; pinned as a computed fact of the
    // shipped matrices.
    const OperatorSet& ops = operators();
    for (const CoreMatrix* m : {&ops.cz_l, &ops.cz_jp, &ops.cz_jm, &ops.cz_mi})
        CHECK(ops.sigma.commutes_with(*m));
}

TEST_CASE("operators preserve localized vectors") {
    const OperatorSet& ops = operators();
    Scalar localized = (q * (q - one) * (q + one)).inverse();
    const CoreMatrix* all[] = {&ops.eta, &ops.eta_inv, &ops.sigma, &ops.cz_l,
                               &ops.cz_jp, &ops.cz_jm, &ops.cz_mi};
    for (const CoreMatrix* m : all)
        for (Basis b : all_basis()) {
            CoreVector v = *m * (localized * CoreVector::unit(b));
            for (int i = 0; i < kCoreDim; ++i) CHECK(v.at(i).is_localized());
        }
}

TEST_CASE("determinant of eta") {
    Scalar det = determinant(eta_matrix());
    Scalar expected = (q * q - one).pow(2) * (q * q * (q * q - one)).pow(2);
    CHECK((det == expected || det == -expected));
    CHECK(det.is_localized());
}

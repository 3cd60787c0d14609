#include "motivic/operators.hpp"

#include <mutex>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

std::string first_diff(const CoreMatrix& a, const CoreMatrix& b) {
    for (int i = 0; i < kCoreDim; ++i)
        for (int j = 0; j < kCoreDim; ++j)
            if (!(a.at(i, j) == b.at(i, j)))
                return std::string("first differing entry (") + basis_name(Basis(i)) + "," +
                       basis_name(Basis(j)) + "): " + a.at(i, j).render(Format::Text) +
                       " vs " + b.at(i, j).render(Format::Text);
    return {};
}

void check_equal(std::vector<IdentityCheck>& out, std::string name, const CoreMatrix& lhs,
                 const CoreMatrix& rhs) {
    bool ok = lhs == rhs;
    out.push_back({std::move(name), ok, ok ? std::string() : first_diff(lhs, rhs)});
}

}  // namespace

std::vector<IdentityCheck> verify_operator_identities(const OperatorSet& ops) {
    std::vector<IdentityCheck> out;
    const CoreMatrix I = CoreMatrix::identity();
    const Scalar& c = ops.sl2_class;

    check_equal(out, "eta * eta_inv = I", ops.eta * ops.eta_inv, I);
    check_equal(out, "sigma^2 = I", ops.sigma * ops.sigma, I);
    check_equal(out, "cz_mi^2 = (q^3-q)^2 I", ops.cz_mi * ops.cz_mi, (c * c) * I);
    check_equal(out, "cz_mi * cz_jm = (q^3-q) cz_jp", ops.cz_mi * ops.cz_jm, c * ops.cz_jp);
    check_equal(out, "cz_jm = sigma * cz_jp", ops.cz_jm, ops.sigma * ops.cz_jp);

    const std::pair<const char*, const CoreMatrix*> tubes[] = {
        {"cz_l", &ops.cz_l}, {"cz_jp", &ops.cz_jp}, {"cz_jm", &ops.cz_jm}, {"cz_mi", &ops.cz_mi}};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            check_equal(out,
                        std::string(tubes[i].first) + " commutes with " + tubes[j].first,
                        *tubes[i].second * *tubes[j].second,
                        *tubes[j].second * *tubes[i].second);

    const std::pair<const char*, const CoreMatrix*> all[] = {
        {"eta", &ops.eta},     {"eta_inv", &ops.eta_inv}, {"sigma", &ops.sigma},
        {"zg_l", &ops.zg_l},   {"cz_l", &ops.cz_l},       {"cz_jp", &ops.cz_jp},
        {"cz_jm", &ops.cz_jm}, {"cz_mi", &ops.cz_mi}};
    bool loc = true;
    std::string where;
    for (const auto& [nm, m] : all)
        for (int i = 0; i < kCoreDim && loc; ++i)
            for (int j = 0; j < kCoreDim && loc; ++j)
                if (!m->at(i, j).is_localized()) {
                    loc = false;
                    where = std::string(nm) + " (" + basis_name(Basis(i)) + "," +
                            basis_name(Basis(j)) + ")";
                }
    out.push_back({"all entries localized", loc, where});
    return out;
}

namespace {

// The block structure of eta makes its inverse computable by hand; this
// second route cross-checks the Gaussian elimination one.
CoreMatrix eta_inverse_closed_form() {
    CoreMatrix m;
    const Scalar one(1), q = Scalar::q(), q2 = q * q;
    const Scalar d = (q2 * (q2 - one)).inverse();  // 1/(q^4 - q^2)
    m.at(Basis::T1, Basis::T1) = one;
    m.at(Basis::Tm1, Basis::Tm1) = one;
    m.at(Basis::Tp, Basis::Tp) = (q2 - one).inverse();
    m.at(Basis::Tm, Basis::Tm) = (q2 - one).inverse();
    for (auto [a, b] : {std::pair{Basis::TB, Basis::S2Sm2}, std::pair{Basis::S2, Basis::Sm2}}) {
        m.at(a, a) = q2 * d;
        m.at(b, b) = q2 * d;
        m.at(a, b) = -(q * d);
        m.at(b, a) = -(q * d);
    }
    return m;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw invariant_error("operator startup check failed: " + what);
}

OperatorSet build_checked() {
    OperatorSet ops = assemble_operators();

    // Anchor entries pin the column-as-image convention of the tables.
    const Scalar q = Scalar::q(), c = ops.sl2_class;
    require(ops.cz_jp.at(Basis::Tp, Basis::T1) == c * (q * q - Scalar(1)),
            "anchor (Tp,T1) of cz_jp = (q^3-q)(q^2-1)");
    require(ops.zg_l.at(Basis::T1, Basis::T1) == c * c * (q + Scalar(4)),
            "anchor (T1,T1) of zg_l = (q^3-q)^2 (q+4)");
    require(ops.zg_l.at(Basis::S2Sm2, Basis::T1) == c * c * q,
            "anchor (S2Sm2,T1) of zg_l = (q^3-q)^2 q");

    require(ops.eta_inv == eta_inverse_closed_form(), "eta_inv matches block closed form");

    for (const IdentityCheck& chk : verify_operator_identities(ops))
        require(chk.pass, chk.name + (chk.detail.empty() ? "" : "; " + chk.detail));
    return ops;
}

}  // namespace

const OperatorSet& operators() {
    static const OperatorSet ops = build_checked();
    return ops;
}

CoreMatrix tube_matrix(Tube kind) {
    const OperatorSet& ops = operators();
    switch (kind) {
        case Tube::GenusL: return ops.cz_l;
        case Tube::JPlus: return ops.cz_jp;
        case Tube::JMinus: return ops.cz_jm;
        case Tube::MinusId: return ops.cz_mi;
    }
    throw error("unknown tube kind");
}

CoreVector disc_in() { return CoreVector::unit(Basis::T1); }

Scalar disc_out_coeff(const CoreVector& v) { return v[Basis::T1]; }

}  // namespace motivic

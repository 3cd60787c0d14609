#pragma once

#include <string>
#include <vector>

#include "motivic/core_matrix.hpp"

namespace motivic {

enum class Tube { GenusL, JPlus, JMinus, MinusId };

// The concrete operators on the core module. `zg_l` is the unreduced genus
// tube; the cz_* members are the reduced tubes used by surface evaluation.
struct OperatorSet {
    CoreMatrix eta, eta_inv, sigma;
    CoreMatrix zg_l;
    CoreMatrix cz_l, cz_jp, cz_jm, cz_mi;
    Scalar sl2_class;  // q^3 - q
};

// Assembles the operators from the transcribed tables without running any
// checks. Test code uses this to fault-inject; everything else should go
// through operators().
OperatorSet assemble_operators();

struct IdentityCheck {
    std::string name;
    bool pass;
    std::string detail;  // first differing entry when failing
};

// The full identity suite: eta*eta_inv = I, sigma^2 = I,
// cz_mi^2 = (q^3-q)^2 I, cz_mi*cz_jm = (q^3-q) cz_jp, cz_jm = sigma*cz_jp,
// pairwise commutation of the four tubes, and localization of every entry
// of every operator.
std::vector<IdentityCheck> verify_operator_identities(const OperatorSet& ops);

// Assembled, anchor-pinned and identity-verified operators; built once and
// cached. Throws invariant_error if any startup check fails.
const OperatorSet& operators();

CoreMatrix eta_matrix();
CoreMatrix sigma_matrix();
CoreMatrix tube_matrix(Tube kind);

CoreVector disc_in();
Scalar disc_out_coeff(const CoreVector& v);

}  // namespace motivic

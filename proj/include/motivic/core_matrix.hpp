#pragma once

#include <array>
#include <string>

#include "motivic/scalar.hpp"

namespace motivic {

// The fixed generator order of the core module. Everything in this project
// is expressed in this basis; do not reorder.
enum class Basis : int { T1 = 0, Tm1, Tp, Tm, TB, S2, Sm2, S2Sm2 };

inline constexpr int kCoreDim = 8;

const char* basis_name(Basis b);
const std::array<Basis, kCoreDim>& all_basis();

class CoreVector {
public:
    CoreVector() = default;

    Scalar& operator[](Basis b) { return e_[int(b)]; }
    const Scalar& operator[](Basis b) const { return e_[int(b)]; }
    Scalar& at(int i) { return e_[i]; }
    const Scalar& at(int i) const { return e_[i]; }

    static CoreVector unit(Basis b);

    bool operator==(const CoreVector&) const = default;

    friend CoreVector operator*(const Scalar& s, const CoreVector& v);

private:
    std::array<Scalar, kCoreDim> e_{};
};

// Entry (row i, column j) is the coefficient of basis element i in the image
// of basis element j: columns are images of basis vectors.
class CoreMatrix {
public:
    CoreMatrix() = default;

    Scalar& at(int row, int col) { return e_[row * kCoreDim + col]; }
    const Scalar& at(int row, int col) const { return e_[row * kCoreDim + col]; }
    Scalar& at(Basis row, Basis col) { return at(int(row), int(col)); }
    const Scalar& at(Basis row, Basis col) const { return at(int(row), int(col)); }

    static CoreMatrix identity();

    friend CoreVector operator*(const CoreMatrix& m, const CoreVector& v);
    friend CoreMatrix operator*(const CoreMatrix& a, const CoreMatrix& b);
    friend CoreMatrix operator*(const Scalar& s, const CoreMatrix& m);

    // Binary exponentiation; pow(0) is the identity.
    CoreMatrix pow(unsigned n) const;

    // Exact inverse by Gaussian elimination over the fraction field; the
    // pivot is the first nonzero entry scanning down the column.
    // Throws math_error if singular.
    CoreMatrix inverse() const;

    bool commutes_with(const CoreMatrix& o) const;

    bool operator==(const CoreMatrix&) const = default;

    std::string render(Format f, const std::string& name = {}) const;

private:
    std::array<Scalar, kCoreDim * kCoreDim> e_{};
};

}  // namespace motivic

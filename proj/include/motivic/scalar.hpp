#pragma once

#include <gmpxx.h>

#include <string>

#include "motivic/qpoly.hpp"

namespace motivic {

enum class Format { Text, Latex, Json };

// A rational function in q over the integers, kept in canonical form:
//  - the fraction is reduced (polynomial gcd of num and den is constant),
//  - the integer contents of num and den are coprime,
//  - den is nonzero with positive leading coefficient,
//  - zero is 0/1.
// Canonical form makes operator== structural equality.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}
    Scalar(QPoly p) : num_(std::move(p)), den_(1) {}
    Scalar(QPoly num, QPoly den);

    static Scalar q() { return Scalar(QPoly::q()); }
    static Scalar ratio(long num, long den) { return Scalar(QPoly(num), QPoly(den)); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == QPoly(1) && den_ == QPoly(1); }

    // True iff the value is a polynomial in q (den is constant).
    bool is_polynomial() const { return den_.is_constant(); }
    // True iff den factors into powers of q, q-1 and q+1 (up to a constant),
    // i.e. the value lies in the localization at those three atoms.
    bool is_localized() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;       // throws math_error on zero
    Scalar pow(long e) const;     // negative exponents via inverse

    bool operator==(const Scalar&) const = default;

    // Exact value at q = x; throws math_error if den(x) = 0.
    mpq_class eval_at(const mpz_class& x) const;

    std::string render(Format f) const;

private:
    QPoly num_, den_;
    void normalize();
};

}  // namespace motivic

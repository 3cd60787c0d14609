#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace motivic {

// Polynomial in the single variable q with arbitrary-precision integer
// coefficients. Storage is dense by ascending exponent with trailing zeros
// trimmed, so the zero polynomial is the empty vector and the leading
// coefficient of a nonzero polynomial is never zero.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c);
    explicit QPoly(mpz_class c);

    static QPoly q();
    static QPoly monomial(unsigned exp, mpz_class coeff);
    // Coefficients by ascending exponent: {c0, c1, c2, ...}.
    static QPoly from_coeffs(std::vector<mpz_class> ascending);
    static QPoly from_coeffs(std::initializer_list<long> ascending);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    unsigned degree() const { return c_.empty() ? 0u : unsigned(c_.size() - 1); }
    mpz_class coeff(unsigned exp) const;
    const mpz_class& leading() const;

    // Sparse view: exponent -> nonzero coefficient.
    std::map<unsigned, mpz_class> terms() const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
    friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly pow(unsigned n) const;

    // gcd of all coefficients; positive for nonzero polynomials, 0 for zero.
    mpz_class content() const;
    QPoly primitive() const;

    // Exact division: requires d | *this in Z[q].
    QPoly divide_exact(const QPoly& d) const;
    bool divisible_by(const QPoly& d) const;

    // Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
    static QPoly gcd(const QPoly& a, const QPoly& b);

    mpz_class eval(const mpz_class& x) const;

    bool operator==(const QPoly&) const = default;

    std::string text() const;
    std::string latex() const;

private:
    std::vector<mpz_class> c_;
    void trim();
    // Pseudo-remainder of *this by d (deg d <= deg *this, d nonzero).
    QPoly prem(const QPoly& d) const;
};

}  // namespace motivic

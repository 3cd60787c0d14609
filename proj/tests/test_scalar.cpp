#include <doctest.h>

#include <random>

#include "motivic/errors.hpp"
#include "motivic/scalar.hpp"

using namespace motivic;

namespace {

const Scalar q = Scalar::q();
const Scalar one(1);

// Uniform-ish random scalar with small degrees; degenerate values included
// on purpose.
Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 3);
    auto poly = [&](bool nonzero) {
        QPoly p;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) p += QPoly::monomial(unsigned(i), coeff(rng));
        if (nonzero && p.is_zero()) p = QPoly(1);
        return p;
    };
    return Scalar(poly(false), poly(true));
}

}  // namespace

TEST_CASE("addition") {
    CHECK((q - one) + (q + one) == Scalar(2) * q);
    Scalar x = Scalar(QPoly::from_coeffs({3, 0, 7}), QPoly::from_coeffs({-1, 1}));
    CHECK(x + Scalar(0) == x);
    Scalar inv_qm1 = (q - one).inverse();
    CHECK(inv_qm1 + (-inv_qm1) == Scalar(0));
}

TEST_CASE("multiplication") {
    CHECK((q - one) * (q + one) == q * q - one);
    Scalar x = Scalar(QPoly::from_coeffs({1, 2}), QPoly::from_coeffs({0, 0, 5}));
    CHECK(x * one == x);
    // cancellation to canonical form
    CHECK((q * q - one) * (q - one).inverse() == q + one);
}

TEST_CASE("inverse") {
    Scalar c = q.pow(3) - q;
    CHECK(c * c.inverse() == one);
    CHECK(c.inverse() == Scalar(QPoly(1), QPoly::from_coeffs({0, -1, 0, 1})));
    CHECK(one.inverse() == one);
    CHECK_THROWS_AS(Scalar(0).inverse(), math_error);
}

TEST_CASE("equality is canonical") {
    CHECK((q * q - one) * (q - one).inverse() == q + one);
    CHECK_FALSE(q == q + one);
    CHECK(Scalar(QPoly(0), QPoly::from_coeffs({-1, 1})) == Scalar(0));
    // canonicalization fixes denominator sign and contents
    CHECK(Scalar(QPoly::from_coeffs({2}), QPoly::from_coeffs({-4})) ==
          Scalar(QPoly::from_coeffs({-1}), QPoly::from_coeffs({2})));
}

TEST_CASE("evaluation") {
    Scalar c = q.pow(3) - q;
    CHECK(c.eval_at(3) == mpq_class(24));
    CHECK((q / (q - one)).eval_at(3) == mpq_class(3, 2));
    CHECK_THROWS_AS((q - one).inverse().eval_at(1), math_error);
}

TEST_CASE("polynomiality and localization") {
    Scalar torus = q.pow(4) + Scalar(4) * q.pow(3) - q * q - Scalar(4) * q;
    CHECK(torus.is_polynomial());
    Scalar inv_qm1 = (q - one).inverse();
    CHECK_FALSE(inv_qm1.is_polynomial());
    CHECK(inv_qm1.is_localized());
    CHECK((q * q - one) / (q - one) == q + one);
    CHECK(((q * q - one) / (q - one)).is_polynomial());
    // (q^2+1) in the denominator is not one of the three atoms
    CHECK_FALSE((one / (q * q + one)).is_localized());
    CHECK((one / (q * (q - one) * (q + one)).pow(3)).is_localized());
    // constant halves are polynomials
    CHECK(Scalar::ratio(1, 2).is_polynomial());
}

TEST_CASE("rendering") {
    CHECK((q * q - one).render(Format::Text) == "q^2 - 1");
    CHECK((q * q - one).render(Format::Latex) == "q^{2} - 1");
    CHECK(one.render(Format::Json) == R"({"num":{"0":1},"den":{"0":1}})");
    Scalar torus = q.pow(4) + Scalar(4) * q.pow(3) - q * q - Scalar(4) * q;
    CHECK(torus.render(Format::Text) == "q^4 + 4q^3 - q^2 - 4q");
    CHECK(Scalar(0).render(Format::Text) == "0");
    CHECK((q / (q - one)).render(Format::Text) == "q/(q - 1)");
    CHECK(Scalar::ratio(1, 2).render(Format::Text) == "1/2");
    CHECK((one / (q + one)).render(Format::Latex) == "\\frac{1}{q + 1}");
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == one);
    }
}

TEST_CASE("evaluation is a ring morphism") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        for (long n : {2L, 3L, 5L}) {
            mpz_class x(n);
            try {
                mpq_class ea = a.eval_at(x), eb = b.eval_at(x);
                CHECK((a + b).eval_at(x) == ea + eb);
                CHECK((a * b).eval_at(x) == ea * eb);
            } catch (const math_error&) {
                // pole of a or b at n; nothing to compare
            }
        }
    }
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        Scalar a = random_scalar(rng);
        CHECK(Scalar(a.num(), a.den()) == a);
        CHECK(a.den().leading() > 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.num().content().get_mpz_t(), a.den().content().get_mpz_t());
        CHECK((a.is_zero() || g == 1));
        CHECK(QPoly::gcd(a.num(), a.den()).degree() == 0);
    }
}

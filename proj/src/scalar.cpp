#include "motivic/scalar.hpp"

#include <json.hpp>
#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

Scalar::Scalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw math_error("scalar with zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        // g is primitive, so it divides the primitive parts exactly; pull the
        // contents out first to keep the integer divisions exact.
        mpz_class cn = num_.content(), cd = den_.content();
        num_ = num_.primitive().divide_exact(g);
        den_ = den_.primitive().divide_exact(g);
        num_ = num_ * QPoly(cn);
        den_ = den_ * QPoly(cd);
    }
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (c > 1) {
        num_ = num_.divide_exact(QPoly(c));
        den_ = den_.divide_exact(QPoly(c));
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool Scalar::is_localized() const {
    QPoly d = den_;
    for (const QPoly& atom : {QPoly::q(), QPoly::from_coeffs({-1, 1}), QPoly::from_coeffs({1, 1})})
        while (d.degree() > 0 && d.divisible_by(atom)) d = d.divide_exact(atom);
    return d.is_constant();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw math_error("inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc(1), base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

mpq_class Scalar::eval_at(const mpz_class& x) const {
    mpz_class d = den_.eval(x);
    if (d == 0) throw math_error("evaluation at a pole: q = " + x.get_str());
    mpq_class r(num_.eval(x), d);
    r.canonicalize();
    return r;
}

namespace {

nlohmann::ordered_json poly_json(const QPoly& p) {
    // No zero coefficients are emitted; the zero polynomial is the empty map.
    auto obj = nlohmann::ordered_json::object();
    for (const auto& [exp, coeff] : p.terms()) {
        if (coeff.fits_slong_p())
            obj[std::to_string(exp)] = coeff.get_si();
        else
            obj[std::to_string(exp)] = coeff.get_str();
    }
    return obj;
}

// Parenthesize sums when they appear as a fraction side.
std::string guarded(const std::string& s) {
    if (s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos)
        return "(" + s + ")";
    return s;
}

}  // namespace

std::string Scalar::render(Format f) const {
    switch (f) {
        case Format::Text:
            if (den_ == QPoly(1)) return num_.text();
            return guarded(num_.text()) + "/" + guarded(den_.text());
        case Format::Latex:
            if (den_ == QPoly(1)) return num_.latex();
            return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
        case Format::Json: {
            nlohmann::ordered_json j;
            j["num"] = poly_json(num_);
            j["den"] = poly_json(den_);
            return j.dump();
        }
    }
    return {};
}

}  // namespace motivic

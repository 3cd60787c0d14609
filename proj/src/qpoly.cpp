#include "motivic/qpoly.hpp"

#include <cassert>
#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

QPoly::QPoly(long c) {
    if (c != 0) c_.push_back(mpz_class(c));
}

QPoly::QPoly(mpz_class c) {
    if (c != 0) c_.push_back(std::move(c));
}

QPoly QPoly::q() { return monomial(1, 1); }

QPoly QPoly::monomial(unsigned exp, mpz_class coeff) {
    QPoly p;
    if (coeff != 0) {
        p.c_.assign(exp + 1, mpz_class(0));
        p.c_[exp] = std::move(coeff);
    }
    return p;
}

QPoly QPoly::from_coeffs(std::vector<mpz_class> ascending) {
    QPoly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

QPoly QPoly::from_coeffs(std::initializer_list<long> ascending) {
    std::vector<mpz_class> v;
    v.reserve(ascending.size());
    for (long x : ascending) v.emplace_back(x);
    return from_coeffs(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class QPoly::coeff(unsigned exp) const {
    return exp < c_.size() ? c_[exp] : mpz_class(0);
}

const mpz_class& QPoly::leading() const {
    assert(!c_.empty());
    return c_.back();
}

std::map<unsigned, mpz_class> QPoly::terms() const {
    std::map<unsigned, mpz_class> t;
    for (unsigned i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) t.emplace(i, c_[i]);
    return t;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

QPoly QPoly::pow(unsigned n) const {
    QPoly acc(1), base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

mpz_class QPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QPoly QPoly::primitive() const {
    if (is_zero()) return QPoly();
    mpz_class c = content();
    QPoly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

QPoly QPoly::divide_exact(const QPoly& d) const {
    if (d.is_zero()) throw math_error("exact division by zero polynomial");
    if (is_zero()) return QPoly();
    QPoly rem = *this, quot;
    if (rem.c_.size() < d.c_.size())
        throw math_error("exact division: degree of divisor exceeds dividend");
    quot.c_.assign(rem.c_.size() - d.c_.size() + 1, mpz_class(0));
    for (size_t k = quot.c_.size(); k-- > 0;) {
        mpz_class top = rem.coeff(unsigned(k + d.c_.size() - 1));
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.leading().get_mpz_t()))
            throw math_error("exact division: not divisible");
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        quot.c_[k] = f;
        for (size_t i = 0; i < d.c_.size(); ++i) rem.c_[k + i] -= f * d.c_[i];
    }
    rem.trim();
    if (!rem.is_zero()) throw math_error("exact division: nonzero remainder");
    quot.trim();
    return quot;
}

bool QPoly::divisible_by(const QPoly& d) const {
    try {
        divide_exact(d);
        return true;
    } catch (const math_error&) {
        return false;
    }
}

QPoly QPoly::prem(const QPoly& d) const {
    assert(!d.is_zero());
    QPoly rem = *this;
    const size_t dd = d.c_.size();
    while (!rem.is_zero() && rem.c_.size() >= dd) {
        mpz_class top = rem.leading();
        size_t shift = rem.c_.size() - dd;
        // rem = lc(d)*rem - top*q^shift*d
        for (auto& c : rem.c_) c *= d.leading();
        for (size_t i = 0; i < dd; ++i) rem.c_[shift + i] -= top * d.c_[i];
        rem.trim();
    }
    return rem;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        QPoly r = x.prem(y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.is_zero() && x.leading() < 0) x = -x;
    return x;
}

mpz_class QPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

namespace {

void append_term(std::ostream& os, bool first, const mpz_class& coeff, unsigned exp, bool braces) {
    mpz_class a = abs(coeff);
    if (first) {
        if (coeff < 0) os << "-";
    } else {
        os << (coeff < 0 ? " - " : " + ");
    }
    if (exp == 0 || a != 1) os << a.get_str();
    if (exp >= 1) {
        os << "q";
        if (exp >= 2) {
            if (braces)
                os << "^{" << exp << "}";
            else
                os << "^" << exp;
        }
    }
}

std::string render_poly(const QPoly& p, bool braces) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (unsigned e = p.degree() + 1; e-- > 0;) {
        mpz_class c = p.coeff(e);
        if (c == 0) continue;
        append_term(os, first, c, e, braces);
        first = false;
    }
    return os.str();
}

}  // namespace

std::string QPoly::text() const { return render_poly(*this, false); }
std::string QPoly::latex() const { return render_poly(*this, true); }

}  // namespace motivic

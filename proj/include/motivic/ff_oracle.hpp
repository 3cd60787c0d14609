#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "motivic/surface.hpp"

namespace motivic::ff {

// Fully enumerated SL(2, F_p) for an odd prime p, with dense multiplication,
// inverse and trace tables. |G| = p(p^2-1); the multiplication table is
// |G|^2 entries, which keeps p at desktop scale (p <= 19 or so).
class GroupTable {
public:
    // Throws error if p is not an odd prime or the table would be too large.
    static GroupTable build(long p);
    // Builds once per prime and caches.
    static const GroupTable& cached(long p);

    long prime() const { return p_; }
    std::uint32_t size() const { return n_; }

    std::uint32_t mul(std::uint32_t i, std::uint32_t j) const { return mul_[size_t(i) * n_ + j]; }
    std::uint32_t inv(std::uint32_t i) const { return inv_[i]; }
    long trace(std::uint32_t i) const { return trace_[i]; }
    std::uint32_t id() const { return id_; }
    std::uint32_t neg_id() const { return neg_id_; }

    // Row-major entries (a, b; c, d), each in [0, p).
    std::array<long, 4> element(std::uint32_t i) const;

private:
    long p_ = 0;
    std::uint32_t n_ = 0;
    std::vector<std::array<std::uint16_t, 4>> elements_;
    std::vector<std::uint32_t> mul_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::uint16_t> trace_;
    std::uint32_t id_ = 0, neg_id_ = 0;
};

// Integer-valued function on group elements, indexed like the GroupTable.
class ClassFunction {
public:
    explicit ClassFunction(std::uint32_t n) : v_(n) {}
    static ClassFunction delta(const GroupTable& t, std::uint32_t at);

    mpz_class& operator[](std::uint32_t i) { return v_[i]; }
    const mpz_class& operator[](std::uint32_t i) const { return v_[i]; }
    std::uint32_t size() const { return std::uint32_t(v_.size()); }

    mpz_class total() const;
    // f(g x g^-1) = f(x) for all g, x.
    bool is_class_function(const GroupTable& t) const;

    bool operator==(const ClassFunction&) const = default;

private:
    std::vector<mpz_class> v_;
};

// N1(x) = #{(A,B) : [A,B] = x}; verified to be a class function.
ClassFunction commutator_distribution(const GroupTable& t);

// (f*g)(x) = sum_y f(y) g(y^-1 x).
ClassFunction convolve(const ClassFunction& f, const ClassFunction& g, const GroupTable& t);

// 0/1 indicator of the puncture subset. Membership is decided by the trace
// equation, not by F_p-conjugacy: the F_p orbit may split, the variety's
// point set does not.
ClassFunction puncture_indicator(Puncture kind, const GroupTable& t);

// Number of tuples (A_i, B_i, C_j) in G^(2g+s) with prod [A_i,B_i] prod C_j
// = 1 and each C_j in its prescribed subset.
mpz_class count_solutions(const SurfaceSpec& spec, const GroupTable& t);

struct CrossCheck {
    SurfaceSpec spec;
    long prime = 0;
    mpz_class count;
    mpq_class eval;  // class polynomial at q = p
    bool eval_integral = false;
    bool pass = false;
};

// count_solutions vs evaluate_tqft specialized at q = p; pass requires the
// evaluation to be an integer equal to the count.
CrossCheck cross_check(const SurfaceSpec& spec, long p);

}  // namespace motivic::ff

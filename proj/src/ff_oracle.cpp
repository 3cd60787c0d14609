#include "motivic/ff_oracle.hpp"

#include <map>
#include <mutex>

#include "motivic/errors.hpp"

namespace motivic::ff {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

GroupTable GroupTable::build(long p) {
    if (!is_prime(p)) throw error("p must be prime, got " + std::to_string(p));
    if (p == 2) throw error("p must be odd: Id and -Id coincide over F_2");
    if (p > 19) throw error("p too large for the dense multiplication table");

    GroupTable t;
    t.p_ = p;
    // Dense reverse index over all 2x2 matrices mod p.
    const size_t p2 = size_t(p) * p, p3 = p2 * p;
    std::vector<std::uint32_t> index(p3 * p, UINT32_MAX);
    auto pack = [&](long a, long b, long c, long d) {
        return size_t(a) * p3 + size_t(b) * p2 + size_t(c) * p + size_t(d);
    };
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long d = 0; d < p; ++d)
                    if (((a * d - b * c) % p + p) % p == 1) {
                        index[pack(a, b, c, d)] = std::uint32_t(t.elements_.size());
                        t.elements_.push_back({std::uint16_t(a), std::uint16_t(b),
                                               std::uint16_t(c), std::uint16_t(d)});
                    }
    t.n_ = std::uint32_t(t.elements_.size());
    t.id_ = index[pack(1, 0, 0, 1)];
    t.neg_id_ = index[pack(p - 1, 0, 0, p - 1)];

    t.trace_.resize(t.n_);
    t.inv_.resize(t.n_);
    for (std::uint32_t i = 0; i < t.n_; ++i) {
        const auto& e = t.elements_[i];
        t.trace_[i] = std::uint16_t((e[0] + e[3]) % p);
        // (a b; c d)^-1 = (d -b; -c a) since det = 1
        t.inv_[i] = index[pack(e[3], (p - e[1]) % p, (p - e[2]) % p, e[0])];
    }
    t.mul_.resize(size_t(t.n_) * t.n_);
    for (std::uint32_t i = 0; i < t.n_; ++i) {
        const auto& x = t.elements_[i];
        for (std::uint32_t j = 0; j < t.n_; ++j) {
            const auto& y = t.elements_[j];
            long a = (x[0] * y[0] + x[1] * y[2]) % p;
            long b = (x[0] * y[1] + x[1] * y[3]) % p;
            long c = (x[2] * y[0] + x[3] * y[2]) % p;
            long d = (x[2] * y[1] + x[3] * y[3]) % p;
            t.mul_[size_t(i) * t.n_ + j] = index[pack(a, b, c, d)];
        }
    }
    return t;
}

const GroupTable& GroupTable::cached(long p) {
    static std::map<long, GroupTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, build(p)).first;
    return it->second;
}

std::array<long, 4> GroupTable::element(std::uint32_t i) const {
    const auto& e = elements_[i];
    return {long(e[0]), long(e[1]), long(e[2]), long(e[3])};
}

ClassFunction ClassFunction::delta(const GroupTable& t, std::uint32_t at) {
    ClassFunction f(t.size());
    f[at] = 1;
    return f;
}

mpz_class ClassFunction::total() const {
    mpz_class s = 0;
    for (const auto& x : v_) s += x;
    return s;
}

bool ClassFunction::is_class_function(const GroupTable& t) const {
    for (std::uint32_t g = 0; g < t.size(); ++g) {
        std::uint32_t gi = t.inv(g);
        for (std::uint32_t x = 0; x < t.size(); ++x)
            if (v_[t.mul(t.mul(g, x), gi)] != v_[x]) return false;
    }
    return true;
}

ClassFunction commutator_distribution(const GroupTable& t) {
    ClassFunction n1(t.size());
    std::vector<long> counts(t.size(), 0);
    for (std::uint32_t a = 0; a < t.size(); ++a) {
        std::uint32_t ai = t.inv(a);
        for (std::uint32_t b = 0; b < t.size(); ++b)
            ++counts[t.mul(t.mul(a, b), t.mul(ai, t.inv(b)))];
    }
    for (std::uint32_t i = 0; i < t.size(); ++i) n1[i] = counts[i];
    if (!n1.is_class_function(t))
        throw invariant_error("commutator distribution is not a class function");
    return n1;
}

ClassFunction convolve(const ClassFunction& f, const ClassFunction& g, const GroupTable& t) {
    ClassFunction out(t.size());
    for (std::uint32_t y = 0; y < t.size(); ++y) {
        if (f[y] == 0) continue;
        for (std::uint32_t z = 0; z < t.size(); ++z) {
            if (g[z] == 0) continue;
            out[t.mul(y, z)] += f[y] * g[z];
        }
    }
    return out;
}

ClassFunction puncture_indicator(Puncture kind, const GroupTable& t) {
    ClassFunction f(t.size());
    const long p = t.prime();
    for (std::uint32_t i = 0; i < t.size(); ++i) {
        switch (kind) {
            case Puncture::JPlus:
                f[i] = (t.trace(i) == 2 % p && i != t.id()) ? 1 : 0;
                break;
            case Puncture::JMinus:
                f[i] = (t.trace(i) == (p - 2) % p && i != t.neg_id()) ? 1 : 0;
                break;
            case Puncture::MinusId:
                f[i] = (i == t.neg_id()) ? 1 : 0;
                break;
        }
    }
    return f;
}

mpz_class count_solutions(const SurfaceSpec& spec, const GroupTable& t) {
    ClassFunction acc = ClassFunction::delta(t, t.id());
    if (spec.genus > 0) {
        ClassFunction n1 = commutator_distribution(t);
        acc = n1;
        for (unsigned i = 1; i < spec.genus; ++i) acc = convolve(acc, n1, t);
    }
    const std::pair<Puncture, unsigned> kinds[] = {
        {Puncture::JPlus, spec.jp}, {Puncture::JMinus, spec.jm}, {Puncture::MinusId, spec.mi}};
    for (const auto& [kind, count] : kinds) {
        if (count == 0) continue;
        ClassFunction ind = puncture_indicator(kind, t);
        for (unsigned i = 0; i < count; ++i) acc = convolve(acc, ind, t);
    }
    return acc[t.id()];
}

CrossCheck cross_check(const SurfaceSpec& spec, long p) {
    CrossCheck r;
    r.spec = spec;
    r.prime = p;
    const GroupTable& t = GroupTable::cached(p);
    r.count = count_solutions(spec, t);
    r.eval = evaluate_tqft(spec).eval_at(mpz_class(p));
    r.eval_integral = r.eval.get_den() == 1;
    r.pass = r.eval_integral && r.eval.get_num() == r.count;
    return r;
}

}  // namespace motivic::ff

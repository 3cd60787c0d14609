#include "motivic.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "motivic/errors.hpp"
#include "motivic/ff_oracle.hpp"
#include "motivic/operators.hpp"
#include "motivic/verify.hpp"
#include "motivic/word.hpp"

using namespace motivic;

struct mtc_engine {
    std::string last_error;
    long last_error_position = -1;
};

struct mtc_scalar {
    Scalar value;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Format to_format(mtc_format f) {
    switch (f) {
        case MTC_FORMAT_LATEX: return Format::Latex;
        case MTC_FORMAT_JSON: return Format::Json;
        default: return Format::Text;
    }
}

// Runs `fn`, translating exceptions into statuses and the engine's
// last-error slot.
template <typename Fn>
mtc_status guarded(mtc_engine* e, Fn&& fn) {
    if (!e) return MTC_ERR_ARGUMENT;
    e->last_error.clear();
    e->last_error_position = -1;
    try {
        return fn();
    } catch (const parse_error& ex) {
        e->last_error = ex.what();
        e->last_error_position = long(ex.position);
        return MTC_ERR_ARGUMENT;
    } catch (const invariant_error& ex) {
        e->last_error = ex.what();
        return MTC_ERR_INTERNAL;
    } catch (const math_error& ex) {
        e->last_error = ex.what();
        return MTC_ERR_MATH;
    } catch (const std::exception& ex) {
        e->last_error = ex.what();
        return MTC_ERR_ARGUMENT;
    }
}

std::vector<long> parse_primes(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t n = 0;
        long p = std::stol(item, &n);
        if (n != item.size()) throw error("bad prime '" + item + "'");
        out.push_back(p);
    }
    return out;
}

}  // namespace

extern "C" {

mtc_status mtc_engine_create(mtc_engine** out) {
    if (!out) return MTC_ERR_ARGUMENT;
    auto* e = new mtc_engine();
    mtc_status st = guarded(e, [&]() {
        operators();  // build and verify the operator set up front
        return MTC_OK;
    });
    if (st != MTC_OK) {
        delete e;
        *out = nullptr;
        return st;
    }
    *out = e;
    return MTC_OK;
}

void mtc_engine_destroy(mtc_engine* e) { delete e; }

const char* mtc_engine_last_error(const mtc_engine* e) {
    return e ? e->last_error.c_str() : "null engine";
}

long mtc_engine_last_error_position(const mtc_engine* e) {
    return e ? e->last_error_position : -1;
}

const char* mtc_version(void) { return "1.0.0"; }

void mtc_string_free(char* s) { std::free(s); }

mtc_status mtc_class_value(mtc_engine* e, unsigned genus, const char* punctures,
                           mtc_method method, mtc_variant variant, mtc_scalar** out) {
    return guarded(e, [&]() {
        if (!out || !punctures) throw error("null argument");
        SurfaceSpec spec = parse_spec(genus, punctures);
        Scalar v = method == MTC_METHOD_TQFT
                       ? evaluate_tqft(spec)
                       : closed_form(spec, variant == MTC_VARIANT_INTRO
                                               ? FormulaVariant::Intro
                                               : FormulaVariant::Section5);
        *out = new mtc_scalar{std::move(v)};
        return MTC_OK;
    });
}

void mtc_scalar_destroy(mtc_scalar* s) { delete s; }

mtc_status mtc_scalar_render(mtc_engine* e, const mtc_scalar* s, mtc_format f, char** out) {
    return guarded(e, [&]() {
        if (!s || !out) throw error("null argument");
        *out = dup_string(s->value.render(to_format(f)));
        return MTC_OK;
    });
}

int mtc_scalar_is_polynomial(const mtc_scalar* s) {
    return s && s->value.is_polynomial() ? 1 : 0;
}

int mtc_scalar_equal(const mtc_scalar* a, const mtc_scalar* b) {
    return a && b && a->value == b->value ? 1 : 0;
}

mtc_status mtc_scalar_eval_at(mtc_engine* e, const mtc_scalar* s, long point, char** out) {
    return guarded(e, [&]() {
        if (!s || !out) throw error("null argument");
        mpq_class v = s->value.eval_at(mpz_class(point));
        *out = dup_string(v.get_str());
        return MTC_OK;
    });
}

mtc_status mtc_operator_render(mtc_engine* e, const char* op, mtc_format f, char** out) {
    return guarded(e, [&]() {
        if (!op || !out) throw error("null argument");
        const OperatorSet& ops = operators();
        const std::string name = op;
        const CoreMatrix* m = nullptr;
        if (name == "l")
            m = &ops.cz_l;
        else if (name == "jp")
            m = &ops.cz_jp;
        else if (name == "jm")
            m = &ops.cz_jm;
        else if (name == "mi")
            m = &ops.cz_mi;
        else if (name == "eta")
            m = &ops.eta;
        else if (name == "eta-inv")
            m = &ops.eta_inv;
        else if (name == "sigma")
            m = &ops.sigma;
        else if (name == "zg-l")
            m = &ops.zg_l;
        else
            throw error("unknown operator '" + name +
                        "' (expected l, jp, jm, mi, eta, eta-inv, sigma, zg-l)");
        *out = dup_string(m->render(to_format(f), name));
        return MTC_OK;
    });
}

mtc_status mtc_word_eval(mtc_engine* e, const char* word, mtc_scalar** out) {
    return guarded(e, [&]() {
        if (!word || !out) throw error("null argument");
        *out = new mtc_scalar{evaluate_word(BordismWord::parse(word))};
        return MTC_OK;
    });
}

mtc_status mtc_word_canonical(mtc_engine* e, const char* word, char** out) {
    return guarded(e, [&]() {
        if (!word || !out) throw error("null argument");
        *out = dup_string(BordismWord::parse(word).canonical());
        return MTC_OK;
    });
}

mtc_status mtc_count_solutions(mtc_engine* e, unsigned genus, const char* punctures,
                               long prime, char** out_count) {
    return guarded(e, [&]() {
        if (!punctures || !out_count) throw error("null argument");
        SurfaceSpec spec = parse_spec(genus, punctures);
        const ff::GroupTable& t = ff::GroupTable::cached(prime);
        *out_count = dup_string(ff::count_solutions(spec, t).get_str());
        return MTC_OK;
    });
}

mtc_status mtc_verify(mtc_engine* e, unsigned max_genus, unsigned max_punctures,
                      const char* primes_csv, mtc_format f, char** out_report,
                      int* out_all_pass) {
    return guarded(e, [&]() {
        if (!out_report) throw error("null argument");
        auto records = run_verify_grid(max_genus, max_punctures,
                                       parse_primes(primes_csv ? primes_csv : ""));
        *out_report = dup_string(render_report(records, to_format(f)));
        bool ok = all_pass(records);
        if (out_all_pass) *out_all_pass = ok ? 1 : 0;
        return ok ? MTC_OK : MTC_ERR_MISMATCH;
    });
}

mtc_status mtc_adjudicate(mtc_engine* e, unsigned genus, const char* punctures, mtc_format f,
                          char** out_report, int* out_section5_matches) {
    return guarded(e, [&]() {
        if (!punctures || !out_report) throw error("null argument");
        AdjudicationReport rep = adjudicate(parse_spec(genus, punctures));
        *out_report = dup_string(rep.render(to_format(f)));
        bool ok = rep.section5_matches();
        if (out_section5_matches) *out_section5_matches = ok ? 1 : 0;
        return ok ? MTC_OK : MTC_ERR_MISMATCH;
    });
}

}  // extern "C"

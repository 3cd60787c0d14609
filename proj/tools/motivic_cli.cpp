// Command-line front end. Links only the C API in motivic.h.

#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "motivic.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Engine {
    mtc_engine* e = nullptr;
    ~Engine() { mtc_engine_destroy(e); }
};

int status_to_exit(mtc_status st) {
    switch (st) {
        case MTC_OK: return kExitOk;
        case MTC_ERR_ARGUMENT: return kExitUsage;
        case MTC_ERR_MISMATCH: return kExitMismatch;
        default: return kExitInternal;
    }
}

int fail(const mtc_engine* e, mtc_status st) {
    std::fprintf(stderr, "error: %s\n", mtc_engine_last_error(e));
    return status_to_exit(st);
}

mtc_format parse_format(const std::string& f) {
    if (f == "latex") return MTC_FORMAT_LATEX;
    if (f == "json") return MTC_FORMAT_JSON;
    return MTC_FORMAT_TEXT;
}

std::string render_or_die(mtc_engine* e, const mtc_scalar* s, mtc_format f, int& rc) {
    char* out = nullptr;
    mtc_status st = mtc_scalar_render(e, s, f, &out);
    if (st != MTC_OK) {
        rc = fail(e, st);
        return {};
    }
    std::string r = out;
    mtc_string_free(out);
    return r;
}

int run_class(mtc_engine* e, unsigned genus, const std::string& punctures,
              const std::string& method, const std::string& variant, const std::string& format) {
    mtc_variant var = variant == "intro" ? MTC_VARIANT_INTRO : MTC_VARIANT_SECTION5;
    mtc_format fmt = parse_format(format);

    mtc_scalar* tqft = nullptr;
    mtc_scalar* closed = nullptr;
    if (method == "tqft" || method == "both") {
        mtc_status st = mtc_class_value(e, genus, punctures.c_str(), MTC_METHOD_TQFT, var, &tqft);
        if (st != MTC_OK) return fail(e, st);
    }
    if (method == "closed" || method == "both") {
        mtc_status st =
            mtc_class_value(e, genus, punctures.c_str(), MTC_METHOD_CLOSED, var, &closed);
        if (st != MTC_OK) {
            mtc_scalar_destroy(tqft);
            return fail(e, st);
        }
    }
    int rc = kExitOk;
    if (method == "both") {
        if (mtc_scalar_equal(tqft, closed)) {
            std::printf("%s\n", render_or_die(e, tqft, fmt, rc).c_str());
        } else {
            std::printf("tqft:   %s\nclosed: %s\n", render_or_die(e, tqft, fmt, rc).c_str(),
                        render_or_die(e, closed, fmt, rc).c_str());
            std::fprintf(stderr, "error: method mismatch\n");
            rc = kExitMismatch;
        }
    } else {
        const mtc_scalar* s = method == "tqft" ? tqft : closed;
        std::printf("%s\n", render_or_die(e, s, fmt, rc).c_str());
    }
    mtc_scalar_destroy(tqft);
    mtc_scalar_destroy(closed);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact virtual classes of parabolic SL(2,C) representation varieties"};
    app.require_subcommand(1);

    unsigned genus = 0;
    std::string punctures, method = "tqft", variant = "section5", format = "text";
    std::string op, word, primes = "3,5";
    long prime = 3;
    unsigned max_genus = 2, max_punctures = 2;

    auto* cls = app.add_subcommand("class", "Virtual class of a surface");
    cls->add_option("--genus", genus, "Genus g >= 0")->required();
    cls->add_option("--punctures", punctures, "Punctures, e.g. jp:1,mi:2 (empty for none)");
    cls->add_option("--method", method, "tqft | closed | both")
        ->check(CLI::IsMember({"tqft", "closed", "both"}));
    cls->add_option("--variant", variant, "Closed-form convention: section5 | intro")
        ->check(CLI::IsMember({"section5", "intro"}));
    cls->add_option("--format", format, "text | latex | json")
        ->check(CLI::IsMember({"text", "latex", "json"}));

    auto* mat = app.add_subcommand("matrix", "Print an operator matrix");
    mat->add_option("--op", op, "l | jp | jm | mi | eta | eta-inv | sigma | zg-l")->required();
    mat->add_option("--format", format, "text | latex | json")
        ->check(CLI::IsMember({"text", "latex", "json"}));

    auto* cnt = app.add_subcommand("count", "Count solutions over SL(2,F_p)");
    cnt->add_option("--genus", genus, "Genus g >= 0")->required();
    cnt->add_option("--punctures", punctures, "Punctures, e.g. jp:1,mi:2");
    cnt->add_option("--prime", prime, "Odd prime p")->required();

    auto* ver = app.add_subcommand("verify", "Cross-method and oracle verification grid");
    ver->add_option("--max-genus", max_genus, "Largest genus in the grid");
    ver->add_option("--max-punctures", max_punctures, "Largest puncture multiset size");
    ver->add_option("--primes", primes, "Comma-separated odd primes (empty to skip the oracle)");
    ver->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* adj = app.add_subcommand("adjudicate", "Compare closed-form conventions for a surface");
    adj->add_option("--genus", genus, "Genus g >= 0")->required();
    adj->add_option("--punctures", punctures, "Punctures, e.g. mi:1");
    adj->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* ev = app.add_subcommand("eval", "Evaluate a bordism word such as \"Dt . JP . L^2 . D\"");
    ev->add_option("--word", word, "Bordism word")->required();
    ev->add_option("--format", format, "text | latex | json")
        ->check(CLI::IsMember({"text", "latex", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& h) {
        return app.exit(h);
    } catch (const CLI::ParseError& pe) {
        app.exit(pe);
        return kExitUsage;
    }

    Engine eng;
    mtc_status st = mtc_engine_create(&eng.e);
    if (st != MTC_OK) {
        std::fprintf(stderr, "error: failed to initialize operators\n");
        return kExitInternal;
    }

    if (cls->parsed()) return run_class(eng.e, genus, punctures, method, variant, format);

    if (mat->parsed()) {
        char* out = nullptr;
        st = mtc_operator_render(eng.e, op.c_str(), parse_format(format), &out);
        if (st != MTC_OK) return fail(eng.e, st);
        std::printf("%s\n", out);
        mtc_string_free(out);
        return kExitOk;
    }

    if (cnt->parsed()) {
        char* out = nullptr;
        st = mtc_count_solutions(eng.e, genus, punctures.c_str(), prime, &out);
        if (st != MTC_OK) return fail(eng.e, st);
        std::printf("%s\n", out);
        mtc_string_free(out);
        return kExitOk;
    }

    if (ver->parsed()) {
        char* report = nullptr;
        int ok = 0;
        st = mtc_verify(eng.e, max_genus, max_punctures, primes.c_str(), parse_format(format),
                        &report, &ok);
        if (st != MTC_OK && st != MTC_ERR_MISMATCH) return fail(eng.e, st);
        std::printf("%s", report);
        mtc_string_free(report);
        return ok ? kExitOk : kExitMismatch;
    }

    if (adj->parsed()) {
        char* report = nullptr;
        int ok = 0;
        st = mtc_adjudicate(eng.e, genus, punctures.c_str(), parse_format(format), &report, &ok);
        if (st != MTC_OK && st != MTC_ERR_MISMATCH) return fail(eng.e, st);
        std::printf("%s", report);
        mtc_string_free(report);
        return ok ? kExitOk : kExitMismatch;
    }

    if (ev->parsed()) {
        mtc_scalar* s = nullptr;
        st = mtc_word_eval(eng.e, word.c_str(), &s);
        if (st != MTC_OK) return fail(eng.e, st);
        int rc = kExitOk;
        std::printf("%s\n", render_or_die(eng.e, s, parse_format(format), rc).c_str());
        mtc_scalar_destroy(s);
        return rc;
    }

    return kExitUsage;
}

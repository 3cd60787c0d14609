#include <doctest.h>

#include <algorithm>
#include <map>
#include <thread>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/surface.hpp"

using namespace motivic;

namespace {

const Scalar q = Scalar::q();

Scalar torus_class() { return q.pow(4) + Scalar(4) * q.pow(3) - q * q - Scalar(4) * q; }

std::vector<SurfaceSpec> small_grid(unsigned max_genus, unsigned max_punct) {
    std::vector<SurfaceSpec> out;
    for (unsigned g = 0; g <= max_genus; ++g)
        for (unsigned jp = 0; jp <= max_punct; ++jp)
            for (unsigned jm = 0; jp + jm <= max_punct; ++jm)
                for (unsigned mi = 0; jp + jm + mi <= max_punct; ++mi)
                    out.push_back({g, jp, jm, mi});
    return out;
}

// All distinct orderings of the tube multiset, evaluated directly.
std::vector<Scalar> all_order_values(const SurfaceSpec& spec) {
    const OperatorSet& ops = operators();
    std::vector<int> word;
    for (unsigned i = 0; i < spec.genus; ++i) word.push_back(0);
    for (unsigned i = 0; i < spec.jp; ++i) word.push_back(1);
    for (unsigned i = 0; i < spec.jm; ++i) word.push_back(2);
    for (unsigned i = 0; i < spec.mi; ++i) word.push_back(3);
    const CoreMatrix* tube[] = {&ops.cz_l, &ops.cz_jp, &ops.cz_jm, &ops.cz_mi};
    std::sort(word.begin(), word.end());
    std::vector<Scalar> out;
    do {
        CoreVector v = disc_in();
        for (int t : word) v = *tube[t] * v;
        long norm = long(spec.genus) + long(spec.punctures());
        out.push_back(disc_out_coeff(v) * ops.sl2_class.pow(-norm));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace

TEST_CASE("puncture spec parsing") {
    SurfaceSpec s = parse_spec(2, "jp:1,mi:2");
    CHECK(s == SurfaceSpec{2, 1, 0, 2});
    CHECK(parse_spec(0, "") == SurfaceSpec{0, 0, 0, 0});
    CHECK(parse_spec(1, "jm:3") == SurfaceSpec{1, 0, 3, 0});
    CHECK(parse_spec(1, "jp:1,jp:2").jp == 3);
    CHECK_THROWS_AS(parse_spec(0, "xx:1"), parse_error);
    CHECK_THROWS_AS(parse_spec(0, "jp"), parse_error);
    CHECK_THROWS_AS(parse_spec(0, "jp:-1"), parse_error);
}

TEST_CASE("trivial geometries") {
    CHECK(evaluate_tqft({0, 0, 0, 0}) == Scalar(1));
    CHECK(evaluate_tqft({0, 0, 0, 2}) == Scalar(1));
    CHECK(evaluate_tqft({0, 1, 0, 0}) == Scalar(0));
    CHECK(evaluate_tqft({1, 0, 0, 0}) == torus_class());
}

TEST_CASE("closed form section5 examples") {
    CHECK(closed_form({1, 0, 0, 0}, FormulaVariant::Section5) == torus_class());
    // torus with one -Id point: the Q0 remark collapses to q^3 - q
    CHECK(closed_form({1, 0, 0, 1}, FormulaVariant::Section5) == q.pow(3) - q);
    CHECK(evaluate_tqft({1, 0, 0, 1}) == q.pow(3) - q);
}

TEST_CASE("closed form matches the pipeline on a small grid") {
    for (const SurfaceSpec& spec : small_grid(2, 2)) {
        INFO(spec.describe());
        CHECK(evaluate_tqft(spec) == closed_form(spec, FormulaVariant::Section5));
    }
}

TEST_CASE("pipeline output is always polynomial") {
    for (const SurfaceSpec& spec : small_grid(3, 2)) {
        INFO(spec.describe());
        CHECK(evaluate_tqft(spec).is_polynomial());
    }
}

TEST_CASE("adding two -Id punctures changes nothing") {
    for (const SurfaceSpec& spec : small_grid(2, 1)) {
        SurfaceSpec more = spec;
        more.mi += 2;
        INFO(spec.describe());
        CHECK(evaluate_tqft(spec) == evaluate_tqft(more));
    }
}

TEST_CASE("for r > 0 the class depends only on (g, r, sigma)") {
    std::map<std::tuple<unsigned, unsigned, int>, Scalar> seen;
    for (const SurfaceSpec& spec : small_grid(2, 3)) {
        if (spec.jordan() == 0) continue;
        auto key = std::make_tuple(spec.genus, spec.jordan(), spec.sign());
        Scalar v = evaluate_tqft(spec);
        auto [it, inserted] = seen.emplace(key, v);
        INFO(spec.describe());
        if (!inserted) CHECK(v == it->second);
    }
}

TEST_CASE("order independence over all permutations (small specs)") {
    for (const SurfaceSpec& spec : small_grid(2, 3)) {
        std::vector<Scalar> values = all_order_values(spec);
        for (const Scalar& v : values) {
            INFO(spec.describe());
            CHECK(v == values.front());
        }
    }
}

TEST_CASE("adjudication: mixed Jordan punctures") {
    AdjudicationReport rep = adjudicate({2, 1, 1, 0});
    CHECK(rep.section5_matches());
    CHECK(rep.tqft == evaluate_tqft({2, 1, 1, 0}));
}

TEST_CASE("adjudication: one -Id point") {
    AdjudicationReport rep = adjudicate({1, 0, 0, 1});
    CHECK(rep.section5_matches());
    // The intro readings are recorded either way; just require presence.
    bool saw_literal = false, saw_jordan = false;
    for (const auto& e : rep.entries) {
        if (e.method == "intro-literal") saw_literal = true;
        if (e.method == "intro-jordan-r") saw_jordan = true;
    }
    CHECK(saw_literal);
    CHECK(saw_jordan);
    std::string text = rep.render(Format::Text);
    CHECK(text.find("tqft (ground truth)") != std::string::npos);
}

TEST_CASE("adjudication: sphere") {
    AdjudicationReport rep = adjudicate({0, 0, 0, 0});
    CHECK(rep.tqft == Scalar(1));
    for (const auto& e : rep.entries) {
        INFO(e.method);
        CHECK(e.value == Scalar(1));
        CHECK(e.matches_tqft);
    }
}

TEST_CASE("higher genus still matches the closed form") {
    for (const SurfaceSpec& spec : {SurfaceSpec{5, 0, 0, 0}, SurfaceSpec{5, 2, 1, 1},
                                    SurfaceSpec{4, 0, 3, 0}, SurfaceSpec{6, 1, 0, 0}}) {
        INFO(spec.describe());
        Scalar v = evaluate_tqft(spec);
        CHECK(v == closed_form(spec, FormulaVariant::Section5));
        CHECK(v.is_polynomial());
    }
}

TEST_CASE("with no -Id points, intro and section5 differ only on a single J-") {
    // For t = 0 the two statements read the same (g, r); the one divergence
    // is the intro's r=l=1 case, whose extra correction term does not belong
    // when the marked point is a J- (the pipeline sides with section5).
    for (const SurfaceSpec& spec : small_grid(2, 3)) {
        if (spec.mi > 0) continue;
        INFO(spec.describe());
        bool agree = closed_form(spec, FormulaVariant::Intro) ==
                     closed_form(spec, FormulaVariant::Section5);
        bool single_jminus = spec.jm == 1 && spec.jp == 0;
        CHECK(agree == !single_jminus);
        if (single_jminus)
            CHECK(evaluate_tqft(spec) == closed_form(spec, FormulaVariant::Section5));
    }
}

TEST_CASE("concurrent evaluation is deterministic") {
    SurfaceSpec spec{3, 1, 1, 0};
    Scalar expected = evaluate_tqft(spec);
    std::vector<Scalar> results(4);
    std::vector<std::thread> workers;
    for (auto& slot : results)
        workers.emplace_back([&slot, spec] { slot = evaluate_tqft(spec); });
    for (auto& w : workers) w.join();
    for (const Scalar& r : results) CHECK(r == expected);
}

TEST_CASE("intro variant uses the literal reading") {
    // For pure Jordan punctures with even l the intro and section5 coincide.
    SurfaceSpec s{1, 2, 0, 0};
    CHECK(closed_form(s, FormulaVariant::Intro) == closed_form(s, FormulaVariant::Section5));
    // With one -Id point they do not: intro reads r = 1.
    SurfaceSpec t{1, 0, 0, 1};
    CHECK_FALSE(closed_form(t, FormulaVariant::Intro) ==
                closed_form(t, FormulaVariant::Section5));
}

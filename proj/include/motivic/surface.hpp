#pragma once

#include <string>
#include <vector>

#include "motivic/operators.hpp"

namespace motivic {

enum class Puncture { JPlus, JMinus, MinusId };

// A closed orientable surface of the given genus with a multiset of marked
// points: jp of type [J+], jm of type [J-], mi of type {-Id}.
struct SurfaceSpec {
    unsigned genus = 0;
    unsigned jp = 0;
    unsigned jm = 0;
    unsigned mi = 0;

    unsigned jordan() const { return jp + jm; }          // r
    unsigned punctures() const { return jp + jm + mi; }  // s
    int sign() const { return (jm + mi) % 2 == 0 ? 1 : -1; }  // (-1)^(jm+mi)

    bool operator==(const SurfaceSpec&) const = default;
    std::string describe() const;  // "g=1 jp=0 jm=0 mi=1"
};

// Puncture mini-grammar: comma-separated `kind:count` with kind in
// {jp, jm, mi}; the empty string means no punctures. Throws parse_error.
SurfaceSpec parse_spec(unsigned genus, const std::string& punctures);

enum class FormulaVariant { Section5, Intro };

// Virtual class by matrix composition of the reduced tube operators,
// normalized by (q^3-q)^(g+s). Recomputes with the tubes in reversed order
// and checks polynomiality; either failing throws invariant_error.
Scalar evaluate_tqft(const SurfaceSpec& spec);

// Closed-form polynomial for the selected formula set. Section5 applies the
// sign-split theorem for r > 0 and the corrected r = 0 formulas (with the
// number of -Id points reduced mod 2). Intro reads the four-case statement
// literally, with r counting all marked points.
Scalar closed_form(const SurfaceSpec& spec, FormulaVariant variant);

struct AdjudicationEntry {
    std::string method;  // "section5", "intro-literal", "intro-jordan-r"
    std::string note;    // which case of the formula set applied
    Scalar value;
    bool matches_tqft;
};

struct AdjudicationReport {
    SurfaceSpec spec;
    Scalar tqft;
    std::vector<AdjudicationEntry> entries;

    bool section5_matches() const;
    std::string render(Format f) const;
};

// Computes the TQFT value (ground truth), the Section5 closed form and the
// intro formula under each defensible reading of its (r, l), and reports
// exact-match booleans.
AdjudicationReport adjudicate(const SurfaceSpec& spec);

}  // namespace motivic

#pragma once

#include <string>
#include <vector>

#include "motivic/surface.hpp"

namespace motivic {

enum class WordGen { DiscOut, DiscIn, L, JP, JM, MI };  // DiscOut = "Dt", DiscIn = "D"

struct WordFactor {
    WordGen gen;
    unsigned exp;
    bool operator==(const WordFactor&) const = default;
};

// A composition expression "Dt . <tubes> . D", read left to right from the
// outgoing disc to the incoming one. Generators are case-insensitive,
// separators are '.', the ring operator, or whitespace; interior factors may
// carry "^<exponent>" with exponent >= 1.
class BordismWord {
public:
    static BordismWord parse(const std::string& text);  // throws parse_error

    std::string canonical() const;
    SurfaceSpec to_spec() const;
    const std::vector<WordFactor>& factors() const { return f_; }

    bool operator==(const BordismWord&) const = default;

private:
    std::vector<WordFactor> f_;
};

// Evaluates the word with the tube matrices applied in the literal written
// order (no reordering), normalized by (q^3-q)^(g+s). Agreement with
// evaluate_tqft over all orderings witnesses tube commutation.
Scalar evaluate_word(const BordismWord& w);

}  // namespace motivic

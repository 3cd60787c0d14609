#include "motivic/word.hpp"

#include <cctype>
#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

struct Token {
    std::string text;
    size_t pos;
};

bool is_separator_at(const std::string& s, size_t i, size_t& len) {
    if (s[i] == '.' || std::isspace(static_cast<unsigned char>(s[i]))) {
        len = 1;
        return true;
    }
    // UTF-8 ring operator
    if (i + 2 < s.size() && (unsigned char)s[i] == 0xE2 && (unsigned char)s[i + 1] == 0x88 &&
        (unsigned char)s[i + 2] == 0x98) {
        len = 3;
        return true;
    }
    return false;
}

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        size_t sep_len = 0;
        if (is_separator_at(s, i, sep_len)) {
            i += sep_len;
            continue;
        }
        size_t start = i;
        while (i < s.size() && !is_separator_at(s, i, sep_len)) ++i;
        out.push_back({s.substr(start, i - start), start});
    }
    return out;
}

std::string lower(std::string s) {
    for (char& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

WordFactor parse_factor(const Token& tok) {
    std::string body = tok.text;
    unsigned exp = 1;
    size_t caret = body.find('^');
    if (caret != std::string::npos) {
        std::string e = body.substr(caret + 1);
        body = body.substr(0, caret);
        if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("exponent must be a positive integer", tok.pos + caret + 1);
        unsigned long v = std::stoul(e);
        if (v < 1) throw parse_error("exponent must be >= 1", tok.pos + caret + 1);
        exp = unsigned(v);
    }
    std::string g = lower(body);
    WordGen gen;
    if (g == "dt")
        gen = WordGen::DiscOut;
    else if (g == "d")
        gen = WordGen::DiscIn;
    else if (g == "l")
        gen = WordGen::L;
    else if (g == "jp")
        gen = WordGen::JP;
    else if (g == "jm")
        gen = WordGen::JM;
    else if (g == "mi")
        gen = WordGen::MI;
    else
        throw parse_error("unknown generator '" + body + "'", tok.pos);
    return {gen, exp};
}

const char* gen_name(WordGen g) {
    switch (g) {
        case WordGen::DiscOut: return "Dt";
        case WordGen::DiscIn: return "D";
        case WordGen::L: return "L";
        case WordGen::JP: return "JP";
        case WordGen::JM: return "JM";
        case WordGen::MI: return "MI";
    }
    return "?";
}

}  // namespace

BordismWord BordismWord::parse(const std::string& text) {
    auto tokens = tokenize(text);
    if (tokens.empty()) throw parse_error("empty word", 0);
    BordismWord w;
    w.f_.reserve(tokens.size());
    for (const Token& t : tokens) w.f_.push_back(parse_factor(t));

    if (w.f_.front().gen != WordGen::DiscOut || w.f_.front().exp != 1)
        throw parse_error("structural error: word must start with Dt", tokens.front().pos);
    if (w.f_.back().gen != WordGen::DiscIn || w.f_.back().exp != 1 || w.f_.size() < 2)
        throw parse_error("structural error: word must end with D", tokens.back().pos);
    for (size_t i = 1; i + 1 < w.f_.size(); ++i)
        if (w.f_[i].gen == WordGen::DiscOut || w.f_[i].gen == WordGen::DiscIn)
            throw parse_error("structural error: discs may only appear at the ends",
                              tokens[i].pos);
    return w;
}

std::string BordismWord::canonical() const {
    std::ostringstream os;
    for (size_t i = 0; i < f_.size(); ++i) {
        if (i) os << " . ";
        os << gen_name(f_[i].gen);
        if (f_[i].exp > 1) os << "^" << f_[i].exp;
    }
    return os.str();
}

SurfaceSpec BordismWord::to_spec() const {
    SurfaceSpec spec;
    for (const WordFactor& f : f_) {
        switch (f.gen) {
            case WordGen::L: spec.genus += f.exp; break;
            case WordGen::JP: spec.jp += f.exp; break;
            case WordGen::JM: spec.jm += f.exp; break;
            case WordGen::MI: spec.mi += f.exp; break;
            default: break;
        }
    }
    return spec;
}

Scalar evaluate_word(const BordismWord& w) {
    const OperatorSet& ops = operators();
    CoreVector v = disc_in();
    // The word reads like the composition: the factor next to D acts first.
    for (size_t i = w.factors().size() - 1; i-- > 1;) {
        const WordFactor& f = w.factors()[i];
        const CoreMatrix* m = nullptr;
        switch (f.gen) {
            case WordGen::L: m = &ops.cz_l; break;
            case WordGen::JP: m = &ops.cz_jp; break;
            case WordGen::JM: m = &ops.cz_jm; break;
            case WordGen::MI: m = &ops.cz_mi; break;
            default: break;
        }
        for (unsigned k = 0; k < f.exp; ++k) v = *m * v;
    }
    SurfaceSpec spec = w.to_spec();
    long norm = long(spec.genus) + long(spec.punctures());
    Scalar result = disc_out_coeff(v) * ops.sl2_class.pow(-norm);
    if (!result.is_polynomial())
        throw invariant_error("non-polynomial class for word " + w.canonical());
    return result;
}

}  // namespace motivic

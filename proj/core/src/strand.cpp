#include "dnamul/strand.hpp"

#include <array>

#include "dnamul/errors.hpp"

namespace dnamul {

Base complement(Base b) {
    switch (b) {
        case Base::A: return Base::T;
        case Base::T: return Base::A;
        case Base::C: return Base::G;
        case Base::G: return Base::C;
    }
    throw ParseError("invalid base value");
}

Base base_from_char(char c) {
    switch (c) {
        case 'A': return Base::A;
        case 'C': return Base::C;
        case 'G': return Base::G;
        case 'T': return Base::T;
        default:
            throw ParseError(std::string("invalid DNA base '") + c +
                             "': expected one of A, C, G, T");
    }
}

char to_char(Base b) { return static_cast<char>(b); }

Strand Strand::from_text(std::string_view text) {
    std::string bases;
    bases.reserve(text.size());
    for (char c : text) bases.push_back(to_char(base_from_char(c)));
    return Strand(std::move(bases));
}

Strand Strand::prefix(std::size_t n) const { return Strand(text_.substr(0, n)); }

Strand Strand::suffix(std::size_t n) const {
    return Strand(text_.substr(text_.size() - n));
}

Strand complement(const Strand& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s.text()) out.push_back(to_char(complement(static_cast<Base>(c))));
    return Strand(std::move(out));
}

bool matches(const Strand& x, const Strand& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.at(i) != complement(y.at(i))) return false;
    }
    return true;
}

Strand random_strand(std::size_t length, Rng& rng) {
    static constexpr std::array<char, 4> kBases = {'A', 'C', 'G', 'T'};
    std::string out;
    out.reserve(length);
    // Low two bits of a 64-bit draw are exactly uniform over four values.
    for (std::size_t i = 0; i < length; ++i) out.push_back(kBases[rng() & 3]);
    return Strand::from_text(out);
}

}  // namespace dnamul

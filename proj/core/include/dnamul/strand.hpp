#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "dnamul/rng.hpp"

namespace dnamul {

/// One DNA base. The alphabet is closed: exactly A, C, G, T.
enum class Base : char { A = 'A', C = 'C', G = 'G', T = 'T' };

/// Watson-Crick pairing: A<->T, C<->G.
Base complement(Base b);

/// Maps 'A'/'C'/'G'/'T' to a Base; anything else raises ParseError.
Base base_from_char(char c);

char to_char(Base b);

/// An immutable DNA sequence. Renders as uppercase A/C/G/T with no
/// separators. The pipeline never builds empty strands, but the type allows
/// them so the matching predicate stays total.
class Strand {
public:
    Strand() = default;

    /// Parses strand text; rejects characters outside the four-base alphabet.
    static Strand from_text(std::string_view text);

    std::size_t size() const { return text_.size(); }
    bool empty() const { return text_.empty(); }
    Base at(std::size_t i) const { return static_cast<Base>(text_[i]); }

    /// Rendered form, e.g. "ATTCGTTCTT".
    const std::string& text() const { return text_; }

    /// First n bases.
    Strand prefix(std::size_t n) const;
    /// Last n bases.
    Strand suffix(std::size_t n) const;

    friend Strand operator+(const Strand& a, const Strand& b) {
        return Strand(a.text_ + b.text_);
    }

    auto operator<=>(const Strand&) const = default;

private:
    explicit Strand(std::string validated) : text_(std::move(validated)) {}

    std::string text_;

    friend Strand complement(const Strand&);
    friend Strand random_strand(std::size_t, Rng&);
};

/// Position-wise Watson-Crick complement; preserves length and is an
/// involution.
Strand complement(const Strand& s);

/// True iff the strands have equal length and every position of x pairs with
/// the corresponding position of y. Symmetric. Two empty strands match.
bool matches(const Strand& x, const Strand& y);

/// `length` bases drawn uniformly and independently from {A,C,G,T}.
/// Identical seeds yield identical strands.
Strand random_strand(std::size_t length, Rng& rng);

}  // namespace dnamul

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mcanon/monomial.hpp"

namespace mcanon {

/// Variable names of the ambient polynomial ring, in index order.
struct Ring {
    std::vector<std::string> vars;

    std::size_t nvars() const noexcept { return vars.size(); }
    /// Index of `name`, or nvars() if absent.
    std::size_t index_of(std::string_view name) const;

    friend bool operator==(const Ring&, const Ring&) = default;
};

/// Contents of an ideal file. The pair is not yet validated as a factor.
struct IdealFile {
    Ring ring;
    MonomialIdeal numerator;
    MonomialIdeal denominator;

    /// Throws ValidationError unless J is strictly contained in I.
    Factor factor() const { return Factor(numerator, denominator); }
};

// Grammar (whitespace-insensitive, '#' starts a comment running to end of line):
//
//   file     ::= ring assign+
//   ring     ::= "ring" ident ("," ident)* ";"
//   assign   ::= ("I" | "J") "=" list ";"
//   list     ::= "0" | "(" list ")" | monomial ("," monomial)*
//   monomial ::= "1" | factor ("*" factor)*
//   factor   ::= var ("^" uint)?
//
// J defaults to the zero ideal. Exponents above 2^31-1 are rejected.

IdealFile parse_ideal_file(std::string_view text);

/// Parses a bare generator list such as "x^4, x^3*y^7" over `ring`.
MonomialIdeal parse_ideal(std::string_view text, const Ring& ring);

/// "x^2*y", or "1" for the unit monomial.
std::string to_string(const Monomial& m, const Ring& ring);

/// Generator list without brackets: "x^2, x*y", or "0" for the zero ideal.
std::string generators_string(const MonomialIdeal& ideal, const Ring& ring);

/// "(x^2, x*y)".
std::string to_string(const MonomialIdeal& ideal, const Ring& ring);

/// "(x^2, x*y)" when J = 0, otherwise "(...) / (...)".
std::string to_string(const Factor& f, const Ring& ring);

/// The factor written back in the file grammar; parse_ideal_file reads it back unchanged.
std::string to_file_string(const Factor& f, const Ring& ring);

/// Default names x, y, z, t for n <= 4, otherwise x1..xn.
Ring default_ring(std::size_t nvars);

}  // namespace mcanon

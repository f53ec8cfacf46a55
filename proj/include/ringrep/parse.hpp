#pragma once

#include <string>

#include "ringrep/ring.hpp"
#include "ringrep/words.hpp"

namespace ringrep {

// Ring selector used by the CLI: "z", "zi", "fp:<p>", "fpx:<p>".
// "q" prefixes select the fraction field: "q:z", "q:fpx:<p>".
Ring parse_ring_selector(const std::string& selector);

// Element literals, per ring:
//   Z        decimal integers           -12
//   Z[i]     a+bi / a-bi / bi / i       3-2i
//   F_p      decimal, reduced mod p     7
//   F_p[x]   c*x^k terms joined by +/-  x^2+2*x+1
//   Q(R)     num/den, parts in the base syntax, parenthesized if compound:
//            3/2, (x+1)/x, (1+i)/2; a bare base literal means x/1
// Throws ParseError with a 0-based column on bad input.
RingElement parse_element(const Ring& ring, const std::string& text);
std::string format_element(const RingElement& e);

// Word grammar: `u[<elem>]` and `s[<elem>]` joined by `*`; whitespace is
// insignificant; the empty string is the identity word. s[0] is rejected.
Word parse_word(const Ring& ring, const std::string& text);
std::string format_word(const Word& w);

std::string format_normal_form(const NormalForm& nf);

// Fraction over the integers in "p/q" form (or a bare integer).
Fraction parse_integer_fraction(const std::string& text);

} // namespace ringrep

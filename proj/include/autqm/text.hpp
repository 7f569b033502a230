#pragma once

// ASCII surface syntax. Generators are `a`..`z`, inverses `A`..`Z`; the
// identity is written `1` (or the empty string). Ranks above 26 use a
// bracketed integer list instead, e.g. `[1,-27,3]`.

#include <string>
#include <string_view>

#include "autqm/word.hpp"

namespace autqm {

/// Throws ParseError (column is 1-based) on unknown characters or letters
/// outside the rank.
Word parse_word(std::string_view text, int rank);

std::string format_word(const Word& w);

inline std::string format_word(const CyclicWord& c) { return format_word(c.word()); }

/// Pretty form with superscript-free exponents, e.g. `a b^-1 a^2`.
std::string format_word_exponents(const Word& w);

char letter_char(Letter l);

}  // namespace autqm

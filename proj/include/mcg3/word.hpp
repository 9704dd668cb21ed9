#pragma once

#include <string>
#include <vector>

#include "mcg3/projmat.hpp"

namespace mcg3 {

struct Letter {
    Gen gen;
    Int exp;
    bool operator==(const Letter&) const = default;
};

// Freely reduced generator word: adjacent entries use different generators,
// exponents are nonzero, and Z / Y always carry exponent exactly one (both
// square to the identity projectively, so larger or negative exponents fold
// away).  The empty word is the identity.
using Word = std::vector<Letter>;

// Restores the Word invariants on an arbitrary letter sequence.
Word normalize_word(const Word& raw);

// Grammar: word := item*; item := gen power?; gen := A|B|Z|Y|T;
// power := '^' '-'? digits.  Whitespace and '*' separate items.  T expands
// to Y Z.  Throws SyntaxError naming the byte offset of the offence.
Word parse_word(const std::string& text);

// Space-separated rendering, exponent one left implicit: "B^2 A^2 Z".
std::string render_word(const Word& w);

Word concat(const Word& a, const Word& b);
Word word_inverse(const Word& w);

// The matrix image of a word (group homomorphism).
ProjectiveMatrix phi(const Word& w);

enum class Move { Left, Right };

// Turbulence matrix of a displacement sequence: each move multiplies A
// (Left) or B (Right) onto the left of the accumulator, seeded with the
// identity for orientation-preserving maps and with the reflection
// otherwise.  An empty preserving sequence is rejected (InvalidParams).
ProjectiveMatrix turbulence_from_displacements(const std::vector<Move>& moves,
                                               bool orientation_preserving);

}  // namespace mcg3

#pragma once

#include <string>
#include <vector>

#include "mcg3/canonical.hpp"
#include "mcg3/word.hpp"

namespace mcg3 {

enum class Turn { l, r };

struct TurnRun {
    Turn turn;
    Int count;
    bool operator==(const TurnRun&) const = default;
};

// Run-length circulation code: optional quarter turn, left/right turns,
// optional closing quarter turn.
struct CirculationCode {
    int pre_z = 0;
    std::vector<TurnRun> runs;
    int post_z = 0;
    bool operator==(const CirculationCode&) const = default;
};

// l maps to A and r to B, the Z flags carry over from the canonical form.
// OrientationReversing when the word has a reflection part.
CirculationCode word_to_code(const Word& w);
Word code_to_word(const CirculationCode& code);

// Flat token text, "Z l l r r Z" style.
std::string render_code(const CirculationCode& code);
// Accepts optional leading and trailing "Z"; SyntaxError carries the byte
// offset of the offending character.
CirculationCode parse_code(const std::string& text);

struct LinkingNumbers {
    Int p1;
    Int p3;
    bool operator==(const LinkingNumbers&) const = default;
};

// Turn totals of the middle point around each outer point, read off the
// canonical form by rewriting it into even shear powers. Requires the
// mod-2 action to fix all three points (NotPurePermutationTrivial);
// a trailing reflection is ignored since it moves no marked point.
LinkingNumbers linking_numbers(const Word& w);

}  // namespace mcg3

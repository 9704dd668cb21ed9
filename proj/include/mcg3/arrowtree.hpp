#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mcg3/word.hpp"

namespace mcg3 {

enum class Arrow { GPlus, GMinus, RPlus, RMinus };

char arrow_color(Arrow a);       // 'G' or 'R'
int arrow_sign(Arrow a);         // +1 or -1
std::string arrow_str(Arrow a);  // "G+", "G-", "R+", "R-"

// Two-sided arrow distribution; the initial data is G+ | R-.
struct ArrowWord {
    std::vector<Arrow> left;
    std::vector<Arrow> right;

    static ArrowWord initial();
    bool operator==(const ArrowWord&) const = default;
};

// Simultaneous rewriting of both sides: under B every R-arrow doubles
// (R- to R+ G-, R+ to G+ R-) while G-arrows stand; under A every G-arrow
// doubles (G- to G+ R-, G+ to R+ G-) while R-arrows stand.  Only A and B
// substitute; anything else is InvalidParams.
ArrowWord substitute(const ArrowWord& aw, Gen letter);

// Folds the letters of a positive A/B word left to right onto the initial
// data.  Throws NotPositiveCore for other generators or negative powers.
ArrowWord arrow_word(const Word& w);

struct LetterCounts {
    Int lg, lr, rg, rr;
    bool operator==(const LetterCounts&) const = default;
};

// Color tallies per side.  Rows (lg, lr) and (rg, rr) reproduce the matrix
// of the word that built the arrow word, which is the counting theorem the
// tests pin down.
LetterCounts letter_counts(const ArrowWord& aw);

enum class BranchColor { Green, Red };
enum class BranchSide { Left, Right };

// A bifurcation point: which branch it sits on, the color of the
// horizontal line creating it, and its level.  Levels count applied
// letters from 1; the two seed strands enter as level-0 points so that
// per-side color counts equal the leaf letter counts exactly.
struct BranchPoint {
    BranchSide side;
    BranchColor color;
    std::size_t level;
    bool operator==(const BranchPoint&) const = default;
};

// The inner two-colored tree of a positive word: one horizontal line per
// letter occurrence (green for B, red for A), a branch point wherever a
// strand crosses a line of its opposite color, and leaves spelling the
// arrow word of the word.
struct InnerTree {
    std::vector<BranchColor> lines;
    std::vector<BranchPoint> branch_points;
    ArrowWord leaves;
};

InnerTree build_tree(const Word& w);

// Deterministic SVG dendrogram of the inner tree: horizontal level lines,
// colored strands, branch-point dots, leaf arrowheads up or down by sign.
std::string render_tree_svg(const Word& w, double scale = 40.0);

}  // namespace mcg3

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mcg3/skeleton.hpp"
#include "mcg3/word.hpp"

namespace mcg3 {

enum class ArcColor { Green, Red };

// One half circle of a snail: center and radius on the axis, the half plane
// it occupies, and its color under the two-snail splitting.  Radius zero
// marks the singular point an odd family produces at its center; such
// entries glue to nothing and render as dots.
struct HalfCircle {
    Rat center;
    Rat radius;
    int side;  // +1 upper half plane, -1 lower
    ArcColor color;
    bool operator==(const HalfCircle&) const = default;
};

// The snail SN(n;p): marked points z1 = -n/2, z2 = (p-n)/2, z3 = p/2 and
// the half circles branched on the axis between them.  n and p are kept
// nonnegative; a negative input parameter is realized by reflecting every
// side.  Arcs are ordered left family, right family, emerging family, radii
// increasing within each.  visible_left_to_right records the orientation of
// the outermost emerging arc; nothing downstream reads it.
struct Snail {
    Int n;
    Int p;
    Rat z1, z2, z3;
    std::vector<HalfCircle> arcs;
    bool visible_left_to_right = true;
};

// Throws InvalidParams for (0,0).
Snail build_snail(const Int& n, const Int& p);

// Wall tallies of the two colors: g1/r1 crossing points on the left wall,
// g2/r2 on the right.  Columnwise these form the turbulence matrix of the
// word decomposing (n,p), which is the cross-check the tests run.
struct ColorSplit {
    Int g1, g2, r1, r2;
    bool operator==(const ColorSplit&) const = default;
};

// Requires coprime parameters (NotCoprime) and both positive
// (InvalidParams): the splitting counts the walls of a connected two-ended
// snail.
ColorSplit split_colors(const Int& n, const Int& p);

// Image of the parameters under a word, with (n,p) ~ (-n,-p) folded to
// first nonzero coordinate >= 0.
std::pair<Int, Int> act(const Word& w, const Int& n, const Int& p);

struct SnailComponents {
    bool connected;  // one component forming an open arc
    Int component_count;
};

// Union-find over arc endpoint gluing.  Degenerate snails without real arcs
// count as one segment-like component.
SnailComponents components(const Snail& s);

// Ordered axis-crossing traversal from the end with the smaller coordinate.
// The innermost arc over a free marked point is split there, so the free
// point shows up as a pinned landing between its two chamber legs.  Requires
// coprime parameters (NotCoprime) and both positive (InvalidParams).
CrossingSequence crossing_sequence(const Snail& s);

struct SvgOptions {
    double scale = 40.0;
};

// Deterministic SVG 1.1 document: axis, one path per real arc with class
// "green" or "red", dots for the marked points.  Fixed six-decimal
// coordinate formatting.
std::string render_svg(const Snail& s, const SvgOptions& opts = {});

}  // namespace mcg3

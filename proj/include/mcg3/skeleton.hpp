#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcg3/projmat.hpp"

namespace mcg3 {

using Rat = boost::multiprecision::cpp_rational;

// One axis-to-axis excursion of a curve: the half plane it runs through and
// the point where it comes back to the axis.
struct Excursion {
    int side;  // +1 above the axis, -1 below
    Rat landing;
    bool operator==(const Excursion&) const = default;
};

// Crossing record of a curve relative to the marked set X: the start point
// and each successive excursion.  Both curve ends lie on X, consecutive
// landings differ, X is strictly increasing with at least two points.
// Violations are rejected at construction with InvalidParams.
class CrossingSequence {
public:
    CrossingSequence(std::vector<Rat> x, Rat start, std::vector<Excursion> excursions);

    const std::vector<Rat>& x() const { return x_; }
    const Rat& start() const { return start_; }
    const std::vector<Excursion>& excursions() const { return excursions_; }

    bool operator==(const CrossingSequence&) const = default;

private:
    std::vector<Rat> x_;
    Rat start_;
    std::vector<Excursion> excursions_;
};

// Deletes every excursion that is homotopically trivial relative to X (no
// marked point strictly inside its span and neither endpoint on X), merging
// the same-side neighbours such a deletion exposes.  Landings are left
// untouched when nothing reduces, so already-normal sequences come back
// bit-identical; otherwise coordinates are renormalized.
CrossingSequence reduce(const CrossingSequence& cs);

// Same normal form through a seed-shuffled move order.  Exists so the
// order-independence of reduce stays under test.
CrossingSequence reduce_seeded(const CrossingSequence& cs, std::uint32_t seed);

bool is_reduced(const CrossingSequence& cs);

// Canonical coordinates: landings evenly spaced inside their gap of X, unit
// steps beyond the extreme marked points.  Order-preserving per gap, so the
// structure of the curve is untouched.
CrossingSequence renormalize(const CrossingSequence& cs);

// Landings strictly inside one gap of X, as arrival sides in coordinate
// order.  Gap g spans (X[g-1], X[g]); gap 0 and gap |X| are the outer rays.
struct GapRun {
    int gap;
    std::vector<int> sides;
    bool operator==(const GapRun&) const = default;
};

enum class SkeletonKind { Segment, SimpleSnail, General };

// Classification of a reduced three-point skeleton.  Segment carries the
// 1-based gap index between adjacent marked points, SimpleSnail the snail
// parameters and the side its emerging family occupies, General the
// occupied gaps with their crossing sides.
struct SkeletonClass {
    SkeletonKind kind;
    int segment_gap = 0;
    Int n = 0;
    Int p = 0;
    int emerging_side = 0;
    std::vector<GapRun> gaps;
    bool operator==(const SkeletonClass&) const = default;
};

// Requires |X| = 3 (InvalidParams) and a reduced input (NotReduced).
SkeletonClass recognize(const CrossingSequence& cs);

struct SnailPropsReport {
    bool unique_extremal_visible = false;
    bool sustaining_separated = false;
    bool emerging_separated = false;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Checks the structural shape of a reduced three-point skeleton against the
// snail propositions: a unique visible arc containing every other visible
// span, each sustaining excursion separated by exactly one outer marked
// point, each visible excursion separated by the middle one.  Chamber legs
// meeting at a marked point are rejoined before checking.  Never throws;
// precondition failures land in the report.
SnailPropsReport validate_snail_props(const CrossingSequence& cs);

enum class Bisector { Delta1, Delta2 };

// Minimal crossing count with a vertical line isotoped through the first or
// second gap of X: the minimum over generic positions of the number of
// spans strictly containing the position.  Requires |X| = 3 and a reduced
// input.
Int min_intersections(const CrossingSequence& cs, Bisector which);

}  // namespace mcg3

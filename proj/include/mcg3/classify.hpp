#pragma once

#include <optional>

#include "mcg3/canonical.hpp"

namespace mcg3 {

enum class TraceTag { FiniteOrder2, FiniteOrder3, Parabolic, Turbulent };

// Trace classification of a class: |Tr| = 0, 1, 2 or >= 3.  Parabolic
// carries the conjugate shear (power zero means the identity class);
// Turbulent carries a conjugacy representative and the stretch data.
struct TraceClass {
    TraceTag tag;
    std::optional<Gen> parabolic_letter;
    std::optional<Int> parabolic_power;
    std::optional<Word> representative;
    std::optional<double> lambda;
    std::optional<double> entropy;
    std::optional<Int> nielsen_bound;
};

TraceClass classify(const Word& w);

// Conjugacy representative: a positive word in both letters, a pure shear
// power A^n / B^n, one of AZ / BZ, Z alone, or the empty word, chosen as
// the lexicographically least cyclic rotation (A < B).  Orientation-
// reversing input comes back as its canonical rendering unchanged.
Word conjugacy_reduce(const Word& w);

}  // namespace mcg3

#pragma once

#include <utility>
#include <vector>

#include "mcg3/word.hpp"

namespace mcg3 {

// Eight-shape normal form: optional quarter turn, positive alternating A/B
// core, optional quarter turn, optional reflection.  post_z is zero whenever
// the core is empty (the two turn slots collapse into one).
struct CanonicalForm {
    int pre_z = 0;
    Word core;
    int post_z = 0;
    int sigma = 0;
    bool operator==(const CanonicalForm&) const = default;
};

// Rewrites to the normal form.  Runs out of fuel (64 * (letters + 4) rule
// applications) only on a rewriting bug; then throws RewriteFuelExceeded.
CanonicalForm canonicalize(const Word& w);

Word render(const CanonicalForm& f);
CanonicalForm compose(const CanonicalForm& x, const CanonicalForm& y);
CanonicalForm invert(const CanonicalForm& f);

// The rewriting relations the canonicalizer is allowed to use, as word
// pairs with equal matrix image.  Derived from the generator matrices at
// startup (conjugates and boundary products mapped back to single letters
// by matrix lookup), not transcribed from anywhere; tests re-verify every
// pair by multiplication.
std::vector<std::pair<Word, Word>> zip_rule_pairs();

}  // namespace mcg3

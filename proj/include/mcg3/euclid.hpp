#pragma once

#include <vector>

#include "mcg3/word.hpp"

namespace mcg3 {

// Division chain with remainders taken in (0, q]: each step writes
// q_i = a_i * q_{i+1} + q_{i+2} with 0 < q_{i+2} <= q_{i+1}, so exact
// multiples give a_i = k - 1 and remainder q_{i+1}.  The chain stops the
// first time the two trailing rests agree; that common value is d = gcd.
struct EuclidTrace {
    std::vector<Int> rests;         // q_0 ... q_{K+2}; trailing pair equals d
    std::vector<Int> coefficients;  // a_0 ... a_K; empty when q_0 == q_1
    std::vector<Int> orders;        // u_0 = u_1 = 1, u_{i+2} = a_i u_{i+1} + u_i
    Int d;
};

EuclidTrace euclid_trace(const Int& q0, const Int& q1);

struct PeriodIdentity {
    Int period;  // (q_0 + q_1) / d
    bool holds;  // (u_last + u_secondlast) * d == q_0 + q_1
};

PeriodIdentity period_identity(const EuclidTrace& t);

// Exponents of the alternating decomposition B^{beta_N} A^{alpha_N} ...
// B^{beta_1} A^{alpha_1} carrying (1,1) to (n,p).  alpha[k] holds
// alpha_{k+1}, likewise beta.  Only alpha_1 and beta_N may vanish.
struct CharacteristicSequences {
    std::vector<Int> alpha;
    std::vector<Int> beta;
};

CharacteristicSequences characteristic_sequences(const Int& n, const Int& p);

// The decomposition itself as a word; phi of it maps (1,1) to (n,p)
// columnwise.
Word decompose_to_word(const Int& n, const Int& p);

// Left-to-right peeling of a matrix with a nonnegative representative and
// determinant +1 into the unique positive A/B word.  Throws NotPositive.
Word factor_positive_matrix(const ProjectiveMatrix& m);

}  // namespace mcg3

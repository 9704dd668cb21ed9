#pragma once

#include <array>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcg3 {

using Int = boost::multiprecision::cpp_int;

// The four generators of the group we compute in.  A and B are the two
// elementary shears, Z the quarter turn, Y the axis reflection.  The
// half-turn T is not a separate generator: it expands to Y Z.
enum class Gen { A, B, Z, Y };

char gen_char(Gen g);

using Mod2Matrix = std::array<std::array<int, 2>, 2>;

// Permutation of the three marked points, stored as images: image[i] is the
// index (1-based) that point i+1 maps to.
struct MarkedPermutation {
    std::array<int, 3> image{1, 2, 3};

    bool is_identity() const { return image == std::array<int, 3>{1, 2, 3}; }
    bool operator==(const MarkedPermutation&) const = default;
    std::string str() const;
};

// 2x2 integer matrix modulo global sign, determinant +1 or -1.
//
// The stored representative is normalized: trace > 0, or trace == 0 and the
// first nonzero of (a, b, c) positive.  Equality and accessors refer to that
// representative.  Entries are arbitrary-precision.
class ProjectiveMatrix {
public:
    ProjectiveMatrix() : a_(1), b_(0), c_(0), d_(1) {}

    // Throws DeterminantInvalid unless ad - bc is +1 or -1.
    static ProjectiveMatrix make(Int a, Int b, Int c, Int d);

    static ProjectiveMatrix generator(Gen g);
    // Accepts 'A', 'B', 'Z', 'Y', 'T'; throws InvalidParams otherwise.
    static ProjectiveMatrix generator(char name);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    Int det() const { return a_ * d_ - b_ * c_; }
    Int trace_abs() const { return a_ + d_; }

    ProjectiveMatrix operator*(const ProjectiveMatrix& rhs) const;
    ProjectiveMatrix inverse() const;
    ProjectiveMatrix pow(const Int& e) const;

    // Largest eigenvalue (t + sqrt(t^2 - 4)) / 2.  Requires det +1 and
    // trace_abs >= 3; otherwise throws NotHyperbolic.  Relative error is far
    // below 1e-12 for any trace size (computed in extended precision).
    double leading_eigenvalue() const;
    // Natural log of the leading eigenvalue; same preconditions.
    double entropy_lower_bound() const;
    // |trace| as the displacement lower bound.
    Int nielsen_lower_bound() const { return trace_abs(); }

    Mod2Matrix reduce_mod2() const;
    // Action on the three marked points through the mod-2 reduction
    // (row-vector action; see induced_permutation tests for the table).
    MarkedPermutation induced_permutation() const;

    bool operator==(const ProjectiveMatrix&) const = default;
    std::string str() const;

private:
    ProjectiveMatrix(Int a, Int b, Int c, Int d, bool normalized);
    void normalize();

    Int a_, b_, c_, d_;
};

}  // namespace mcg3

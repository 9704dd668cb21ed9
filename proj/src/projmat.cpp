#include "mcg3/projmat.hpp"

#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mcg3/errors.hpp"

namespace mcg3 {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

char gen_char(Gen g) {
    switch (g) {
        case Gen::A: return 'A';
        case Gen::B: return 'B';
        case Gen::Z: return 'Z';
        case Gen::Y: return 'Y';
    }
    return '?';
}

std::string MarkedPermutation::str() const {
    std::ostringstream os;
    os << "(" << image[0] << " " << image[1] << " " << image[2] << ")";
    return os.str();
}

ProjectiveMatrix::ProjectiveMatrix(Int a, Int b, Int c, Int d, bool)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    normalize();
}

void ProjectiveMatrix::normalize() {
    Int tr = a_ + d_;
    bool flip = false;
    if (tr < 0) {
        flip = true;
    } else if (tr == 0) {
        if (a_ != 0)
            flip = a_ < 0;
        else if (b_ != 0)
            flip = b_ < 0;
        else
            flip = c_ < 0;
    }
    if (flip) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

ProjectiveMatrix ProjectiveMatrix::make(Int a, Int b, Int c, Int d) {
    Int det = a * d - b * c;
    if (det != 1 && det != -1) {
        std::ostringstream os;
        os << "determinant must be +1 or -1, got " << det;
        fail(errc::DeterminantInvalid, os.str());
    }
    return ProjectiveMatrix(std::move(a), std::move(b), std::move(c), std::move(d), true);
}

ProjectiveMatrix ProjectiveMatrix::generator(Gen g) {
    switch (g) {
        case Gen::A: return ProjectiveMatrix(1, 1, 0, 1, true);
        case Gen::B: return ProjectiveMatrix(1, 0, 1, 1, true);
        case Gen::Z: return ProjectiveMatrix(0, 1, -1, 0, true);
        case Gen::Y: return ProjectiveMatrix(-1, 0, 0, 1, true);
    }
    fail(errc::InvalidParams, "unknown generator");
}

ProjectiveMatrix ProjectiveMatrix::generator(char name) {
    switch (name) {
        case 'A': return generator(Gen::A);
        case 'B': return generator(Gen::B);
        case 'Z': return generator(Gen::Z);
        case 'Y': return generator(Gen::Y);
        case 'T': return generator(Gen::Y) * generator(Gen::Z);
    }
    fail(errc::InvalidParams, std::string("unknown generator '") + name + "'");
}

ProjectiveMatrix ProjectiveMatrix::operator*(const ProjectiveMatrix& rhs) const {
    return ProjectiveMatrix(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                            c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_, true);
}

ProjectiveMatrix ProjectiveMatrix::inverse() const {
    // Adjugate; the determinant sign is absorbed by projective normalization.
    return ProjectiveMatrix(d_, -b_, -c_, a_, true);
}

ProjectiveMatrix ProjectiveMatrix::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    ProjectiveMatrix acc;
    ProjectiveMatrix base = *this;
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

double ProjectiveMatrix::leading_eigenvalue() const {
    if (det() != 1)
        fail(errc::NotHyperbolic, "orientation-reversing matrix has no leading eigenvalue here");
    Int t = trace_abs();
    if (t < 3) {
        std::ostringstream os;
        os << "trace " << t << " is below the hyperbolic threshold 3";
        fail(errc::NotHyperbolic, os.str());
    }
    BigFloat tf(t);
    BigFloat lambda = (tf + sqrt(tf * tf - 4)) / 2;
    return lambda.convert_to<double>();
}

double ProjectiveMatrix::entropy_lower_bound() const {
    if (det() != 1)
        fail(errc::NotHyperbolic, "orientation-reversing matrix has no leading eigenvalue here");
    Int t = trace_abs();
    if (t < 3) {
        std::ostringstream os;
        os << "trace " << t << " is below the hyperbolic threshold 3";
        fail(errc::NotHyperbolic, os.str());
    }
    BigFloat tf(t);
    BigFloat lambda = (tf + sqrt(tf * tf - 4)) / 2;
    return log(lambda).convert_to<double>();
}

Mod2Matrix ProjectiveMatrix::reduce_mod2() const {
    auto bit = [](const Int& v) { return (v % 2) != 0 ? 1 : 0; };
    return {{{bit(a_), bit(b_)}, {bit(c_), bit(d_)}}};
}

MarkedPermutation ProjectiveMatrix::induced_permutation() const {
    Mod2Matrix m = reduce_mod2();
    // Marked points as nonzero mod-2 row vectors.
    static constexpr std::array<std::array<int, 2>, 3> points{{{1, 0}, {1, 1}, {0, 1}}};
    MarkedPermutation perm;
    for (int i = 0; i < 3; ++i) {
        std::array<int, 2> v = points[i];
        std::array<int, 2> w{(v[0] * m[0][0] + v[1] * m[1][0]) % 2,
                             (v[0] * m[0][1] + v[1] * m[1][1]) % 2};
        for (int j = 0; j < 3; ++j)
            if (w == points[j]) perm.image[i] = j + 1;
    }
    return perm;
}

std::string ProjectiveMatrix::str() const {
    std::ostringstream os;
    os << "[[" << a_ << ", " << b_ << "], [" << c_ << ", " << d_ << "]]";
    return os.str();
}

}  // namespace mcg3

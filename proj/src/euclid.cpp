#include "mcg3/euclid.hpp"

#include <sstream>

#include "mcg3/errors.hpp"

namespace mcg3 {

namespace {

void require_positive(const Int& q0, const Int& q1) {
    if (q0 < 1 || q1 < 1) {
        std::ostringstream os;
        os << "inputs must be positive, got (" << q0 << ", " << q1 << ")";
        fail(errc::InvalidParams, os.str());
    }
}

void require_coprime(const Int& n, const Int& p) {
    if (gcd(n, p) != 1) {
        std::ostringstream os;
        os << "(" << n << ", " << p << ") are not coprime";
        fail(errc::NotCoprime, os.str());
    }
}

}  // namespace

EuclidTrace euclid_trace(const Int& q0, const Int& q1) {
    require_positive(q0, q1);
    EuclidTrace t;
    t.rests = {q0, q1};
    while (t.rests[t.rests.size() - 2] != t.rests.back()) {
        const Int& qi = t.rests[t.rests.size() - 2];
        const Int& qj = t.rests.back();
        Int a = (qi - 1) / qj;
        t.coefficients.push_back(a);
        t.rests.push_back(qi - a * qj);
    }
    t.orders = {1, 1};
    for (const Int& a : t.coefficients)
        t.orders.push_back(a * t.orders[t.orders.size() - 1] + t.orders[t.orders.size() - 2]);
    t.d = t.rests.back();
    return t;
}

PeriodIdentity period_identity(const EuclidTrace& t) {
    Int q0 = t.rests[0];
    Int q1 = t.rests[1];
    const Int& ul = t.orders[t.orders.size() - 1];
    const Int& us = t.orders[t.orders.size() - 2];
    return {(q0 + q1) / t.d, (ul + us) * t.d == q0 + q1};
}

Word decompose_to_word(const Int& n, const Int& p) {
    require_positive(n, p);
    require_coprime(n, p);
    Word letters;
    Int a = n, b = p;
    while (!(a == 1 && b == 1)) {
        if (b > a) {
            Int k = (b - 1) / a;
            letters.push_back({Gen::B, k});
            b -= k * a;
        } else {
            Int k = (a - 1) / b;
            letters.push_back({Gen::A, k});
            a -= k * b;
        }
    }
    return letters;
}

CharacteristicSequences characteristic_sequences(const Int& n, const Int& p) {
    require_positive(n, p);
    require_coprime(n, p);
    Word letters = decompose_to_word(n, p);
    CharacteristicSequences cs;
    if (letters.empty()) {
        cs.alpha = {0};
        cs.beta = {0};
        return cs;
    }
    size_t pos = letters.size();
    while (pos > 0) {
        Int ak = 0, bk = 0;
        if (letters[pos - 1].gen == Gen::A) {
            ak = letters[pos - 1].exp;
            --pos;
        }
        if (pos > 0 && letters[pos - 1].gen == Gen::B) {
            bk = letters[pos - 1].exp;
            --pos;
        }
        cs.alpha.push_back(ak);
        cs.beta.push_back(bk);
    }
    return cs;
}

Word factor_positive_matrix(const ProjectiveMatrix& m) {
    if (m.det() != 1)
        fail(errc::NotPositive, "determinant -1 matrix has no positive factorization");
    if (m.a() < 0 || m.b() < 0 || m.c() < 0 || m.d() < 0)
        fail(errc::NotPositive, "no nonnegative representative: " + m.str());
    Int a = m.a(), b = m.b(), c = m.c(), d = m.d();
    Word out;
    while (!(a == 1 && b == 0 && c == 0 && d == 1)) {
        if (c == 0) {
            // a = d = 1, pure shear.
            out.push_back({Gen::A, b});
            break;
        }
        if (b == 0) {
            out.push_back({Gen::B, c});
            break;
        }
        if (a >= c && b >= d) {
            Int k1 = a / c, k2 = b / d;
            Int k = k1 < k2 ? k1 : k2;
            out.push_back({Gen::A, k});
            a -= k * c;
            b -= k * d;
        } else if (c >= a && d >= b) {
            Int k1 = c / a, k2 = d / b;
            Int k = k1 < k2 ? k1 : k2;
            out.push_back({Gen::B, k});
            c -= k * a;
            d -= k * b;
        } else {
            fail(errc::NotPositive, "matrix is not a positive product: " + m.str());
        }
    }
    return normalize_word(out);
}

}  // namespace mcg3

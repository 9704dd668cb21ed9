#pragma once

#include <functional>
#include <random>
#include <string>

#include "mcg3/errors.hpp"
#include "mcg3/word.hpp"

namespace mcg3::testing {

// Runs f and reports the DomainError code it threw, empty string if none.
template <class F>
std::string thrown_code(F&& f) {
    try {
        f();
    } catch (const DomainError& e) {
        return e.code();
    }
    return {};
}

inline Gen pick_gen(std::mt19937& rng, bool allow_reflect) {
    switch (rng() % (allow_reflect ? 4u : 3u)) {
        case 0: return Gen::A;
        case 1: return Gen::B;
        case 2: return Gen::Z;
        default: return Gen::Y;
    }
}

// Free-form word of at most max_len letters, exponents in [-3, 3] \ {0}.
inline Word random_word(std::mt19937& rng, int max_len, bool allow_reflect = true) {
    Word w;
    int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
    for (int i = 0; i < len; ++i) {
        Gen g = pick_gen(rng, allow_reflect);
        Int e = 1;
        if (g == Gen::A || g == Gen::B) {
            e = static_cast<int>(rng() % 7) - 3;
            if (e == 0) e = 1;
        }
        w.push_back({g, e});
    }
    return normalize_word(w);
}

// Every word of exactly the given flat length over A, B, Z, Y.
inline void for_each_flat_word(int len, const std::function<void(const Word&)>& fn) {
    static const Gen kGens[4] = {Gen::A, Gen::B, Gen::Z, Gen::Y};
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    for (;;) {
        Word w;
        for (int d : digits) w.push_back({kGens[d], 1});
        fn(w);
        int i = len - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == 3) {
            digits[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++digits[static_cast<std::size_t>(i)];
    }
}

// Positive A/B word of at most max_len flat letters.
inline Word random_positive_word(std::mt19937& rng, int max_len) {
    Word w;
    int len = static_cast<int>(rng() % static_cast<unsigned>(max_len)) + 1;
    for (int i = 0; i < len; ++i) w.push_back({rng() % 2 ? Gen::A : Gen::B, 1});
    return normalize_word(w);
}

}  // namespace mcg3::testing

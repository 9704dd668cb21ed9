#include "mcg3/circulation.hpp"

#include <cstdlib>

#include "mcg3/errors.hpp"
#include "mcg3/projmat.hpp"

namespace mcg3 {

CirculationCode word_to_code(const Word& w) {
    CanonicalForm f = canonicalize(w);
    if (f.sigma != 0)
        fail(errc::OrientationReversing,
             "orientation-reversing words have no circulation code");
    CirculationCode code;
    code.pre_z = f.pre_z;
    code.post_z = f.post_z;
    for (const Letter& l : f.core)
        code.runs.push_back({l.gen == Gen::A ? Turn::l : Turn::r, l.exp});
    return code;
}

Word code_to_word(const CirculationCode& code) {
    Word w;
    if (code.pre_z) w.push_back({Gen::Z, 1});
    for (const TurnRun& run : code.runs)
        w.push_back({run.turn == Turn::l ? Gen::A : Gen::B, run.count});
    if (code.post_z) w.push_back({Gen::Z, 1});
    return normalize_word(w);
}

std::string render_code(const CirculationCode& code) {
    std::string out;
    auto tok = [&](const char* t) {
        if (!out.empty()) out += ' ';
        out += t;
    };
    if (code.pre_z) tok("Z");
    for (const TurnRun& run : code.runs)
        for (Int i = 0; i < run.count; ++i) tok(run.turn == Turn::l ? "l" : "r");
    if (code.post_z) tok("Z");
    return out;
}

CirculationCode parse_code(const std::string& text) {
    CirculationCode code;
    bool seen_turn = false;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (c == 'Z') {
            if (code.post_z)
                fail(errc::SyntaxError,
                     "misplaced Z at byte " + std::to_string(i));
            if (!seen_turn && !code.pre_z)
                code.pre_z = 1;
            else
                code.post_z = 1;
            ++i;
            continue;
        }
        if (c == 'l' || c == 'r') {
            if (code.post_z)
                fail(errc::SyntaxError,
                     "turn after closing Z at byte " + std::to_string(i));
            Turn t = c == 'l' ? Turn::l : Turn::r;
            if (!code.runs.empty() && code.runs.back().turn == t)
                code.runs.back().count += 1;
            else
                code.runs.push_back({t, 1});
            seen_turn = true;
            ++i;
            continue;
        }
        fail(errc::SyntaxError,
             std::string("unexpected character '") + c + "' at byte " +
                 std::to_string(i));
    }
    return code;
}

namespace {

// Rewrites the canonical core right to left into even shear powers, letter
// parity s counting the quarter turns introduced so far. An even run seen
// through s turns contributes its raw exponent to its own letter (s = 0)
// or minus the exponent to the other letter (s = 1). An odd run g^e is
// padded to g^{e+1}, a turn enters, and the run to the left donates one
// letter; the donation cascades through the neighbouring run, so the whole
// cascade is applied in one step per run.
struct EvenPowerSums {
    Int acc[2] = {0, 0};
    int s = 0;

    void contribute(Gen g, const Int& e, int parity) {
        int slot = g == Gen::A ? 0 : 1;
        if (parity == 0)
            acc[slot] += e;
        else
            acc[slot ^ 1] -= e;
    }

    void run(Word left) {
        while (!left.empty()) {
            Letter cur = left.back();
            left.pop_back();
            for (;;) {
                if (cur.exp % 2 == 0) {
                    contribute(cur.gen, cur.exp, s);
                    break;
                }
                contribute(cur.gen, cur.exp + 1, s);
                if (left.empty()) std::abort();
                Letter nb = left.back();
                left.pop_back();
                Int rest = nb.exp - 1;
                contribute(cur.gen, (rest + 1) / 2 * 2, s ^ 1);
                contribute(cur.gen, rest / 2 * 2, s);
                if (nb.exp % 2 != 0) s ^= 1;
                if (!left.empty() && left.back().gen == cur.gen) {
                    cur = left.back();
                    left.pop_back();
                    cur.exp += 1;
                } else {
                    cur = {cur.gen, 1};
                }
            }
        }
    }
};

}  // namespace

LinkingNumbers linking_numbers(const Word& w) {
    Mod2Matrix r2 = phi(w).reduce_mod2();
    if (r2[0][0] != 1 || r2[0][1] != 0 || r2[1][0] != 0 || r2[1][1] != 1)
        fail(errc::NotPurePermutationTrivial,
             "mod-2 action permutes the marked points");
    CanonicalForm f = canonicalize(w);
    EvenPowerSums sums;
    sums.s = f.post_z;
    sums.run(f.core);
    sums.s ^= f.pre_z;
    if (sums.s != 0) std::abort();
    return {sums.acc[0], sums.acc[1]};
}

}  // namespace mcg3

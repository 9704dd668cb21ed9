#include "mcg3/word.hpp"

#include <cctype>
#include <sstream>

#include "mcg3/errors.hpp"

namespace mcg3 {

namespace {

bool involution(Gen g) { return g == Gen::Z || g == Gen::Y; }

void push_letter(Word& out, Gen gen, Int exp) {
    if (involution(gen)) {
        exp = abs(exp) % 2;
        if (exp == 0) return;
    }
    if (exp == 0) return;
    if (!out.empty() && out.back().gen == gen) {
        out.back().exp += exp;
        if (involution(gen)) out.back().exp = abs(out.back().exp) % 2;
        if (out.back().exp == 0) out.pop_back();
        return;
    }
    out.push_back({gen, std::move(exp)});
}

}  // namespace

Word normalize_word(const Word& raw) {
    Word out;
    for (const Letter& l : raw) push_letter(out, l.gen, l.exp);
    return out;
}

Word parse_word(const std::string& text) {
    Word out;
    size_t i = 0;
    const size_t n = text.size();
    auto bad = [&](size_t at, const std::string& what) {
        std::ostringstream os;
        os << what << " at byte " << at;
        fail(errc::SyntaxError, os.str());
    };
    while (i < n) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
            ++i;
            continue;
        }
        if (ch != 'A' && ch != 'B' && ch != 'Z' && ch != 'Y' && ch != 'T')
            bad(i, std::string("unexpected character '") + ch + "'");
        ++i;
        Int exp = 1;
        if (i < n && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < n && text[i] == '-') {
                neg = true;
                ++i;
            }
            if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                bad(i, "exponent digits expected");
            std::string digits;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
            exp = Int(digits);
            if (neg) exp = -exp;
        }
        switch (ch) {
            case 'A': push_letter(out, Gen::A, exp); break;
            case 'B': push_letter(out, Gen::B, exp); break;
            case 'Z': push_letter(out, Gen::Z, exp); break;
            case 'Y': push_letter(out, Gen::Y, exp); break;
            case 'T': {
                // T = Y Z, an involution: only the exponent's parity matters.
                if (abs(exp) % 2 == 1) {
                    push_letter(out, Gen::Y, 1);
                    push_letter(out, Gen::Z, 1);
                }
                break;
            }
        }
    }
    return out;
}

std::string render_word(const Word& w) {
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : w) {
        if (!first) os << " ";
        first = false;
        os << gen_char(l.gen);
        if (l.exp != 1) os << "^" << l.exp;
    }
    return os.str();
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    for (const Letter& l : b) push_letter(out, l.gen, l.exp);
    return out;
}

Word word_inverse(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        push_letter(out, it->gen, involution(it->gen) ? it->exp : -it->exp);
    return out;
}

ProjectiveMatrix phi(const Word& w) {
    ProjectiveMatrix m;
    for (const Letter& l : w) m = m * ProjectiveMatrix::generator(l.gen).pow(l.exp);
    return m;
}

ProjectiveMatrix turbulence_from_displacements(const std::vector<Move>& moves,
                                               bool orientation_preserving) {
    if (moves.empty() && orientation_preserving)
        fail(errc::InvalidParams,
             "empty displacement sequence for an orientation-preserving map");
    ProjectiveMatrix m = orientation_preserving
                             ? ProjectiveMatrix()
                             : ProjectiveMatrix::generator(Gen::Y);
    for (Move mv : moves)
        m = ProjectiveMatrix::generator(mv == Move::Left ? Gen::A : Gen::B) * m;
    return m;
}

}  // namespace mcg3

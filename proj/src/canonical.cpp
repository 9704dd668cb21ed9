#include "mcg3/canonical.hpp"

#include <cstdlib>

#include "mcg3/errors.hpp"

namespace mcg3 {

namespace {

int idx(Gen g) { return g == Gen::A ? 0 : 1; }
Gen other(Gen g) { return g == Gen::A ? Gen::B : Gen::A; }

struct ConjAtom {
    Gen gen;
    int sign;
};

// All relations below are found numerically: the needed product is computed
// as a matrix and matched against the four shear atoms.
struct Tables {
    ConjAtom z_conj[2];  // Z g Z^{-1}
    ConjAtom y_conj[2];  // Y g Y^{-1}
    Gen pos_neg[2];      // x (other x)^{-1} = result Z
    Gen neg_pos[2];      // x^{-1} (other x) = Z result
};

const Tables& tables() {
    static const Tables t = [] {
        auto m = [](Gen g) { return ProjectiveMatrix::generator(g); };
        auto atom = [&](const ProjectiveMatrix& target) -> ConjAtom {
            for (Gen g : {Gen::A, Gen::B})
                for (int s : {1, -1})
                    if (m(g).pow(s) == target) return {g, s};
            std::abort();  // the lookups below always land on a shear atom
        };
        Tables tb{};
        ProjectiveMatrix zm = m(Gen::Z), ym = m(Gen::Y);
        for (Gen g : {Gen::A, Gen::B}) {
            tb.z_conj[idx(g)] = atom(zm * m(g) * zm.inverse());
            tb.y_conj[idx(g)] = atom(ym * m(g) * ym.inverse());
        }
        for (Gen x : {Gen::A, Gen::B}) {
            Gen y = other(x);
            ConjAtom pn = atom(m(x) * m(y).inverse() * zm.inverse());
            ConjAtom np = atom(zm.inverse() * m(x).inverse() * m(y));
            if (pn.sign != 1 || np.sign != 1) std::abort();
            tb.pos_neg[idx(x)] = pn.gen;
            tb.neg_pos[idx(x)] = np.gen;
        }
        if (!(ym * zm == zm * ym)) std::abort();
        return tb;
    }();
    return t;
}

// Applies Z . w = conj(w) . Z  (an involution: its own inverse).
Word conj_z(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        const ConjAtom& c = tables().z_conj[idx(l.gen)];
        out.push_back({c.gen, c.sign * l.exp});
    }
    return out;
}

Word conj_y(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        const ConjAtom& c = tables().y_conj[idx(l.gen)];
        out.push_back({c.gen, c.sign * l.exp});
    }
    return out;
}

struct Fuel {
    long long left;
    void tick() {
        if (--left < 0)
            fail(errc::RewriteFuelExceeded, "rewriting exceeded its fuel budget");
    }
};

}  // namespace

CanonicalForm canonicalize(const Word& input) {
    Word w = normalize_word(input);
    Fuel fuel{64 * (static_cast<long long>(w.size()) + 4)};

    // Sweep right to left, keeping the processed suffix in the shape
    // flat . Z^z . Y^y.  Prepending Z or Y conjugates flat wholesale and
    // toggles the matching bit; shears just join flat.
    Word flat;
    int z = 0, y = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->gen == Gen::Y) {
            flat = conj_y(flat);
            y ^= 1;
            fuel.tick();
        } else if (it->gen == Gen::Z) {
            flat = conj_z(flat);
            z ^= 1;
            fuel.tick();
        } else {
            Word one{*it};
            flat = concat(one, flat);
        }
    }

    // Sign resolution: remove mixed-sign boundaries left to right, each
    // elimination merging two sign runs; an all-negative residue mirrors
    // through a Z . Z insertion.
    int pre = 0;
    for (;;) {
        flat = normalize_word(flat);
        bool has_neg = false, has_pos = false;
        for (const Letter& l : flat) (l.exp < 0 ? has_neg : has_pos) = true;
        if (!has_neg) break;
        if (!has_pos) {
            flat = conj_z(flat);
            pre ^= 1;
            z ^= 1;
            fuel.tick();
            break;
        }
        size_t i = 0;
        while ((flat[i].exp < 0) == (flat[i + 1].exp < 0)) ++i;
        if (flat[i].exp > 0) {
            // x^a y^{-b} = x^{a-1} (x y^{-1}) y^{-(b-1)}; the created Z
            // sweeps out to the right end, flipping what it passes.
            Gen x = flat[i].gen;
            flat[i].exp -= 1;
            flat[i + 1].exp += 1;
            Word head(flat.begin(), flat.begin() + i + 1);
            head.push_back({tables().pos_neg[idx(x)], 1});
            Word tail(flat.begin() + i + 1, flat.end());
            flat = concat(head, conj_z(tail));
            z ^= 1;
        } else {
            // x^{-a} y^b = x^{-(a-1)} (x^{-1} y) y^{b-1}; the created Z
            // bubbles out through the (all negative) prefix to the left end.
            Gen x = flat[i].gen;
            flat[i].exp += 1;
            flat[i + 1].exp -= 1;
            Word head(flat.begin(), flat.begin() + i + 1);
            Word tail(flat.begin() + i + 1, flat.end());
            Word mid{Letter{tables().neg_pos[idx(x)], 1}};
            flat = concat(conj_z(head), concat(mid, tail));
            pre ^= 1;
        }
        fuel.tick();
    }

    CanonicalForm f;
    f.pre_z = pre;
    f.core = std::move(flat);
    f.post_z = z;
    f.sigma = y;
    if (f.core.empty()) {
        f.pre_z ^= f.post_z;
        f.post_z = 0;
    }
    return f;
}

Word render(const CanonicalForm& f) {
    Word w;
    if (f.pre_z) w.push_back({Gen::Z, 1});
    for (const Letter& l : f.core) w.push_back(l);
    if (f.post_z) w.push_back({Gen::Z, 1});
    if (f.sigma) w.push_back({Gen::Y, 1});
    return w;
}

CanonicalForm compose(const CanonicalForm& x, const CanonicalForm& y) {
    return canonicalize(concat(render(x), render(y)));
}

CanonicalForm invert(const CanonicalForm& f) {
    return canonicalize(word_inverse(render(f)));
}

std::vector<std::pair<Word, Word>> zip_rule_pairs() {
    const Tables& t = tables();
    std::vector<std::pair<Word, Word>> out;
    auto letter = [](Gen g, long long e) { return Letter{g, Int(e)}; };
    for (Gen g : {Gen::A, Gen::B}) {
        for (int s : {1, -1}) {
            // Z g^s = conj^s Z and Y g^s = conj^s Y
            const ConjAtom& zc = t.z_conj[idx(g)];
            out.push_back({{letter(Gen::Z, 1), letter(g, s)},
                           {letter(zc.gen, zc.sign * s), letter(Gen::Z, 1)}});
            const ConjAtom& yc = t.y_conj[idx(g)];
            out.push_back({{letter(Gen::Y, 1), letter(g, s)},
                           {letter(yc.gen, yc.sign * s), letter(Gen::Y, 1)}});
        }
        Gen h = other(g);
        out.push_back({{letter(g, 1), letter(h, -1)},
                       {letter(t.pos_neg[idx(g)], 1), letter(Gen::Z, 1)}});
        out.push_back({{letter(g, -1), letter(h, 1)},
                       {letter(Gen::Z, 1), letter(t.neg_pos[idx(g)], 1)}});
    }
    // The involutions and the commuting pair.
    out.push_back({{letter(Gen::Z, 1), letter(Gen::Z, 1)}, {}});
    out.push_back({{letter(Gen::Y, 1), letter(Gen::Y, 1)}, {}});
    out.push_back({{letter(Gen::Y, 1), letter(Gen::Z, 1)},
                   {letter(Gen::Z, 1), letter(Gen::Y, 1)}});
    return out;
}

}  // namespace mcg3

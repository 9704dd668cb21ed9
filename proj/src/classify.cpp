#include "mcg3/classify.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mcg3/errors.hpp"

namespace mcg3 {

namespace {

Gen other(Gen g) { return g == Gen::A ? Gen::B : Gen::A; }

bool involution(Gen g) { return g == Gen::Z || g == Gen::Y; }

// Merge adjacent runs including around the wrap, treating the sequence as a
// cyclic word (the wrap merge is a rotation, hence a conjugation).
void cyclic_normalize(Word& w) {
    for (;;) {
        w = normalize_word(w);
        if (w.size() < 2 || w.front().gen != w.back().gen) break;
        Letter f = w.front();
        w.erase(w.begin());
        w.back().exp += f.exp;
        if (involution(f.gen)) w.back().exp = abs(w.back().exp) % 2;
        if (w.back().exp == 0) w.pop_back();
    }
}

// Compares two rotations of the same cyclic run word letter by letter
// without flattening (exponents may be huge).
bool rotation_less(const Word& w, size_t r1, size_t r2) {
    const size_t n = w.size();
    Int total = 0;
    for (const Letter& l : w) total += l.exp;
    size_t i1 = r1, i2 = r2;
    Int c1 = w[i1].exp, c2 = w[i2].exp;
    Int done = 0;
    while (done < total) {
        Gen g1 = w[i1].gen, g2 = w[i2].gen;
        if (g1 != g2) return g1 == Gen::A;
        Int step = c1 < c2 ? c1 : c2;
        Int room = total - done;
        if (room < step) step = room;
        c1 -= step;
        c2 -= step;
        done += step;
        if (c1 == 0) {
            i1 = (i1 + 1) % n;
            c1 = w[i1].exp;
        }
        if (c2 == 0) {
            i2 = (i2 + 1) % n;
            c2 = w[i2].exp;
        }
    }
    return false;
}

Word lex_min_rotation(const Word& w) {
    size_t best = 0;
    for (size_t r = 1; r < w.size(); ++r)
        if (rotation_less(w, r, best)) best = r;
    Word out(w.begin() + best, w.end());
    out.insert(out.end(), w.begin(), w.begin() + best);
    return out;
}

// Removes every quarter turn from a cyclic positive word using the three
// conjugation moves (g u g)Z ~ u g', (x u y)Z ~ u Z, and rotation; ends in
// a positive word, a shear power, one of the four turn-adjacent shapes, a
// bare Z, or nothing.
Word reduce_cyclic(Word cyc) {
    for (;;) {
        cyclic_normalize(cyc);
        if (cyc.empty()) return {};
        if (cyc.size() == 1) {
            Letter l = cyc[0];
            if (l.gen == Gen::Z || l.gen == Gen::Y) return {l};
            if (l.exp < 0) return {{other(l.gen), -l.exp}};
            return {l};
        }
        size_t zi = cyc.size();
        for (size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i].gen == Gen::Z) {
                zi = i;
                break;
            }
        if (zi == cyc.size()) return lex_min_rotation(cyc);
        std::rotate(cyc.begin(), cyc.begin() + zi + 1, cyc.end());
        if (cyc.size() == 2) {
            // single shear run against the turn
            Letter& h = cyc.front();
            if (h.exp == 1) return {{h.gen, 1}, {Gen::Z, 1}};
            h.exp -= 2;
            cyc.back() = {other(h.gen), 1};
            continue;
        }
        Letter& h = cyc.front();
        Letter& t = cyc[cyc.size() - 2];
        if (h.gen == t.gen) {
            h.exp -= 1;
            t.exp -= 1;
            cyc.back() = {other(h.gen), 1};
        } else {
            Int s = h.exp < t.exp ? h.exp : t.exp;
            h.exp -= s;
            t.exp -= s;
        }
    }
}

}  // namespace

Word conjugacy_reduce(const Word& w) {
    CanonicalForm f = canonicalize(w);
    if (f.sigma == 1) return render(f);
    Word cyc;
    if (f.pre_z) cyc.push_back({Gen::Z, 1});
    for (const Letter& l : f.core) cyc.push_back(l);
    if (f.post_z) cyc.push_back({Gen::Z, 1});
    return reduce_cyclic(std::move(cyc));
}

TraceClass classify(const Word& w) {
    ProjectiveMatrix m = phi(w);
    Int t = m.trace_abs();
    bool reversing = m.det() == -1;
    TraceClass out{};
    if (t == 0) {
        out.tag = TraceTag::FiniteOrder2;
        return out;
    }
    if (!reversing && t == 1) {
        out.tag = TraceTag::FiniteOrder3;
        return out;
    }
    if (!reversing && t == 2) {
        out.tag = TraceTag::Parabolic;
        Word rep = conjugacy_reduce(w);
        if (rep.empty()) {
            out.parabolic_letter = Gen::A;
            out.parabolic_power = 0;
        } else {
            out.parabolic_letter = rep[0].gen;
            out.parabolic_power = rep[0].exp;
        }
        return out;
    }
    out.tag = TraceTag::Turbulent;
    out.representative = conjugacy_reduce(w);
    out.nielsen_bound = t;
    if (!reversing) {
        out.lambda = m.leading_eigenvalue();
        out.entropy = m.entropy_lower_bound();
    } else {
        // Reversing classes with nonzero trace stretch like the root of
        // their square; the eigenvalue formula picks up +4 from det -1.
        using BigFloat = boost::multiprecision::cpp_bin_float_100;
        BigFloat tf(t);
        BigFloat lambda = (tf + sqrt(tf * tf + 4)) / 2;
        out.lambda = lambda.convert_to<double>();
        out.entropy = log(lambda).convert_to<double>();
    }
    return out;
}

}  // namespace mcg3

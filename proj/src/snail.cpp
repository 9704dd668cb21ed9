#include "mcg3/snail.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "mcg3/errors.hpp"
#include "mcg3/euclid.hpp"

namespace mcg3 {

namespace {

// Radii E(f/2) - f/2 + 1/2 + i for 0 <= i <= E((f-1)/2): an even diameter
// starts at 1/2, an odd one contributes the radius-0 center marker.
void add_family(std::vector<HalfCircle>& arcs, const Rat& center, const Int& f, int side) {
    if (f == 0) return;
    Rat base = f % 2 == 0 ? Rat(1, 2) : Rat(0);
    Int top = (f - 1) / 2;
    for (Int i = 0; i <= top; ++i)
        arcs.push_back({center, base + Rat(i), side, ArcColor::Green});
}

struct Traversal {
    std::vector<Rat> points;            // landings including the start
    std::vector<std::size_t> step_arc;  // arc index per step
    std::vector<int> step_side;
    std::ptrdiff_t free_landing = -1;   // points index of the split chamber landing
    std::ptrdiff_t junction_step = -1;  // step index of the middle arc when nothing splits
};

// Chains the real arcs endpoint to endpoint from the end with the smaller
// coordinate.  Requires coprime n, p >= 1; the arcs then form one open
// curve whose ends are the centers of the two odd families.  The innermost
// arc over the remaining (even-family) center is emitted as two half steps
// landing on that center; when both outer families are odd there is no such
// arc and the innermost emerging arc is recorded as the junction instead.
Traversal traverse(const Snail& s) {
    std::map<Rat, std::vector<std::size_t>> touch;
    for (std::size_t i = 0; i < s.arcs.size(); ++i) {
        if (s.arcs[i].radius == 0) continue;
        Rat lo = s.arcs[i].center - s.arcs[i].radius;
        Rat hi = s.arcs[i].center + s.arcs[i].radius;
        touch[lo].push_back(i);
        touch[hi].push_back(i);
    }

    bool split = s.n % 2 == 0 || s.p % 2 == 0;
    Rat special_center = s.n % 2 == 0 ? s.z1 : (s.p % 2 == 0 ? s.z3 : s.z2);
    std::size_t special = s.arcs.size();
    for (std::size_t i = 0; i < s.arcs.size(); ++i)
        if (s.arcs[i].radius == Rat(1, 2) && s.arcs[i].center == special_center) special = i;
    if (special == s.arcs.size()) std::abort();

    std::vector<Rat> ends;
    for (const auto& [coord, ids] : touch)
        if (ids.size() == 1) ends.push_back(coord);
    if (ends.size() != 2) std::abort();

    Traversal t;
    std::vector<char> used(s.arcs.size(), 0);
    Rat cur = ends.front();
    t.points.push_back(cur);
    for (;;) {
        std::size_t id = s.arcs.size();
        for (std::size_t cand : touch[cur])
            if (!used[cand]) id = cand;
        if (id == s.arcs.size()) break;
        used[id] = 1;
        const HalfCircle& a = s.arcs[id];
        Rat lo = a.center - a.radius;
        Rat hi = a.center + a.radius;
        Rat other = cur == lo ? hi : lo;
        if (split && id == special) {
            t.points.push_back(a.center);
            t.step_arc.push_back(id);
            t.step_side.push_back(a.side);
            t.free_landing = static_cast<std::ptrdiff_t>(t.points.size()) - 1;
        }
        if (!split && id == special)
            t.junction_step = static_cast<std::ptrdiff_t>(t.step_arc.size());
        t.points.push_back(other);
        t.step_arc.push_back(id);
        t.step_side.push_back(a.side);
        cur = other;
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i] && s.arcs[i].radius != 0) std::abort();
    return t;
}

// Walks the curve, paints the stretch holding the image of the first marked
// point green and the rest red, and tallies the wall crossings per side.
// The chamber (the split pair, or the middle junction arc) always goes
// green.  induced_permutation reads a word as successive letter
// applications, which is the inverse of the composite the matrix product
// realizes, so the image of point 1 is looked up as a preimage.
ColorSplit traverse_and_color(Snail& s) {
    Traversal t = traverse(s);
    Word w = decompose_to_word(s.n, s.p);
    MarkedPermutation perm = phi(w).induced_permutation();
    int pre = 0;
    for (int k = 0; k < 3; ++k)
        if (perm.image[static_cast<std::size_t>(k)] == 1) pre = k;
    Rat green_marker = pre == 0 ? s.z1 : (pre == 1 ? s.z2 : s.z3);
    bool green_first = t.points.front() == green_marker;
    if (!green_first && t.points.back() != green_marker) std::abort();

    std::size_t steps = t.step_arc.size();
    std::vector<char> green_step(steps, 0);
    std::vector<char> green_point(t.points.size(), 0);
    if (t.free_landing >= 0) {
        std::size_t fl = static_cast<std::size_t>(t.free_landing);
        for (std::size_t i = 0; i < steps; ++i)
            green_step[i] = green_first ? i <= fl : i + 1 >= fl;
        for (std::size_t i = 0; i < t.points.size(); ++i)
            green_point[i] = green_first ? i < fl : i > fl;
    } else {
        std::size_t js = static_cast<std::size_t>(t.junction_step);
        for (std::size_t i = 0; i < steps; ++i)
            green_step[i] = green_first ? i <= js : i >= js;
        for (std::size_t i = 0; i < t.points.size(); ++i)
            green_point[i] = green_first ? i <= js : i > js;
    }

    for (std::size_t i = 0; i < steps; ++i)
        s.arcs[t.step_arc[i]].color = green_step[i] ? ArcColor::Green : ArcColor::Red;
    for (HalfCircle& a : s.arcs) {
        if (a.radius != 0) continue;
        if (a.center == t.points.front())
            a.color = green_step.front() ? ArcColor::Green : ArcColor::Red;
        else if (a.center == t.points.back())
            a.color = green_step.back() ? ArcColor::Green : ArcColor::Red;
    }

    ColorSplit split{0, 0, 0, 0};
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        if (t.free_landing >= 0 && i == static_cast<std::size_t>(t.free_landing)) continue;
        bool left = t.points[i] < 0;
        if (green_point[i])
            (left ? split.g1 : split.g2) += 1;
        else
            (left ? split.r1 : split.r2) += 1;
    }
    return split;
}

double to_dbl(const Rat& r) { return r.convert_to<double>(); }

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

Snail build_snail(const Int& n, const Int& p) {
    if (n == 0 && p == 0) fail(errc::InvalidParams, "SN(0;0) has no arcs");
    Int nn = n, pp = p;
    if (nn < 0 || (nn == 0 && pp < 0)) {
        nn = -nn;
        pp = -pp;
    }
    bool reflected = pp < 0;
    if (reflected) pp = -pp;

    Snail s;
    s.n = nn;
    s.p = pp;
    s.z1 = Rat(Int(-nn), Int(2));
    s.z2 = Rat(Int(pp - nn), Int(2));
    s.z3 = Rat(pp, Int(2));
    add_family(s.arcs, s.z1, nn, -1);
    add_family(s.arcs, s.z3, pp, -1);
    add_family(s.arcs, s.z2, nn + pp, +1);
    if (reflected) {
        for (HalfCircle& a : s.arcs) a.side = -a.side;
        s.visible_left_to_right = false;
    }

    // Two colors only make sense for a connected two-ended snail; the pure
    // segment families keep their own single color, everything else green.
    if (s.n == 0 && s.p > 0) {
        for (HalfCircle& a : s.arcs) a.color = ArcColor::Red;
    } else if (s.n > 0 && s.p > 0 && gcd(s.n, s.p) == 1) {
        traverse_and_color(s);
    }
    return s;
}

ColorSplit split_colors(const Int& n, const Int& p) {
    Int nn = n, pp = p;
    if (nn < 0 || (nn == 0 && pp < 0)) {
        nn = -nn;
        pp = -pp;
    }
    if (gcd(nn, pp) != 1) fail(errc::NotCoprime, "color splitting needs coprime parameters");
    if (nn <= 0 || pp <= 0)
        fail(errc::InvalidParams, "color splitting needs both parameters positive");
    Snail s = build_snail(nn, pp);
    return traverse_and_color(s);
}

std::pair<Int, Int> act(const Word& w, const Int& n, const Int& p) {
    ProjectiveMatrix m = phi(w);
    Int nn = m.a() * n + m.b() * p;
    Int pp = m.c() * n + m.d() * p;
    if (nn < 0 || (nn == 0 && pp < 0)) {
        nn = -nn;
        pp = -pp;
    }
    return {nn, pp};
}

SnailComponents components(const Snail& s) {
    std::vector<std::size_t> real;
    for (std::size_t i = 0; i < s.arcs.size(); ++i)
        if (s.arcs[i].radius != 0) real.push_back(i);
    if (real.empty()) return {gcd(s.n, s.p) == 1, 1};

    std::vector<std::size_t> parent(real.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    std::map<Rat, std::vector<std::size_t>> touch;
    for (std::size_t k = 0; k < real.size(); ++k) {
        const HalfCircle& a = s.arcs[real[k]];
        Rat lo = a.center - a.radius;
        Rat hi = a.center + a.radius;
        touch[lo].push_back(k);
        touch[hi].push_back(k);
    }
    std::size_t loose_ends = 0;
    for (const auto& [coord, ids] : touch) {
        if (ids.size() == 1) ++loose_ends;
        for (std::size_t k = 1; k < ids.size(); ++k)
            parent[find(ids[k])] = find(ids[0]);
    }
    std::size_t roots = 0;
    for (std::size_t k = 0; k < real.size(); ++k)
        if (find(k) == k) ++roots;
    return {roots == 1 && loose_ends == 2, Int(roots)};
}

CrossingSequence crossing_sequence(const Snail& s) {
    if (gcd(s.n, s.p) != 1)
        fail(errc::NotCoprime, "snail splits into closed pieces unless the parameters are coprime");
    if (s.n == 0 || s.p == 0)
        fail(errc::InvalidParams, "degenerate snail with merged marked points has no traversal");
    Traversal t = traverse(s);
    std::vector<Excursion> exc;
    exc.reserve(t.step_side.size());
    for (std::size_t i = 0; i < t.step_side.size(); ++i)
        exc.push_back({t.step_side[i], t.points[i + 1]});
    return CrossingSequence({s.z1, s.z2, s.z3}, t.points.front(), std::move(exc));
}

std::string render_svg(const Snail& s, const SvgOptions& opts) {
    double sc = opts.scale;
    double lo = to_dbl(s.z1), hi = to_dbl(s.z3), top = 0.5;
    for (const HalfCircle& a : s.arcs) {
        lo = std::min(lo, to_dbl(a.center - a.radius));
        hi = std::max(hi, to_dbl(a.center + a.radius));
        top = std::max(top, to_dbl(a.radius));
    }
    double x0 = (lo - 1) * sc, x1 = (hi + 1) * sc;
    double y = (top + 1) * sc;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(x0) + " " + fmt(-y) +
           " " + fmt(x1 - x0) + " " + fmt(2 * y) + "\">\n";
    out +=
        "<style>.axis{stroke:#888888;stroke-width:1}"
        ".green{stroke:#1a7f37;stroke-width:2;fill:none}"
        ".red{stroke:#c03232;stroke-width:2;fill:none}"
        ".marked{fill:#101010;stroke:none}</style>\n";
    out += "<line class=\"axis\" x1=\"" + fmt(x0) + "\" y1=\"0\" x2=\"" + fmt(x1) +
           "\" y2=\"0\"/>\n";
    for (const HalfCircle& a : s.arcs) {
        if (a.radius == 0) continue;  // center markers render with the dots below
        double xa = to_dbl(a.center - a.radius) * sc;
        double xb = to_dbl(a.center + a.radius) * sc;
        double r = to_dbl(a.radius) * sc;
        out += std::string("<path class=\"") +
               (a.color == ArcColor::Green ? "green" : "red") + "\" d=\"M " + fmt(xa) +
               " 0 A " + fmt(r) + " " + fmt(r) + " 0 0 " + (a.side > 0 ? "1" : "0") + " " +
               fmt(xb) + " 0\"/>\n";
    }
    for (const Rat& z : {s.z1, s.z2, s.z3})
        out += "<circle class=\"marked\" cx=\"" + fmt(to_dbl(z) * sc) +
               "\" cy=\"0\" r=\"" + fmt(0.08 * sc) + "\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace mcg3

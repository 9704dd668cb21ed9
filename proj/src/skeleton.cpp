#include "mcg3/skeleton.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "mcg3/errors.hpp"
#include "mcg3/snail.hpp"

namespace mcg3 {

CrossingSequence::CrossingSequence(std::vector<Rat> x, Rat start,
                                   std::vector<Excursion> excursions)
    : x_(std::move(x)), start_(std::move(start)), excursions_(std::move(excursions)) {
    if (x_.size() < 2) fail(errc::InvalidParams, "marked set needs at least two points");
    for (std::size_t i = 1; i < x_.size(); ++i)
        if (!(x_[i - 1] < x_[i]))
            fail(errc::InvalidParams, "marked set must be strictly increasing");
    if (!std::binary_search(x_.begin(), x_.end(), start_))
        fail(errc::InvalidParams, "curve must start on a marked point");
    Rat prev = start_;
    for (const Excursion& e : excursions_) {
        if (e.side != 1 && e.side != -1)
            fail(errc::InvalidParams, "excursion side must be +1 or -1");
        if (e.landing == prev)
            fail(errc::InvalidParams, "consecutive landings must differ");
        prev = e.landing;
    }
    if (!excursions_.empty() &&
        !std::binary_search(x_.begin(), x_.end(), excursions_.back().landing))
        fail(errc::InvalidParams, "curve must end on a marked point");
}

namespace {

struct Flat {
    std::vector<Rat> x;
    Rat start;
    std::vector<Excursion> exc;

    bool pinned(const Rat& c) const { return std::binary_search(x.begin(), x.end(), c); }

    Rat from(std::size_t i) const { return i == 0 ? start : exc[i - 1].landing; }

    bool x_strictly_inside(const Rat& a, const Rat& b) const {
        const Rat& lo = a < b ? a : b;
        const Rat& hi = a < b ? b : a;
        auto it = std::upper_bound(x.begin(), x.end(), lo);
        return it != x.end() && *it < hi;
    }
};

// Trivial rel X: the open span carries no marked point and neither endpoint
// sits on one.  Excursions touching a mark stay, which is what keeps a
// curve pinned through its marked landings.
bool deletable(const Flat& f, std::size_t i) {
    Rat a = f.from(i);
    const Rat& b = f.exc[i].landing;
    if (f.pinned(a) || f.pinned(b)) return false;
    return !f.x_strictly_inside(a, b);
}

bool mergeable(const Flat& f, std::size_t i) {
    return i + 1 < f.exc.size() && f.exc[i].side == f.exc[i + 1].side &&
           !f.pinned(f.exc[i].landing);
}

// Removing entry i hands its takeoff point to the successor; a successor
// collapsing to zero length is dropped in the same stroke.
void erase_at(Flat& f, std::size_t i) {
    f.exc.erase(f.exc.begin() + static_cast<std::ptrdiff_t>(i));
    while (i < f.exc.size() && f.exc[i].landing == f.from(i))
        f.exc.erase(f.exc.begin() + static_cast<std::ptrdiff_t>(i));
}

bool step_lowest(Flat& f) {
    for (std::size_t i = 0; i < f.exc.size(); ++i)
        if (mergeable(f, i)) {
            erase_at(f, i);
            return true;
        }
    for (std::size_t i = 0; i < f.exc.size(); ++i)
        if (deletable(f, i)) {
            erase_at(f, i);
            return true;
        }
    return false;
}

// Order-preserving landing remap: pinned landings go to anchor[index of the
// mark], the rest spread evenly between the anchors of their gap, unit
// steps beyond the extremes.
std::vector<Excursion> remap_landings(const CrossingSequence& cs,
                                      const std::vector<Rat>& anchor) {
    const std::vector<Rat>& X = cs.x();
    std::set<Rat> left, right;
    std::vector<std::set<Rat>> inner(X.size() - 1);
    for (const Excursion& e : cs.excursions()) {
        const Rat& c = e.landing;
        if (std::binary_search(X.begin(), X.end(), c)) continue;
        if (c < X.front())
            left.insert(c);
        else if (c > X.back())
            right.insert(c);
        else {
            std::size_t g =
                static_cast<std::size_t>(std::upper_bound(X.begin(), X.end(), c) -
                                         X.begin()) -
                1;
            inner[g].insert(c);
        }
    }

    std::map<Rat, Rat> to;
    {
        Int r = 1;
        for (auto it = left.rbegin(); it != left.rend(); ++it, ++r)
            to[*it] = anchor.front() - Rat(r);
        r = 1;
        for (const Rat& c : right) {
            to[c] = anchor.back() + Rat(r);
            ++r;
        }
    }
    for (std::size_t g = 0; g < inner.size(); ++g) {
        Int den = Int(inner[g].size()) + 1;
        Int k = 1;
        for (const Rat& c : inner[g]) {
            to[c] = anchor[g] + (anchor[g + 1] - anchor[g]) * Rat(k, den);
            ++k;
        }
    }
    for (std::size_t i = 0; i < X.size(); ++i) to[X[i]] = anchor[i];

    std::vector<Excursion> out = cs.excursions();
    for (Excursion& e : out) e.landing = to[e.landing];
    return out;
}

// Same curve on marked set {0, 1, ..., |X|-1}: the coordinate-free shape
// used for structural comparison.
CrossingSequence shape(const CrossingSequence& cs) {
    std::vector<Rat> anchor;
    for (std::size_t i = 0; i < cs.x().size(); ++i) anchor.push_back(Rat(Int(i)));
    std::map<Rat, Rat> pin;
    for (std::size_t i = 0; i < cs.x().size(); ++i) pin[cs.x()[i]] = anchor[i];
    return CrossingSequence(anchor, pin[cs.start()], remap_landings(cs, anchor));
}

CrossingSequence transformed(const CrossingSequence& cs, bool flip, bool rev) {
    Rat st = cs.start();
    std::vector<Excursion> e = cs.excursions();
    if (rev && !e.empty()) {
        std::vector<Rat> pts{cs.start()};
        for (const Excursion& ex : e) pts.push_back(ex.landing);
        std::vector<Excursion> r;
        for (std::size_t j = e.size(); j-- > 0;)
            r.push_back({e[j].side, pts[j]});
        st = pts.back();
        e = std::move(r);
    }
    if (flip)
        for (Excursion& ex : e) ex.side = -ex.side;
    return CrossingSequence(cs.x(), st, e);
}

}  // namespace

CrossingSequence renormalize(const CrossingSequence& cs) {
    return CrossingSequence(cs.x(), cs.start(), remap_landings(cs, cs.x()));
}

CrossingSequence reduce(const CrossingSequence& cs) {
    Flat f{cs.x(), cs.start(), cs.excursions()};
    bool changed = false;
    while (step_lowest(f)) changed = true;
    if (!changed) return cs;
    return renormalize(CrossingSequence(f.x, f.start, f.exc));
}

CrossingSequence reduce_seeded(const CrossingSequence& cs, std::uint32_t seed) {
    std::mt19937 rng(seed);
    Flat f{cs.x(), cs.start(), cs.excursions()};
    bool changed = false;
    for (;;) {
        std::vector<std::pair<char, std::size_t>> moves;
        for (std::size_t i = 0; i < f.exc.size(); ++i) {
            if (mergeable(f, i)) moves.push_back({'m', i});
            if (deletable(f, i)) moves.push_back({'d', i});
        }
        if (moves.empty()) break;
        erase_at(f, moves[rng() % moves.size()].second);
        changed = true;
    }
    if (!changed) return cs;
    return renormalize(CrossingSequence(f.x, f.start, f.exc));
}

bool is_reduced(const CrossingSequence& cs) { return reduce(cs) == cs; }

Int min_intersections(const CrossingSequence& cs, Bisector which) {
    if (cs.x().size() != 3)
        fail(errc::InvalidParams, "bisector counts need exactly three marked points");
    if (!is_reduced(cs)) fail(errc::NotReduced, "sequence must be reduced first");
    const std::vector<Rat>& X = cs.x();
    std::size_t g = which == Bisector::Delta1 ? 0 : 1;

    std::vector<Rat> events{X[g], X[g + 1]};
    for (const Excursion& e : cs.excursions())
        if (X[g] < e.landing && e.landing < X[g + 1]) events.push_back(e.landing);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    Int best = -1;
    for (std::size_t k = 0; k + 1 < events.size(); ++k) {
        Rat mid = (events[k] + events[k + 1]) / 2;
        Int cnt = 0;
        Rat prev = cs.start();
        for (const Excursion& e : cs.excursions()) {
            const Rat& lo = prev < e.landing ? prev : e.landing;
            const Rat& hi = prev < e.landing ? e.landing : prev;
            if (lo < mid && mid < hi) ++cnt;
            prev = e.landing;
        }
        if (best < 0 || cnt < best) best = cnt;
    }
    return best;
}

SkeletonClass recognize(const CrossingSequence& cs) {
    if (cs.x().size() != 3)
        fail(errc::InvalidParams, "recognition needs exactly three marked points");
    if (!is_reduced(cs)) fail(errc::NotReduced, "reduce the sequence first");
    const std::vector<Rat>& X = cs.x();
    const std::vector<Excursion>& exc = cs.excursions();

    if (exc.size() == 1) {
        const Rat& a = cs.start() < exc[0].landing ? cs.start() : exc[0].landing;
        const Rat& b = cs.start() < exc[0].landing ? exc[0].landing : cs.start();
        for (int g = 0; g < 2; ++g)
            if (a == X[static_cast<std::size_t>(g)] && b == X[static_cast<std::size_t>(g) + 1]) {
                SkeletonClass out;
                out.kind = SkeletonKind::Segment;
                out.segment_gap = g + 1;
                return out;
            }
    }

    Int n = min_intersections(cs, Bisector::Delta1);
    Int p = min_intersections(cs, Bisector::Delta2);
    if (n > 0 && p > 0 && gcd(n, p) == 1) {
        CrossingSequence ref = crossing_sequence(build_snail(n, p));
        CrossingSequence own = shape(cs);
        for (int flip = 0; flip < 2; ++flip)
            for (int rev = 0; rev < 2; ++rev)
                if (own == shape(transformed(ref, flip != 0, rev != 0))) {
                    SkeletonClass out;
                    out.kind = SkeletonKind::SimpleSnail;
                    out.n = n;
                    out.p = p;
                    out.emerging_side = flip ? -1 : +1;
                    return out;
                }
    }

    SkeletonClass out;
    out.kind = SkeletonKind::General;
    std::vector<std::vector<std::pair<Rat, int>>> buckets(X.size() + 1);
    for (const Excursion& e : exc) {
        if (std::binary_search(X.begin(), X.end(), e.landing)) continue;
        std::size_t g = static_cast<std::size_t>(
            std::upper_bound(X.begin(), X.end(), e.landing) - X.begin());
        buckets[g].push_back({e.landing, e.side});
    }
    for (std::size_t g = 0; g < buckets.size(); ++g) {
        if (buckets[g].empty()) continue;
        std::sort(buckets[g].begin(), buckets[g].end());
        GapRun run;
        run.gap = static_cast<int>(g);
        for (const auto& [coord, side] : buckets[g]) run.sides.push_back(side);
        out.gaps.push_back(std::move(run));
    }
    return out;
}

SnailPropsReport validate_snail_props(const CrossingSequence& cs) {
    SnailPropsReport rep;
    if (cs.x().size() != 3) {
        rep.violations.push_back("marked set does not have exactly three points");
        return rep;
    }
    if (!is_reduced(cs)) {
        rep.violations.push_back("sequence is not reduced");
        return rep;
    }
    const std::vector<Rat>& X = cs.x();

    // Chamber legs landing on a marked point are two halves of one arc;
    // rejoin them so span tests see the whole arc.
    std::vector<Excursion> exc = cs.excursions();
    for (std::size_t i = 0; i + 1 < exc.size();) {
        if (exc[i].side == exc[i + 1].side &&
            std::binary_search(X.begin(), X.end(), exc[i].landing))
            exc.erase(exc.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }

    struct Span {
        Rat lo, hi;
        int side;
    };
    std::vector<Span> spans;
    Rat prev = cs.start();
    for (const Excursion& e : exc) {
        Span s;
        s.lo = prev < e.landing ? prev : e.landing;
        s.hi = prev < e.landing ? e.landing : prev;
        s.side = e.side;
        spans.push_back(s);
        prev = e.landing;
    }

    int visible = +1;
    {
        Rat widest = -1;
        for (const Span& s : spans)
            if (s.hi - s.lo > widest) {
                widest = s.hi - s.lo;
                visible = s.side;
            }
    }

    std::size_t extremal = spans.size();
    for (std::size_t i = 0; i < spans.size(); ++i) {
        if (spans[i].side != visible) continue;
        bool covers_all = true;
        for (std::size_t j = 0; j < spans.size(); ++j)
            if (j != i && spans[j].side == visible &&
                !(spans[i].lo <= spans[j].lo && spans[j].hi <= spans[i].hi))
                covers_all = false;
        if (covers_all) {
            extremal = extremal == spans.size() ? i : spans.size() + 1;
        }
    }
    rep.unique_extremal_visible = extremal < spans.size();
    if (!rep.unique_extremal_visible)
        rep.violations.push_back("no unique extremal visible arc");

    rep.sustaining_separated = true;
    rep.emerging_separated = true;
    for (std::size_t i = 0; i < spans.size(); ++i) {
        const Span& s = spans[i];
        if (s.side == visible) {
            if (!(s.lo < X[1] && X[1] < s.hi)) {
                rep.emerging_separated = false;
                rep.violations.push_back("visible excursion " + std::to_string(i) +
                                         " is not separated by the middle point");
            }
        } else {
            int outer = 0;
            if (s.lo < X[0] && X[0] < s.hi) ++outer;
            if (s.lo < X[2] && X[2] < s.hi) ++outer;
            if (outer != 1) {
                rep.sustaining_separated = false;
                rep.violations.push_back("sustaining excursion " + std::to_string(i) +
                                         " is not separated by exactly one outer point");
            }
        }
    }
    return rep;
}

}  // namespace mcg3

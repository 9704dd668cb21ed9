#include "mcg3/arrowtree.hpp"

#include <cstdio>
#include <limits>
#include <utility>

#include "mcg3/errors.hpp"

namespace mcg3 {

namespace {

bool is_green(Arrow a) { return a == Arrow::GPlus || a == Arrow::GMinus; }

bool rewrites(Gen letter, Arrow a) {
    // B doubles red arrows, A doubles green ones.
    return letter == Gen::B ? !is_green(a) : is_green(a);
}

std::pair<Arrow, Arrow> doubled(Arrow a) {
    switch (a) {
        case Arrow::RMinus: return {Arrow::RPlus, Arrow::GMinus};
        case Arrow::RPlus: return {Arrow::GPlus, Arrow::RMinus};
        case Arrow::GMinus: return {Arrow::GPlus, Arrow::RMinus};
        case Arrow::GPlus: return {Arrow::RPlus, Arrow::GMinus};
    }
    fail(errc::InvalidParams, "unreachable arrow value");
}

void check_letter(Gen letter) {
    if (letter != Gen::A && letter != Gen::B)
        fail(errc::InvalidParams, "arrow substitution is defined for A and B only");
}

std::vector<Arrow> substitute_side(const std::vector<Arrow>& side, Gen letter) {
    std::vector<Arrow> out;
    out.reserve(side.size() * 2);
    for (Arrow a : side) {
        if (rewrites(letter, a)) {
            auto [x, y] = doubled(a);
            out.push_back(x);
            out.push_back(y);
        } else {
            out.push_back(a);
        }
    }
    return out;
}

// Positive A/B letters in application order; anything else is rejected.
std::vector<Gen> positive_letters(const Word& w) {
    std::vector<Gen> flat;
    for (const Letter& l : w) {
        if ((l.gen != Gen::A && l.gen != Gen::B) || l.exp <= 0)
            fail(errc::NotPositiveCore,
                 "arrow words need a positive word in the two shears");
        for (Int i = 0; i < l.exp; ++i) flat.push_back(l.gen);
    }
    return flat;
}

}  // namespace

char arrow_color(Arrow a) { return is_green(a) ? 'G' : 'R'; }

int arrow_sign(Arrow a) {
    return (a == Arrow::GPlus || a == Arrow::RPlus) ? 1 : -1;
}

std::string arrow_str(Arrow a) {
    std::string s(1, arrow_color(a));
    s += arrow_sign(a) > 0 ? '+' : '-';
    return s;
}

ArrowWord ArrowWord::initial() {
    return {{Arrow::GPlus}, {Arrow::RMinus}};
}

ArrowWord substitute(const ArrowWord& aw, Gen letter) {
    check_letter(letter);
    return {substitute_side(aw.left, letter), substitute_side(aw.right, letter)};
}

ArrowWord arrow_word(const Word& w) {
    ArrowWord aw = ArrowWord::initial();
    for (Gen g : positive_letters(w)) aw = substitute(aw, g);
    return aw;
}

LetterCounts letter_counts(const ArrowWord& aw) {
    LetterCounts c{0, 0, 0, 0};
    for (Arrow a : aw.left) (is_green(a) ? c.lg : c.lr) += 1;
    for (Arrow a : aw.right) (is_green(a) ? c.rg : c.rr) += 1;
    return c;
}

InnerTree build_tree(const Word& w) {
    std::vector<Gen> flat = positive_letters(w);
    InnerTree tree;
    tree.branch_points.push_back({BranchSide::Left, BranchColor::Green, 0});
    tree.branch_points.push_back({BranchSide::Right, BranchColor::Red, 0});
    ArrowWord aw = ArrowWord::initial();
    std::size_t level = 0;
    for (Gen g : flat) {
        level += 1;
        BranchColor line = g == Gen::B ? BranchColor::Green : BranchColor::Red;
        tree.lines.push_back(line);
        for (int side = 0; side < 2; ++side) {
            const std::vector<Arrow>& arrows = side == 0 ? aw.left : aw.right;
            for (Arrow a : arrows)
                if (rewrites(g, a))
                    tree.branch_points.push_back(
                        {side == 0 ? BranchSide::Left : BranchSide::Right, line,
                         level});
        }
        aw = substitute(aw, g);
    }
    tree.leaves = std::move(aw);
    return tree;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Strand {
    Arrow a;
    std::size_t birth;
    std::size_t death = kNone;  // level of the line it splits on
    std::size_t kid1 = kNone, kid2 = kNone;
    double x = 0;
};

const char* color_class(Arrow a) {
    return a == Arrow::GPlus || a == Arrow::GMinus ? "green" : "red";
}

}  // namespace

std::string render_tree_svg(const Word& w, double scale) {
    std::vector<Gen> flat = positive_letters(w);
    const std::size_t levels = flat.size();

    std::vector<Strand> nodes;
    nodes.push_back({Arrow::GPlus, 0});
    nodes.push_back({Arrow::RMinus, 0});
    std::vector<std::size_t> sides[2] = {{0}, {1}};
    for (std::size_t k = 1; k <= levels; ++k) {
        Gen g = flat[k - 1];
        for (auto& side : sides) {
            std::vector<std::size_t> next;
            for (std::size_t id : side) {
                if (!rewrites(g, nodes[id].a)) {
                    next.push_back(id);
                    continue;
                }
                auto [x, y] = doubled(nodes[id].a);
                nodes[id].death = k;
                nodes[id].kid1 = nodes.size();
                nodes[id].kid2 = nodes.size() + 1;
                next.push_back(nodes.size());
                next.push_back(nodes.size() + 1);
                nodes.push_back({x, k});
                nodes.push_back({y, k});
            }
            side = std::move(next);
        }
    }

    // Leaves in reading order, a two-unit gap between the branches, then
    // every split point midway between its children.
    double x = 0;
    for (std::size_t id : sides[0]) nodes[id].x = x++;
    x += 2;
    for (std::size_t id : sides[1]) nodes[id].x = x++;
    for (std::size_t i = nodes.size(); i-- > 0;)
        if (nodes[i].kid1 != kNone)
            nodes[i].x = (nodes[nodes[i].kid1].x + nodes[nodes[i].kid2].x) / 2;

    auto line_y = [&](std::size_t level) {
        return (double(levels) + 1 - double(level)) * scale;
    };
    double x_lo = -1 * scale, x_hi = (x + 0) * scale;
    double y_lo = 0, y_hi = (double(levels) + 2.5) * scale;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(x_lo) + " " +
           fmt(y_lo) + " " + fmt(x_hi - x_lo) + " " + fmt(y_hi - y_lo) + "\">\n";
    out +=
        "<style>.axis{stroke:#888888;stroke-width:1}"
        ".green{stroke:#1a7f37;stroke-width:2;fill:none}"
        ".red{stroke:#c03232;stroke-width:2;fill:none}"
        ".gdot{fill:#1a7f37;stroke:none}.rdot{fill:#c03232;stroke:none}</style>\n";

    for (std::size_t k = 1; k <= levels; ++k) {
        const char* cls = flat[k - 1] == Gen::B ? "green" : "red";
        out += std::string("<line class=\"") + cls + "\" stroke-opacity=\"0.25\" x1=\"" +
               fmt(x_lo) + "\" y1=\"" + fmt(line_y(k)) + "\" x2=\"" + fmt(x_hi) +
               "\" y2=\"" + fmt(line_y(k)) + "\"/>\n";
    }

    // Root stem and the fork feeding the two seed strands.
    double mid = (nodes[0].x + nodes[1].x) / 2 * scale;
    out += "<path class=\"axis\" d=\"M " + fmt(mid) + " " + fmt((double(levels) + 2) * scale) +
           " V " + fmt(line_y(0)) + "\"/>\n";
    out += "<path class=\"axis\" d=\"M " + fmt(nodes[0].x * scale) + " " + fmt(line_y(0)) +
           " H " + fmt(nodes[1].x * scale) + "\"/>\n";

    for (const Strand& s : nodes) {
        double top = s.death == kNone ? 0.6 * scale : line_y(s.death);
        out += std::string("<path class=\"") + color_class(s.a) + "\" d=\"M " +
               fmt(s.x * scale) + " " + fmt(line_y(s.birth)) + " V " + fmt(top) + "\"/>\n";
        if (s.death != kNone) {
            out += std::string("<path class=\"") + color_class(nodes[s.kid1].a) +
                   "\" d=\"M " + fmt(s.x * scale) + " " + fmt(top) + " H " +
                   fmt(nodes[s.kid1].x * scale) + "\"/>\n";
            out += std::string("<path class=\"") + color_class(nodes[s.kid2].a) +
                   "\" d=\"M " + fmt(s.x * scale) + " " + fmt(top) + " H " +
                   fmt(nodes[s.kid2].x * scale) + "\"/>\n";
        } else {
            // Arrowhead up for +, down for -.
            double tip = arrow_sign(s.a) > 0 ? 0.3 * scale : 0.9 * scale;
            double base = 0.6 * scale;
            const char* dot = color_class(s.a)[0] == 'g' ? "gdot" : "rdot";
            out += std::string("<polygon class=\"") + dot + "\" points=\"" +
                   fmt(s.x * scale) + "," + fmt(tip) + " " + fmt(s.x * scale - 0.18 * scale) +
                   "," + fmt(base) + " " + fmt(s.x * scale + 0.18 * scale) + "," + fmt(base) +
                   "\"/>\n";
        }
    }

    // Branch-point dots, seeds included, colored by the line that made them.
    out += "<circle class=\"gdot\" cx=\"" + fmt(nodes[0].x * scale) + "\" cy=\"" +
           fmt(line_y(0)) + "\" r=\"" + fmt(0.09 * scale) + "\"/>\n";
    out += "<circle class=\"rdot\" cx=\"" + fmt(nodes[1].x * scale) + "\" cy=\"" +
           fmt(line_y(0)) + "\" r=\"" + fmt(0.09 * scale) + "\"/>\n";
    for (const Strand& s : nodes)
        if (s.death != kNone) {
            const char* dot = flat[s.death - 1] == Gen::B ? "gdot" : "rdot";
            out += std::string("<circle class=\"") + dot + "\" cx=\"" + fmt(s.x * scale) +
                   "\" cy=\"" + fmt(line_y(s.death)) + "\" r=\"" + fmt(0.09 * scale) +
                   "\"/>\n";
        }

    out += "</svg>\n";
    return out;
}

}  // namespace mcg3

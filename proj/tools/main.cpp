#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mcg3/arrowtree.hpp"
#include "mcg3/circulation.hpp"
#include "mcg3/classify.hpp"
#include "mcg3/errors.hpp"
#include "mcg3/euclid.hpp"
#include "mcg3/json_io.hpp"
#include "mcg3/snail.hpp"

namespace {

using namespace mcg3;

std::string fdouble(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Int arg_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        fail(errc::SyntaxError, "not an integer: \"" + s + "\"");
    }
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(errc::InvalidParams, "cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(errc::InvalidParams, "cannot write " + path);
    f << data;
}

const char* tag_name(TraceTag t) {
    switch (t) {
        case TraceTag::FiniteOrder2: return "FiniteOrder2";
        case TraceTag::FiniteOrder3: return "FiniteOrder3";
        case TraceTag::Parabolic: return "Parabolic";
        case TraceTag::Turbulent: return "Turbulent";
    }
    return "?";
}

Json int_array(const std::vector<Int>& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(int_json(x));
    return out;
}

void run_canon(const std::string& text, bool json) {
    Word w = parse_word(text);
    Word r = render(canonicalize(w));
    if (json)
        std::cout << Json{{"word", render_word(r)}, {"matrix", matrix_json(phi(w))}}.dump()
                  << "\n";
    else
        std::cout << render_word(r) << "\n";
}

void run_matrix(const std::string& text, bool json) {
    ProjectiveMatrix m = phi(parse_word(text));
    if (json)
        std::cout << matrix_json(m).dump() << "\n";
    else
        std::cout << m.str() << "\n";
}

void run_classify(const std::string& text, bool json) {
    Word w = parse_word(text);
    TraceClass c = classify(w);
    Int trace = phi(w).trace_abs();
    if (json) {
        Json out{{"class", tag_name(c.tag)}, {"trace", int_json(trace)}};
        if (c.tag == TraceTag::Parabolic) {
            out["shear"] = std::string(1, gen_char(*c.parabolic_letter));
            out["power"] = int_json(*c.parabolic_power);
        }
        if (c.tag == TraceTag::Turbulent) {
            out["representative"] = render_word(*c.representative);
            out["lambda"] = *c.lambda;
            out["entropy"] = *c.entropy;
            out["nielsen"] = int_json(*c.nielsen_bound);
        }
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "class " << tag_name(c.tag) << "\n";
    std::cout << "trace " << trace << "\n";
    if (c.tag == TraceTag::Parabolic) {
        std::cout << "shear " << gen_char(*c.parabolic_letter) << "\n";
        std::cout << "power " << *c.parabolic_power << "\n";
    }
    if (c.tag == TraceTag::Turbulent) {
        std::cout << "representative " << render_word(*c.representative) << "\n";
        std::cout << "lambda " << fdouble(*c.lambda) << "\n";
        std::cout << "entropy " << fdouble(*c.entropy) << "\n";
    }
}

void run_decompose(const std::string& ns, const std::string& ps, bool json) {
    Int n = arg_int(ns), p = arg_int(ps);
    Word w = decompose_to_word(n, p);
    if (json) {
        CharacteristicSequences cs = characteristic_sequences(n, p);
        std::cout << Json{{"word", render_word(w)},
                          {"alpha", int_array(cs.alpha)},
                          {"beta", int_array(cs.beta)},
                          {"matrix", matrix_json(phi(w))}}
                         .dump()
                  << "\n";
    } else {
        std::cout << render_word(w) << "\n";
    }
}

void run_factor(const std::string& as, const std::string& bs, const std::string& cs,
                const std::string& ds, bool json) {
    ProjectiveMatrix m =
        ProjectiveMatrix::make(arg_int(as), arg_int(bs), arg_int(cs), arg_int(ds));
    Word w = factor_positive_matrix(m);
    if (json)
        std::cout << Json{{"word", render_word(w)}, {"matrix", matrix_json(m)}}.dump()
                  << "\n";
    else
        std::cout << render_word(w) << "\n";
}

void run_snail(const std::string& ns, const std::string& ps, bool json,
               const std::string& svg_path) {
    Int n = arg_int(ns), p = arg_int(ps);
    Snail s = build_snail(n, p);
    if (!svg_path.empty()) write_file(svg_path, render_svg(s));
    bool have_split = false;
    ColorSplit split{};
    try {
        split = split_colors(n, p);
        have_split = true;
    } catch (const DomainError&) {
        // degenerate or non-coprime snails carry no color splitting
    }
    if (json) {
        Json out = snail_json(s);
        if (have_split)
            out["split"] = Json{{"g1", int_json(split.g1)},
                                {"r1", int_json(split.r1)},
                                {"g2", int_json(split.g2)},
                                {"r2", int_json(split.r2)}};
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "marked " << rat_str(s.z1) << " " << rat_str(s.z2) << " " << rat_str(s.z3)
              << "\n";
    std::cout << "arcs " << s.arcs.size() << "\n";
    if (have_split)
        std::cout << "split " << split.g1 << " " << split.r1 << " " << split.g2 << " "
                  << split.r2 << "\n";
}

void run_tree(const std::string& text, bool json, const std::string& svg_path) {
    Word w = parse_word(text);
    InnerTree t = build_tree(w);
    if (!svg_path.empty()) write_file(svg_path, render_tree_svg(w));
    LetterCounts c = letter_counts(t.leaves);
    if (json) {
        Json left = Json::array(), right = Json::array();
        for (Arrow a : t.leaves.left) left.push_back(arrow_str(a));
        for (Arrow a : t.leaves.right) right.push_back(arrow_str(a));
        Json lines = Json::array();
        for (BranchColor lc : t.lines)
            lines.push_back(lc == BranchColor::Green ? "green" : "red");
        Json bps = Json::array();
        for (const BranchPoint& b : t.branch_points)
            bps.push_back({{"side", b.side == BranchSide::Left ? "left" : "right"},
                           {"color", b.color == BranchColor::Green ? "green" : "red"},
                           {"level", b.level}});
        std::cout << Json{{"left", left},
                          {"right", right},
                          {"counts", Json{{"lg", int_json(c.lg)},
                                          {"lr", int_json(c.lr)},
                                          {"rg", int_json(c.rg)},
                                          {"rr", int_json(c.rr)}}},
                          {"lines", lines},
                          {"branch_points", bps}}
                         .dump()
                  << "\n";
        return;
    }
    std::cout << "left";
    for (Arrow a : t.leaves.left) std::cout << " " << arrow_str(a);
    std::cout << "\nright";
    for (Arrow a : t.leaves.right) std::cout << " " << arrow_str(a);
    std::cout << "\ncounts [[" << c.lg << ", " << c.lr << "], [" << c.rg << ", " << c.rr
              << "]]\n";
}

void run_linking(const std::string& text, bool json) {
    LinkingNumbers l = linking_numbers(parse_word(text));
    if (json)
        std::cout << Json{{"p1", int_json(l.p1)}, {"p3", int_json(l.p3)}}.dump() << "\n";
    else
        std::cout << "{\"p1\": " << l.p1 << ", \"p3\": " << l.p3 << "}\n";
}

void run_code(const std::string& text, bool decode, bool json) {
    CirculationCode cc = decode ? parse_code(text) : word_to_code(parse_word(text));
    if (json) {
        std::cout << Json{{"code", render_code(cc)}, {"word", render_word(code_to_word(cc))}}
                         .dump()
                  << "\n";
        return;
    }
    std::cout << (decode ? render_word(code_to_word(cc)) : render_code(cc)) << "\n";
}

void run_perm(const std::string& text, bool json) {
    MarkedPermutation p = phi(parse_word(text)).induced_permutation();
    if (json)
        std::cout << Json{{"image", p.image}, {"is_identity", p.is_identity()}}.dump()
                  << "\n";
    else
        std::cout << p.str() << "\n";
}

void run_skeleton_reduce(const std::string& path) {
    CrossingSequence cs = crossing_from_text(slurp(path));
    std::cout << crossing_json(reduce(cs)).dump() << "\n";
}

void run_skeleton_recognize(const std::string& path, bool json) {
    CrossingSequence cs = crossing_from_text(slurp(path));
    SkeletonClass k = recognize(cs);
    if (json) {
        Json out;
        switch (k.kind) {
            case SkeletonKind::Segment:
                out = Json{{"kind", "segment"}, {"gap", k.segment_gap}};
                break;
            case SkeletonKind::SimpleSnail:
                out = Json{{"kind", "snail"},
                           {"n", int_json(k.n)},
                           {"p", int_json(k.p)},
                           {"side", k.emerging_side}};
                break;
            case SkeletonKind::General: {
                Json gaps = Json::array();
                for (const GapRun& g : k.gaps) {
                    Json sides = Json::array();
                    for (int s : g.sides) sides.push_back(s);
                    gaps.push_back({{"gap", g.gap}, {"sides", sides}});
                }
                out = Json{{"kind", "general"}, {"gaps", gaps}};
                break;
            }
        }
        std::cout << out.dump() << "\n";
        return;
    }
    switch (k.kind) {
        case SkeletonKind::Segment:
            std::cout << "segment gap " << k.segment_gap << "\n";
            break;
        case SkeletonKind::SimpleSnail:
            std::cout << "snail " << k.n << " " << k.p << " side "
                      << (k.emerging_side > 0 ? "+1" : "-1") << "\n";
            break;
        case SkeletonKind::General:
            std::cout << "general\n";
            for (const GapRun& g : k.gaps) {
                std::cout << "gap " << g.gap;
                for (int s : g.sides) std::cout << " " << (s > 0 ? "+" : "-");
                std::cout << "\n";
            }
            break;
    }
}

void run_euclid(const std::string& q0s, const std::string& q1s, bool json) {
    EuclidTrace t = euclid_trace(arg_int(q0s), arg_int(q1s));
    PeriodIdentity pid = period_identity(t);
    if (json) {
        std::cout << Json{{"rests", int_array(t.rests)},
                          {"coefficients", int_array(t.coefficients)},
                          {"orders", int_array(t.orders)},
                          {"d", int_json(t.d)},
                          {"period", int_json(pid.period)},
                          {"holds", pid.holds}}
                         .dump()
                  << "\n";
        return;
    }
    auto line = [](const char* name, const std::vector<Int>& v) {
        std::cout << name;
        for (const Int& x : v) std::cout << " " << x;
        std::cout << "\n";
    };
    line("rests", t.rests);
    line("coefficients", t.coefficients);
    line("orders", t.orders);
    std::cout << "d " << t.d << "\n";
    std::cout << "period " << pid.period << (pid.holds ? " holds" : " broken") << "\n";
}

void run_compose(const std::string& t1, const std::string& t2, bool json) {
    CanonicalForm f = compose(canonicalize(parse_word(t1)), canonicalize(parse_word(t2)));
    Word w = render(f);
    if (json)
        std::cout << Json{{"word", render_word(w)}, {"matrix", matrix_json(phi(w))}}.dump()
                  << "\n";
    else
        std::cout << render_word(w) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculator for the mapping class group of the plane with three marked points"};
    app.require_subcommand(1);
    bool json = false;
    bool decode = false;
    std::string word1, word2, n_s, p_s, a_s, b_s, c_s, d_s, file_path, svg_path;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit JSON"); };

    CLI::App* canon = app.add_subcommand("canon", "canonical form of a word");
    canon->add_option("word", word1, "generator word")->required();
    add_json(canon);

    CLI::App* matrix = app.add_subcommand("matrix", "matrix image of a word");
    matrix->add_option("word", word1, "generator word")->required();
    add_json(matrix);

    CLI::App* classify_cmd = app.add_subcommand("classify", "trace classification");
    classify_cmd->add_option("word", word1, "generator word")->required();
    add_json(classify_cmd);

    CLI::App* decompose = app.add_subcommand("decompose", "positive word carrying (1,1) to (n,p)");
    decompose->add_option("n", n_s, "first parameter")->required();
    decompose->add_option("p", p_s, "second parameter")->required();
    add_json(decompose);

    CLI::App* factor = app.add_subcommand("factor", "A/B factorization of a positive matrix");
    factor->add_option("a", a_s)->required();
    factor->add_option("b", b_s)->required();
    factor->add_option("c", c_s)->required();
    factor->add_option("d", d_s)->required();
    add_json(factor);

    CLI::App* snail = app.add_subcommand("snail", "topological snail SN(n;p)");
    snail->add_option("n", n_s, "left winding")->required();
    snail->add_option("p", p_s, "right winding")->required();
    snail->add_option("--svg", svg_path, "write an SVG rendering to this file");
    add_json(snail);

    CLI::App* tree = app.add_subcommand("tree", "inner tree and arrow word of a positive word");
    tree->add_option("word", word1, "positive A/B word")->required();
    tree->add_option("--svg", svg_path, "write an SVG rendering to this file");
    add_json(tree);

    CLI::App* linking = app.add_subcommand("linking", "linking numbers around the outer points");
    linking->add_option("word", word1, "generator word")->required();
    add_json(linking);

    CLI::App* code = app.add_subcommand("code", "circulation code of a word");
    code->add_option("input", word1, "word, or code text with --decode")->required();
    code->add_flag("--decode", decode, "translate code text back to a word");
    add_json(code);

    CLI::App* perm = app.add_subcommand("perm", "induced permutation of the marked points");
    perm->add_option("word", word1, "generator word")->required();
    add_json(perm);

    CLI::App* skeleton = app.add_subcommand("skeleton", "crossing-sequence tools");
    skeleton->require_subcommand(1);
    CLI::App* sk_reduce = skeleton->add_subcommand("reduce", "reduce a crossing-sequence file");
    sk_reduce->add_option("file", file_path, "JSON crossing sequence")->required();
    add_json(sk_reduce);
    CLI::App* sk_recognize =
        skeleton->add_subcommand("recognize", "classify a reduced crossing-sequence file");
    sk_recognize->add_option("file", file_path, "JSON crossing sequence")->required();
    add_json(sk_recognize);

    CLI::App* euclid = app.add_subcommand("euclid", "division chain with orders and period");
    euclid->add_option("q0", n_s, "first value")->required();
    euclid->add_option("q1", p_s, "second value")->required();
    add_json(euclid);

    CLI::App* compose_cmd = app.add_subcommand("compose", "canonical form of a product");
    compose_cmd->add_option("left", word1, "left factor")->required();
    compose_cmd->add_option("right", word2, "right factor")->required();
    add_json(compose_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*canon) run_canon(word1, json);
        if (*matrix) run_matrix(word1, json);
        if (*classify_cmd) run_classify(word1, json);
        if (*decompose) run_decompose(n_s, p_s, json);
        if (*factor) run_factor(a_s, b_s, c_s, d_s, json);
        if (*snail) run_snail(n_s, p_s, json, svg_path);
        if (*tree) run_tree(word1, json, svg_path);
        if (*linking) run_linking(word1, json);
        if (*code) run_code(word1, decode, json);
        if (*perm) run_perm(word1, json);
        if (*sk_reduce) run_skeleton_reduce(file_path);
        if (*sk_recognize) run_skeleton_recognize(file_path, json);
        if (*euclid) run_euclid(n_s, p_s, json);
        if (*compose_cmd) run_compose(word1, word2, json);
    } catch (const DomainError& e) {
        std::cerr << Json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}

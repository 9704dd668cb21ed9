#include "mcg3/json_io.hpp"

#include <cstdint>
#include <utility>

#include "mcg3/errors.hpp"

namespace mcg3 {

namespace {

const Int kSafeMax = (Int(1) << 53) - 1;

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        fail(errc::SyntaxError, "not an integer: \"" + s + "\"");
    }
}

}  // namespace

Json int_json(const Int& v) {
    if (v <= kSafeMax && v >= -kSafeMax)
        return v.convert_to<std::int64_t>();
    return v.str();
}

Json matrix_json(const ProjectiveMatrix& m) {
    return Json{{"a", int_json(m.a())},
                {"b", int_json(m.b())},
                {"c", int_json(m.c())},
                {"d", int_json(m.d())},
                {"det", int_json(m.det())},
                {"trace_abs", int_json(m.trace_abs())}};
}

std::string rat_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
    if (!j.is_string())
        fail(errc::SyntaxError, "rational must be an integer or a \"num/den\" string");
    const std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s));
    Int num = int_from_string(s.substr(0, slash));
    Int den = int_from_string(s.substr(slash + 1));
    if (den == 0) fail(errc::SyntaxError, "zero denominator in \"" + s + "\"");
    return Rat(num, den);
}

Json snail_json(const Snail& s) {
    Json arcs = Json::array();
    for (const HalfCircle& h : s.arcs)
        arcs.push_back({{"center", rat_str(h.center)},
                        {"radius", rat_str(h.radius)},
                        {"side", h.side},
                        {"color", h.color == ArcColor::Green ? "green" : "red"}});
    return Json{{"n", int_json(s.n)},
                {"p", int_json(s.p)},
                {"marked", Json::array({rat_str(s.z1), rat_str(s.z2), rat_str(s.z3)})},
                {"arcs", std::move(arcs)}};
}

Json crossing_json(const CrossingSequence& cs) {
    Json x = Json::array();
    for (const Rat& c : cs.x()) x.push_back(rat_str(c));
    Json exc = Json::array();
    for (const Excursion& e : cs.excursions())
        exc.push_back({{"side", e.side}, {"landing", rat_str(e.landing)}});
    return Json{{"X", std::move(x)},
                {"start", rat_str(cs.start())},
                {"excursions", std::move(exc)}};
}

CrossingSequence crossing_from_json(const Json& j) {
    try {
        std::vector<Rat> x;
        for (const Json& c : j.at("X")) x.push_back(rat_from_json(c));
        Rat start = rat_from_json(j.at("start"));
        std::vector<Excursion> exc;
        for (const Json& e : j.at("excursions"))
            exc.push_back({e.at("side").get<int>(), rat_from_json(e.at("landing"))});
        return CrossingSequence(std::move(x), std::move(start), std::move(exc));
    } catch (const Json::exception& e) {
        fail(errc::SyntaxError, std::string("bad crossing-sequence JSON: ") + e.what());
    }
}

CrossingSequence crossing_from_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::SyntaxError, "not valid JSON");
    return crossing_from_json(j);
}

}  // namespace mcg3

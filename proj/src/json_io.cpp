#include "sixv/json_io.hpp"

#include "sixv/families.hpp"

namespace sixv {

Json scalar_to_json(const Scalar& s) {
    if (s.mode() == Mode::exact) {
        const GaussianRational& g = s.as_exact();
        return Json{{"re", g.re.str()}, {"im", g.im.str()}};
    }
    const std::complex<double> z = s.as_complex();
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Scalar scalar_from_json(const Json& j, Mode mode) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw ParseError("scalar must be an object with 're' and 'im'");
    if (mode == Mode::exact) {
        if (!j["re"].is_string() || !j["im"].is_string())
            throw ParseError("exact scalar components must be rational strings");
        return Scalar::exact(Rational::parse(j["re"].get<std::string>()),
                             Rational::parse(j["im"].get<std::string>()));
    }
    if (!j["re"].is_number() || !j["im"].is_number())
        throw ParseError("float scalar components must be numbers");
    return Scalar::floating(j["re"].get<double>(), j["im"].get<double>());
}

namespace {
const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

Mode mode_from_json(const Json& j) {
    if (!j.contains("mode") || !j["mode"].is_string())
        throw ParseError("matrix needs \"mode\": \"exact\" or \"float\"");
    const std::string m = j["mode"].get<std::string>();
    if (m == "exact") return Mode::exact;
    if (m == "float") return Mode::floating;
    throw ParseError("unknown mode '" + m + "'");
}
} // namespace

Json matrix_to_json(const SixVertexMatrix& m) {
    return Json{
        {"a1", scalar_to_json(m.a1())}, {"a2", scalar_to_json(m.a2())},
        {"b1", scalar_to_json(m.b1())}, {"b2", scalar_to_json(m.b2())},
        {"c1", scalar_to_json(m.c1())}, {"c2", scalar_to_json(m.c2())},
        {"mode", mode_name(m.mode())},
    };
}

SixVertexMatrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("six-vertex matrix must be a JSON object");
    const Mode mode = mode_from_json(j);
    const auto get = [&](const char* key) {
        if (!j.contains(key)) throw ParseError(std::string("matrix missing entry '") + key + "'");
        return scalar_from_json(j[key], mode);
    };
    return SixVertexMatrix(get("a1"), get("a2"), get("b1"), get("b2"), get("c1"), get("c2"));
}

Json triple_to_json(const YbTriple& t) {
    return Json{{"u", matrix_to_json(t.u)}, {"w", matrix_to_json(t.w)}, {"v", matrix_to_json(t.v)}};
}

YbTriple triple_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("u") || !j.contains("w") || !j.contains("v"))
        throw ParseError("triple must be an object with 'u', 'w', 'v'");
    return {matrix_from_json(j["u"]), matrix_from_json(j["w"]), matrix_from_json(j["v"])};
}

Json delta_to_json(const DeltaPair& d) {
    return Json{{"d1", scalar_to_json(d.d1)}, {"d2", scalar_to_json(d.d2)}};
}

Json flags_to_json(const ClassFlags& f) {
    return Json{
        {"diagonal", f.diagonal},
        {"five_vertex", f.five_vertex},
        {"free_fermionic", f.free_fermionic},
        {"non_free_fermionic", f.non_free_fermionic},
        {"constant_field", f.constant_field},
        {"non_constant_field", f.non_constant_field},
        {"field_free", f.field_free},
        {"degenerate", f.degenerate},
    };
}

Json conditions_to_json(const SolveConditions& c) {
    return Json{
        {"cond1_lhs", scalar_to_json(c.cond1_lhs)}, {"cond1_rhs", scalar_to_json(c.cond1_rhs)},
        {"cond2_lhs", scalar_to_json(c.cond2_lhs)}, {"cond2_rhs", scalar_to_json(c.cond2_rhs)},
        {"satisfied", c.satisfied},
    };
}

Json residuals_to_json(const std::array<Scalar, 13>& r) {
    Json out = Json::array();
    for (const Scalar& s : r) out.push_back(scalar_to_json(s));
    return out;
}

Json element_to_json(const GroupoidElement& e) {
    if (e.is_identity()) return Json{{"type", "identity"}, {"delta", delta_to_json(e.delta())}};
    return Json{{"type", "matrix"},
                {"matrix", matrix_to_json(e.matrix())},
                {"delta", delta_to_json(e.delta())}};
}

Json report_to_json(const FuzzReport& r) {
    Json failures = Json::array();
    for (const FuzzFailure& f : r.failures) {
        Json chain = Json::array();
        for (const GroupoidElement& e : f.chain) chain.push_back(element_to_json(e));
        failures.push_back(Json{{"seed", f.seed}, {"triple", chain}, {"check", f.check}});
    }
    return Json{{"trials", r.trials}, {"passes", r.passes}, {"failures", failures}};
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

SixVertexMatrix family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("family request must be an object with a 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind != "cf" && kind != "ff")
        throw ParseError("family kind must be 'cf' or 'ff'");
    ScalarMode mode = ScalarMode::exact();
    if (j.contains("mode") && j["mode"] == "float") mode = ScalarMode::floating();
    const auto scalar_at = [&](const char* key) {
        if (!j.contains(key)) throw ParseError(std::string("family request missing '") + key + "'");
        const Json& v = j[key];
        if (v.is_string()) return Scalar::parse(v.get<std::string>(), mode);
        return scalar_from_json(v, mode.kind);
    };
    return r_family({scalar_at("q1"), scalar_at("q2"), scalar_at("beta")},
                    kind == "ff" ? FamilyKind::ff : FamilyKind::cf,
                    {scalar_at("z1"), scalar_at("z2"), scalar_at("w")});
}

} // namespace sixv

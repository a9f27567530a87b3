#include "weierstab/json_io.hpp"

#include <cstdint>

namespace weierstab::io {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& field) {
    if (j.is_string()) {
        auto r = Rational::try_parse(j.get<std::string>());
        if (!r) throw ParseError("field \"" + field + "\": expected a rational \"p/q\", got \"" + j.get<std::string>() + "\"", field);
        return *r;
    }
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
        return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
    }
    throw ParseError("field \"" + field + "\": expected a rational string \"p/q\", got " + j.dump(), field);
}

namespace {

const Json& require(const Json& j, const char* key, const std::string& context) {
    if (!j.is_object()) throw ParseError(context + ": expected a JSON object, got " + j.dump());
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(context + ": missing field \"" + key + "\"", key);
    return *it;
}

void reject_unknown(const Json& j, std::initializer_list<const char*> keys, const std::string& context) {
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* key : keys) known = known || k == key;
        if (!known) throw ParseError(context + ": unknown field \"" + k + "\"", k);
    }
}

Json range_json(const Rational& lo, const Rational& hi) { return Json{{"lo", to_json(lo)}, {"hi", to_json(hi)}}; }

Admissibility admissibility_from_string(const std::string& s) {
    if (s == "InUpperHalfPlane") return Admissibility::InUpperHalfPlane;
    if (s == "Zero") return Admissibility::Zero;
    if (s == "Inadmissible") return Admissibility::Inadmissible;
    throw ParseError("unknown admissibility \"" + s + "\"");
}

} // namespace

Json to_json(const ChernClass& x) {
    return Json{{"n", to_json(x.n)}, {"d", to_json(x.d)}, {"c", to_json(x.c)}, {"s", to_json(x.s)}};
}

ChernClass class_from_json(const Json& j) {
    const std::string ctx = "Chern class";
    if (!j.is_object()) throw ParseError(ctx + ": expected a JSON object, got " + j.dump());
    reject_unknown(j, {"n", "d", "c", "s"}, ctx);
    ChernClass x;
    x.n = rational_from_json(require(j, "n", ctx), "n");
    x.d = rational_from_json(require(j, "d", ctx), "d");
    x.c = rational_from_json(require(j, "c", ctx), "c");
    x.s = rational_from_json(require(j, "s", ctx), "s");
    return x;
}

ChernClass class_from_text(const std::string& text) { return class_from_json(parse_json(text, "Chern class")); }

std::vector<ChernClass> classes_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON array of Chern classes");
    std::vector<ChernClass> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        try {
            out.push_back(class_from_json(j[i]));
        } catch (const ParseError& e) {
            throw ParseError("element " + std::to_string(i) + ": " + e.what(), e.field());
        }
    }
    return out;
}

Json to_json(const SurfaceParams& p) {
    return Json{{"e", to_json(p.e())}, {"m", to_json(p.m())}, {"alpha", to_json(p.alpha())}, {"lambda", to_json(p.lambda())}};
}

SurfaceParams params_from_json(const Json& j) {
    const std::string ctx = "surface parameters";
    auto e = rational_from_json(require(j, "e", ctx), "e");
    auto m = rational_from_json(require(j, "m", ctx), "m");
    auto alpha = rational_from_json(require(j, "alpha", ctx), "alpha");
    auto lambda = rational_from_json(require(j, "lambda", ctx), "lambda");
    reject_unknown(j, {"e", "m", "alpha", "lambda"}, ctx);
    return SurfaceParams::create(std::move(e), std::move(m), std::move(alpha), std::move(lambda));
}

Json to_json(const Slope& s) { return s.str(); }

Json to_json(const LaurentTerm& t) { return Json{{"exponent", t.exponent}, {"coefficient", to_json(t.coefficient)}}; }

Json to_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [k, c] : p.terms()) arr.push_back(to_json(LaurentTerm{k, c}));
    return arr;
}

LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("Laurent polynomial must be an array of terms");
    LaurentPoly p;
    for (const auto& t : j) {
        const auto& e = require(t, "exponent", "Laurent term");
        if (!e.is_number_integer()) throw ParseError("Laurent term exponent must be an integer", "exponent");
        p.add_term(e.get<int>(), rational_from_json(require(t, "coefficient", "Laurent term"), "coefficient"));
    }
    return p;
}

Json to_json(const BiPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(Json{{"u", e.first}, {"v", e.second}, {"coefficient", to_json(c)}});
    return arr;
}

Json to_json(const ChargeExpr& z) { return Json{{"real", to_json(z.real)}, {"imag", to_json(z.imag)}}; }

Json to_json(const CurveCharge& z) { return Json{{"real", to_json(z.real)}, {"imag", to_json(z.imag)}}; }

Json to_json(const ExactComplex& z) { return Json{{"real", to_json(z.real)}, {"imag", to_json(z.imag)}}; }

Json to_json(const PhaseVerdict& v) {
    return Json{{"ordering", to_string(v.ordering)},
                {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)},
                {"cross", to_json(v.cross)}};
}

PhaseVerdict verdict_from_json(const Json& j) {
    PhaseVerdict v;
    const std::string o = require(j, "ordering", "phase verdict").get<std::string>();
    if (o == "Precedes") v.ordering = PhaseOrder::Precedes;
    else if (o == "Succeeds") v.ordering = PhaseOrder::Succeeds;
    else if (o == "EventuallyEqual") v.ordering = PhaseOrder::EventuallyEqual;
    else throw ParseError("unknown ordering \"" + o + "\"", "ordering");
    v.cross = laurent_from_json(require(j, "cross", "phase verdict"));
    const Json& w = require(j, "witness", "phase verdict");
    if (!w.is_null())
        v.witness = LaurentTerm{require(w, "exponent", "witness").get<int>(),
                                rational_from_json(require(w, "coefficient", "witness"), "coefficient")};
    return v;
}

Json to_json(const LimitPhase& phase) { return Json{{"phase", to_json(phase.as_rational())}, {"attained", phase.attained}}; }

LimitPhase limit_phase_from_json(const Json& j) {
    const Rational r = rational_from_json(require(j, "phase", "limit phase"), "phase");
    LimitPhase out;
    if (r == Rational(0)) out.value = LimitPhase::Value::LimitZero;
    else if (r == Rational(1, 2)) out.value = LimitPhase::Value::Half;
    else if (r == Rational(1)) out.value = LimitPhase::Value::LimitOne;
    else throw ParseError("limit phase must be 0, 1/2 or 1", "phase");
    out.attained = require(j, "attained", "limit phase").get<bool>();
    return out;
}

Json to_json(const TheoremAReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json item{{"candidate", to_json(e.candidate)}};
        item["verdict"] = e.verdict ? to_json(*e.verdict) : Json(nullptr);
        item["destabilizes"] = e.destabilizes();
        item["error"] = e.error ? Json(*e.error) : Json(nullptr);
        entries.push_back(std::move(item));
    }
    return Json{{"class", to_json(report.source)},
                {"target", to_json(report.target)},
                {"twisted_degree", to_json(report.twisted_degree)},
                {"target_admissibility", to_string(report.target_admissibility)},
                {"target_real_part_negative", report.target_real_part_negative},
                {"candidates", std::move(entries)}};
}

Json to_json(const Wall& w) {
    return Json{{"u", range_json(w.u.lo, w.u.hi)},
                {"v", range_json(w.v_lo, w.v_hi)},
                {"multiplicity", w.u.multiplicity},
                {"exact", w.u.exact()},
                {"v_monotone", w.v_monotone}};
}

Json to_json(const WallReport& r) {
    Json walls = Json::array();
    for (const auto& w : r.walls) walls.push_back(to_json(w));
    return Json{{"left", to_json(r.left)},
                {"right", to_json(r.right)},
                {"admissibility", Json{{"left", to_string(r.left_admissibility)}, {"right", to_string(r.right_admissibility)}}},
                {"flags", r.flags},
                {"cross", to_json(r.cross)},
                {"walls", std::move(walls)},
                {"eventual", r.eventual ? to_json(*r.eventual) : Json(nullptr)}};
}

WallReport wall_report_from_json(const Json& j) {
    const std::string ctx = "wall report";
    WallReport r;
    r.left = class_from_json(require(j, "left", ctx));
    r.right = class_from_json(require(j, "right", ctx));
    const Json& adm = require(j, "admissibility", ctx);
    r.left_admissibility = admissibility_from_string(require(adm, "left", ctx).get<std::string>());
    r.right_admissibility = admissibility_from_string(require(adm, "right", ctx).get<std::string>());
    r.flags = require(j, "flags", ctx).get<std::vector<std::string>>();
    r.cross = laurent_from_json(require(j, "cross", ctx));
    for (const auto& w : require(j, "walls", ctx)) {
        Wall wall;
        const Json& u = require(w, "u", "wall");
        const Json& v = require(w, "v", "wall");
        wall.u.lo = rational_from_json(require(u, "lo", "wall"), "lo");
        wall.u.hi = rational_from_json(require(u, "hi", "wall"), "hi");
        wall.u.multiplicity = require(w, "multiplicity", "wall").get<int>();
        wall.v_lo = rational_from_json(require(v, "lo", "wall"), "lo");
        wall.v_hi = rational_from_json(require(v, "hi", "wall"), "hi");
        wall.v_monotone = require(w, "v_monotone", "wall").get<bool>();
        r.walls.push_back(std::move(wall));
    }
    const Json& ev = require(j, "eventual", ctx);
    if (!ev.is_null()) r.eventual = verdict_from_json(ev);
    return r;
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(what + " is not valid JSON: " + e.what());
    }
}

} // namespace weierstab::io

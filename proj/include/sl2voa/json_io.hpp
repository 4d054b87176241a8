#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "sl2voa/characters.hpp"
#include "sl2voa/zhu.hpp"

namespace sl2voa::json {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw Error(Errc::ParseError, "rational must be a string");
    return Rational::parse(j.get<std::string>());
}

inline Json to_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const auto& [d, c] : p.terms()) arr.push_back(Json::array({d, c.str()}));
    return arr;
}

inline UniPoly unipoly_from_json(const Json& j) {
    UniPoly p;
    for (const auto& t : j) p.add_term(t.at(0).get<unsigned>(), rational_from_json(t.at(1)));
    return p;
}

/// [[dx, dy, "c"], ...]
inline Json to_json(const BiPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e.first, e.second, c.str()}));
    return arr;
}

inline Json to_json(const Level& L) {
    return Json{{"p", L.p()}, {"q", L.q()}, {"ell", L.ell().str()}, {"t", L.t().str()}};
}

inline Level level_from_json(const Json& j) { return Level::from_pq(j.at("p").get<long>(), j.at("q").get<long>()); }

inline Json to_json(const AdmissibleWeight& w) { return Json{{"n", w.n}, {"k", w.k}, {"j", w.j.str()}}; }

inline AdmissibleWeight weight_from_json(const Level& L, const Json& j) {
    AdmissibleWeight w = make_weight(L, j.at("n").get<long>(), j.at("k").get<long>());
    if (!(w.j == rational_from_json(j.at("j")))) throw Error(Errc::ParseError, "weight j does not match (n,k)");
    return w;
}

inline Json to_json(const QSeries& s) {
    Json terms = Json::array();
    for (const auto& [m, c] : s.lattice_terms()) terms.push_back(Json::array({m, c.str()}));
    return Json{{"D", s.exponent_denominator()}, {"terms", terms}, {"order", s.order().str()}};
}

inline QSeries qseries_from_json(const Json& j) {
    const long D = j.at("D").get<long>();
    if (D <= 0) throw Error(Errc::ParseError, "series denominator must be positive");
    QSeries::Terms t;
    for (const auto& term : j.at("terms")) t[Rational(term.at(0).get<long>(), D)] = rational_from_json(term.at(1));
    return QSeries::from_terms(t, rational_from_json(j.at("order")));
}

inline Json to_json(const PBWElement& x) {
    Json terms = Json::array();
    for (const auto& [e, c] : x.terms()) terms.push_back(Json::array({Json::array({e[0], e[1], e[2]}), c.str()}));
    return Json{{"algebra", std::string(algebra_name(x.algebra()))}, {"terms", terms}};
}

inline Json complex_json(const ComplexVal& z, int digits = 30) {
    return Json::array({real_str(z.re, digits), real_str(z.im, digits)});
}

inline Json to_json(const Certified& c, int digits = 30) {
    return Json{{"value", complex_json(c.value, digits)}, {"err", real_str(c.err, 6)}};
}

inline Json outputs_json(const FusionCoefficients& f) {
    Json outs = Json::array();
    for (const auto& [w, m] : f.outputs) outs.push_back(Json{{"weight", to_json(w)}, {"mult", m}});
    return outs;
}

inline Json fusion_record(const FusionCoefficients& f, bool oracles_agree) {
    return Json{{"j1", to_json(f.first)},
                {"j2", to_json(f.second)},
                {"outputs", outputs_json(f)},
                {"gate_passed", f.gate_passed},
                {"oracles_agree", oracles_agree}};
}

/// Plain-text rendering of a report: nested objects become indented
/// "key: value" lines, arrays of scalars stay inline.
inline void render_text(const Json& j, std::ostream& out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto is_flat = [](const Json& v) {
        if (!v.is_array()) return !v.is_object();
        for (const auto& e : v)
            if (e.is_object()) return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [key, v] : j.items()) {
            if (is_flat(v)) {
                const std::string text = v.is_array() ? v.dump() : scalar(v);
                out << pad << key << ':' << (text.empty() ? "" : " ") << text << '\n';
            } else {
                out << pad << key << ":\n";
                render_text(v, out, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (is_flat(e)) {
                out << pad << "- " << (e.is_array() ? e.dump() : scalar(e)) << '\n';
            } else {
                out << pad << "-\n";
                render_text(e, out, indent + 2);
            }
        }
    } else {
        out << pad << scalar(j) << '\n';
    }
}

}  // namespace sl2voa::json

#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sl2voa/json_io.hpp"
#include "sl2voa/verify.hpp"

namespace sl2voa::cli {

using json::Json;
using json::to_json;

inline constexpr const char* kSchemaVersion = "1";

/// Raised for anything the user got wrong; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flags as typed on the command line; empty means absent.
struct Flags {
    std::string p, q, n, k, j, j1, j2, z, trunc, tau, tol, oracle, suite, pmax, qmax;
    std::string format = "text";
};

namespace detail {

inline long parse_long(const std::string& name, const std::string& s) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("--" + name + " expects an integer, got '" + s + "'");
}

inline double parse_double(const std::string& name, const std::string& s) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("--" + name + " expects a number, got '" + s + "'");
}

inline Real parse_real(const std::string& name, const std::string& s) {
    (void)parse_double(name, s);
    return Real(s);
}

inline const std::string& require(const std::string& name, const std::string& v) {
    if (v.empty()) throw UsageError("--" + name + " is required");
    return v;
}

inline Level level(const Flags& f) {
    return Level::from_pq(parse_long("p", require("p", f.p)), parse_long("q", require("q", f.q)));
}

/// "n,k" or a rational j.
inline AdmissibleWeight weight_arg(const Level& L, const std::string& name, const std::string& s) {
    if (auto comma = s.find(','); comma != std::string::npos)
        return make_weight(L, parse_long(name, s.substr(0, comma)), parse_long(name, s.substr(comma + 1)));
    auto w = weight_from_j(L, Rational::parse(s));
    if (!w) throw Error(Errc::WeightOutOfRange, "j=" + s + " is not admissible");
    return *w;
}

inline AdmissibleWeight single_weight(const Level& L, const Flags& f) {
    if (!f.j.empty()) {
        if (!f.n.empty() || !f.k.empty()) throw UsageError("give either --j or --n/--k, not both");
        return weight_arg(L, "j", f.j);
    }
    return make_weight(L, f.n.empty() ? 0 : parse_long("n", f.n), f.k.empty() ? 0 : parse_long("k", f.k));
}

inline Rational z_arg(const Flags& f) {
    Rational z = Rational::parse(f.z.empty() ? std::string("1/2") : f.z);
    if (z <= Rational(0) || z >= Rational(1)) throw Error(Errc::ZOutOfRange, "z must satisfy 0 < z < 1");
    return z;
}

inline ComplexVal tau_arg(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--tau expects \"re,im\", got '" + s + "'");
    ComplexVal t{parse_real("tau", s.substr(0, comma)), parse_real("tau", s.substr(comma + 1))};
    if (!(t.im > 0)) throw Error(Errc::NonConvergent, "Im(tau) must be positive");
    return t;
}

inline double tol_arg(const Flags& f) {
    double tol = f.tol.empty() ? 1e-12 : parse_double("tol", f.tol);
    if (!(tol > 0)) throw Error(Errc::TolTooSmall, "tol must be positive");
    if (tol < 1e-30) throw Error(Errc::TolTooSmall, "tol below the 128-bit working precision");
    return tol;
}

inline Rational order_arg(const Flags& f, const char* fallback) {
    Rational o = Rational::parse(f.trunc.empty() ? std::string(fallback) : f.trunc);
    if (o <= Rational(0)) throw UsageError("--trunc must be positive");
    return o;
}

inline Json checks_json(const std::vector<Check>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks)
        arr.push_back(Json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    return arr;
}

inline Json weights_json(const std::vector<AdmissibleWeight>& ws) {
    Json arr = Json::array();
    for (const auto& w : ws) arr.push_back(to_json(w));
    return arr;
}

// ---------------------------------------------------------------------------
// subcommands; each fills results and checks

struct Outcome {
    Json results = Json::object();
    std::vector<Check> checks;
    void check(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

inline Outcome cmd_weights(const Flags& f) {
    const Level L = level(f);
    Outcome o;
    const auto ws = enumerate_admissible(L);
    Json arr = Json::array();
    for (const auto& w : ws) {
        Json e = to_json(w);
        e["conformal_weight"] = conformal_weight(L, w).str();
        arr.push_back(e);
    }
    o.results["level"] = to_json(L);
    o.results["count"] = ws.size();
    o.results["weights"] = arr;
    o.check("count equals (p-1)q", static_cast<long>(ws.size()) == L.weight_count());
    const UniPoly f_vac = vacuum_polynomial(L);
    bool roots = true;
    for (const auto& w : ws) roots = roots && poly_eval(f_vac, w.j).is_zero();
    o.check("weights are roots of the vacuum polynomial", roots);
    return o;
}

inline Outcome cmd_zhu(const Flags& f) {
    const Level L = level(f);
    Outcome o;
    const ZhuAlgebra A = zhu_vacuum_algebra(L);
    o.results["level"] = to_json(L);
    o.results["relation"] = to_json(A.relation);
    o.results["dimension"] = A.dimension;
    o.results["idempotent_labels"] = weights_json(A.idempotent_labels);
    o.check("dimension equals (p-1)q", A.dimension == L.weight_count() && A.relation.degree() == A.dimension);
    o.check("relation is squarefree", squarefree(A.relation));

    const AnnihilationResult ann = hw_annihilation_polynomial(L);
    o.results["annihilation"] = Json{{"c", ann.c.str()}, {"eigenvalue", to_json(ann.eigenvalue)}};
    o.check("annihilation eigenvalue is a nonzero multiple of the relation", !ann.c.is_zero());

    const C2Reduction c2 = c2_heisenberg_reduction(L);
    o.results["c2"] = Json{{"c", c2.c.str()}, {"exponent", c2.exponent}};
    o.check("c2 exponent equals (p-1)q", c2.exponent == L.weight_count() && !c2.c.is_zero());
    return o;
}

inline Outcome cmd_bimodule(const Flags& f) {
    const Level L = level(f);
    const AdmissibleWeight w = single_weight(L, f);
    Outcome o;
    const BimodulePresentation pres = bimodule_presentation(L, w);
    Json gens = Json::array();
    for (const auto& g : pres.generators) gens.push_back(to_json(g));
    o.results["level"] = to_json(L);
    o.results["weight"] = to_json(w);
    o.results["presentation"] =
        Json{{"y_truncation", pres.y_truncation}, {"generators", gens}, {"dimension", pres.dimension}};

    const MffBimodule m = bimodule_from_mff(L, w);
    Json gcds = Json::array();
    for (const auto& g : m.gcds) gcds.push_back(to_json(g));
    o.results["projected"] = Json{{"gcds", gcds},
                                  {"dims", m.dims},
                                  {"total_dim", m.total_dim},
                                  {"checked_up_to", m.checked_up_to}};
    o.check("projected dimension matches presentation", m.total_dim == pres.dimension,
            std::to_string(m.total_dim) + " vs " + std::to_string(pres.dimension));
    bool same = m.gcds.size() == pres.generators.size();
    for (std::size_t i = 0; same && i < m.gcds.size(); ++i)
        same = make_monic(bimodule_generator_x_part(L, w, static_cast<long>(i))) == m.gcds[i];
    o.check("projected relations match presentation generators", same);
    o.check("degrees at or above n' are unit", m.higher_degrees_unit,
            "checked up to " + std::to_string(m.checked_up_to));
    return o;
}

inline Outcome cmd_fusion(const Flags& f) {
    const Level L = level(f);
    const AdmissibleWeight w1 = weight_arg(L, "j1", require("j1", f.j1));
    const AdmissibleWeight w2 = weight_arg(L, "j2", require("j2", f.j2));
    const std::string oracle = f.oracle.empty() ? "all" : f.oracle;
    if (oracle != "closed" && oracle != "bimodule" && oracle != "mff" && oracle != "all")
        throw UsageError("--oracle must be closed, bimodule, mff or all");
    Outcome o;
    std::vector<std::pair<std::string, FusionCoefficients>> runs;
    if (oracle == "closed" || oracle == "all") runs.emplace_back("closed", fusion_closed_form(L, w1, w2));
    if (oracle == "bimodule" || oracle == "all") runs.emplace_back("bimodule", fusion_via_bimodule(L, w1, w2));
    if (oracle == "mff" || oracle == "all") runs.emplace_back("mff", fusion_from_mff(L, w1, w2));
    bool agree = true;
    Json per = Json::object();
    for (const auto& [name, r] : runs) {
        agree = agree && r == runs.front().second;
        per[name] = json::outputs_json(r);
    }
    o.results["level"] = to_json(L);
    o.results["oracle"] = oracle;
    o.results["fusion"] = json::fusion_record(runs.front().second, agree);
    o.results["per_oracle"] = per;
    o.check("oracles agree", agree);
    return o;
}

inline Outcome cmd_fusion_table(const Flags& f) {
    const Level L = level(f);
    Outcome o;
    const FusionRing ring = fusion_ring(L);
    Json rows = Json::array();
    bool agree = true;
    for (const auto& w1 : ring.basis) {
        const MffBimodule mff = bimodule_from_mff(L, w1);
        for (const auto& w2 : ring.basis) {
            auto a = fusion_closed_form(L, w1, w2);
            bool same = a == fusion_via_bimodule(L, w1, w2) && a == fusion_from_mff(L, mff, w1, w2);
            agree = agree && same;
            rows.push_back(json::fusion_record(a, same));
        }
    }
    o.results["level"] = to_json(L);
    o.results["basis"] = weights_json(ring.basis);
    o.results["table"] = rows;
    o.check("oracles agree on every pair", agree);
    for (const auto& ax : ring.checks) o.check(ax.name, ax.pass, ax.detail);
    return o;
}

inline Outcome cmd_mff_verify(const Flags& f) {
    Outcome o;
    const long m_max = f.trunc.empty() ? 5 : parse_long("trunc", f.trunc);
    if (m_max < 1 || m_max > 8) throw Error(Errc::ParamOutOfRange, "--trunc (m_max) must be in 1..8");
    const auto samples = default_identity_samples();
    const IdentityReport rep = verify_operator_identities(m_max, sample_grid(samples));
    Json ids = Json::array();
    for (const auto& r : rep.identities) {
        ids.push_back(Json{{"name", r.name}, {"checked", r.checked}, {"failed", r.failed},
                           {"first_failure", r.first_failure}});
        o.check("identity " + r.name, r.failed == 0 && r.checked > 0, r.first_failure);
    }
    Json sj = Json::array();
    for (const auto& s : samples) sj.push_back(s.str());
    o.results["m_max"] = m_max;
    o.results["samples"] = sj;
    o.results["identities"] = ids;

    if (!f.p.empty() || !f.q.empty()) {
        const Level L = level(f);
        const AdmissibleWeight w = single_weight(L, f);
        Json proj = Json::object();
        for (auto which : {SingularWord::F1, SingularWord::F2})
            for (auto target : {ProjectionTarget::P1, ProjectionTarget::P, ProjectionTarget::P2}) {
                const std::string key = std::string(which == SingularWord::F1 ? "F1" : "F2") + "_" +
                                        (target == ProjectionTarget::P1  ? "P1"
                                         : target == ProjectionTarget::P ? "P"
                                                                         : "P2");
                proj[key] = to_json(fuchs_projection(L, which, w.n_primed(), w.k_primed(), target));
            }
        o.results["level"] = to_json(L);
        o.results["weight"] = to_json(w);
        o.results["projections"] = proj;
    }
    return o;
}

inline Outcome cmd_character(const Flags& f) {
    const Level L = level(f);
    const AdmissibleWeight w = single_weight(L, f);
    const Rational z = z_arg(f);
    const Rational order = order_arg(f, "10");
    const double tol = tol_arg(f);
    const CharacterSpec s = make_character_spec(L, w, z);
    Outcome o;
    const QSeries chi = character_qseries(s, order, CharacterKind::Chi);
    const QSeries bar = character_qseries(s, order, CharacterKind::ChiBar);
    o.results["level"] = to_json(L);
    o.results["weight"] = to_json(w);
    o.results["z"] = z.str();
    o.results["a"] = s.a();
    o.results["b_plus"] = s.b_plus();
    o.results["b_minus"] = s.b_minus();
    o.results["chi"] = to_json(chi);
    o.results["chi_bar"] = to_json(bar);

    const auto rep = theta_ratio_identity_check(s, order);
    o.results["theta_ratio"] = Json{{"agree", rep.agree},
                                    {"first_difference", rep.first_difference ? rep.first_difference->str() : ""},
                                    {"prefactor_vanishes", rep.prefactor_vanishes}};
    o.check("theta ratio identity", rep.agree && rep.prefactor_vanishes);
    const std::string prob = character_structure_problem(s, order);
    o.check("nonnegative integer coefficients with Sugawara lowest term", prob.empty(), prob);

    if (!f.tau.empty()) {
        const ComplexVal tau = tau_arg(f.tau);
        const Certified num = character_eval_numeric(s, tau, tol, CharacterKind::Chi);
        const ComplexVal ser = qseries_eval(chi, tau);
        const Real diff = abs(ser - num.value);
        o.results["numeric"] = Json{{"tau", json::complex_json(tau)},
                                    {"tol", f.tol.empty() ? std::string("1e-12") : f.tol},
                                    {"chi", to_json(num)},
                                    {"series_value", json::complex_json(ser)},
                                    {"difference", real_str(diff, 6)}};
        o.check("series and numeric values agree", diff <= num.err + Real(1e-8), real_str(diff, 3));
    }
    return o;
}

inline Outcome cmd_stransform(const Flags& f) {
    const Level L = level(f);
    const Rational z = z_arg(f);
    const ComplexVal tau = tau_arg(f.tau.empty() ? std::string("0,1") : f.tau);
    const double tol = tol_arg(f);
    Outcome o;
    o.results["level"] = to_json(L);
    o.results["z"] = z.str();
    o.results["tau"] = json::complex_json(tau);
    o.results["weights"] = weights_json(enumerate_admissible(L));
    Json variants = Json::array();
    for (auto v : {STVariant::KW1, STVariant::KW2, STVariant::KW2_INV}) {
        const STransformReport rep = s_transform_residual(L, z, tau, v, tol);
        Json S = Json::array(), lhs = Json::array(), rhs = Json::array(), res = Json::array();
        for (const auto& row : rep.s_matrix) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(json::complex_json(x, 20));
            S.push_back(r);
        }
        for (std::size_t i = 0; i < rep.lhs.size(); ++i) {
            lhs.push_back(to_json(rep.lhs[i], 20));
            rhs.push_back(to_json(rep.rhs[i], 20));
            res.push_back(Json::array({real_str(rep.residual[i], 6), real_str(rep.residual_err[i], 6)}));
        }
        variants.push_back(Json{{"variant", std::string(st_variant_name(v))},
                                {"factor", json::complex_json(rep.factor, 20)},
                                {"s_matrix", S},
                                {"lhs", lhs},
                                {"rhs", rhs},
                                {"residual", res},
                                {"max_theta_err", real_str(rep.max_theta_err, 6)}});
        o.check(std::string("certified report ") + std::string(st_variant_name(v)),
                rep.max_theta_err <= Real(1e-9), real_str(rep.max_theta_err, 3));
    }
    o.results["variants"] = variants;
    return o;
}

inline Outcome cmd_verify(const Flags& f) {
    const std::string suite = f.suite.empty() ? "all" : f.suite;
    if (suite != "all" && suite != "fusion" && suite != "mff" && suite != "characters")
        throw UsageError("--suite must be all, fusion, mff or characters");
    const long pmax = f.pmax.empty() ? 6 : parse_long("pmax", f.pmax);
    const long qmax = f.qmax.empty() ? 5 : parse_long("qmax", f.qmax);
    if (pmax < 2 || pmax > 8) throw Error(Errc::ParamOutOfRange, "--pmax must be in 2..8");
    if (qmax < 1 || qmax > 6) throw Error(Errc::ParamOutOfRange, "--qmax must be in 1..6");
    Outcome o;
    long items = 0;
    Json per = Json::object();
    auto run = [&](const std::string& name, SuiteResult r) {
        long failed = 0;
        for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
        per[name] = Json{{"checks", r.checks.size()}, {"failed", failed}, {"items", r.items}};
        items += r.items;
        o.checks.insert(o.checks.end(), r.checks.begin(), r.checks.end());
    };
    if (suite == "all" || suite == "fusion") run("fusion", fusion_suite(pmax, qmax));
    if (suite == "all" || suite == "mff") run("mff", mff_suite(pmax, qmax));
    if (suite == "all" || suite == "characters") run("characters", characters_suite(pmax, qmax));
    long passed = 0;
    for (const auto& c : o.checks) passed += c.pass ? 1 : 0;
    o.results["suites"] = per;
    o.results["summary"] = Json{{"checks", o.checks.size()},
                                {"passed", passed},
                                {"failed", static_cast<long>(o.checks.size()) - passed},
                                {"items", items}};
    return o;
}

inline bool usage_code(Errc c) {
    switch (c) {
    case Errc::BothZero:
    case Errc::NotCoprime:
    case Errc::POutOfRange:
    case Errc::QOutOfRange:
    case Errc::ZOutOfRange:
    case Errc::WeightOutOfRange:
    case Errc::ParamOutOfRange:
    case Errc::NonConvergent:
    case Errc::TolTooSmall:
    case Errc::ParseError: return true;
    default: return false;
    }
}

}  // namespace detail

inline const std::vector<std::pair<std::string, std::string>>& subcommands() {
    static const std::vector<std::pair<std::string, std::string>> s{
        {"weights", "admissible weights of a level"},
        {"zhu", "Zhu algebra of the vacuum module"},
        {"bimodule", "bimodule presentation A(L(l,j))"},
        {"fusion", "fusion rule for one pair of weights"},
        {"fusion-table", "full fusion table of a level"},
        {"mff-verify", "operator identities and singular-vector projections"},
        {"character", "character q-series and numeric value"},
        {"stransform", "S-transform residual report"},
        {"verify", "run verification suites over a level sweep"},
    };
    return s;
}

/// Runs one invocation. args excludes the program name. The report goes to
/// out, diagnostics to err; the return value is the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Admissible-level sl2 vertex operator algebra computations", "sl2voa"};
    app.require_subcommand(1, 1);
    Flags f;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, about] : subcommands()) {
        CLI::App* sub = app.add_subcommand(name, about);
        subs[name] = sub;
        sub->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        auto opt = [&](const char* flag, std::string& dst, const char* help) { sub->add_option(flag, dst, help); };
        if (name != "verify" && name != "mff-verify") {
            opt("--p", f.p, "numerator of l+2");
            opt("--q", f.q, "denominator of l+2");
        }
        if (name == "mff-verify") {
            opt("--p", f.p, "numerator of l+2 (optional, adds projections)");
            opt("--q", f.q, "denominator of l+2");
        }
        if (name == "bimodule" || name == "character" || name == "mff-verify") {
            opt("--n", f.n, "n in j = n - k t");
            opt("--k", f.k, "k in j = n - k t");
            opt("--j", f.j, "weight as a rational a/b");
        }
        if (name == "fusion") {
            opt("--j1", f.j1, "first weight as n,k or a/b");
            opt("--j2", f.j2, "second weight as n,k or a/b");
            opt("--oracle", f.oracle, "closed, bimodule, mff or all");
        }
        if (name == "character" || name == "stransform") {
            opt("--z", f.z, "0 < z < 1 as v/u");
            opt("--tau", f.tau, "re,im with im > 0");
            opt("--tol", f.tol, "numeric tolerance");
        }
        if (name == "character" || name == "mff-verify") opt("--trunc", f.trunc, "series order, or m_max for mff-verify");
        if (name == "verify") {
            opt("--suite", f.suite, "all, fusion, mff or characters");
            opt("--pmax", f.pmax, "largest p in the sweep (2..8)");
            opt("--qmax", f.qmax, "largest q in the sweep (1..6)");
        }
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    std::string name;
    for (const auto& [n, sub] : subs)
        if (sub->parsed()) name = n;

    Json echo = Json::object();
    echo["subcommand"] = name;
    const std::pair<const char*, const std::string*> echoed[] = {
        {"p", &f.p},         {"q", &f.q},         {"n", &f.n},       {"k", &f.k},         {"j", &f.j},
        {"j1", &f.j1},       {"j2", &f.j2},       {"z", &f.z},       {"trunc", &f.trunc}, {"tau", &f.tau},
        {"tol", &f.tol},     {"oracle", &f.oracle}, {"suite", &f.suite}, {"pmax", &f.pmax}, {"qmax", &f.qmax}};
    for (const auto& [key, val] : echoed)
        if (!val->empty()) echo[key] = *val;

    detail::Outcome o;
    try {
        if (name == "weights") o = detail::cmd_weights(f);
        else if (name == "zhu") o = detail::cmd_zhu(f);
        else if (name == "bimodule") o = detail::cmd_bimodule(f);
        else if (name == "fusion") o = detail::cmd_fusion(f);
        else if (name == "fusion-table") o = detail::cmd_fusion_table(f);
        else if (name == "mff-verify") o = detail::cmd_mff_verify(f);
        else if (name == "character") o = detail::cmd_character(f);
        else if (name == "stransform") o = detail::cmd_stransform(f);
        else o = detail::cmd_verify(f);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return detail::usage_code(e.code()) ? 2 : 1;
    }

    Json doc = Json::object();
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = echo;
    doc["results"] = o.results;
    doc["checks"] = detail::checks_json(o.checks);
    if (f.format == "json") out << doc.dump(2) << '\n';
    else json::render_text(doc, out);

    for (const auto& c : o.checks)
        if (!c.pass) return 1;
    return 0;
}

}  // namespace sl2voa::cli

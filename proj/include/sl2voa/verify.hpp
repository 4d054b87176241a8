#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2voa/characters.hpp"
#include "sl2voa/zhu.hpp"

namespace sl2voa {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<Check> checks;
    long items = 0;  // individual comparisons behind the checks

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

inline std::vector<Level> sweep_levels(long pmax, long qmax) {
    std::vector<Level> out;
    for (long p = 2; p <= pmax; ++p)
        for (long q = 1; q <= qmax; ++q)
            if (gcd_long(p, q) == 1) out.push_back(Level::from_pq(p, q));
    return out;
}

inline std::string level_tag(const Level& L) { return "p=" + std::to_string(L.p()) + ",q=" + std::to_string(L.q()); }

inline std::string weight_tag(const AdmissibleWeight& w) {
    return "(" + std::to_string(w.n) + "," + std::to_string(w.k) + ")";
}

// ---------------------------------------------------------------------------
// fusion

/// Three fusion oracles on every ordered pair, ring axioms, and the classical
/// limit when q = 1.
inline SuiteResult fusion_suite(long pmax, long qmax) {
    SuiteResult res;
    for (const Level& L : sweep_levels(pmax, qmax)) {
        const auto ws = enumerate_admissible(L);
        std::string mismatch;
        long pairs = 0;
        for (const auto& w1 : ws) {
            const MffBimodule mff = bimodule_from_mff(L, w1);
            for (const auto& w2 : ws) {
                auto a = fusion_closed_form(L, w1, w2);
                auto b = fusion_via_bimodule(L, w1, w2);
                auto c = fusion_from_mff(L, mff, w1, w2);
                ++pairs;
                if (!(a == b && b == c) && mismatch.empty()) mismatch = weight_tag(w1) + "x" + weight_tag(w2);
            }
        }
        res.items += pairs;
        res.add("fusion three-way " + level_tag(L), mismatch.empty(),
                mismatch.empty() ? std::to_string(pairs) + " pairs" : "first mismatch " + mismatch);

        const FusionRing ring = fusion_ring(L);
        for (const auto& ax : ring.checks) res.add("fusion " + ax.name + " " + level_tag(L), ax.pass, ax.detail);

        if (L.q() == 1) {
            const long ell = L.p() - 2;
            std::string bad;
            for (const auto& w1 : ws)
                for (const auto& w2 : ws) {
                    std::set<long> got;
                    for (const auto& [w, m] : fusion_closed_form(L, w1, w2).outputs)
                        if (m == 1) got.insert(w.n);
                    if (got != classical_su2_fusion(ell, w1.n, w2.n) && bad.empty())
                        bad = weight_tag(w1) + "x" + weight_tag(w2);
                }
            res.add("fusion classical limit " + level_tag(L), bad.empty(), bad);
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// mff

inline bool squarefree(const UniPoly& f) { return poly_gcd(f, derivative(f)).degree() == 0; }

/// Operator identities once, then per level: Zhu dimension, annihilation
/// polynomial, C2 exponent, and bimodule dimensions from the projections.
inline SuiteResult mff_suite(long pmax, long qmax, long m_max = 5) {
    SuiteResult res;
    const IdentityReport ids = verify_operator_identities(m_max, sample_grid(default_identity_samples()));
    for (const auto& r : ids.identities) {
        res.items += r.checked;
        res.add("identity " + r.name, r.failed == 0 && r.checked > 0,
                r.failed == 0 ? std::to_string(r.checked) + " cases" : r.first_failure);
    }
    for (const Level& L : sweep_levels(pmax, qmax)) {
        const std::string tag = level_tag(L);
        const ZhuAlgebra A = zhu_vacuum_algebra(L);
        res.add("zhu dimension " + tag,
                A.dimension == L.weight_count() && A.relation.degree() == A.dimension && squarefree(A.relation));

        try {
            auto ann = hw_annihilation_polynomial(L);
            res.add("annihilation " + tag, !ann.c.is_zero(), "c=" + ann.c.str());
        } catch (const Error& e) {
            res.add("annihilation " + tag, false, e.what());
        }
        try {
            auto c2 = c2_heisenberg_reduction(L);
            res.add("c2 exponent " + tag, c2.exponent == L.weight_count() && !c2.c.is_zero(),
                    "exponent=" + std::to_string(c2.exponent) + " c=" + c2.c.str());
        } catch (const Error& e) {
            res.add("c2 exponent " + tag, false, e.what());
        }

        std::string bad;
        for (const auto& w : enumerate_admissible(L)) {
            try {
                const MffBimodule m = bimodule_from_mff(L, w);
                const BimodulePresentation pres = bimodule_presentation(L, w);
                ++res.items;
                if ((m.total_dim != pres.dimension || !m.higher_degrees_unit) && bad.empty())
                    bad = weight_tag(w) + " dim " + std::to_string(m.total_dim) + " vs " +
                          std::to_string(pres.dimension);
                for (std::size_t i = 0; i < m.gcds.size() && bad.empty(); ++i)
                    if (!(make_monic(bimodule_generator_x_part(L, w, static_cast<long>(i))) == m.gcds[i]))
                        bad = weight_tag(w) + " gcd at degree " + std::to_string(i);
            } catch (const Error& e) {
                if (bad.empty()) bad = weight_tag(w) + " " + e.what();
            }
        }
        res.add("bimodule dimensions " + tag, bad.empty(), bad);
    }
    return res;
}

// ---------------------------------------------------------------------------
// characters

struct CharacterFixture {
    long p, q;
};

inline const std::vector<CharacterFixture>& character_fixtures() {
    static const std::vector<CharacterFixture> f{{2, 1}, {3, 1}, {3, 2}, {5, 3}};
    return f;
}

inline Rational c_ell(const Level& L) { return Rational(3) * L.ell() / (L.ell() + Rational(2)); }

/// Nonnegative integer coefficients and lowest term 1 * q^{Delta - z j/2 - c/24}.
inline std::string character_structure_problem(const CharacterSpec& s, const Rational& order) {
    const QSeries bar = character_qseries(s, order, CharacterKind::ChiBar);
    for (const auto& [e, c] : bar.terms())
        if (!c.is_integer() || c.sign() < 0) return "coefficient " + c.str() + " at q^" + e.str();
    const Rational expect = conformal_weight(s.level, s.weight) - s.z * s.weight.j / Rational(2) - c_ell(s.level) / Rational(24);
    auto low = bar.lowest_exponent();
    if (!low || !(*low == expect) || !(bar.coeff(*low) == Rational(1)))
        return "lowest term " + (low ? bar.coeff(*low).str() + "*q^" + low->str() : std::string("none")) +
               ", expected q^" + expect.str();
    return {};
}

/// Largest |series(tau) - numeric(tau)| and numeric error over one spec.
struct NumericAgreement {
    Real diff{0};
    Real err{0};
};

inline NumericAgreement character_numeric_agreement(const CharacterSpec& s, const ComplexVal& tau,
                                                    const Rational& order, double tol) {
    const QSeries ser = character_qseries(s, order, CharacterKind::Chi);
    const Certified num = character_eval_numeric(s, tau, tol, CharacterKind::Chi);
    return {abs(qseries_eval(ser, tau) - num.value), num.err};
}

inline SuiteResult characters_suite(long pmax, long qmax) {
    SuiteResult res;
    const std::vector<Rational> zs{Rational(1, 3), Rational(1, 2)};
    const std::vector<ComplexVal> taus{{Real(0), Real(1)}, {Real(0), Real(2)}};
    for (const auto& fx : character_fixtures()) {
        if (fx.p > pmax || fx.q > qmax) continue;
        const Level L = Level::from_pq(fx.p, fx.q);
        const std::string tag = level_tag(L);
        std::string ratio_bad, struct_bad, num_bad;
        for (const auto& z : zs)
            for (const auto& w : enumerate_admissible(L)) {
                const CharacterSpec s = make_character_spec(L, w, z);
                const std::string where = weight_tag(w) + " z=" + z.str();
                auto rep = theta_ratio_identity_check(s, Rational(20));
                if ((!rep.agree || !rep.prefactor_vanishes) && ratio_bad.empty())
                    ratio_bad = where + (rep.first_difference ? " at q^" + rep.first_difference->str() : "");
                if (auto prob = character_structure_problem(s, Rational(30)); !prob.empty() && struct_bad.empty())
                    struct_bad = where + " " + prob;
                for (const auto& tau : taus) {
                    auto ag = character_numeric_agreement(s, tau, Rational(30), 1e-12);
                    if ((ag.diff > Real(1e-8) || ag.err > Real(1e-8)) && num_bad.empty())
                        num_bad = where + " diff " + real_str(ag.diff, 3);
                }
                res.items += 4;
            }
        res.add("theta ratio identity " + tag, ratio_bad.empty(), ratio_bad);
        res.add("character structure " + tag, struct_bad.empty(), struct_bad);
        res.add("series numeric agreement " + tag, num_bad.empty(), num_bad);
    }
    if (pmax >= 3 && qmax >= 2) {
        const Level L = Level::from_pq(3, 2);
        for (auto v : {STVariant::KW1, STVariant::KW2, STVariant::KW2_INV}) {
            auto rep = s_transform_residual(L, Rational(1, 2), ComplexVal{Real(0), Real(3) / 2}, v, 1e-12);
            res.add("stransform report " + std::string(st_variant_name(v)) + " p=3,q=2",
                    rep.residual.size() == 4 && rep.max_theta_err <= Real(1e-9),
                    "max theta err " + real_str(rep.max_theta_err, 3));
        }
    }
    return res;
}

}  // namespace sl2voa

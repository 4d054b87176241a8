#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sl2voa/admissible.hpp"
#include "sl2voa/pbw.hpp"

namespace sl2voa {

// The singular-vector words F1(n',k'), F2(n',k') contain non-integer powers
// and are never materialized; only their images under the three quotient
// maps onto sl2 (P1), L0 (P) and the Heisenberg algebra (P2) are built.

enum class SingularWord { F1, F2 };
enum class ProjectionTarget { P1, P, P2 };

constexpr Algebra target_algebra(ProjectionTarget t) {
    switch (t) {
    case ProjectionTarget::P1: return Algebra::SL2;
    case ProjectionTarget::P: return Algebra::L0;
    case ProjectionTarget::P2: return Algebra::HEIS;
    }
    return Algebra::SL2;
}

constexpr FactorKind target_factor(ProjectionTarget t) {
    switch (t) {
    case ProjectionTarget::P1: return FactorKind::H;
    case ProjectionTarget::P: return FactorKind::G;
    case ProjectionTarget::P2: return FactorKind::Hbar;
    }
    return FactorKind::H;
}

/// Operator factors of the projected word, without the trailing power.
inline std::vector<OperatorFactor> projection_factors(const Level& L, SingularWord which, long n, long k,
                                                      ProjectionTarget target) {
    if (n < 1 || n > L.p() - 1 || k < 1 || k > L.q())
        throw Error(Errc::ParamOutOfRange, "need 1<=n'<=p-1 and 1<=k'<=q, got n'=" + std::to_string(n) +
                                               " k'=" + std::to_string(k));
    const Rational t = L.t();
    const FactorKind kind = target_factor(target);
    std::vector<OperatorFactor> out;
    if (which == SingularWord::F1) {
        for (long r = 0; r <= n - 1; ++r)
            for (long s = 1; s <= k - 1; ++s) out.push_back({kind, Rational(r) + Rational(s) * t});
    } else {
        for (long r = 1; r <= L.p() - n; ++r)
            for (long s = 1; s <= L.q() - k; ++s) out.push_back({kind, -Rational(r) - Rational(s) * t});
    }
    return out;
}

/// F1 ends in f^{n'} (resp. T-^{n'}, f~^{n'}); F2 ends in e^{p-n'} (resp. T+^{p-n'}, e~^{p-n'}).
inline PBWElement projection_tail(const Level& L, SingularWord which, long n, ProjectionTarget target) {
    const Algebra alg = target_algebra(target);
    const unsigned pw = static_cast<unsigned>(which == SingularWord::F1 ? n : L.p() - n);
    // Position of the generator in the (A, B, C) order of each algebra.
    bool is_a;
    switch (target) {
    case ProjectionTarget::P1: is_a = which == SingularWord::F1; break;   // f = A, e = C
    case ProjectionTarget::P: is_a = which == SingularWord::F2; break;    // T+ = A, T- = C
    case ProjectionTarget::P2: is_a = which == SingularWord::F2; break;   // e~ = A, f~ = C
    default: is_a = true;
    }
    return is_a ? PBWElement::monomial(alg, pw, 0, 0) : PBWElement::monomial(alg, 0, 0, pw);
}

inline PBWElement fuchs_projection(const Level& L, SingularWord which, long n_primed, long k_primed,
                                   ProjectionTarget target) {
    auto factors = projection_factors(L, which, n_primed, k_primed, target);
    return factor_product(target_algebra(target), factors, projection_tail(L, which, n_primed, target));
}

// ---------------------------------------------------------------------------
// Operator identities

struct IdentityResult {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::string first_failure;
};

struct IdentityReport {
    std::vector<IdentityResult> identities;
    bool all_pass() const {
        for (const auto& r : identities)
            if (r.failed != 0 || r.checked == 0) return false;
        return true;
    }
};

/// Exact PBW check of the commutation identities for the H and G operators.
/// Each identity is polynomial of degree at most two per parameter, so more
/// than two distinct samples per parameter make the check a proof.
inline IdentityReport verify_operator_identities(long m_max, const std::vector<std::pair<Rational, Rational>>& samples) {
    if (m_max < 1 || samples.empty())
        throw Error(Errc::ParamOutOfRange, "need m_max >= 1 and at least one sample");

    std::set<Rational> alphas;
    for (const auto& s : samples) alphas.insert(s.first);

    IdentityReport rep;
    auto check = [&](const std::string& name, auto&& body) {
        IdentityResult r;
        r.name = name;
        body([&](bool ok, const std::string& where) {
            ++r.checked;
            if (!ok) {
                if (r.failed == 0) r.first_failure = where;
                ++r.failed;
            }
        });
        rep.identities.push_back(std::move(r));
    };

    const auto H = [](const Rational& a) { return expand_factor({FactorKind::H, a}); };
    const auto G = [](const Rational& a) { return expand_factor({FactorKind::G, a}); };
    const auto mono = PBWElement::monomial;
    const auto ms = [](long m) { return std::to_string(m); };

    check("H_a H_b = H_b H_a", [&](auto record) {
        for (const auto& [a, b] : samples) record(H(a) * H(b) == H(b) * H(a), "a=" + a.str() + " b=" + b.str());
    });
    check("e^m H_a = H_{a-m} e^m", [&](auto record) {
        for (long m = 1; m <= m_max; ++m)
            for (const auto& a : alphas) {
                auto em = mono(Algebra::SL2, 0, 0, static_cast<unsigned>(m), 1);
                record(em * H(a) == H(a - Rational(m)) * em, "m=" + ms(m) + " a=" + a.str());
            }
    });
    check("f^m H_a = H_{a+m} f^m", [&](auto record) {
        for (long m = 1; m <= m_max; ++m)
            for (const auto& a : alphas) {
                auto fm = mono(Algebra::SL2, static_cast<unsigned>(m), 0, 0, 1);
                record(fm * H(a) == H(a + Rational(m)) * fm, "m=" + ms(m) + " a=" + a.str());
            }
    });
    check("f^m e^m = H_0 ... H_{m-1}", [&](auto record) {
        for (long m = 1; m <= m_max; ++m) {
            PBWElement prod(Algebra::SL2, 1);
            for (long i = 0; i < m; ++i) prod = prod * H(Rational(i));
            auto u = static_cast<unsigned>(m);
            record(mono(Algebra::SL2, u, 0, u, 1) == prod, "m=" + ms(m));
        }
    });
    check("e^m f^m = H_{-1} ... H_{-m}", [&](auto record) {
        for (long m = 1; m <= m_max; ++m) {
            PBWElement prod(Algebra::SL2, 1);
            for (long i = 1; i <= m; ++i) prod = prod * H(Rational(-i));
            auto u = static_cast<unsigned>(m);
            record(mono(Algebra::SL2, 0, 0, u, 1) * mono(Algebra::SL2, u, 0, 0, 1) == prod, "m=" + ms(m));
        }
    });
    check("h^m e^n = e^n (h+2n)^m", [&](auto record) {
        for (long m = 1; m <= m_max; ++m)
            for (long n = 1; n <= m_max; ++n) {
                auto um = static_cast<unsigned>(m), un = static_cast<unsigned>(n);
                auto shifted = pbw_power(sl2_h() + PBWElement(Algebra::SL2, Rational(2 * n)), um);
                record(mono(Algebra::SL2, 0, um, 0, 1) * mono(Algebra::SL2, 0, 0, un, 1) ==
                           mono(Algebra::SL2, 0, 0, un, 1) * shifted,
                       "m=" + ms(m) + " n=" + ms(n));
            }
    });
    check("h^m f^n = f^n (h-2n)^m", [&](auto record) {
        for (long m = 1; m <= m_max; ++m)
            for (long n = 1; n <= m_max; ++n) {
                auto um = static_cast<unsigned>(m), un = static_cast<unsigned>(n);
                auto shifted = pbw_power(sl2_h() - PBWElement(Algebra::SL2, Rational(2 * n)), um);
                record(mono(Algebra::SL2, 0, um, 0, 1) * mono(Algebra::SL2, un, 0, 0, 1) ==
                           mono(Algebra::SL2, un, 0, 0, 1) * shifted,
                       "m=" + ms(m) + " n=" + ms(n));
            }
    });
    check("G_a G_b = G_b G_a", [&](auto record) {
        for (const auto& [a, b] : samples) record(G(a) * G(b) == G(b) * G(a), "a=" + a.str() + " b=" + b.str());
    });
    check("T+^m G_a = G_{a-m} T+^m", [&](auto record) {
        for (long m = 1; m <= m_max; ++m)
            for (const auto& a : alphas) {
                auto tp = mono(Algebra::L0, static_cast<unsigned>(m), 0, 0, 1);
                record(tp * G(a) == G(a - Rational(m)) * tp, "m=" + ms(m) + " a=" + a.str());
            }
    });
    check("T-^m G_a = G_{a+m} T-^m", [&](auto record) {
        for (long m = 1; m <= m_max; ++m)
            for (const auto& a : alphas) {
                auto tm = mono(Algebra::L0, 0, 0, static_cast<unsigned>(m), 1);
                record(tm * G(a) == G(a + Rational(m)) * tm, "m=" + ms(m) + " a=" + a.str());
            }
    });
    check("T-^m T+^m = G_0 ... G_{m-1}", [&](auto record) {
        for (long m = 1; m <= m_max; ++m) {
            PBWElement prod(Algebra::L0, 1);
            for (long i = 0; i < m; ++i) prod = prod * G(Rational(i));
            auto u = static_cast<unsigned>(m);
            record(mono(Algebra::L0, 0, 0, u, 1) * mono(Algebra::L0, u, 0, 0, 1) == prod, "m=" + ms(m));
        }
    });
    check("T+^m T-^m = G_{-1} ... G_{-m}", [&](auto record) {
        for (long m = 1; m <= m_max; ++m) {
            PBWElement prod(Algebra::L0, 1);
            for (long i = 1; i <= m; ++i) prod = prod * G(Rational(-i));
            auto u = static_cast<unsigned>(m);
            record(mono(Algebra::L0, u, 0, u, 1) == prod, "m=" + ms(m));
        }
    });
    check("sigma(H_a) = H_{-(a+1)}", [&](auto record) {
        for (const auto& a : alphas) record(sigma_antihom(H(a)) == H(-(a + Rational(1))), "a=" + a.str());
    });
    return rep;
}

/// Grid of all ordered pairs drawn from the given values.
inline std::vector<std::pair<Rational, Rational>> sample_grid(const std::vector<Rational>& values) {
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& a : values)
        for (const auto& b : values) out.emplace_back(a, b);
    return out;
}

/// Seven distinct rationals, enough for every identity in the report.
inline std::vector<Rational> default_identity_samples() {
    return {Rational(0), Rational(1), Rational(-3, 2), Rational(2, 3), Rational(-5, 7), Rational(7, 4),
            Rational(-11, 3)};
}

// ---------------------------------------------------------------------------
// Highest-weight annihilation polynomial

struct AnnihilationResult {
    Rational c;            // eigenvalue = c * vacuum_polynomial
    UniPoly poly;          // the monic vacuum polynomial
    UniPoly eigenvalue;    // eigenvalue of X on a highest-weight vector as a polynomial in j
    PBWElement element;    // X itself
};

/// X = prod_{r=1}^{p-1} prod_{s=1}^{q-1} H_{-p+r+st} * e^{p-1} f^{p-1} acting on a
/// highest-weight vector of weight j.
inline AnnihilationResult hw_annihilation_polynomial(const Level& L) {
    const long p = L.p(), q = L.q();
    const Rational t = L.t();
    std::vector<OperatorFactor> factors;
    for (long r = 1; r <= p - 1; ++r)
        for (long s = 1; s <= q - 1; ++s)
            factors.push_back({FactorKind::H, Rational(-p + r) + Rational(s) * t});
    const auto pm = static_cast<unsigned>(p - 1);
    PBWElement tail = PBWElement::monomial(Algebra::SL2, 0, 0, pm) * PBWElement::monomial(Algebra::SL2, pm, 0, 0);
    PBWElement x = factor_product(Algebra::SL2, factors, tail);

    UniPoly eig;
    for (const auto& [e, c] : x.terms()) {
        const auto& [fa, hb, ec] = e;
        if (ec > 0) continue;  // e kills the highest-weight vector
        if (fa != 0) throw Error(Errc::NotProportional, "X has a term of nonzero weight");
        eig.add_term(hb, c);
    }
    UniPoly vac = vacuum_polynomial(L);
    if (eig.is_zero() || eig.degree() != vac.degree())
        throw Error(Errc::NotProportional, "eigenvalue polynomial has the wrong degree");
    Rational c = eig.leading();
    if (!(vac * c == eig)) throw Error(Errc::NotProportional, "eigenvalue is not a multiple of f");
    return {c, vac, eig, x};
}

// ---------------------------------------------------------------------------
// Bimodule presentation from the projected singular vectors

struct MffBimodule {
    std::vector<UniPoly> gcds;            // monic gcd at T- degree i, i < n'
    std::vector<long> dims;               // deg(gcd_i)
    long total_dim = 0;
    bool higher_degrees_unit = false;     // every degree in [n', checked_up_to] has unit gcd
    long max_degree = 0;
    long checked_up_to = 0;               // highest degree reached by both relation families
    std::vector<UniPoly> all_gcds;        // per degree 0..max_degree (zero = nothing collected)
};

inline long default_mff_depth(const Level& L, const AdmissibleWeight& w) { return L.p() + w.n_primed() + 2; }

/// Reduces T-^d P(F1) and T-^d P(F2) modulo T+ U(L0) for d = 0..d_max and
/// intersects the resulting relation ideals of C[T0] per T- degree.
inline MffBimodule bimodule_from_mff(const Level& L, const AdmissibleWeight& w, long d_max) {
    const long n = w.n_primed(), k = w.k_primed();
    if (d_max < L.p() + n)
        throw Error(Errc::InsufficientDepth,
                    "d_max=" + std::to_string(d_max) + " < p+n'=" + std::to_string(L.p() + n));

    std::map<long, std::vector<UniPoly>> collected;
    std::map<SingularWord, long> reach;
    const PBWElement tminus = l0_tminus();
    for (auto which : {SingularWord::F1, SingularWord::F2}) {
        reach[which] = -1;
        PBWElement y = fuchs_projection(L, which, n, k, ProjectionTarget::P);
        for (long d = 0; d <= d_max; ++d) {
            if (d > 0) y = tminus * y;
            UniPoly rel;
            long degree = -1;
            for (const auto& [e, c] : y.terms()) {
                const auto& [a, b, cc] = e;
                if (a > 0) continue;  // lies in T+ U(L0)
                if (degree == -1) degree = static_cast<long>(cc);
                if (degree != static_cast<long>(cc))
                    throw Error(Errc::DegreeNotConcentrated,
                                "reduced generator spans T- degrees " + std::to_string(degree) + " and " +
                                    std::to_string(cc));
                rel.add_term(b, c);
            }
            if (degree >= 0) {
                collected[degree].push_back(std::move(rel));
                reach[which] = std::max(reach[which], degree);
            }
        }
    }

    MffBimodule out;
    out.max_degree = collected.empty() ? 0 : collected.rbegin()->first;
    out.all_gcds.resize(static_cast<std::size_t>(out.max_degree + 1));
    for (auto& [deg, polys] : collected) {
        UniPoly g = polys.front();
        for (std::size_t i = 1; i < polys.size(); ++i) g = poly_gcd(g, polys[i]);
        out.all_gcds[static_cast<std::size_t>(deg)] = make_monic(g);
    }
    for (long i = 0; i < n; ++i) {
        if (i > out.max_degree || out.all_gcds[static_cast<std::size_t>(i)].is_zero())
            throw Error(Errc::InsufficientDepth, "no relation collected at T- degree " + std::to_string(i));
        const UniPoly& g = out.all_gcds[static_cast<std::size_t>(i)];
        out.gcds.push_back(g);
        out.dims.push_back(g.degree());
        out.total_dim += g.degree();
    }
    out.checked_up_to = std::min(reach[SingularWord::F1], reach[SingularWord::F2]);
    out.higher_degrees_unit = out.checked_up_to >= n;
    for (long i = n; i <= out.checked_up_to; ++i) {
        const UniPoly& g = out.all_gcds[static_cast<std::size_t>(i)];
        if (g.is_zero() || g.degree() != 0) out.higher_degrees_unit = false;
    }
    return out;
}

inline MffBimodule bimodule_from_mff(const Level& L, const AdmissibleWeight& w) {
    return bimodule_from_mff(L, w, default_mff_depth(L, w));
}

// ---------------------------------------------------------------------------
// C2 quotient

struct C2Reduction {
    Rational c;
    long exponent;
};

/// f~^{p-1} P2(F2(1,1)) modulo e~ U(L2) + U(L2) f~ is c * h~^{(p-1)q}.
inline C2Reduction c2_heisenberg_reduction(const Level& L) {
    PBWElement p2 = fuchs_projection(L, SingularWord::F2, 1, 1, ProjectionTarget::P2);
    PBWElement y = PBWElement::monomial(Algebra::HEIS, 0, 0, static_cast<unsigned>(L.p() - 1)) * p2;
    std::vector<std::pair<unsigned, Rational>> rest;
    for (const auto& [e, c] : y.terms())
        if (e[0] == 0 && e[2] == 0) rest.emplace_back(e[1], c);
    if (rest.size() != 1) throw Error(Errc::NotMonomial, std::to_string(rest.size()) + " surviving terms");
    C2Reduction r{rest.front().second, static_cast<long>(rest.front().first)};
    if (r.exponent != L.weight_count())
        throw Error(Errc::WrongExponent, "exponent " + std::to_string(r.exponent) + " != (p-1)q = " +
                                             std::to_string(L.weight_count()));
    return r;
}

}  // namespace sl2voa

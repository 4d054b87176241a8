#pragma once

#include <vector>

#include "sl2voa/admissible.hpp"
#include "sl2voa/numeric.hpp"
#include "sl2voa/qseries.hpp"

namespace sl2voa {

/// Which normalization of the character: chi_bar carries the c_l / 24
/// anomaly, chi carries c_{l,z} / 24 and equals q^{l z^2 / 4} chi_bar.
enum class CharacterKind { Chi, ChiBar };

struct CharacterSpec {
    Level level;
    AdmissibleWeight weight;
    Rational z;  // 0 < z < 1

    long a() const { return level.p() * level.q(); }
    /// q((n+1) + k t); the sign of the k t term is fixed by the lowest-term check
    long b_plus() const { return level.q() * (weight.n + 1) + weight.k * level.p(); }
    /// q(-(n+1) + k t)
    long b_minus() const { return -level.q() * (weight.n + 1) + weight.k * level.p(); }
    /// exponent shift from chi_bar to chi
    Rational anomaly_shift() const { return level.ell() * z * z / Rational(4); }
};

inline CharacterSpec make_character_spec(const Level& L, const AdmissibleWeight& w, const Rational& z) {
    if (z <= Rational(0) || z >= Rational(1))
        throw Error(Errc::ZOutOfRange, "z must satisfy 0 < z < 1, got " + z.str());
    return CharacterSpec{L, w, z};
}

/// [theta_{b+,a}(., z/q) - theta_{b-,a}(., z/q)] / [theta_{1,2}(., z) - theta_{-1,2}(., z)],
/// shifted by l z^2 / 4 for chi.
inline QSeries character_qseries(const CharacterSpec& spec, const Rational& order,
                                 CharacterKind kind = CharacterKind::Chi) {
    const Rational shift = kind == CharacterKind::Chi ? spec.anomaly_shift() : Rational(0);
    const Rational zq = spec.z / Rational(spec.level.q());
    auto num = [&](const Rational& o) {
        return theta_qseries({spec.b_plus(), spec.a(), zq}, o) - theta_qseries({spec.b_minus(), spec.a(), zq}, o);
    };
    auto den = [&](const Rational& o) {
        return theta_qseries({1, 2, spec.z}, o) - theta_qseries({-1, 2, spec.z}, o);
    };
    return divide_to_order(num, den, order - shift).shifted(shift);
}

struct RatioIdentityReport {
    bool agree = false;
    std::optional<Rational> first_difference;
    bool prefactor_vanishes = false;  // l + 2 - a/q^2 == 0
    QSeries direct;                   // chi from the theta ratio
    QSeries rewritten;                // chi from the Theta(tau / w) ratio
};

/// Compares chi_j against
/// [Theta_{qub+ + av, aqu}(tau/qu) - Theta_{qub- + av, aqu}(tau/qu)] /
/// [Theta_{u+2v, 2u}(tau/u) - Theta_{-u+2v, 2u}(tau/u)] with z = v/u.
inline RatioIdentityReport theta_ratio_identity_check(const CharacterSpec& spec, const Rational& order) {
    RatioIdentityReport rep;
    const long q = spec.level.q();
    const long a = spec.a();
    const long v = spec.z.num().get_si(), u = spec.z.den().get_si();
    rep.prefactor_vanishes = (spec.level.ell() + Rational(2) - Rational(a, q * q)).is_zero();

    rep.direct = character_qseries(spec, order, CharacterKind::Chi);
    auto num = [&](const Rational& o) {
        return big_theta_rescaled(q * u * spec.b_plus() + a * v, a * q * u, q * u, o) -
               big_theta_rescaled(q * u * spec.b_minus() + a * v, a * q * u, q * u, o);
    };
    auto den = [&](const Rational& o) {
        return big_theta_rescaled(u + 2 * v, 2 * u, u, o) - big_theta_rescaled(-u + 2 * v, 2 * u, u, o);
    };
    rep.rewritten = divide_to_order(num, den, order);

    rep.agree = true;
    std::set<Rational> exps;
    for (const auto& [e, c] : rep.direct.terms()) exps.insert(e);
    for (const auto& [e, c] : rep.rewritten.terms()) exps.insert(e);
    for (const auto& e : exps) {
        if (e >= order) break;
        if (!(rep.direct.coeff(e) == rep.rewritten.coeff(e))) {
            rep.agree = false;
            rep.first_difference = e;
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Numeric evaluation

/// chi_bar_j(tau, z) for complex z directly from the theta sums.
inline Certified character_bar_numeric(const CharacterSpec& spec, const ComplexVal& tau, const ComplexVal& z,
                                       double tol) {
    const Real q(spec.level.q());
    ComplexVal zq{z.re / q, z.im / q};
    const double part_tol = tol / 8;
    Certified num = cert_sub(theta_eval_numeric(spec.b_plus(), spec.a(), zq, tau, part_tol),
                             theta_eval_numeric(spec.b_minus(), spec.a(), zq, tau, part_tol));
    Certified den = cert_sub(theta_eval_numeric(1, 2, z, tau, part_tol), theta_eval_numeric(-1, 2, z, tau, part_tol));
    if (abs(den.value) < Real(10 * tol)) throw Error(Errc::DenominatorNearZero, "theta denominator below 10 tol");
    return cert_div(num, den);
}

/// e^{(1/2) l z^2 pi i tau}
inline ComplexVal anomaly_factor(const Level& L, const Rational& z, const ComplexVal& tau) {
    Real c = to_real(L.ell() * z * z) * real_pi() / 2;
    // i c tau = -c Im tau + i c Re tau
    return cexp(ComplexVal{-c * tau.im, c * tau.re});
}

inline Certified character_eval_numeric(const CharacterSpec& spec, const ComplexVal& tau, double tol,
                                        CharacterKind kind = CharacterKind::Chi) {
    Certified bar = character_bar_numeric(spec, tau, ComplexVal{to_real(spec.z)}, tol);
    if (kind == CharacterKind::ChiBar) return bar;
    ComplexVal f = anomaly_factor(spec.level, spec.z, tau);
    return {bar.value * f, bar.err * abs(f)};
}

// ---------------------------------------------------------------------------
// Modular S-transformation

/// KW1: coefficients as first published. KW2: with the extra factor
/// e^{(1/2) l z^2 pi i tau}. KW2_INV: the same factor read at -1/tau.
enum class STVariant { KW1, KW2, KW2_INV };

constexpr std::string_view st_variant_name(STVariant v) {
    switch (v) {
    case STVariant::KW1: return "KW1";
    case STVariant::KW2: return "KW2";
    case STVariant::KW2_INV: return "KW2_INV";
    }
    return "?";
}

struct STransformReport {
    STVariant variant;
    std::vector<AdmissibleWeight> weights;
    std::vector<std::vector<ComplexVal>> s_matrix;  // (1/2i) sqrt(2/a) (e^{-i pi b+ b-'/a} - e^{-i pi b+ b+'/a})
    ComplexVal factor;
    std::vector<Certified> lhs;                     // chi_bar_j(-1/tau, tau z)
    std::vector<Certified> rhs;
    std::vector<Real> residual;                     // |lhs - rhs|
    std::vector<Real> residual_err;                 // bound on the numeric error of each residual
    Real max_theta_err{0};                          // largest certified error among the evaluations
};

inline STransformReport s_transform_residual(const Level& L, const Rational& z, const ComplexVal& tau,
                                             STVariant variant, double tol) {
    if (!(tau.im > 0)) throw Error(Errc::NonConvergent, "Im(tau) must be positive");
    if (z <= Rational(0) || z >= Rational(1))
        throw Error(Errc::ZOutOfRange, "z must satisfy 0 < z < 1, got " + z.str());
    STransformReport rep;
    rep.variant = variant;
    rep.weights = enumerate_admissible(L);
    const std::size_t W = rep.weights.size();
    std::vector<CharacterSpec> specs;
    for (const auto& w : rep.weights) specs.push_back(CharacterSpec{L, w, z});

    const long a = L.p() * L.q();
    const Real pref = boost::multiprecision::sqrt(Real(2) / Real(a)) / 2;
    // 1/(2i) = -i/2
    rep.s_matrix.assign(W, std::vector<ComplexVal>(W));
    for (std::size_t r = 0; r < W; ++r)
        for (std::size_t c = 0; c < W; ++c) {
            Real pi = real_pi();
            Real x1 = -pi * Real(specs[r].b_plus() * specs[c].b_minus()) / Real(a);
            Real x2 = -pi * Real(specs[r].b_plus() * specs[c].b_plus()) / Real(a);
            ComplexVal diff = cexp(ComplexVal{Real(0), x1}) - cexp(ComplexVal{Real(0), x2});
            rep.s_matrix[r][c] = ComplexVal{Real(0), -pref} * diff;
        }

    const ComplexVal minus_inv_tau = ComplexVal{Real(-1)} / tau;
    switch (variant) {
    case STVariant::KW1: rep.factor = ComplexVal{Real(1)}; break;
    case STVariant::KW2: rep.factor = anomaly_factor(L, z, tau); break;
    case STVariant::KW2_INV: rep.factor = anomaly_factor(L, z, minus_inv_tau); break;
    }

    const ComplexVal zc{to_real(z)};
    std::vector<Certified> at_tau;
    for (const auto& s : specs) {
        rep.lhs.push_back(character_bar_numeric(s, minus_inv_tau, tau * zc, tol));
        at_tau.push_back(character_bar_numeric(s, tau, zc, tol));
    }
    for (std::size_t r = 0; r < W; ++r) {
        Certified acc;
        for (std::size_t c = 0; c < W; ++c) {
            acc.value += rep.s_matrix[r][c] * at_tau[c].value;
            acc.err += abs(rep.s_matrix[r][c]) * at_tau[c].err;
        }
        acc.value = acc.value * rep.factor;
        acc.err *= abs(rep.factor);
        rep.rhs.push_back(acc);
        rep.residual.push_back(abs(rep.lhs[r].value - acc.value));
        rep.residual_err.push_back(rep.lhs[r].err + acc.err);
    }
    for (std::size_t r = 0; r < W; ++r) {
        rep.max_theta_err = std::max({rep.max_theta_err, rep.lhs[r].err, at_tau[r].err});
    }
    return rep;
}

}  // namespace sl2voa

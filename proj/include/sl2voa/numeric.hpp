#pragma once

#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sl2voa/qseries.hpp"

namespace sl2voa {

/// 128-bit binary floating point; the working precision is fixed by the type.
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

inline constexpr int kRealBits = 128;

inline Real real_eps() { return std::numeric_limits<Real>::epsilon(); }
inline Real real_pi() { return boost::math::constants::pi<Real>(); }

inline Real to_real(const Rational& r) {
    return Real(r.num().get_str()) / Real(r.den().get_str());
}

struct ComplexVal {
    Real re{0};
    Real im{0};

    ComplexVal() = default;
    ComplexVal(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

    friend ComplexVal operator+(const ComplexVal& a, const ComplexVal& b) { return {a.re + b.re, a.im + b.im}; }
    friend ComplexVal operator-(const ComplexVal& a, const ComplexVal& b) { return {a.re - b.re, a.im - b.im}; }
    friend ComplexVal operator-(const ComplexVal& a) { return {-a.re, -a.im}; }
    friend ComplexVal operator*(const ComplexVal& a, const ComplexVal& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexVal operator/(const ComplexVal& a, const ComplexVal& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    ComplexVal& operator+=(const ComplexVal& o) { return *this = *this + o; }
};

inline Real abs(const ComplexVal& z) { return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im); }

/// e^{w}
inline ComplexVal cexp(const ComplexVal& w) {
    Real mag = boost::multiprecision::exp(w.re);
    return {mag * boost::multiprecision::cos(w.im), mag * boost::multiprecision::sin(w.im)};
}

/// e^{2 pi i x}
inline ComplexVal exp_2pi_i(const ComplexVal& x) {
    Real two_pi = 2 * real_pi();
    return cexp(ComplexVal{-two_pi * x.im, two_pi * x.re});
}

/// A value together with an absolute error bound.
struct Certified {
    ComplexVal value;
    Real err{0};
};

inline std::string real_str(const Real& x, int digits = 30) {
    return x.str(digits, std::ios_base::scientific);
}

/// theta_{n,m}(tau, z) = sum over j in Z + n/2m of e^{2 pi i m tau (j^2 + j z)},
/// complex z allowed. The tail on each side is bounded by a geometric series
/// using the ratio of consecutive term magnitudes.
inline Certified theta_eval_numeric(long n, long m, const ComplexVal& z, const ComplexVal& tau, double tol) {
    if (!(tau.im > 0)) throw Error(Errc::NonConvergent, "Im(tau) must be positive");
    if (!(tol > 0)) throw Error(Errc::TolTooSmall, "tolerance must be positive");
    if (m <= 0) throw Error(Errc::ParamOutOfRange, "theta index m must be positive");
    const Real two_pi_m = 2 * real_pi() * Real(m);
    const Real shift = Real(n) / Real(2 * m);
    const Real im_tau = tau.im;
    const Real im_tau_z = (tau * z).im;
    const Real tol_r(tol);

    auto term = [&](const Real& j) {
        ComplexVal w = tau * ComplexVal{j * j, Real(0)} + tau * z * ComplexVal{j, Real(0)};
        return exp_2pi_i(ComplexVal{Real(m) * w.re, Real(m) * w.im});
    };
    auto log_mag = [&](const Real& j) { return -two_pi_m * (im_tau * j * j + j * im_tau_z); };

    // |term| is a Gaussian in j centred at j* = -Im(tau z) / (2 Im tau).
    const Real jstar = -im_tau_z / (2 * im_tau);
    const long k0 = static_cast<long>(boost::multiprecision::floor(jstar - shift));

    ComplexVal sum;
    Real abs_sum(0), max_arg(0);
    long count = 0;
    auto add = [&](const Real& j) {
        ComplexVal t = term(j);
        sum += t;
        abs_sum += abs(t);
        Real arg = boost::multiprecision::abs(two_pi_m * (tau.re * j * j + j * (tau * z).re));
        if (arg > max_arg) max_arg = arg;
        ++count;
    };

    // The tail from j onwards is bounded by |t(j)| / (1 - rho(j)) once the
    // consecutive-magnitude ratio rho(j) is below one; rho only shrinks further out.
    // Upward: rho(j) = |t(j+1)| / |t(j)| = exp(-2 pi m (Im tau (2j+1) + Im(tau z))).
    Real tail_up(0);
    for (long k = k0 + 1;; ++k) {
        Real j = Real(k) + shift;
        Real ratio_log = -two_pi_m * (im_tau * (2 * j + 1) + im_tau_z);
        if (j > jstar && ratio_log < 0) {
            Real bound = boost::multiprecision::exp(log_mag(j)) / (1 - boost::multiprecision::exp(ratio_log));
            if (bound < tol_r / 4) {
                tail_up = bound;
                break;
            }
        }
        add(j);
        if (count > 1000000) throw Error(Errc::TolTooSmall, "theta sum did not converge");
    }
    // Downward: rho(j) = |t(j-1)| / |t(j)| = exp(-2 pi m (Im tau (1-2j) - Im(tau z))).
    Real tail_down(0);
    for (long k = k0;; --k) {
        Real j = Real(k) + shift;
        Real ratio_log = -two_pi_m * (im_tau * (1 - 2 * j) - im_tau_z);
        if (j < jstar && ratio_log < 0) {
            Real bound = boost::multiprecision::exp(log_mag(j)) / (1 - boost::multiprecision::exp(ratio_log));
            if (bound < tol_r / 4) {
                tail_down = bound;
                break;
            }
        }
        add(j);
        if (count > 1000000) throw Error(Errc::TolTooSmall, "theta sum did not converge");
    }
    // Per-term rounding grows with the size of the trigonometric argument.
    Real rounding = Real(16 * (count + 4)) * real_eps() * abs_sum * (1 + max_arg);
    if (rounding > tol_r / 2) throw Error(Errc::TolTooSmall, "tolerance below working precision");
    return {sum, tail_up + tail_down + rounding};
}

inline Certified theta_eval_numeric(const ThetaSpec& spec, const ComplexVal& tau, double tol) {
    return theta_eval_numeric(spec.n, spec.m, ComplexVal{to_real(spec.z)}, tau, tol);
}

/// Sum of c_e e^{2 pi i tau e} over the stored terms; no tail estimate.
inline ComplexVal qseries_eval(const QSeries& s, const ComplexVal& tau) {
    ComplexVal sum;
    for (const auto& [e, c] : s.terms()) sum += ComplexVal{to_real(c)} * exp_2pi_i(tau * ComplexVal{to_real(e)});
    return sum;
}

inline Certified cert_sub(const Certified& a, const Certified& b) { return {a.value - b.value, a.err + b.err}; }

/// a / b with first-order-exact propagation: |a/b - a'/b'| <= (ea + |a/b| eb) / (|b| - eb).
inline Certified cert_div(const Certified& a, const Certified& b) {
    ComplexVal r = a.value / b.value;
    Real denom = abs(b.value) - b.err;
    if (!(denom > 0)) throw Error(Errc::DenominatorNearZero, "denominator error exceeds its magnitude");
    return {r, (a.err + abs(r) * b.err) / denom};
}

inline Certified cert_mul(const Certified& a, const Certified& b) {
    return {a.value * b.value, a.err * abs(b.value) + b.err * abs(a.value) + a.err * b.err};
}

}  // namespace sl2voa

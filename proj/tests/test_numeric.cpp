#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>

#include "sl2voa/numeric.hpp"

using namespace sl2voa;

namespace {

Rational R(long a, long b = 1) { return Rational(a, b); }

ComplexVal I(const Real& y) { return ComplexVal{Real(0), y}; }

/// prod-free reference: sum of e^{2 pi i m tau (j^2 + j z)} over |k| <= 80.
ComplexVal theta_reference(long n, long m, const ComplexVal& z, const ComplexVal& tau) {
    ComplexVal s;
    const Real shift = Real(n) / Real(2 * m);
    for (long k = -80; k <= 80; ++k) {
        ComplexVal j{Real(k) + shift};
        s += exp_2pi_i(ComplexVal{Real(m)} * tau * (j * j + j * z));
    }
    return s;
}

Real gauss_theta() {
    // Theta_{0,1}(i/2) = sum e^{-pi k^2} = pi^{1/4} / Gamma(3/4)
    return boost::multiprecision::pow(real_pi(), Real(1) / 4) / boost::math::tgamma(Real(3) / 4);
}

}  // namespace

TEST(ThetaNumeric, GaussianClosedForm) {
    const Certified h = theta_eval_numeric(0, 1, ComplexVal{}, I(Real(1) / 2), 1e-12);
    EXPECT_LT(abs(h.value - ComplexVal{gauss_theta()}), h.err + Real(1e-30));
    EXPECT_LT(h.err, Real(1e-12));
    EXPECT_NEAR(static_cast<double>(h.value.re), 1.0864348112133080, 1e-15);
}

TEST(ThetaNumeric, ThetaAtI) {
    // With q = e^{2 pi i tau}, Theta_{0,1}(i) = sum e^{-2 pi k^2}
    // = pi^{1/4} / Gamma(3/4) * sqrt(2 + sqrt 2) / 2.
    const Certified t = theta_eval_numeric(0, 1, ComplexVal{}, I(Real(1)), 1e-12);
    const Real expect = gauss_theta() * boost::multiprecision::sqrt(2 + boost::multiprecision::sqrt(Real(2))) / 2;
    EXPECT_LT(abs(t.value - ComplexVal{expect}), t.err + Real(1e-30));
    EXPECT_NEAR(static_cast<double>(t.value.re), 1.0037348854877390, 1e-15);
}

TEST(ThetaNumeric, Symmetry) {
    for (long m = 1; m <= 4; ++m)
        for (long n = 0; n <= 2 * m; ++n) {
            const ComplexVal tau{Real(1) / 3, Real(3) / 2};
            const Certified a = theta_eval_numeric(n, m, ComplexVal{}, tau, 1e-20);
            const Certified b = theta_eval_numeric(-n, m, ComplexVal{}, tau, 1e-20);
            EXPECT_LT(abs(a.value - b.value), a.err + b.err);
        }
}

TEST(ThetaNumeric, Errors) {
    auto code = [](const ComplexVal& tau, double tol) {
        try {
            theta_eval_numeric(0, 1, ComplexVal{}, tau, tol);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::ParseError;
    };
    EXPECT_EQ(code(ComplexVal{Real(1) / 2}, 1e-10), Errc::NonConvergent);
    EXPECT_EQ(code(ComplexVal{Real(0), Real(-1)}, 1e-10), Errc::NonConvergent);
    EXPECT_EQ(code(I(Real(1)), 0.0), Errc::TolTooSmall);
}

TEST(ThetaNumeric, ComplexArgumentAgainstReference) {
    const std::vector<ComplexVal> taus{I(Real(1)), ComplexVal{Real(1) / 3, Real(3) / 2}, ComplexVal{Real(-1) / 5, Real(2)}};
    const std::vector<ComplexVal> zs{ComplexVal{Real(1) / 4}, ComplexVal{Real(0), Real(3) / 4},
                                     ComplexVal{Real(-1) / 2, Real(1)}};
    for (const auto& tau : taus)
        for (const auto& z : zs)
            for (long m = 1; m <= 6; ++m)
                for (long n = -m; n <= m; n += 1) {
                    const Certified c = theta_eval_numeric(n, m, z, tau, 1e-15);
                    EXPECT_LT(abs(c.value - theta_reference(n, m, z, tau)), c.err + Real(1e-28))
                        << "n=" << n << " m=" << m;
                    EXPECT_LT(c.err, Real(1e-15));
                }
}

TEST(ThetaNumeric, AgreesWithExactSeries) {
    for (const auto& z : {R(0), R(1, 3), R(1, 2)})
        for (long m = 1; m <= 6; ++m)
            for (long n = -m; n <= m; ++n) {
                const ComplexVal tau = I(Real(1));
                const Certified c = theta_eval_numeric({n, m, z}, tau, 1e-20);
                const ComplexVal s = qseries_eval(theta_qseries({n, m, z}, R(20)), tau);
                // the dropped series terms are below e^{-2 pi 20}
                EXPECT_LT(abs(c.value - s), c.err + Real(1e-40));
            }
}

TEST(CertifiedArithmetic, DivisionGuard) {
    const Certified a{ComplexVal{Real(1)}, Real(0)};
    const Certified tiny{ComplexVal{Real(1e-12)}, Real(1e-11)};
    EXPECT_THROW(cert_div(a, tiny), Error);
    const Certified two{ComplexVal{Real(2)}, Real(1e-20)};
    const Certified q = cert_div(a, two);
    EXPECT_LT(abs(q.value - ComplexVal{Real(1) / 2}), Real(1e-30));
    EXPECT_GT(q.err, Real(0));
}

#include <gtest/gtest.h>

#include "sl2voa/characters.hpp"

using namespace sl2voa;

namespace {

Rational R(long a, long b = 1) { return Rational(a, b); }

ComplexVal I(const Real& y) { return ComplexVal{Real(0), y}; }

CharacterSpec spec(long p, long q, const Rational& j, const Rational& z) {
    const Level L = Level::from_pq(p, q);
    return make_character_spec(L, *weight_from_j(L, j), z);
}

struct Fixture {
    long p, q;
    Rational z;
};

std::vector<Fixture> fixtures() {
    std::vector<Fixture> out;
    for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}, {5, 3}})
        for (const auto& z : {R(1, 3), R(1, 2)}) out.push_back({p, q, z});
    return out;
}

/// Delta_j - z j / 2 - c_l / 24, with Delta_j the Casimir eigenvalue j(j+2)/4 over l+2.
Rational expected_lowest(const Level& L, const Rational& j, const Rational& z) {
    const Rational c = Rational(3) * L.ell() / (L.ell() + Rational(2));
    return j * (j + Rational(2)) / (Rational(4) * L.t()) - z * j / Rational(2) - c / Rational(24);
}

}  // namespace

TEST(CharacterSpec, Derived) {
    const CharacterSpec s = spec(3, 2, R(1), R(1, 2));
    EXPECT_EQ(s.a(), 6);
    EXPECT_EQ(s.b_plus(), 4);
    EXPECT_EQ(s.b_minus(), -4);
    EXPECT_NE(s.b_plus(), s.b_minus());
    EXPECT_THROW(make_character_spec(Level::from_pq(3, 2), make_weight(Level::from_pq(3, 2), 0, 0), R(1)), Error);
}

TEST(CharacterQSeries, TrivialLevel) {
    for (const auto& z : {R(1, 3), R(1, 2), R(3, 7)}) {
        const QSeries bar = character_qseries(spec(2, 1, R(0), z), R(10), CharacterKind::ChiBar);
        EXPECT_EQ(bar.terms(), (QSeries::Terms{{R(0), R(1)}}));
    }
}

TEST(CharacterQSeries, WorkedFixture) {
    const CharacterSpec s = spec(3, 2, R(1), R(1, 2));
    const QSeries bar = character_qseries(s, R(4), CharacterKind::ChiBar);
    const QSeries chi = character_qseries(s, R(4), CharacterKind::Chi);
    // ratio lowest q^{1/6} / (-q^{-1/8}); l z^2 / 4 = -1/32
    EXPECT_EQ(*bar.lowest_exponent(), R(7, 24));
    EXPECT_EQ(bar.coeff(R(7, 24)), R(1));
    EXPECT_EQ(*chi.lowest_exponent(), R(7, 24) - R(1, 32));
    EXPECT_EQ(chi.coeff(R(25, 96)), R(1));
    EXPECT_EQ(chi.truncated(R(4) - R(1, 32)), bar.shifted(R(-1, 32)).truncated(R(4) - R(1, 32)));
}

TEST(CharacterQSeries, BarLowestTermAndPositivity) {
    for (const auto& fx : fixtures()) {
        const Level L = Level::from_pq(fx.p, fx.q);
        for (const auto& w : enumerate_admissible(L)) {
            const QSeries bar = character_qseries(make_character_spec(L, w, fx.z), R(30), CharacterKind::ChiBar);
            ASSERT_FALSE(bar.is_zero());
            EXPECT_EQ(bar.order(), R(30));
            EXPECT_EQ(*bar.lowest_exponent(), expected_lowest(L, w.j, fx.z))
                << "p=" << fx.p << " q=" << fx.q << " j=" << w.j.str() << " z=" << fx.z.str();
            EXPECT_EQ(bar.coeff(*bar.lowest_exponent()), R(1));
            for (const auto& [e, c] : bar.terms()) EXPECT_TRUE(c.is_integer() && c.sign() > 0) << e.str();
        }
    }
}

TEST(CharacterQSeries, IntegrableLevelMatchesWeylCharacterCount) {
    // l = 1, j = 0 at z -> graded by L(0) - z h(0)/2: first excited level carries
    // e(-1), h(-1), f(-1) with h-eigenvalues 2, 0, -2, i.e. exponents 1 - z, 1, 1 + z.
    const CharacterSpec s = spec(3, 1, R(0), R(1, 3));
    const QSeries chi = character_qseries(s, R(2), CharacterKind::ChiBar);
    const Rational base = -R(1, 24);
    EXPECT_EQ(chi.coeff(base), R(1));
    EXPECT_EQ(chi.coeff(base + R(2, 3)), R(1));
    EXPECT_EQ(chi.coeff(base + R(1)), R(1));
    EXPECT_EQ(chi.coeff(base + R(4, 3)), R(1));
}

TEST(ThetaRatioIdentity, Fixtures) {
    auto a = theta_ratio_identity_check(spec(2, 1, R(0), R(1, 2)), R(10));
    EXPECT_TRUE(a.agree);
    EXPECT_TRUE(a.prefactor_vanishes);
    auto b = theta_ratio_identity_check(spec(3, 2, R(1), R(1, 2)), R(4));
    EXPECT_TRUE(b.agree);
    EXPECT_FALSE(b.first_difference);
}

TEST(ThetaRatioIdentity, AllFixturesToOrder20) {
    for (const auto& fx : fixtures()) {
        const Level L = Level::from_pq(fx.p, fx.q);
        const long a = fx.p * fx.q, q = fx.q;
        EXPECT_EQ(L.ell() + R(2) - Rational(a, q * q), R(0));
        for (const auto& w : enumerate_admissible(L)) {
            auto rep = theta_ratio_identity_check(make_character_spec(L, w, fx.z), R(20));
            EXPECT_TRUE(rep.agree) << "p=" << fx.p << " q=" << fx.q << " j=" << w.j.str()
                                   << (rep.first_difference ? " at " + rep.first_difference->str() : "");
            EXPECT_TRUE(rep.prefactor_vanishes);
        }
    }
}

TEST(CharacterNumeric, Fixtures) {
    const Certified one = character_eval_numeric(spec(2, 1, R(0), R(1, 2)), I(Real(2)), 1e-12);
    EXPECT_LT(abs(one.value - ComplexVal{Real(1)}), Real(1e-10));
    const CharacterSpec s = spec(3, 2, R(1), R(1, 2));
    const Certified v = character_eval_numeric(s, I(Real(2)), 1e-12);
    const ComplexVal ser = qseries_eval(character_qseries(s, R(10)), I(Real(2)));
    EXPECT_LT(abs(v.value - ser), Real(1e-8));
    EXPECT_THROW(character_eval_numeric(s, ComplexVal{Real(1) / 2}, 1e-12), Error);
}

TEST(CharacterNumeric, SeriesAgreementAcrossFixtures) {
    const std::vector<ComplexVal> taus{I(Real(1)), I(Real(2)), ComplexVal{Real(1) / 3, Real(3) / 2}};
    for (const auto& fx : fixtures()) {
        const Level L = Level::from_pq(fx.p, fx.q);
        for (const auto& w : enumerate_admissible(L)) {
            const CharacterSpec s = make_character_spec(L, w, fx.z);
            for (auto kind : {CharacterKind::Chi, CharacterKind::ChiBar}) {
                const QSeries ser = character_qseries(s, R(30), kind);
                for (const auto& tau : taus) {
                    const Certified num = character_eval_numeric(s, tau, 1e-14, kind);
                    EXPECT_LT(num.err, Real(1e-8));
                    EXPECT_LT(abs(num.value - qseries_eval(ser, tau)), num.err + Real(1e-30))
                        << "p=" << fx.p << " q=" << fx.q << " j=" << w.j.str();
                }
            }
        }
    }
}

TEST(STransform, TrivialLevel) {
    const Level L = Level::from_pq(2, 1);
    const auto rep = s_transform_residual(L, R(1, 2), I(Real(1)), STVariant::KW2, 1e-12);
    ASSERT_EQ(rep.weights.size(), 1u);
    EXPECT_LT(abs(rep.lhs[0].value - ComplexVal{Real(1)}), Real(1e-10));
    // S_00 = (1/2i) (e^{i pi/2} - e^{-i pi/2}) = 1 and the factor is 1 at l = 0
    EXPECT_LT(abs(rep.s_matrix[0][0] - ComplexVal{Real(1)}), Real(1e-30));
    EXPECT_LT(rep.residual[0], Real(1e-10));
}

TEST(STransform, ReportAtFixturePoint) {
    const Level L = Level::from_pq(3, 2);
    const ComplexVal tau = I(Real(3) / 2);
    for (auto v : {STVariant::KW1, STVariant::KW2, STVariant::KW2_INV}) {
        const auto rep = s_transform_residual(L, R(1, 2), tau, v, 1e-12);
        ASSERT_EQ(rep.s_matrix.size(), 4u);
        for (const auto& row : rep.s_matrix) ASSERT_EQ(row.size(), 4u);
        ASSERT_EQ(rep.residual.size(), 4u);
        EXPECT_LE(rep.max_theta_err, Real(1e-9));
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_LE(rep.residual_err[i], Real(1e-9));
            EXPECT_EQ(rep.residual[i], abs(rep.lhs[i].value - rep.rhs[i].value));
        }
    }
    // the factor separates the variants and vanishes from the vacuum row only with it
    const auto kw1 = s_transform_residual(L, R(1, 2), tau, STVariant::KW1, 1e-12);
    const auto kw2 = s_transform_residual(L, R(1, 2), tau, STVariant::KW2, 1e-12);
    EXPECT_GT(kw1.residual[0], Real(1e-3));
    EXPECT_LT(kw2.residual[0], Real(1e-12));
}

TEST(STransform, Errors) {
    const Level L = Level::from_pq(3, 2);
    EXPECT_THROW(s_transform_residual(L, R(1, 2), ComplexVal{Real(1)}, STVariant::KW2, 1e-12), Error);
    EXPECT_THROW(s_transform_residual(L, R(3, 2), I(Real(1)), STVariant::KW2, 1e-12), Error);
}

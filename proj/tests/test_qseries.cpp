#include <gtest/gtest.h>

#include "sl2voa/qseries.hpp"

using namespace sl2voa;

namespace {

Rational R(long a, long b = 1) { return Rational(a, b); }

/// Direct lattice enumeration over a generous window, independent of the
/// vertex-centred walk used by theta_qseries.
QSeries theta_window(long n, long m, const Rational& z, const Rational& order) {
    QSeries s(order);
    const Rational shift(n, 2 * m);
    for (long k = -200; k <= 200; ++k) {
        Rational j = Rational(k) + shift;
        s.add_term(Rational(m) * (j * j + j * z), 1);
    }
    return s;
}

}  // namespace

TEST(Theta, Fixtures) {
    const QSeries t = theta_qseries({0, 1, R(0)}, R(5));
    EXPECT_EQ(t.terms(), (QSeries::Terms{{R(0), R(1)}, {R(1), R(2)}, {R(4), R(2)}}));
    const QSeries a = theta_qseries({1, 2, R(1, 2)}, R(2));
    ASSERT_TRUE(a.lowest_exponent());
    EXPECT_EQ(*a.lowest_exponent(), R(3, 8));
    EXPECT_EQ(a.coeff(R(3, 8)), R(2));
    const QSeries b = theta_qseries({-1, 2, R(1, 2)}, R(2));
    EXPECT_EQ(*b.lowest_exponent(), R(-1, 8));
    EXPECT_EQ(b.coeff(R(-1, 8)), R(1));
    EXPECT_THROW(theta_qseries({0, 0, R(0)}, R(1)), Error);
}

TEST(Theta, MatchesWindowedEnumeration) {
    for (long m = 1; m <= 6; ++m)
        for (long n = -2 * m; n <= 2 * m; ++n)
            for (const auto& z : {R(0), R(1, 3), R(1, 2), R(-3, 4), R(1, 6)})
                EXPECT_EQ(theta_qseries({n, m, z}, R(12)), theta_window(n, m, z, R(12)))
                    << "n=" << n << " m=" << m << " z=" << z.str();
}

TEST(Theta, PeriodicityAndSymmetry) {
    for (long m = 1; m <= 6; ++m)
        for (long n = -3 * m; n <= 3 * m; ++n) {
            const QSeries t = theta_qseries({n, m, R(0)}, R(30));
            EXPECT_EQ(t, theta_qseries({n + 2 * m, m, R(0)}, R(30)));
            EXPECT_EQ(t, theta_qseries({-n, m, R(0)}, R(30)));
            for (const auto& [e, c] : t.terms()) EXPECT_TRUE(c.is_integer() && c.sign() > 0);
        }
}

TEST(Theta, RescaledDividesExponents) {
    const QSeries r = big_theta_rescaled(0, 1, 2, R(3));
    EXPECT_EQ(r.terms(), (QSeries::Terms{{R(0), R(1)}, {R(1, 2), R(2)}, {R(2), R(2)}}));
    EXPECT_EQ(r.order(), R(3));
    EXPECT_EQ(r.exponent_denominator(), 2);
}

TEST(QSeriesDiv, Fixtures) {
    const QSeries x = theta_qseries({1, 2, R(1, 2)}, R(6)) - theta_qseries({-1, 2, R(1, 2)}, R(6));
    const QSeries one = qseries_div(x, x);
    EXPECT_EQ(one.terms(), (QSeries::Terms{{R(0), R(1)}}));

    const QSeries num = QSeries::from_terms({{R(1, 6), R(1)}, {R(7, 6), R(-1)}}, R(10));
    const QSeries den = QSeries::from_terms({{R(-1, 8), R(-1)}}, R(10));
    const QSeries quo = qseries_div(num, den);
    EXPECT_EQ(quo.terms(), (QSeries::Terms{{R(7, 24), R(-1)}, {R(31, 24), R(1)}}));

    const QSeries zero = qseries_div(QSeries(R(5)), den);
    EXPECT_TRUE(zero.is_zero());
    EXPECT_THROW(qseries_div(num, QSeries(R(4))), Error);
}

TEST(QSeriesDiv, ErrorCodes) {
    try {
        qseries_div(QSeries::from_terms({{R(0), R(1)}}, R(3)), QSeries(R(3)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EmptyDenominator);
    }
}

TEST(QSeriesProperty, DivisionInvertsMultiplication) {
    const std::vector<QSeries> ds{
        theta_qseries({1, 2, R(1, 3)}, R(15)) - theta_qseries({-1, 2, R(1, 3)}, R(15)),
        theta_qseries({0, 1, R(0)}, R(15)),
        theta_qseries({2, 5, R(1, 4)}, R(15)),
    };
    const std::vector<QSeries> ns{theta_qseries({3, 4, R(1, 2)}, R(15)), theta_qseries({1, 3, R(0)}, R(15))};
    for (const auto& a : ns)
        for (const auto& b : ds) {
            const QSeries prod = a * b;
            const QSeries back = qseries_div(prod, b);
            // every term the quotient claims is exact must match a
            ASSERT_GT(back.order(), *a.lowest_exponent());
            EXPECT_EQ(back, a.truncated(back.order()));
        }
}

TEST(QSeriesProperty, TruncationOrderIsConservative) {
    const QSeries a = theta_qseries({1, 2, R(1, 2)}, R(4));
    const QSeries full = theta_qseries({1, 2, R(1, 2)}, R(40));
    const QSeries b = theta_qseries({0, 1, R(0)}, R(4));
    const QSeries bf = theta_qseries({0, 1, R(0)}, R(40));
    const QSeries p = a * b;
    EXPECT_EQ(p, (full * bf).truncated(p.order()));
}

TEST(QSeries, LatticeNormalization) {
    const QSeries s = QSeries::from_terms({{R(1, 6), R(2)}, {R(1, 4), R(-1)}, {R(0), R(0)}}, R(1));
    EXPECT_EQ(s.exponent_denominator(), 12);
    EXPECT_EQ(s.lattice_terms(), (std::vector<std::pair<long, Rational>>{{2, R(2)}, {3, R(-1)}}));
    EXPECT_EQ(s.terms().size(), 2u);
}

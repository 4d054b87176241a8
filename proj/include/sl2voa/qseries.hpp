#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sl2voa/rational.hpp"

namespace sl2voa {

/// Truncated series sum c_e q^e with exact rational exponents e. Every
/// coefficient with exponent below order() is exact; nothing at or above
/// order() is stored.
class QSeries {
public:
    using Terms = std::map<Rational, Rational>;

    QSeries() = default;
    explicit QSeries(Rational order) : order_(std::move(order)) {}

    static QSeries from_terms(const Terms& t, const Rational& order) {
        QSeries s(order);
        for (const auto& [e, c] : t) s.add_term(e, c);
        return s;
    }

    const Terms& terms() const { return terms_; }
    const Rational& order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }

    /// Common denominator of the stored exponents (1 for the zero series).
    long exponent_denominator() const {
        Integer d = 1;
        for (const auto& [e, c] : terms_) d = lcm(d, e.den());
        return d.get_si();
    }
    /// Terms as (numerator m, coefficient) on the lattice (1/D) Z.
    std::vector<std::pair<long, Rational>> lattice_terms() const {
        const long D = exponent_denominator();
        std::vector<std::pair<long, Rational>> out;
        for (const auto& [e, c] : terms_) out.emplace_back((e * Rational(D)).to_long(), c);
        return out;
    }

    std::optional<Rational> lowest_exponent() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }
    Rational coeff(const Rational& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Rational& e, const Rational& c) {
        if (c.is_zero() || e >= order_) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Drops everything at or above the new order (never raises it).
    QSeries truncated(const Rational& order) const {
        QSeries s(std::min(order, order_));
        for (const auto& [e, c] : terms_) s.add_term(e, c);
        return s;
    }

    /// q^s * this
    QSeries shifted(const Rational& s) const {
        QSeries out(order_ + s);
        for (const auto& [e, c] : terms_) out.add_term(e + s, c);
        return out;
    }
    /// Substitutes tau -> tau * factor (factor > 0), i.e. scales every exponent.
    QSeries rescaled(const Rational& factor) const {
        QSeries out(order_ * factor);
        for (const auto& [e, c] : terms_) out.add_term(e * factor, c);
        return out;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries out(std::min(a.order_, b.order_));
        for (const auto& [e, c] : a.terms_) out.add_term(e, c);
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        QSeries out(std::min(a.order_, b.order_));
        for (const auto& [e, c] : a.terms_) out.add_term(e, c);
        for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
        return out;
    }
    friend QSeries operator*(const QSeries& a, const Rational& s) {
        QSeries out(a.order_);
        for (const auto& [e, c] : a.terms_) out.add_term(e, c * s);
        return out;
    }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        // Unknown tails start at a.order + low(b) and b.order + low(a).
        Rational order = std::min(a.order_ + b.lowest_exponent().value_or(b.order_),
                                  b.order_ + a.lowest_exponent().value_or(a.order_));
        QSeries out(order);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    /// Exact equality of coefficients and order.
    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    Terms terms_;
    Rational order_{0};
};

/// Lattice theta sum over j in Z + n/(2m) with exponent m(j^2 + j z); z = 0
/// gives Theta_{n,m}. Includes every lattice point with exponent < order.
struct ThetaSpec {
    long n;
    long m;
    Rational z;
};

inline QSeries theta_qseries(const ThetaSpec& spec, const Rational& order) {
    if (spec.m <= 0) throw Error(Errc::ParamOutOfRange, "theta index m must be positive");
    const Rational shift(spec.n, 2 * spec.m);
    const Rational m(spec.m);
    auto exponent = [&](long k) {
        Rational j = Rational(k) + shift;
        return m * (j * j + j * spec.z);
    };
    QSeries s(order);
    // The exponent is convex in k with its vertex at k* = -z/2 - n/2m.
    const long k0 = (-spec.z / Rational(2) - shift).floor_long();
    for (long k = k0 + 1;; ++k) {
        Rational e = exponent(k);
        if (e >= order) break;
        s.add_term(e, 1);
    }
    for (long k = k0;; --k) {
        Rational e = exponent(k);
        if (e >= order) break;
        s.add_term(e, 1);
    }
    return s;
}

/// Theta_{n,m}(tau / w) as a series in q = e^{2 pi i tau}.
inline QSeries big_theta_rescaled(long n, long m, long w, const Rational& order) {
    return theta_qseries({n, m, Rational(0)}, order * Rational(w)).rescaled(Rational(1, w));
}

/// Long division by leading-term elimination. With the denominator's lowest
/// term c0 q^{e0}, a numerator exact below O_n starting at e_n and a
/// denominator exact below O_d, the quotient is exact below
/// min(O_n, e_n + O_d - e0) - e0.
inline QSeries qseries_div(const QSeries& num, const QSeries& den) {
    if (den.is_zero()) throw Error(Errc::EmptyDenominator, "denominator has no resolved terms");
    const Rational e0 = *den.lowest_exponent();
    const Rational c0 = den.coeff(e0);
    if (num.is_zero()) return QSeries(num.order() - e0);
    const Rational en = *num.lowest_exponent();
    const Rational bound = std::min(num.order(), en + den.order() - e0);
    if (bound <= en) throw Error(Errc::ZeroDivisor, "denominator resolved too coarsely for any quotient term");

    QSeries quot(bound - e0);
    QSeries rem = num.truncated(bound);
    while (!rem.is_zero()) {
        const Rational e = *rem.lowest_exponent();
        const Rational c = rem.coeff(e) / c0;
        const Rational qe = e - e0;
        quot.add_term(qe, c);
        QSeries next(rem.order());
        for (const auto& [er, cr] : rem.terms()) next.add_term(er, cr);
        for (const auto& [ed, cd] : den.terms()) next.add_term(ed + qe, -c * cd);
        rem = std::move(next);
    }
    return quot;
}

/// Divides series produced on demand so that the quotient is exact below
/// `order`. The generators return each series exact below the requested order.
inline QSeries divide_to_order(const std::function<QSeries(const Rational&)>& num_gen,
                               const std::function<QSeries(const Rational&)>& den_gen, const Rational& order) {
    auto first_nonzero = [](const std::function<QSeries(const Rational&)>& gen, Rational probe) {
        for (int tries = 0; tries < 64; ++tries) {
            QSeries s = gen(probe);
            if (!s.is_zero()) return std::make_pair(*s.lowest_exponent(), probe);
            probe = probe * Rational(2) + Rational(1);
        }
        throw Error(Errc::EmptyDenominator, "series has no terms below the probe order");
    };
    const Rational probe = std::max(order, Rational(1));
    const Rational e0 = first_nonzero(den_gen, probe).first;
    const Rational target = order + e0;
    QSeries num = num_gen(target);
    if (num.is_zero()) return QSeries(order);
    const Rational en = *num.lowest_exponent();
    QSeries den = den_gen(std::max(target - en + e0, e0 + Rational(1)));
    return qseries_div(num, den).truncated(order);
}

}  // namespace sl2voa

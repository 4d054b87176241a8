#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sl2voa/rational.hpp"

namespace sl2voa {

/// Sparse univariate polynomial over the rationals. No zero coefficient is
/// ever stored; the zero polynomial has degree -1.
class UniPoly {
public:
    using Terms = std::map<unsigned, Rational>;

    UniPoly() = default;
    UniPoly(const Rational& c) { if (!c.is_zero()) terms_[0] = c; }  // NOLINT
    UniPoly(long c) : UniPoly(Rational(c)) {}                        // NOLINT
    UniPoly(int c) : UniPoly(Rational(c)) {}                         // NOLINT

    static UniPoly monomial(unsigned deg, const Rational& c = 1) {
        UniPoly p;
        if (!c.is_zero()) p.terms_[deg] = c;
        return p;
    }
    static UniPoly x() { return monomial(1); }
    /// x - root
    static UniPoly linear(const Rational& root) { return monomial(1) - UniPoly(root); }

    static UniPoly from_coeffs(std::initializer_list<Rational> low_to_high) {
        UniPoly p;
        unsigned d = 0;
        for (const auto& c : low_to_high) p.add_term(d++, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
    Rational coeff(unsigned d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational leading() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }
    bool is_monic() const { return !is_zero() && leading() == Rational(1); }

    void add_term(unsigned d, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    UniPoly& operator+=(const UniPoly& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, -c);
        return *this;
    }
    UniPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [d, c] : terms_) c *= s;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
        return r;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    std::string str(char var = 'x') const;

private:
    Terms terms_;
};

inline UniPoly pow(const UniPoly& base, unsigned exp) {
    UniPoly r(1), b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return r;
}

/// Exact Horner evaluation.
inline Rational poly_eval(const UniPoly& p, const Rational& a) {
    if (p.is_zero()) return 0;
    Rational acc = 0;
    int d = p.degree();
    for (int k = d; k >= 0; --k) {
        acc *= a;
        acc += p.coeff(static_cast<unsigned>(k));
    }
    return acc;
}

/// Product of (x - r) over the given roots; empty list gives 1.
inline UniPoly poly_from_linear_factors(std::span<const Rational> roots) {
    UniPoly r(1);
    for (const auto& root : roots) r *= UniPoly::linear(root);
    return r;
}

inline UniPoly poly_from_linear_factors(std::initializer_list<Rational> roots) {
    std::vector<Rational> v(roots);
    return poly_from_linear_factors(std::span<const Rational>(v));
}

inline UniPoly derivative(const UniPoly& p) {
    UniPoly r;
    for (const auto& [d, c] : p.terms())
        if (d > 0) r.add_term(d - 1, c * Rational(static_cast<long>(d)));
    return r;
}

/// Quotient and remainder with deg(remainder) < deg(divisor).
inline std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(Errc::ZeroDivisor, "polynomial division by zero");
    UniPoly quot, rem = a;
    const int db = b.degree();
    const Rational lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        unsigned shift = static_cast<unsigned>(rem.degree() - db);
        Rational c = rem.leading() / lb;
        quot.add_term(shift, c);
        for (const auto& [d, cb] : b.terms()) rem.add_term(d + shift, -c * cb);
    }
    return {quot, rem};
}

inline UniPoly poly_mod(const UniPoly& a, const UniPoly& b) { return poly_divmod(a, b).second; }

inline UniPoly make_monic(UniPoly p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading());
}

/// Monic gcd by the Euclidean algorithm.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        UniPoly r = poly_mod(a, b);
        a = std::move(b);
        b = make_monic(std::move(r));
    }
    return make_monic(std::move(a));
}

/// True when a == c * b for some nonzero rational c.
inline bool proportional(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return make_monic(a) == make_monic(b);
}

inline std::string UniPoly::str(char var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [d, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = mag == Rational(1);
        if (d == 0 || !unit) out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
        if (d > 0) {
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

/// Sparse bivariate polynomial keyed by (x-degree, y-degree).
class BiPoly {
public:
    using Key = std::pair<unsigned, unsigned>;
    using Terms = std::map<Key, Rational>;

    BiPoly() = default;

    /// x-polynomial times y^ydeg
    static BiPoly from_x_poly(const UniPoly& px, unsigned ydeg) {
        BiPoly b;
        for (const auto& [d, c] : px.terms()) b.add_term(d, ydeg, c);
        return b;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(unsigned dx, unsigned dy, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(Key{dx, dy}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int degree_x() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.first));
        return d;
    }
    int degree_y() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.second));
        return d;
    }
    /// Lowest y-degree present, -1 for zero.
    int min_degree_y() const {
        if (terms_.empty()) return -1;
        unsigned d = terms_.begin()->first.second;
        for (const auto& [k, c] : terms_) d = std::min(d, k.second);
        return static_cast<int>(d);
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) {
        for (const auto& [k, c] : b.terms_) a.add_term(k.first, k.second, c);
        return a;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    Terms terms_;
};

/// Substitutes x = a, leaving a polynomial in y.
inline UniPoly bipoly_eval_x(const BiPoly& p, const Rational& a) {
    UniPoly r;
    for (const auto& [k, c] : p.terms()) r.add_term(k.second, c * pow(a, k.first));
    return r;
}

inline Rational bipoly_eval(const BiPoly& p, const Rational& x, const Rational& y) {
    return poly_eval(bipoly_eval_x(p, x), y);
}

}  // namespace sl2voa

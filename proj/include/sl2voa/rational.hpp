#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sl2voa/error.hpp"

namespace sl2voa {

using Integer = mpz_class;

/// Exact rational in lowest terms with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v, 1) {}                      // NOLINT: implicit by design of the algebra code
    Rational(int v) : v_(static_cast<long>(v), 1) {}    // NOLINT
    Rational(const Integer& v) : v_(v) {}               // NOLINT

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw Error(Errc::ZeroDivisor, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "a" or "a/b" (optional leading sign on a).
    static Rational parse(std::string_view s) {
        std::string str(s);
        auto slash = str.find('/');
        auto valid_int = [](const std::string& t) {
            if (t.empty()) return false;
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto to_int = [](std::string t) {
            if (!t.empty() && t[0] == '+') t.erase(0, 1);
            return Integer(t, 10);
        };
        if (slash == std::string::npos) {
            if (!valid_int(str)) throw Error(Errc::ParseError, "not a rational: '" + str + "'");
            return Rational(to_int(str));
        }
        std::string a = str.substr(0, slash), b = str.substr(slash + 1);
        if (!valid_int(a) || !valid_int(b) || b[0] == '-' || b[0] == '+')
            throw Error(Errc::ParseError, "not a rational: '" + str + "'");
        Integer den = to_int(b);
        if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + str + "'");
        return Rational(to_int(a), den);
    }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    /// Floor as a machine integer; callers guarantee the range.
    long floor_long() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q.get_si();
    }
    long to_long() const { return v_.get_num().get_si(); }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(Errc::ZeroDivisor, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(raw_tag{}, mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct raw_tag {};
    Rational(raw_tag, mpq_class v) : v_(std::move(v)) {}
    mpq_class v_{0};
};

inline Rational pow(const Rational& base, unsigned exp) {
    Rational r(1), b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace sl2voa

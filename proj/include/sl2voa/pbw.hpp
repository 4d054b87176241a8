#pragma once

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "sl2voa/poly.hpp"

namespace sl2voa {

/// Three-dimensional Lie algebras with an ordered basis (A, B, C) obeying
///   C A = A C + kappa B,   B A = A (B + beta),   C B = (B + beta) C.
/// PBW monomials are written A^a B^b C^c.
///   SL2:  A = f,  B = h,  C = e    (kappa =  1, beta = -2)
///   L0:   A = T+, B = T0, C = T-   (kappa = -1, beta = -2)
///   HEIS: A = e~, B = h~, C = f~   (kappa = -1, beta =  0)
enum class Algebra { SL2, L0, HEIS };

constexpr std::string_view algebra_name(Algebra a) {
    switch (a) {
    case Algebra::SL2: return "SL2";
    case Algebra::L0: return "L0";
    case Algebra::HEIS: return "HEIS";
    }
    return "?";
}

namespace detail {

struct Structure {
    long kappa;
    long beta;
};

constexpr Structure structure(Algebra a) {
    switch (a) {
    case Algebra::SL2: return {1, -2};
    case Algebra::L0: return {-1, -2};
    case Algebra::HEIS: return {-1, 0};
    }
    return {0, 0};
}

/// p(x + s)
inline UniPoly shift(const UniPoly& p, const Rational& s) {
    if (s.is_zero() || p.degree() <= 0) return p;
    UniPoly out;
    const UniPoly lin = UniPoly::monomial(1) + UniPoly(s);
    UniPoly power(1);
    unsigned prev = 0;
    for (const auto& [d, c] : p.terms()) {
        while (prev < d) {
            power *= lin;
            ++prev;
        }
        out += power * c;
    }
    return out;
}

/// (x + s)^n, cached.
inline const UniPoly& shifted_power(long s, unsigned n) {
    static std::mutex mu;
    static std::map<std::pair<long, unsigned>, UniPoly> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(s, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    UniPoly v = pow(UniPoly::monomial(1) + UniPoly(Rational(s)), n);
    return cache.emplace(key, std::move(v)).first->second;
}

/// Normal form of C^c A^d as a map A-exponent i -> polynomial in B; the
/// C-exponent of each term is i + c - d.
using Reordered = std::map<unsigned, UniPoly>;

inline const Reordered& reorder_ca(Algebra alg, unsigned c, unsigned d) {
    static std::mutex mu;
    static std::map<std::tuple<int, unsigned, unsigned>, Reordered> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({static_cast<int>(alg), c, d});
        if (it != cache.end()) return it->second;
    }
    Reordered r;
    if (c == 0 || d == 0) {
        r[d] = UniPoly(1);
    } else {
        const auto st = structure(alg);
        // C^c A^d = C^{c-1} A^d C + C^{c-1} A^{d-1} * kappa (d B + beta d(d-1)/2)
        const Reordered first = reorder_ca(alg, c - 1, d);
        for (const auto& [i, poly] : first) r[i] += poly;
        const Reordered second = reorder_ca(alg, c - 1, d - 1);
        UniPoly q = UniPoly::monomial(1, Rational(st.kappa * static_cast<long>(d))) +
                    UniPoly(Rational(st.kappa * st.beta * static_cast<long>(d) * static_cast<long>(d - 1), 2));
        for (const auto& [i, poly] : second) {
            long l = static_cast<long>(i) + static_cast<long>(c) - 1 - (static_cast<long>(d) - 1);
            r[i] += poly * shift(q, Rational(st.beta * l));
        }
        for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
    }
    std::lock_guard lock(mu);
    return cache.emplace(std::make_tuple(static_cast<int>(alg), c, d), std::move(r)).first->second;
}

}  // namespace detail

using Exponents = std::array<unsigned, 3>;

/// Exact element of U(g) in PBW normal form.
class PBWElement {
public:
    using Terms = std::map<Exponents, Rational>;

    explicit PBWElement(Algebra alg) : alg_(alg) {}
    PBWElement(Algebra alg, const Rational& scalar) : alg_(alg) { add_term({0, 0, 0}, scalar); }

    static PBWElement monomial(Algebra alg, unsigned a, unsigned b, unsigned c, const Rational& coeff = 1) {
        PBWElement x(alg);
        x.add_term({a, b, c}, coeff);
        return x;
    }

    Algebra algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PBWElement& operator+=(const PBWElement& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    PBWElement& operator-=(const PBWElement& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    PBWElement& operator*=(const Rational& s) {
        if (s.is_zero()) terms_.clear();
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    friend PBWElement operator*(PBWElement a, const Rational& s) { return a *= s; }
    friend PBWElement operator*(const Rational& s, PBWElement a) { return a *= s; }
    friend PBWElement operator*(const PBWElement& x, const PBWElement& y);

    friend bool operator==(const PBWElement& a, const PBWElement& b) {
        return a.alg_ == b.alg_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    void check_same(const PBWElement& o) const {
        if (o.alg_ != alg_)
            throw Error(Errc::AlgebraMismatch, std::string(algebra_name(alg_)) + " vs " +
                                                   std::string(algebra_name(o.alg_)));
    }

    Algebra alg_;
    Terms terms_;
};

/// Normal-form product: every C^c A^d in the middle is rewritten through the
/// memoized reordering table, and B-powers are moved past A and C by shifting.
inline PBWElement operator*(const PBWElement& x, const PBWElement& y) {
    x.check_same(y);
    const Algebra alg = x.alg_;
    const long beta = detail::structure(alg).beta;
    PBWElement out(alg);
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) {
            const auto& [a, b, c] = ex;
            const auto& [d, g, k] = ey;
            const Rational coeff = cx * cy;
            const auto& mid = detail::reorder_ca(alg, c, d);
            for (const auto& [i, pmid] : mid) {
                const unsigned l = static_cast<unsigned>(static_cast<long>(i) + static_cast<long>(c) -
                                                         static_cast<long>(d));
                // A^a B^b A^i P(B) C^l B^g C^k = A^{a+i} (B+beta i)^b P(B) (B+beta l)^g C^{l+k}
                UniPoly bpoly = pmid;
                if (b > 0) bpoly = detail::shifted_power(beta * static_cast<long>(i), b) * bpoly;
                if (g > 0) bpoly = bpoly * detail::shifted_power(beta * static_cast<long>(l), g);
                for (const auto& [bd, bc] : bpoly.terms()) out.add_term({a + i, bd, l + k}, coeff * bc);
            }
        }
    }
    return out;
}

inline PBWElement pbw_product(const PBWElement& x, const PBWElement& y) { return x * y; }

inline PBWElement pbw_power(const PBWElement& x, unsigned n) {
    PBWElement r(x.algebra(), Rational(1));
    for (unsigned i = 0; i < n; ++i) r = r * x;
    return r;
}

inline std::string PBWElement::str() const {
    static constexpr const char* names[3][3] = {{"f", "h", "e"}, {"T+", "T0", "T-"}, {"E", "H", "F"}};
    const auto& nm = names[static_cast<int>(alg_)];
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        Rational mag = c.sign() < 0 ? -c : c;
        bool unit = e == Exponents{0, 0, 0};
        if (!(mag == Rational(1)) || unit) out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            out += nm[v];
            if (e[v] > 1) out += "^" + std::to_string(e[v]);
        }
    }
    return out;
}

// Generators by name.
inline PBWElement sl2_f() { return PBWElement::monomial(Algebra::SL2, 1, 0, 0); }
inline PBWElement sl2_h() { return PBWElement::monomial(Algebra::SL2, 0, 1, 0); }
inline PBWElement sl2_e() { return PBWElement::monomial(Algebra::SL2, 0, 0, 1); }
inline PBWElement l0_tplus() { return PBWElement::monomial(Algebra::L0, 1, 0, 0); }
inline PBWElement l0_t0() { return PBWElement::monomial(Algebra::L0, 0, 1, 0); }
inline PBWElement l0_tminus() { return PBWElement::monomial(Algebra::L0, 0, 0, 1); }
inline PBWElement heis_e() { return PBWElement::monomial(Algebra::HEIS, 1, 0, 0); }
inline PBWElement heis_h() { return PBWElement::monomial(Algebra::HEIS, 0, 1, 0); }
inline PBWElement heis_f() { return PBWElement::monomial(Algebra::HEIS, 0, 0, 1); }

enum class FactorKind { H, G, Hbar };

/// Quadratic operator H_alpha (SL2), G_alpha (L0) or Hbar_alpha (HEIS).
struct OperatorFactor {
    FactorKind kind;
    Rational alpha;
};

constexpr Algebra factor_algebra(FactorKind k) {
    switch (k) {
    case FactorKind::H: return Algebra::SL2;
    case FactorKind::G: return Algebra::L0;
    case FactorKind::Hbar: return Algebra::HEIS;
    }
    return Algebra::SL2;
}

/// H_a = fe - a h - a(a+1);  G_a = T-T+ - a T0 + a(a+1);  Hbar_a = e~f~ - a h~.
inline PBWElement expand_factor(const OperatorFactor& op) {
    const Rational& a = op.alpha;
    switch (op.kind) {
    case FactorKind::H: {
        PBWElement x = PBWElement::monomial(Algebra::SL2, 1, 0, 1);
        x.add_term({0, 1, 0}, -a);
        x.add_term({0, 0, 0}, -a * (a + Rational(1)));
        return x;
    }
    case FactorKind::G: {
        // T-T+ = T+T- - T0
        PBWElement x = PBWElement::monomial(Algebra::L0, 1, 0, 1);
        x.add_term({0, 1, 0}, -(a + Rational(1)));
        x.add_term({0, 0, 0}, a * (a + Rational(1)));
        return x;
    }
    case FactorKind::Hbar: {
        PBWElement x = PBWElement::monomial(Algebra::HEIS, 1, 0, 1);
        x.add_term({0, 1, 0}, -a);
        return x;
    }
    }
    return PBWElement(Algebra::SL2);
}

/// (prod factors) * tail, multiplied left to right.
inline PBWElement factor_product(Algebra alg, std::span<const OperatorFactor> factors, const PBWElement& tail) {
    PBWElement acc(alg, Rational(1));
    for (const auto& f : factors) {
        if (factor_algebra(f.kind) != alg)
            throw Error(Errc::AlgebraMismatch, "factor kind does not belong to " + std::string(algebra_name(alg)));
        acc = acc * expand_factor(f);
    }
    return acc * tail;
}

inline PBWElement factor_product(Algebra alg, const std::vector<OperatorFactor>& factors, const PBWElement& tail) {
    return factor_product(alg, std::span<const OperatorFactor>(factors), tail);
}

/// Anti-automorphism of U(sl2) with e, f, h mapped to their negatives.
inline PBWElement sigma_antihom(const PBWElement& x) {
    if (x.algebra() != Algebra::SL2) throw Error(Errc::AlgebraMismatch, "sigma is defined on SL2 only");
    PBWElement out(Algebra::SL2);
    for (const auto& [e, c] : x.terms()) {
        const auto& [a, b, cc] = e;
        // sigma(f^a h^b e^c) = (-1)^{a+b+c} e^c h^b f^a
        Rational sign = ((a + b + cc) % 2 == 0) ? Rational(1) : Rational(-1);
        PBWElement rev = PBWElement::monomial(Algebra::SL2, 0, 0, cc, sign * c) *
                         PBWElement::monomial(Algebra::SL2, 0, b, 0) *
                         PBWElement::monomial(Algebra::SL2, a, 0, 0);
        out += rev;
    }
    return out;
}

}  // namespace sl2voa

#pragma once

#include <optional>
#include <vector>

#include "sl2voa/poly.hpp"

namespace sl2voa {

/// Admissible level l = -2 + p/q with gcd(p, q) = 1, p >= 2, q >= 1.
class Level {
public:
    static Level from_pq(long p, long q) {
        if (p < 2) throw Error(Errc::POutOfRange, "p must be >= 2, got " + std::to_string(p));
        if (q < 1) throw Error(Errc::QOutOfRange, "q must be >= 1, got " + std::to_string(q));
        if (gcd_long(p, q) != 1)
            throw Error(Errc::NotCoprime,
                        "p and q must be coprime, got " + std::to_string(p) + "," + std::to_string(q));
        return Level(p, q);
    }

    long p() const { return p_; }
    long q() const { return q_; }
    Rational t() const { return Rational(p_, q_); }
    Rational ell() const { return t() - Rational(2); }
    /// (p-1)q, the number of admissible weights.
    long weight_count() const { return (p_ - 1) * q_; }

    friend bool operator==(const Level&, const Level&) = default;

private:
    Level(long p, long q) : p_(p), q_(q) {}
    long p_;
    long q_;
};

inline Level level_from_pq(long p, long q) { return Level::from_pq(p, q); }

/// j = n - k t with 0 <= n <= p-2 and 0 <= k <= q-1. The 1-based pair
/// (n', k') = (n+1, k+1) gives j = n'-1-(k'-1)t.
struct AdmissibleWeight {
    long n = 0;
    long k = 0;
    Rational j;

    long n_primed() const { return n + 1; }
    long k_primed() const { return k + 1; }

    friend bool operator==(const AdmissibleWeight& a, const AdmissibleWeight& b) {
        return a.n == b.n && a.k == b.k;
    }
    friend auto operator<=>(const AdmissibleWeight& a, const AdmissibleWeight& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.k <=> b.k;
    }
};

inline AdmissibleWeight make_weight(const Level& L, long n, long k) {
    if (n < 0 || n > L.p() - 2 || k < 0 || k > L.q() - 1)
        throw Error(Errc::WeightOutOfRange, "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) +
                                                ") outside the admissible box");
    return AdmissibleWeight{n, k, Rational(n) - Rational(k) * L.t()};
}

/// Lexicographic in (n, k); length (p-1)q.
inline std::vector<AdmissibleWeight> enumerate_admissible(const Level& L) {
    std::vector<AdmissibleWeight> out;
    out.reserve(static_cast<std::size_t>(L.weight_count()));
    for (long n = 0; n <= L.p() - 2; ++n)
        for (long k = 0; k <= L.q() - 1; ++k) out.push_back(make_weight(L, n, k));
    return out;
}

inline std::optional<AdmissibleWeight> weight_from_j(const Level& L, const Rational& j) {
    // j = n - k p/q forces q*j to be an integer.
    if (!(j * Rational(L.q())).is_integer()) return std::nullopt;
    for (long k = 0; k < L.q(); ++k) {
        Rational n = j + Rational(k) * L.t();
        if (!n.is_integer()) continue;
        long nv = n.to_long();
        if (nv >= 0 && nv <= L.p() - 2) return make_weight(L, nv, k);
    }
    return std::nullopt;
}

/// f(x) = prod_{r=0}^{p-2} prod_{s=0}^{q-1} (x - r + s t)
inline UniPoly vacuum_polynomial(const Level& L) {
    std::vector<Rational> roots;
    for (const auto& w : enumerate_admissible(L)) roots.push_back(w.j);
    return poly_from_linear_factors(std::span<const Rational>(roots));
}

enum class KacKazhdanCase { I, II };

struct KacKazhdanWitness {
    KacKazhdanCase which;
    long n;
    long k;
};

/// Searches positive (n, k) with j = n-1-(k-1)t (case I) or j = -n+kt (case II).
/// Integrality of n is periodic in k with period q and n grows with k, so
/// testing k in 1..q and then shifting k by multiples of q decides existence.
inline std::optional<KacKazhdanWitness> kac_kazhdan_witness(const Level& L, const Rational& j) {
    if (!(j * Rational(L.q())).is_integer()) return std::nullopt;
    const Rational t = L.t();
    const long p = L.p(), q = L.q();
    for (long k = 1; k <= q; ++k) {
        Rational n = j + Rational(1) + Rational(k - 1) * t;
        if (!n.is_integer()) continue;
        // n(k + mq) = n(k) + m p
        long nv = n.to_long(), kv = k;
        while (nv < 1) {
            nv += p;
            kv += q;
        }
        return KacKazhdanWitness{KacKazhdanCase::I, nv, kv};
    }
    for (long k = 1; k <= q; ++k) {
        Rational n = Rational(k) * t - j;
        if (!n.is_integer()) continue;
        long nv = n.to_long(), kv = k;
        while (nv < 1) {
            nv += p;
            kv += q;
        }
        return KacKazhdanWitness{KacKazhdanCase::II, nv, kv};
    }
    return std::nullopt;
}

struct VirasoroData {
    Rational c_ell;
    Rational z;
    Rational c_ell_z;
    Rational lambda_shift;
};

/// Central charges for the shifted conformal vector at 0 < z < 1.
inline VirasoroData virasoro_data(const Level& L, const Rational& z) {
    if (z <= Rational(0) || z >= Rational(1))
        throw Error(Errc::ZOutOfRange, "z must satisfy 0 < z < 1, got " + z.str());
    const Rational ell = L.ell();
    VirasoroData d;
    d.c_ell = Rational(3) * ell / (ell + Rational(2));
    d.z = z;
    d.lambda_shift = ell * z * z / Rational(2);
    d.c_ell_z = d.c_ell - Rational(6) * ell * z * z;
    return d;
}

/// Sugawara weight j(j+2)/(4t).
inline Rational conformal_weight(const Level& L, const AdmissibleWeight& w) {
    return w.j * (w.j + Rational(2)) / (Rational(4) * L.t());
}

}  // namespace sl2voa

#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sl2voa/admissible.hpp"
#include "sl2voa/mff.hpp"

namespace sl2voa {

/// A(L(l,0)) = C[x]/<f> with f the vacuum polynomial.
struct ZhuAlgebra {
    Level level;
    UniPoly relation;
    long dimension;
    std::vector<AdmissibleWeight> idempotent_labels;
};

inline ZhuAlgebra zhu_vacuum_algebra(const Level& L) {
    return ZhuAlgebra{L, vacuum_polynomial(L), L.weight_count(), enumerate_admissible(L)};
}

inline UniPoly zhu_multiply(const ZhuAlgebra& A, const UniPoly& g1, const UniPoly& g2) {
    return poly_mod(g1 * g2, A.relation);
}

/// A(L(l,j)) = C[x,y] / (C[x,y] y^{n'} + sum_i C[x] f_{j,i}).
struct BimodulePresentation {
    AdmissibleWeight weight;
    long y_truncation;
    std::vector<BiPoly> generators;
    long dimension;
};

/// prod_{r=0}^{p-n'-1} prod_{s=0}^{q-k'} (x - r - i + s t), the x-part of f_{j,i}.
inline UniPoly bimodule_generator_x_part(const Level& L, const AdmissibleWeight& w, long i) {
    std::vector<Rational> roots;
    const Rational t = L.t();
    for (long r = 0; r <= L.p() - w.n_primed() - 1; ++r)
        for (long s = 0; s <= L.q() - w.k_primed(); ++s) roots.push_back(Rational(r + i) - Rational(s) * t);
    return poly_from_linear_factors(std::span<const Rational>(roots));
}

inline BimodulePresentation bimodule_presentation(const Level& L, const AdmissibleWeight& w) {
    const long n = w.n_primed(), k = w.k_primed();
    BimodulePresentation b{w, n, {}, n * (L.p() - n) * (L.q() - k + 1)};
    for (long i = 0; i < n; ++i)
        b.generators.push_back(BiPoly::from_x_poly(bimodule_generator_x_part(L, w, i), static_cast<unsigned>(i)));
    return b;
}

/// Multiplicities of the irreducibles in L(l,j1) x L(l,j2).
struct FusionCoefficients {
    AdmissibleWeight first;
    AdmissibleWeight second;
    std::map<AdmissibleWeight, long> outputs;
    bool gate_passed = false;

    friend bool operator==(const FusionCoefficients& a, const FusionCoefficients& b) {
        return a.first == b.first && a.second == b.second && a.outputs == b.outputs;
    }
};

/// Gate k1' + k2' <= q + 1; then L(j1+j2-2i) for
/// max(0, n1'+n2'-p) <= i <= min(n1'-1, n2'-1).
inline FusionCoefficients fusion_closed_form(const Level& L, const AdmissibleWeight& w1, const AdmissibleWeight& w2) {
    FusionCoefficients out{w1, w2, {}};
    const long n1 = w1.n_primed(), n2 = w2.n_primed();
    out.gate_passed = w1.k_primed() + w2.k_primed() <= L.q() + 1;
    if (!out.gate_passed) return out;
    const long lo = std::max(0L, n1 + n2 - L.p()), hi = std::min(n1 - 1, n2 - 1);
    for (long i = lo; i <= hi; ++i) {
        Rational j3 = w1.j + w2.j - Rational(2 * i);
        auto w3 = weight_from_j(L, j3);
        if (!w3) throw Error(Errc::InternalNonAdmissibleOutput, "closed form produced j=" + j3.str());
        out.outputs[*w3] += 1;
    }
    return out;
}

/// Contracts A(L(l,j1)) against C v_{j2}: the y^i block survives exactly when
/// f_{j1,i}(j2, 1) = 0, and x acts on it by j1 + j2 - 2i.
inline FusionCoefficients fusion_via_bimodule(const Level& L, const AdmissibleWeight& w1, const AdmissibleWeight& w2) {
    FusionCoefficients out{w1, w2, {}};
    out.gate_passed = w1.k_primed() + w2.k_primed() <= L.q() + 1;
    const auto pres = bimodule_presentation(L, w1);
    for (long i = 0; i < pres.y_truncation; ++i) {
        UniPoly in_y = bipoly_eval_x(pres.generators[static_cast<std::size_t>(i)], w2.j);
        if (!poly_eval(in_y, Rational(1)).is_zero()) continue;
        Rational eig = w1.j + w2.j - Rational(2 * i);
        auto w3 = weight_from_j(L, eig);
        if (!w3) throw Error(Errc::NonAdmissibleEigenvalue, "surviving eigenvalue " + eig.str());
        out.outputs[*w3] += 1;
    }
    return out;
}

/// Same contraction against the relation ideals recovered from the projected
/// singular vectors: the degree-i block survives iff gcd(g_i, x - j2) != 1.
inline FusionCoefficients fusion_from_mff(const Level& L, const MffBimodule& mff, const AdmissibleWeight& w1,
                                          const AdmissibleWeight& w2) {
    FusionCoefficients out{w1, w2, {}};
    out.gate_passed = w1.k_primed() + w2.k_primed() <= L.q() + 1;
    const UniPoly lin = UniPoly::linear(w2.j);
    for (std::size_t i = 0; i < mff.gcds.size(); ++i) {
        if (poly_gcd(mff.gcds[i], lin).degree() < 1) continue;
        Rational eig = w1.j + w2.j - Rational(2 * static_cast<long>(i));
        auto w3 = weight_from_j(L, eig);
        if (!w3) throw Error(Errc::NonAdmissibleEigenvalue, "surviving eigenvalue " + eig.str());
        out.outputs[*w3] += 1;
    }
    return out;
}

inline FusionCoefficients fusion_from_mff(const Level& L, const AdmissibleWeight& w1, const AdmissibleWeight& w2) {
    return fusion_from_mff(L, bimodule_from_mff(L, w1), w1, w2);
}

struct AxiomCheck {
    std::string name;
    bool pass;
    std::string detail;
};

/// Structure constants N[a][b][c] indexed in enumeration order.
struct FusionRing {
    Level level;
    std::vector<AdmissibleWeight> basis;
    std::vector<std::vector<std::vector<long>>> N;
    std::vector<AxiomCheck> checks;

    long at(std::size_t a, std::size_t b, std::size_t c) const { return N[a][b][c]; }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline FusionRing fusion_ring(const Level& L) {
    FusionRing ring{L, enumerate_admissible(L), {}, {}};
    const std::size_t W = ring.basis.size();
    std::map<AdmissibleWeight, std::size_t> index;
    for (std::size_t i = 0; i < W; ++i) index[ring.basis[i]] = i;
    ring.N.assign(W, std::vector<std::vector<long>>(W, std::vector<long>(W, 0)));
    for (std::size_t a = 0; a < W; ++a)
        for (std::size_t b = 0; b < W; ++b)
            for (const auto& [w, m] : fusion_closed_form(L, ring.basis[a], ring.basis[b]).outputs)
                ring.N[a][b][index.at(w)] = m;

    const std::size_t vac = index.at(make_weight(L, 0, 0));
    std::string unit_detail, comm_detail, assoc_detail;
    for (std::size_t b = 0; b < W && unit_detail.empty(); ++b)
        for (std::size_t c = 0; c < W; ++c)
            if (ring.N[vac][b][c] != (b == c ? 1 : 0)) {
                unit_detail = "N[vac][" + std::to_string(b) + "][" + std::to_string(c) + "]";
                break;
            }
    for (std::size_t a = 0; a < W && comm_detail.empty(); ++a)
        for (std::size_t b = 0; b < W && comm_detail.empty(); ++b)
            if (ring.N[a][b] != ring.N[b][a]) comm_detail = std::to_string(a) + "," + std::to_string(b);
    for (std::size_t a = 0; a < W && assoc_detail.empty(); ++a)
        for (std::size_t b = 0; b < W && assoc_detail.empty(); ++b)
            for (std::size_t c = 0; c < W && assoc_detail.empty(); ++c)
                for (std::size_t d = 0; d < W; ++d) {
                    long lhs = 0, rhs = 0;
                    for (std::size_t m = 0; m < W; ++m) {
                        lhs += ring.N[a][b][m] * ring.N[m][c][d];
                        rhs += ring.N[b][c][m] * ring.N[a][m][d];
                    }
                    if (lhs != rhs) {
                        assoc_detail = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                       std::to_string(c) + "->" + std::to_string(d) + ")";
                        break;
                    }
                }
    ring.checks.push_back({"unit", unit_detail.empty(), unit_detail});
    ring.checks.push_back({"commutativity", comm_detail.empty(), comm_detail});
    ring.checks.push_back({"associativity", assoc_detail.empty(), assoc_detail});
    return ring;
}

/// Integrable level-l fusion: |j1-j2| <= j <= j1+j2 in steps of 2 with j1+j2+j <= 2l.
inline std::set<long> classical_su2_fusion(long ell, long j1, long j2) {
    if (ell < 0 || j1 < 0 || j2 < 0 || j1 > ell || j2 > ell)
        throw Error(Errc::WeightOutOfRange, "need 0 <= j1, j2 <= l");
    std::set<long> out;
    for (long j = std::abs(j1 - j2); j <= j1 + j2; j += 2)
        if (j + j1 + j2 <= 2 * ell) out.insert(j);
    return out;
}

}  // namespace sl2voa

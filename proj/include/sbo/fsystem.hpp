#pragma once

// The vector-valued F-system machinery: generators h_k^+/-, assembly of the
// symbol map psi, the scalar/vector decomposition of the Fourier-transformed
// action of C_1^+, the closed-form vector coefficients, and the duality
// involution Phi.
//
// Only C_1^+ is ever tested: L' acts irreducibly on the nilradical, so the
// annihilation condition for one nonzero element is the condition for all.

#include "sbo/exactfield.hpp"
#include "sbo/gegenbauer.hpp"
#include "sbo/tripoly.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace sbo {

// psi in Hom(V^{2N+1}, Pol(n+)) in the dual basis u_s^vee, s = 0..2N.
struct SymbolMap {
    int big_n = 0;
    std::vector<TriPoly> components; // size 2N+1

    explicit SymbolMap(int n = 0)
        : big_n(n), components(static_cast<std::size_t>(2 * n + 1)) {}

    TriPoly& operator[](int s) { return components[static_cast<std::size_t>(s)]; }
    const TriPoly& operator[](int s) const {
        return components[static_cast<std::size_t>(s)];
    }
    int size() const { return 2 * big_n + 1; }
    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero())
                return false;
        return true;
    }
    friend bool operator==(const SymbolMap& a, const SymbolMap& b) {
        return a.big_n == b.big_n && a.components == b.components;
    }
    friend bool operator!=(const SymbolMap& a, const SymbolMap& b) { return !(a == b); }
};

// K_{N,m} = { |m-l|, |m+l| : l = 0..N }; cardinality 2N+1 when |m| >= N.
inline std::set<long long> k_set(int big_n, long long m) {
    if (std::abs(m) < big_n)
        throw std::domain_error("k_set: requires |m| >= N");
    std::set<long long> ks;
    for (int ell = 0; ell <= big_n; ++ell) {
        ks.insert(std::abs(m - ell));
        ks.insert(std::abs(m + ell));
    }
    return ks;
}

struct GenDescriptor {
    long long k = 0;
    Sign sign = Sign::Plus;
    int source_index = 0; // the basis index u_s the generator pairs with
    TriPoly monomial;     // (zeta_1 +/- i zeta_2)^k
};

// Generator h_k^+/- pairing one basis vector with one harmonic power:
//   +, m >= N : u_{N + (k-m)} -> (zeta_1 + i zeta_2)^k
//   -, m <= -N: u_{N - (k+m)} -> (zeta_1 - i zeta_2)^k
inline GenDescriptor generator_h(int big_n, long long m, long long k, Sign sign) {
    if (std::abs(m) < big_n)
        throw std::domain_error("generator_h: requires |m| >= N");
    if ((sign == Sign::Plus && m < big_n) || (sign == Sign::Minus && m > -big_n))
        throw std::domain_error("generator_h: sign inconsistent with m");
    auto ks = k_set(big_n, m);
    if (ks.find(k) == ks.end())
        throw std::domain_error("generator_h: k not in K_{N,m}");
    GenDescriptor d;
    d.k = k;
    d.sign = sign;
    d.source_index = sign == Sign::Plus ? static_cast<int>(big_n + (k - m))
                                        : static_cast<int>(big_n - (k + m));
    d.monomial = zeta_linear_power(static_cast<int>(k), sign == Sign::Plus ? 1 : -1);
    return d;
}

// psi = sum_k (T_{a-k} g_k) h_k^{+/-}.  Each nonzero component comes out
// homogeneous of degree a.
inline SymbolMap assemble_psi(const Rational& lambda, long long a, int big_n,
                              long long m, Sign sign,
                              const std::map<long long, UniPoly>& g) {
    (void)lambda;
    auto ks = k_set(big_n, m);
    for (const auto& [k, gk] : g)
        if (ks.find(k) == ks.end())
            throw std::domain_error("assemble_psi: key outside K_{N,m}");
    SymbolMap psi(big_n);
    for (long long k : ks) {
        auto it = g.find(k);
        if (it == g.end() || it->second.is_zero())
            continue;
        GenDescriptor h = generator_h(big_n, m, k, sign);
        psi[h.source_index] = psi[h.source_index] + t_map(a - k, it->second) * h.monomial;
    }
    return psi;
}

enum class SO3Generator { X11, X21, X31 };

// The matrices dsigma^{2N+1}(2X_{l,1}) exactly as displayed:
// zero; 2i diag(-N..N); tridiagonal with superdiagonal (2N, 2N-1, ..., 1)
// and subdiagonal rows starting 1, -2, ..., -2N.
inline Mat dsigma_matrix(int big_n, SO3Generator gen) {
    const int n = 2 * big_n + 1;
    Mat m(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
    switch (gen) {
    case SO3Generator::X11:
        break;
    case SO3Generator::X21:
        for (int s = 0; s < n; ++s)
            m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] =
                GaussRational(Rational(0), Rational(2 * (s - big_n), 1));
        break;
    case SO3Generator::X31:
        for (int s = 0; s + 1 < n; ++s)
            m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s + 1)] =
                GaussRational(2 * big_n - s);
        for (int s = 1; s < n; ++s)
            m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s - 1)] =
                GaussRational(s == 1 ? 1 : -s);
        break;
    }
    return m;
}

// Scalar part 2 lambda d_1 + 2 E_zeta d_1 - zeta_1 Delta, applied
// componentwise.  The Euler operator acts after d_1.
inline SymbolMap m_scalar(const Rational& lambda, const SymbolMap& psi) {
    SymbolMap out(psi.big_n);
    GaussRational two_lambda(Rational(2) * lambda);
    for (int s = 0; s < psi.size(); ++s) {
        TriPoly d1 = psi[s].derivative(0);
        out[s] = two_lambda * d1 + GaussRational(2) * euler_zeta(d1) -
                 TriPoly::variable(0) * laplace_zeta(psi[s]);
    }
    return out;
}

// Vector part: row s of the displayed tridiagonal first-order matrix,
//   -s d_3 psi_{s-1} + 2i(s-N) d_2 psi_s + (2N-s) d_3 psi_{s+1}.
inline SymbolMap m_vect(const SymbolMap& psi) {
    const int n = psi.size();
    SymbolMap out(psi.big_n);
    for (int s = 0; s < n; ++s) {
        TriPoly acc;
        if (s > 0)
            acc = acc - GaussRational(s) * psi[s - 1].derivative(2);
        acc = acc + GaussRational(Rational(0), Rational(2 * (s - psi.big_n), 1)) *
                        psi[s].derivative(1);
        if (s + 1 < n)
            acc = acc + GaussRational(2 * psi.big_n - s) * psi[s + 1].derivative(2);
        out[s] = acc;
    }
    return out;
}

// M_s(psi) for psi = sum (T_{a-k} g_k) h_k^+ computed directly from the g_k
// by the closed formula, bypassing the zeta-side operators:
//
//   M_s = (z1+iz2)^k [ z1 T_{a-k-2}(S g_k) + 2i(k-m) z2 T_{a-k-2}((a-k-theta) g_k)
//                      + (N-k+m)(z1+iz2) T_{a-k-2}(g'_{k+1}) ]
//         + (z1+iz2)^{k-1} T_{a-k}( 2k(lambda+a-1+m-k) g_k - (N+k-m) g'_{k-1} ),
//   s = k-m+N.
//
// The trailing block carries the (k-1)-st power; at k = 0 (forcing m = N) its
// coefficients vanish, so the power never goes negative.
inline SymbolMap m_closed_form(const Rational& lambda, long long a, int big_n,
                               long long m, const std::map<long long, UniPoly>& g) {
    if (m < big_n)
        throw std::domain_error("m_closed_form: requires m >= N");
    auto gk = [&](long long k) -> UniPoly {
        auto it = g.find(k);
        return it == g.end() ? UniPoly(Parity::Even) : it->second;
    };
    SymbolMap out(big_n);
    for (long long k = m - big_n; k <= m + big_n; ++k) {
        int s = static_cast<int>(k - m + big_n);
        UniPoly cur = gk(k);
        UniPoly s_cur = s_operator({lambda - Rational(1), a - k}, cur);
        UniPoly theta_part =
            GaussRational(Rational(a - k, 1)) * cur - euler_t(cur); // (a-k-theta) g_k
        UniPoly dnext = ddt(gk(k + 1));
        UniPoly dprev = ddt(gk(k - 1));

        GaussRational up(Rational(big_n - k + m, 1));   // N-k+m
        GaussRational down(Rational(big_n + k - m, 1)); // N+k-m
        GaussRational mid(Rational(2 * k, 1) *
                          (lambda + Rational(a - 1 + m - k, 1))); // 2k(lambda+a-1+m-k)

        TriPoly lin = zeta_linear_power(1, 1);
        TriPoly bracket =
            TriPoly::variable(0) * t_map(a - k - 2, s_cur) +
            GaussRational(Rational(0), Rational(2 * (k - m), 1)) *
                (TriPoly::variable(1) * t_map(a - k - 2, theta_part)) +
            up * (lin * t_map(a - k - 2, dnext));
        UniPoly tail = mid * cur - down * dprev;
        TriPoly acc = zeta_linear_power(static_cast<int>(k), 1) * bracket;
        if (!tail.is_zero()) {
            if (k == 0)
                throw std::domain_error("m_closed_form: nonzero trailing block at k = 0");
            acc = acc + zeta_linear_power(static_cast<int>(k - 1), 1) * t_map(a - k, tail);
        }
        out[s] = acc;
    }
    return out;
}

// Residual of the F-system equation: m_scalar + m_vect; identically zero
// componentwise iff psi lies in Sol(n+; sigma_lambda^{2N+1}, tau_{m,nu}).
inline SymbolMap fsystem_residual(const Rational& lambda, const Rational& nu, int big_n,
                                  long long m, const SymbolMap& psi) {
    (void)m; // the transformed action of C_1^+ does not involve the twist
    if (psi.big_n != big_n)
        throw std::domain_error("fsystem_residual: rank mismatch");
    Rational diff = nu - lambda;
    if (!diff.is_integer() || diff.sign() < 0)
        throw std::domain_error("fsystem_residual: nu - lambda must be a natural number");
    if (!diff.num().fits_longlong())
        throw std::domain_error("fsystem_residual: nu - lambda out of range");
    long long a = diff.num().to_longlong();
    for (const auto& comp : psi.components)
        if (!comp.homogeneous_of_degree(static_cast<int>(a)))
            throw std::domain_error("fsystem_residual: psi not homogeneous of degree nu - lambda");
    SymbolMap s = m_scalar(lambda, psi);
    SymbolMap v = m_vect(psi);
    SymbolMap out(psi.big_n);
    for (int i = 0; i < psi.size(); ++i)
        out[i] = s[i] + v[i];
    return out;
}

// Infinitesimal SO(2)-equivariance: the rotation generator zeta_1 d_2 - zeta_2 d_1
// must act on component s as multiplication by i (m - (N - s)).
inline bool so2_weight_check(int big_n, long long m, const SymbolMap& psi) {
    for (int s = 0; s < psi.size(); ++s) {
        GaussRational want(Rational(0), Rational(m - (big_n - s), 1));
        if (rotation_zeta(psi[s]) != want * psi[s])
            return false;
    }
    return true;
}

// Phi(psi)_s = (-1)^s psi_{2N-s}(zeta_1, -zeta_2, zeta_3); an involution that
// exchanges the m and -m solution spaces.
inline SymbolMap phi_involution(const SymbolMap& psi) {
    SymbolMap out(psi.big_n);
    for (int s = 0; s < psi.size(); ++s) {
        TriPoly p = psi[2 * psi.big_n - s].negate_var2();
        out[s] = (s % 2 == 0) ? p : -p;
    }
    return out;
}

} // namespace sbo

#pragma once

// Renormalized Gegenbauer polynomials and the real/imaginary Gegenbauer
// differential operators.  The renormalized form
//
//   C~_l^mu(z) = sum_k Gamma(mu+l-k)/Gamma(mu+[(l+1)/2]) (-1)^k/(k!(l-2k)!) (2z)^{l-2k}
//
// never vanishes identically: its lowest term is (-1)^[l/2]/[l/2]! (2z)^{l-2[l/2]}
// for every mu.  For l < 0 the polynomial is 0.  The classical C_l^mu is not
// exposed; it dies at nonpositive integer mu, which is what the
// renormalization is for.

#include "sbo/exactfield.hpp"
#include "sbo/linalg.hpp"
#include "sbo/unipoly.hpp"

#include <vector>

namespace sbo {

struct GegenbauerSpec {
    Rational mu;
    long long ell = 0;
};

enum class GegenVariable { Z, It };

// Every Gamma ratio here is a positive-shift Pochhammer product:
// k <= [l/2] gives l - k >= [(l+1)/2].
inline UniPoly gegenbauer_tilde(const GegenbauerSpec& spec, GegenVariable var) {
    const long long ell = spec.ell;
    if (ell < 0)
        return UniPoly(Parity::Even);
    UniPoly p(parity_of_degree(ell));
    Rational base = spec.mu + Rational(floor_div(ell + 1, 2), 1);
    for (long long k = 0; k <= ell / 2; ++k) {
        long long d = ell - 2 * k;
        Rational gamma_ratio = pochhammer_gamma_ratio(base, ell - k - floor_div(ell + 1, 2));
        Rational mag = gamma_ratio /
                       Rational(factorial(static_cast<int>(k)) *
                                factorial(static_cast<int>(d)));
        // (2z)^{l-2k}; for z = it an extra i^{l-2k} = i^l (-1)^k
        BigInt two_pow(1);
        for (long long b = 0; b < d; ++b)
            two_pow *= BigInt(2);
        GaussRational c(mag * Rational(two_pow));
        if (k % 2 == 1)
            c = -c;
        if (var == GegenVariable::It)
            c = c * GaussRational::i_pow(d);
        p.set_coeff(static_cast<int>(d), c);
    }
    return p;
}

// Imaginary Gegenbauer operator S_l^mu = -(1+t^2) d^2 - (1+2mu) t d + l(l+2mu).
inline UniPoly s_operator(const GegenbauerSpec& spec, const UniPoly& f) {
    UniPoly f2 = ddt(ddt(f));
    UniPoly t2f2(f2.parity());
    for (const auto& [d, c] : f2.coeffs())
        t2f2.set_coeff(d + 2, c);
    UniPoly tf1 = euler_t(f);
    GaussRational c1(Rational(1) + Rational(2) * spec.mu);
    GaussRational c0(Rational(spec.ell, 1) * (Rational(spec.ell, 1) + Rational(2) * spec.mu));
    return -(f2 + t2f2) - c1 * tf1 + c0 * f;
}

// Real form G_l^mu = (1-z^2) d^2 - (2mu+1) z d + l(l+2mu).
inline UniPoly g_operator(const GegenbauerSpec& spec, const UniPoly& f) {
    UniPoly f2 = ddt(ddt(f));
    UniPoly z2f2(f2.parity());
    for (const auto& [d, c] : f2.coeffs())
        z2f2.set_coeff(d + 2, c);
    UniPoly zf1 = euler_t(f);
    GaussRational c1(Rational(2) * spec.mu + Rational(1));
    GaussRational c0(Rational(spec.ell, 1) * (Rational(spec.ell, 1) + Rational(2) * spec.mu));
    return f2 - z2f2 - c1 * zf1 + c0 * f;
}

// Kernel of G_l^mu on Pol_l[z]_even, by exact nullspace over the [l/2]+1
// coefficient unknowns.  Solutions outside Pol_l[z]_even are not searched.
inline std::vector<UniPoly> even_kernel(const GegenbauerSpec& spec) {
    if (spec.ell < 0)
        throw std::domain_error("even_kernel: requires ell >= 0");
    const long long ell = spec.ell;
    const std::size_t dim = static_cast<std::size_t>(ell / 2 + 1);
    // unknown j = coefficient of z^{l-2j}
    std::vector<UniPoly> images;
    int max_deg = 0;
    for (std::size_t j = 0; j < dim; ++j) {
        UniPoly basis = UniPoly::monomial(static_cast<int>(ell - 2 * j), GaussRational(1));
        images.push_back(g_operator(spec, basis));
        max_deg = std::max(max_deg, images.back().degree());
    }
    Mat m;
    for (int d = max_deg; d >= 0; --d) {
        Vec row(dim);
        bool nonzero = false;
        for (std::size_t j = 0; j < dim; ++j) {
            row[j] = images[j].coeff(d);
            nonzero = nonzero || !row[j].is_zero();
        }
        if (nonzero)
            m.push_back(std::move(row));
    }
    std::vector<Vec> null = kernel_basis(m, dim);
    std::vector<UniPoly> result;
    for (const auto& v : null) {
        UniPoly f(parity_of_degree(ell));
        for (std::size_t j = 0; j < dim; ++j)
            f.set_coeff(static_cast<int>(ell - 2 * j), v[j]);
        result.push_back(std::move(f));
    }
    return result;
}

} // namespace sbo

#pragma once

// Gamma-ratio bookkeeping. Every Gamma ratio in this library is evaluated as
// a finite product of linear factors, never through a gamma function, so the
// degenerate parameter values stay exact.

#include "sbo/rational.hpp"

namespace sbo {

// floor(a/b) for b > 0
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// gamma(mu, l) = 1 if l odd, mu + l/2 if l even.  The parity formula extends
// the definition to all integers l; gamma(mu - k, l + 2k) gives the same value
// for every k, so the extension is well defined.
inline Rational gamma_factor(const Rational& mu, long long ell) {
    if (ell % 2 != 0)
        return Rational(1);
    return mu + Rational(ell / 2, 1);
}

// gamma(mu, l) * gamma(mu, l+1) = mu + floor((l+1)/2)
inline Rational gamma_product(const Rational& mu, long long ell) {
    return mu + Rational(floor_div(ell + 1, 2), 1);
}

// Gamma(x+n)/Gamma(x) as a finite product.
//   n >= 0 : x(x+1)...(x+n-1), empty product = 1.
//   n <  0 : 1/((x-1)(x-2)...(x+n)); throws when a reciprocal factor is zero
//            (an uncancelled Gamma pole; the caller owns the degenerate branch).
inline Rational pochhammer_gamma_ratio(const Rational& x, long long n) {
    Rational r(1);
    if (n >= 0) {
        for (long long k = 0; k < n; ++k)
            r *= x + Rational(k, 1);
        return r;
    }
    for (long long k = -1; k >= n; --k) {
        Rational f = x + Rational(k, 1);
        if (f.is_zero())
            throw std::domain_error("pochhammer_gamma_ratio: Gamma pole at x" +
                                    std::string(k < 0 ? "" : "+") + std::to_string(k));
        r /= f;
    }
    return r;
}

// The constant A_k attached to each covector of the operator family.
// Branch on 0 <= a <= N versus a > N; both reduce to a Pochhammer ratio on
// the integer difference of the Gamma arguments.
inline Rational coeff_A(const Rational& lambda, long long a, long long big_n, long long k) {
    if (a < 0)
        throw std::domain_error("coeff_A: requires a = nu - lambda in N");
    Rational base = lambda + Rational(big_n - 1, 1);
    long long top_shift = floor_div(a - k + 1, 2);
    if (a <= big_n)
        return pochhammer_gamma_ratio(base, top_shift);
    long long bottom_shift = floor_div(a - 2 * big_n + 1, 2);
    return pochhammer_gamma_ratio(base + Rational(bottom_shift, 1), top_shift - bottom_shift);
}

enum class Sign { Plus, Minus };

// Gamma_j^+/- ledger factors of the three-phase solver, as gamma products:
//   Gamma_j^+ = gamma(lambda+N-1, a-1) ... gamma(lambda+N-1, a+j-N)   (j < N)
//   Gamma_j^- = gamma(lambda, a-3) ... gamma(lambda, a+j-N-2)         (j < N)
// and 1 for j = N.  Always defined; zero exactly at the degenerate parameters.
inline Rational big_gamma(const Rational& lambda, long long a, long long big_n,
                          long long j, Sign sign) {
    if (j < 0 || j > big_n)
        throw std::domain_error("big_gamma: j out of range 0..N");
    Rational r(1);
    if (j == big_n)
        return r;
    if (sign == Sign::Plus) {
        Rational mu = lambda + Rational(big_n - 1, 1);
        for (long long ell = a + j - big_n; ell <= a - 1; ++ell)
            r *= gamma_factor(mu, ell);
    } else {
        for (long long ell = a + j - big_n - 2; ell <= a - 3; ++ell)
            r *= gamma_factor(lambda, ell);
    }
    return r;
}

} // namespace sbo

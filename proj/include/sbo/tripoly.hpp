#pragma once

// Polynomials in zeta_1, zeta_2, zeta_3 over Q(i), and the T-map between the
// even t-polynomial spaces and the SO(2)-invariant part of Pol[zeta].

#include "sbo/unipoly.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace sbo {

using Exponent = std::array<int, 3>;

class TriPoly {
public:
    TriPoly() = default;

    static TriPoly constant(const GaussRational& c) {
        TriPoly p;
        p.set_coeff({0, 0, 0}, c);
        return p;
    }
    static TriPoly monomial(const Exponent& e, const GaussRational& c) {
        TriPoly p;
        p.set_coeff(e, c);
        return p;
    }
    static TriPoly variable(int j) {
        Exponent e{0, 0, 0};
        e[j] = 1;
        return monomial(e, GaussRational(1));
    }

    bool is_zero() const { return coeffs_.empty(); }

    GaussRational coeff(const Exponent& e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? GaussRational() : it->second;
    }
    void set_coeff(const Exponent& e, const GaussRational& c) {
        if (e[0] < 0 || e[1] < 0 || e[2] < 0)
            throw std::domain_error("TriPoly: negative exponent");
        if (c.is_zero())
            coeffs_.erase(e);
        else
            coeffs_[e] = c;
    }
    void add_coeff(const Exponent& e, const GaussRational& c) {
        set_coeff(e, coeff(e) + c);
    }

    const std::map<Exponent, GaussRational>& coeffs() const { return coeffs_; }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : coeffs_)
            d = std::max(d, e[0] + e[1] + e[2]);
        return d;
    }

    // every monomial of the same total degree d (vacuous for 0)
    bool homogeneous_of_degree(int d) const {
        for (const auto& [e, c] : coeffs_)
            if (e[0] + e[1] + e[2] != d)
                return false;
        return true;
    }

    friend TriPoly operator+(const TriPoly& a, const TriPoly& b) {
        TriPoly r = a;
        for (const auto& [e, c] : b.coeffs_)
            r.add_coeff(e, c);
        return r;
    }
    friend TriPoly operator-(const TriPoly& a, const TriPoly& b) { return a + (-b); }
    TriPoly operator-() const {
        TriPoly r;
        for (const auto& [e, c] : coeffs_)
            r.coeffs_[e] = -c;
        return r;
    }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b) {
        TriPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_)
                r.add_coeff({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    friend TriPoly operator*(const GaussRational& c, const TriPoly& a) {
        TriPoly r;
        if (c.is_zero())
            return r;
        for (const auto& [e, v] : a.coeffs_)
            r.coeffs_[e] = c * v;
        return r;
    }

    friend bool operator==(const TriPoly& a, const TriPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

    TriPoly derivative(int j) const {
        TriPoly r;
        for (const auto& [e, c] : coeffs_) {
            if (e[j] == 0)
                continue;
            Exponent f = e;
            f[j] -= 1;
            r.add_coeff(f, GaussRational(Rational(e[j], 1)) * c);
        }
        return r;
    }

    // substitute zeta_2 -> -zeta_2
    TriPoly negate_var2() const {
        TriPoly r;
        for (const auto& [e, c] : coeffs_)
            r.coeffs_[e] = (e[1] % 2 == 0) ? c : -c;
        return r;
    }

    // set zeta_3 = 0 (drop every monomial containing it)
    TriPoly restrict_var3() const {
        TriPoly r;
        for (const auto& [e, c] : coeffs_)
            if (e[2] == 0)
                r.coeffs_[e] = c;
        return r;
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string s;
        for (const auto& [e, c] : coeffs_) {
            if (!s.empty())
                s += " + ";
            s += "(" + c.to_string() + ")";
            static const char* names[3] = {"z1", "z2", "z3"};
            for (int j = 0; j < 3; ++j)
                if (e[j] > 0)
                    s += std::string("*") + names[j] +
                         (e[j] > 1 ? "^" + std::to_string(e[j]) : "");
        }
        return s;
    }

private:
    std::map<Exponent, GaussRational> coeffs_;
};

// Euler operator sum zeta_j d/dzeta_j
inline TriPoly euler_zeta(const TriPoly& p) {
    TriPoly r;
    for (const auto& [e, c] : p.coeffs()) {
        int d = e[0] + e[1] + e[2];
        if (d != 0)
            r.add_coeff(e, GaussRational(Rational(d, 1)) * c);
    }
    return r;
}

// Laplacian sum d^2/dzeta_j^2
inline TriPoly laplace_zeta(const TriPoly& p) {
    TriPoly r;
    for (int j = 0; j < 3; ++j)
        r = r + p.derivative(j).derivative(j);
    return r;
}

// Infinitesimal rotation of the (zeta_1, zeta_2) plane: zeta_1 d_2 - zeta_2 d_1.
inline TriPoly rotation_zeta(const TriPoly& p) {
    return TriPoly::variable(0) * p.derivative(1) - TriPoly::variable(1) * p.derivative(0);
}

// Q_2(zeta') = zeta_1^2 + zeta_2^2
inline TriPoly q2_poly() {
    TriPoly q;
    q.set_coeff({2, 0, 0}, GaussRational(1));
    q.set_coeff({0, 2, 0}, GaussRational(1));
    return q;
}

// (zeta_1 + s*i*zeta_2)^k, s = +1/-1
inline TriPoly zeta_linear_power(int k, int s) {
    TriPoly r = TriPoly::constant(GaussRational(1));
    TriPoly lin;
    lin.set_coeff({1, 0, 0}, GaussRational(1));
    lin.set_coeff({0, 1, 0}, GaussRational(Rational(0), Rational(s)));
    for (int j = 0; j < k; ++j)
        r = r * lin;
    return r;
}

// T_b g: t^{b-2j} -> (zeta_1^2+zeta_2^2)^j zeta_3^{b-2j}, expanded monomial-wise.
// Rejects g outside Pol_b[t]_even.
inline TriPoly t_map(long long b, const UniPoly& g) {
    if (!g.in_pol_even(b))
        throw std::domain_error("t_map: polynomial not in Pol_b[t]_even");
    TriPoly r;
    if (g.is_zero())
        return r;
    for (const auto& [d, c] : g.coeffs()) {
        long long j = (b - d) / 2;
        // (zeta_1^2 + zeta_2^2)^j * zeta_3^d
        for (long long u = 0; u <= j; ++u) {
            GaussRational coef = GaussRational(Rational(binomial(static_cast<int>(j),
                                                                 static_cast<int>(u)))) *
                                 c;
            r.add_coeff({static_cast<int>(2 * u), static_cast<int>(2 * (j - u)),
                         static_cast<int>(d)},
                        coef);
        }
    }
    return r;
}

// Inverse of t_map on its image; rejects polynomials outside
// span{ (zeta_1^2+zeta_2^2)^j zeta_3^{b-2j} }.
inline UniPoly t_inverse(long long b, const TriPoly& p) {
    UniPoly g(b >= 0 ? parity_of_degree(b) : Parity::Even);
    if (p.is_zero())
        return g;
    if (b < 0 || !p.homogeneous_of_degree(static_cast<int>(b)))
        throw std::domain_error("t_inverse: not homogeneous of the stated degree");
    // group by zeta_3 degree, then match against c * Q2^j
    std::map<int, TriPoly> slices;
    for (const auto& [e, c] : p.coeffs())
        slices[e[2]].add_coeff({e[0], e[1], 0}, c);
    TriPoly q2 = q2_poly();
    for (auto& [d, slice] : slices) {
        long long rem = b - d;
        if (rem % 2 != 0)
            throw std::domain_error("t_inverse: zeta_3 degree of wrong parity");
        long long j = rem / 2;
        GaussRational c = slice.coeff({static_cast<int>(2 * j), 0, 0});
        TriPoly expect;
        expect.set_coeff({0, 0, 0}, c);
        for (long long u = 0; u < j; ++u)
            expect = expect * q2;
        TriPoly zslice;
        for (const auto& [e, cc] : expect.coeffs())
            zslice.add_coeff({e[0], e[1], 0}, cc);
        if (zslice != slice)
            throw std::domain_error("t_inverse: polynomial outside the image of T_b");
        g.set_coeff(static_cast<int>(d), c);
    }
    return g;
}

} // namespace sbo

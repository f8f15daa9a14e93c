#pragma once

// Construction of the scalar operators C~_{lambda,nu} and the full symmetry
// breaking operators D_{lambda,nu}^{N,+/-N}, application to polynomial
// sections, and LaTeX emission.  The z-calculus is expanded to real partials
// internally; d/dzbar = (d_1 + i d_2)/2 is a printing convention only.

#include "sbo/fsystem.hpp"
#include "sbo/gegenbauer.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbo {

// Finite sum of (coefficient, mixed partial in x_1,x_2,x_3, dual covector),
// with x_3 = 0 applied after all differentiation when restriction is set.
struct DiffOperator {
    int big_n = 0;           // covectors range over 0..2N
    bool restriction = true; // Rest_{x_3 = 0}
    std::map<std::pair<int, Exponent>, GaussRational> terms;

    void add_term(int covector, const Exponent& orders, const GaussRational& c) {
        if (covector < 0 || covector > 2 * big_n)
            throw std::domain_error("DiffOperator: covector index out of range");
        auto key = std::make_pair(covector, orders);
        auto it = terms.find(key);
        GaussRational s = (it == terms.end() ? GaussRational() : it->second) + c;
        if (s.is_zero()) {
            if (it != terms.end())
                terms.erase(it);
        } else {
            terms[key] = s;
        }
    }

    int total_order() const {
        int o = 0;
        for (const auto& [key, c] : terms)
            o = std::max(o, key.second[0] + key.second[1] + key.second[2]);
        return o;
    }

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.big_n == b.big_n && a.restriction == b.restriction && a.terms == b.terms;
    }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) {
        return !(a == b);
    }

    friend DiffOperator operator*(const GaussRational& c, const DiffOperator& d) {
        DiffOperator r;
        r.big_n = d.big_n;
        r.restriction = d.restriction;
        if (c.is_zero())
            return r;
        for (const auto& [key, v] : d.terms)
            r.terms[key] = c * v;
        return r;
    }
};

// polynomial test sections of C^inf(R^3, V^{2N+1})
struct PolySection {
    std::vector<TriPoly> components; // size 2N+1, polynomials in x_1,x_2,x_3
};

namespace detail {

// scalar part of C~_{lambda,nu}: monomial z^{l-2k} of C~_l^{lambda-1}
// becomes (-Delta_{R^2})^k d_3^{l-2k}
inline std::map<Exponent, GaussRational> ctilde_terms(const Rational& mu, long long ell) {
    std::map<Exponent, GaussRational> out;
    UniPoly c = gegenbauer_tilde({mu, ell}, GegenVariable::Z);
    for (const auto& [d, coef] : c.coeffs()) {
        long long k = (ell - d) / 2;
        for (long long u = 0; u <= k; ++u) {
            GaussRational w = coef * GaussRational(Rational(
                                         binomial(static_cast<int>(k), static_cast<int>(u))));
            if (k % 2 == 1)
                w = -w;
            Exponent e{static_cast<int>(2 * u), static_cast<int>(2 * (k - u)),
                       static_cast<int>(d)};
            auto it = out.find(e);
            GaussRational s = (it == out.end() ? GaussRational() : it->second) + w;
            if (s.is_zero()) {
                if (it != out.end())
                    out.erase(it);
            } else {
                out[e] = s;
            }
        }
    }
    return out;
}

// (d_1 + s*i*d_2)^k as exponent/coefficient pairs
inline std::map<Exponent, GaussRational> dz_power(int k, int s) {
    std::map<Exponent, GaussRational> out;
    for (int u = 0; u <= k; ++u) {
        GaussRational c = GaussRational(Rational(binomial(k, u))) *
                          GaussRational::i_pow(u) *
                          (s < 0 && u % 2 == 1 ? GaussRational(-1) : GaussRational(1));
        out[{k - u, u, 0}] = c;
    }
    return out;
}

inline long long nat_difference(const Rational& lambda, const Rational& nu,
                                const char* who) {
    Rational diff = nu - lambda;
    if (!diff.is_integer() || diff.sign() < 0)
        throw std::domain_error(std::string(who) + ": nu - lambda must be a natural number");
    return diff.num().to_longlong();
}

} // namespace detail

// C~_{lambda,nu} = Rest_{x_3=0} o (I_{nu-lambda} C~_{nu-lambda}^{lambda-1})(-Delta_{R^2}, d_3)
inline DiffOperator c_tilde_operator(const Rational& lambda, const Rational& nu) {
    long long a = detail::nat_difference(lambda, nu, "c_tilde_operator");
    DiffOperator d;
    d.big_n = 0;
    for (const auto& [e, c] : detail::ctilde_terms(lambda - Rational(1), a))
        d.add_term(0, e, c);
    return d;
}

// The full operator family:
//   m =  N : sum_k 2^k A_k C~_{lambda+N,nu+N-k} dzbar^k (x) u_k^vee,
//            with 2^k dzbar^k = (d_1 + i d_2)^k;
//   m = -N : sum_k (-2)^k A_k C~_{lambda+N,nu+N-k} dz^k (x) u_{2N-k}^vee.
inline DiffOperator build_sbo(const Rational& lambda, const Rational& nu, int big_n,
                              long long m) {
    if (m != big_n && m != -big_n)
        throw std::domain_error("build_sbo: requires m = +/-N");
    long long a = detail::nat_difference(lambda, nu, "build_sbo");
    DiffOperator d;
    d.big_n = big_n;
    Rational mu = lambda + Rational(big_n - 1, 1);
    for (long long k = 0; k <= 2 * big_n; ++k) {
        if (a - k < 0)
            continue;
        GaussRational ak(coeff_A(lambda, a, big_n, k));
        if (ak.is_zero())
            continue;
        auto scalar = detail::ctilde_terms(mu, a - k);
        auto zpart = detail::dz_power(static_cast<int>(k), m == big_n ? 1 : -1);
        GaussRational sign = (m == big_n || k % 2 == 0) ? ak : -ak;
        int covector = m == big_n ? static_cast<int>(k) : static_cast<int>(2 * big_n - k);
        for (const auto& [es, cs] : scalar)
            for (const auto& [ez, cz] : zpart)
                d.add_term(covector, {es[0] + ez[0], es[1] + ez[1], es[2] + ez[2]},
                           sign * cs * cz);
    }
    return d;
}

// Inverse symbol map: zeta_j -> d/dx_j monomial-wise, component s paired with
// u_s^vee, Rest_{x_3=0} attached.
inline DiffOperator symbol_to_operator(const Rational& lambda, const Rational& nu,
                                       const SymbolMap& psi) {
    long long a = detail::nat_difference(lambda, nu, "symbol_to_operator");
    for (const auto& comp : psi.components)
        if (!comp.homogeneous_of_degree(static_cast<int>(a)))
            throw std::domain_error(
                "symbol_to_operator: psi not homogeneous of degree nu - lambda");
    DiffOperator d;
    d.big_n = psi.big_n;
    for (int s = 0; s < psi.size(); ++s)
        for (const auto& [e, c] : psi[s].coeffs())
            d.add_term(s, e, c);
    return d;
}

// sum over terms of coeff * d^orders f_{covector}, then x_3 = 0
inline TriPoly apply_operator(const DiffOperator& d, const PolySection& f) {
    if (f.components.size() != static_cast<std::size_t>(2 * d.big_n + 1))
        throw std::domain_error("apply_operator: section component count mismatch");
    TriPoly acc;
    for (const auto& [key, c] : d.terms) {
        TriPoly p = f.components[static_cast<std::size_t>(key.first)];
        for (int j = 0; j < 3; ++j)
            for (int r = 0; r < key.second[j]; ++r)
                p = p.derivative(j);
        acc = acc + c * p;
    }
    if (d.restriction)
        acc = acc.restrict_var3();
    return acc;
}

// --------------------------------------------------------------------------
// LaTeX emission
// --------------------------------------------------------------------------

namespace detail {

// exact division of p by (zeta_1 + s*i*zeta_2); nullopt when not divisible
inline std::optional<TriPoly> divide_linear12(TriPoly p, int s) {
    TriPoly q;
    GaussRational si = s > 0 ? GaussRational::i() : -GaussRational::i();
    while (!p.is_zero()) {
        // leading term in zeta_1
        auto lead = p.coeffs().begin();
        for (auto it = p.coeffs().begin(); it != p.coeffs().end(); ++it)
            if (it->first[0] > lead->first[0])
                lead = it;
        Exponent e = lead->first;
        if (e[0] == 0)
            return std::nullopt;
        Exponent eq{e[0] - 1, e[1], e[2]};
        GaussRational c = lead->second;
        q.add_coeff(eq, c);
        p.add_coeff(e, -c);
        p.add_coeff({eq[0], eq[1] + 1, eq[2]}, -(si * c));
    }
    return q;
}

inline std::string latex_coeff(const GaussRational& c, bool leading) {
    std::string inner;
    if (c.is_real()) {
        if (c.re() == Rational(1))
            return leading ? "" : "+ ";
        if (c.re() == Rational(-1))
            return "- ";
        Rational r = c.re().sign() < 0 ? -c.re() : c.re();
        std::string mag = r.den().is_one()
                              ? r.num().to_string()
                              : "\\tfrac{" + r.num().to_string() + "}{" + r.den().to_string() + "}";
        std::string sgn = c.re().sign() < 0 ? "- " : (leading ? "" : "+ ");
        return sgn + mag + " ";
    }
    if (c.re().is_zero()) {
        std::string part = latex_coeff(GaussRational(c.im()), leading);
        if (part.empty() || part == "+ " || part == "- ")
            return part + "i ";
        return part.substr(0, part.size() - 1) + " i ";
    }
    inner = c.re().to_string() + (c.im().sign() > 0 ? "+" : "") + c.im().to_string() + "i";
    return (leading ? "" : "+ ") + ("\\left(" + inner + "\\right) ");
}

inline std::string latex_partial(const Exponent& e) {
    int n = e[0] + e[1] + e[2];
    if (n == 0)
        return "";
    std::string top = n == 1 ? "\\partial" : "\\partial^{" + std::to_string(n) + "}";
    std::string bottom;
    static const char* var[3] = {"x_1", "x_2", "x_3"};
    for (int j = 0; j < 3; ++j) {
        if (e[j] == 0)
            continue;
        bottom += std::string("\\partial ") + var[j];
        if (e[j] > 1)
            bottom += "^{" + std::to_string(e[j]) + "}";
        bottom += " ";
    }
    bottom.pop_back();
    return "\\frac{" + top + "}{" + bottom + "}";
}

} // namespace detail

// Deterministic LaTeX for the operator.  When a covector block factors as
// (d_1 +/- i d_2)^k times a real-partial block, the factor is printed as
// 2^k d^k/dzbar^k (resp. dz^k); otherwise raw partials are used.
inline std::string emit_latex(const DiffOperator& d) {
    std::ostringstream os;
    bool first_block = true;
    for (int s = 0; s <= 2 * d.big_n; ++s) {
        // gather block s as a polynomial in the partial orders
        TriPoly block;
        for (const auto& [key, c] : d.terms)
            if (key.first == s)
                block.add_coeff(key.second, c);
        if (block.is_zero())
            continue;
        if (!first_block)
            os << " + ";
        first_block = false;

        int zbar_pow = 0, z_pow = 0;
        TriPoly reduced = block;
        while (true) {
            auto q = detail::divide_linear12(reduced, 1);
            if (!q)
                break;
            reduced = *q;
            ++zbar_pow;
        }
        if (zbar_pow == 0) {
            while (true) {
                auto q = detail::divide_linear12(reduced, -1);
                if (!q)
                    break;
                reduced = *q;
                ++z_pow;
            }
        }
        int zpow = zbar_pow > 0 ? zbar_pow : z_pow;
        if (zpow > 0) {
            // (d_1 +/- i d_2)^k = 2^k d/d(zbar|z)^k
            BigInt two_k(1);
            for (int i = 0; i < zpow; ++i)
                two_k *= BigInt(2);
            reduced = GaussRational(Rational(two_k)) * reduced;
        }

        std::ostringstream body;
        const char* rest = d.restriction ? "\\mathrm{Rest}_{x_3=0}" : "\\mathrm{id}";
        bool constant_block = reduced.coeffs().size() == 1 &&
                              reduced.coeffs().begin()->first == Exponent{0, 0, 0};
        if (constant_block) {
            // hoist the scalar in front of the restriction
            body << detail::latex_coeff(reduced.coeffs().begin()->second, true) << rest;
        } else {
            body << rest << " \\circ \\left(";
            bool first_term = true;
            for (const auto& [e, c] : reduced.coeffs()) {
                std::string coef = detail::latex_coeff(c, first_term);
                std::string partial = detail::latex_partial(e);
                if (partial.empty() && (coef.empty() || coef == "+ " || coef == "- "))
                    coef += "1 ";
                body << coef << partial;
                first_term = false;
            }
            body << "\\right)";
        }
        if (zpow > 0) {
            const char* zv = zbar_pow > 0 ? "\\overline{z}" : "z";
            if (zpow == 1)
                body << " \\frac{\\partial}{\\partial " << zv << "}";
            else
                body << " \\frac{\\partial^{" << zpow << "}}{\\partial " << zv << "^{"
                     << zpow << "}}";
        }
        os << body.str() << " \\otimes u_" << s << "^\\vee";
    }
    if (first_block)
        return "0";
    return os.str();
}

} // namespace sbo

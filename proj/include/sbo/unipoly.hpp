#pragma once

// Parity-tracked univariate polynomials in t over Q(i).
//
// Parity is a declared attribute, checked when coefficients are stored, not
// inferred afterwards.  Membership in Pol_b[t]_even is the pair
// (parity matches parity of b, degree <= b); Pol_d[t]_even = {0} for d < 0.

#include "sbo/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace sbo {

enum class Parity { Even, Odd, None };

inline Parity parity_of_degree(long long d) {
    return (((d % 2) + 2) % 2 == 0) ? Parity::Even : Parity::Odd;
}

inline Parity flip(Parity p) {
    if (p == Parity::Even)
        return Parity::Odd;
    if (p == Parity::Odd)
        return Parity::Even;
    return Parity::None;
}

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Parity p) : parity_(p) {}

    static UniPoly constant(const GaussRational& c) {
        UniPoly p(Parity::Even);
        p.set_coeff(0, c);
        return p;
    }
    static UniPoly monomial(int degree, const GaussRational& c) {
        UniPoly p(parity_of_degree(degree));
        p.set_coeff(degree, c);
        return p;
    }

    Parity parity() const { return parity_; }
    void declare_parity(Parity p) {
        for (const auto& [d, c] : coeffs_)
            check_parity(p, d);
        parity_ = p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    GaussRational coeff(int d) const {
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? GaussRational() : it->second;
    }

    void set_coeff(int d, const GaussRational& c) {
        if (d < 0)
            throw std::domain_error("UniPoly: negative degree");
        if (c.is_zero()) {
            coeffs_.erase(d);
            return;
        }
        check_parity(parity_, d);
        coeffs_[d] = c;
    }

    const std::map<int, GaussRational>& coeffs() const { return coeffs_; }

    // the zero space when b < 0
    bool in_pol_even(long long b) const {
        if (is_zero())
            return true;
        if (b < 0)
            return false;
        if (degree() > b)
            return false;
        for (const auto& [d, c] : coeffs_)
            if (parity_of_degree(d) != parity_of_degree(b))
                return false;
        return true;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r(combine_parity(a, b));
        r.coeffs_ = a.coeffs_;
        for (const auto& [d, c] : b.coeffs_) {
            GaussRational s = r.coeff(d) + c;
            if (s.is_zero())
                r.coeffs_.erase(d);
            else
                r.coeffs_[d] = s;
        }
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    UniPoly operator-() const {
        UniPoly r(parity_);
        for (const auto& [d, c] : coeffs_)
            r.coeffs_[d] = -c;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        Parity p = Parity::None;
        if (a.parity_ != Parity::None && b.parity_ != Parity::None)
            p = (a.parity_ == b.parity_) ? Parity::Even
                                         : Parity::Odd;
        UniPoly r(p);
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_) {
                GaussRational s = r.coeff(da + db) + ca * cb;
                if (s.is_zero())
                    r.coeffs_.erase(da + db);
                else
                    r.coeffs_[da + db] = s;
            }
        return r;
    }
    friend UniPoly operator*(const GaussRational& c, const UniPoly& a) {
        UniPoly r(a.parity_);
        if (c.is_zero())
            return r;
        for (const auto& [d, v] : a.coeffs_)
            r.coeffs_[d] = c * v;
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    GaussRational eval(const GaussRational& t) const {
        GaussRational acc, pw(1);
        int last = 0;
        for (const auto& [d, c] : coeffs_) {
            for (; last < d; ++last)
                pw *= t;
            acc += c * pw;
        }
        return acc;
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string s;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (!s.empty())
                s += " + ";
            s += "(" + it->second.to_string() + ")";
            if (it->first > 0)
                s += "*t^" + std::to_string(it->first);
        }
        return s;
    }

private:
    std::map<int, GaussRational> coeffs_; // degree -> nonzero coefficient
    Parity parity_ = Parity::None;

    static void check_parity(Parity p, int d) {
        if (p == Parity::Even && d % 2 != 0)
            throw std::domain_error("UniPoly: odd-degree term in even polynomial");
        if (p == Parity::Odd && d % 2 != 1)
            throw std::domain_error("UniPoly: even-degree term in odd polynomial");
    }

    static Parity combine_parity(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero())
            return b.parity_;
        if (b.is_zero())
            return a.parity_;
        if (a.parity_ == b.parity_)
            return a.parity_;
        return Parity::None;
    }
};

// d/dt; flips parity
inline UniPoly ddt(const UniPoly& f) {
    UniPoly r(flip(f.parity()));
    for (const auto& [d, c] : f.coeffs())
        if (d > 0)
            r.set_coeff(d - 1, GaussRational(Rational(d, 1)) * c);
    return r;
}

// Euler operator t d/dt; preserves parity
inline UniPoly euler_t(const UniPoly& f) {
    UniPoly r(f.parity());
    for (const auto& [d, c] : f.coeffs())
        if (d > 0)
            r.set_coeff(d, GaussRational(Rational(d, 1)) * c);
    return r;
}

// Antiderivative with zero constant term; flips parity.
inline UniPoly antiderivative(const UniPoly& f) {
    UniPoly r(flip(f.parity()));
    for (const auto& [d, c] : f.coeffs())
        r.set_coeff(d + 1, c * GaussRational(Rational(1, d + 1)));
    return r;
}

} // namespace sbo

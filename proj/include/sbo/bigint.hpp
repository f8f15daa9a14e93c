#pragma once

// Arbitrary-precision signed integer, sign-magnitude with base 10^9 limbs.
// Coefficient growth in exact Gaussian elimination is unbounded, so all
// integer arithmetic in this library goes through this type.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sbo {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v < 0) {
            negative_ = true;
            // avoid overflow on LLONG_MIN
            unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ull;
            from_u64(m);
        } else {
            from_u64(static_cast<unsigned long long>(v));
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    explicit BigInt(std::string_view s) {
        bool neg = false;
        std::size_t pos = 0;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos == s.size())
            throw std::invalid_argument("BigInt: empty numeral");
        for (std::size_t i = pos; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in numeral");
        // parse in groups of 9 decimal digits, least significant limb first
        std::size_t ndig = s.size() - pos;
        std::size_t nlimb = (ndig + 8) / 9;
        limbs_.assign(nlimb, 0);
        std::size_t end = s.size();
        for (std::size_t li = 0; li < nlimb; ++li) {
            std::size_t begin = end >= 9 && end - 9 >= pos ? end - 9 : pos;
            std::uint32_t limb = 0;
            for (std::size_t i = begin; i < end; ++i)
                limb = limb * 10 + static_cast<std::uint32_t>(s[i] - '0');
            limbs_[li] = limb;
            end = begin;
        }
        trim();
        negative_ = neg && !is_zero();
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
    bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }

    bool fits_longlong() const {
        return cmp_mag(limbs_, BigInt(9223372036854775807LL).limbs_) <= 0;
    }
    long long to_longlong() const {
        long long v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            v = v * BASE + limbs_[i];
        return negative_ ? -v : v;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero())
            r.negative_ = !r.negative_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.negative_ == b.negative_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0)
                return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.negative_ = a.negative_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.negative_ = b.negative_;
            }
        }
        r.trim();
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero())
            return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur % BASE);
                carry = cur / BASE;
            }
            std::size_t j = b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur % BASE);
                carry = cur / BASE;
                ++j;
            }
        }
        r.negative_ = a.negative_ != b.negative_;
        r.trim();
        return r;
    }

    // Truncated division (C semantics): quotient rounds toward zero,
    // remainder carries the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero())
            throw std::domain_error("BigInt: division by zero");
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.limbs_, b.limbs_, qm, rm);
        q.limbs_ = std::move(qm);
        r.limbs_ = std::move(rm);
        q.negative_ = a.negative_ != b.negative_;
        r.negative_ = a.negative_;
        q.trim();
        r.trim();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

    BigInt abs() const {
        BigInt r = *this;
        r.negative_ = false;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.negative_ = false;
        b.negative_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string s;
        if (negative_)
            s += '-';
        s += std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0');
            s += part;
        }
        return s;
    }

    bool even() const { return is_zero() || (limbs_[0] % 2 == 0); }

private:
    static constexpr std::uint64_t BASE = 1000000000ull;

    std::vector<std::uint32_t> limbs_; // little-endian, base 10^9; empty means 0
    bool negative_ = false;

    void from_u64(unsigned long long v) {
        limbs_.clear();
        while (v) {
            limbs_.push_back(static_cast<std::uint32_t>(v % BASE));
            v /= BASE;
        }
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0)
            limbs_.pop_back();
        if (limbs_.empty())
            negative_ = false;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size())
            return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_)
            return a.negative_ ? -1 : 1;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.negative_ ? -c : c;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur % BASE);
            carry = cur / BASE;
        }
        r[big.size()] = static_cast<std::uint32_t>(carry);
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += static_cast<std::int64_t>(BASE);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> mul_small(const std::vector<std::uint32_t>& a,
                                                std::uint32_t m) {
        if (m == 0 || a.empty())
            return {};
        std::vector<std::uint32_t> r(a.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * m + carry;
            r[i] = static_cast<std::uint32_t>(cur % BASE);
            carry = cur / BASE;
        }
        r[a.size()] = static_cast<std::uint32_t>(carry);
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }

    // Knuth algorithm D on base-10^9 limbs.
    static void divmod_mag(const std::vector<std::uint32_t>& u0,
                           const std::vector<std::uint32_t>& v0,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(u0, v0) < 0) {
            r = u0;
            return;
        }
        if (v0.size() == 1) {
            std::uint32_t d = v0[0];
            q.assign(u0.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = u0.size(); i-- > 0;) {
                std::uint64_t cur = rem * BASE + u0[i];
                q[i] = static_cast<std::uint32_t>(cur / d);
                rem = cur % d;
            }
            while (!q.empty() && q.back() == 0)
                q.pop_back();
            if (rem)
                r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }

        std::uint32_t dnorm = static_cast<std::uint32_t>(BASE / (v0.back() + 1ull));
        std::vector<std::uint32_t> u = mul_small(u0, dnorm);
        std::vector<std::uint32_t> v = mul_small(v0, dnorm);
        const std::size_t n = v.size();
        u.resize(u0.size() + 1, 0); // guarantee the extra top limb
        const std::size_t m = u.size() - n;
        q.assign(m, 0);

        for (std::size_t j = m; j-- > 0;) {
            std::uint64_t top = static_cast<std::uint64_t>(u[j + n]) * BASE + u[j + n - 1];
            std::uint64_t qhat = top / v[n - 1];
            std::uint64_t rhat = top % v[n - 1];
            if (qhat >= BASE)
                qhat = BASE - 1, rhat = top - qhat * v[n - 1];
            while (rhat < BASE &&
                   qhat * v[n - 2] > rhat * BASE + u[j + n - 2]) {
                --qhat;
                rhat += v[n - 1];
            }
            // multiply-subtract u[j..j+n] -= qhat * v
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p / BASE;
                std::int64_t cur = static_cast<std::int64_t>(u[j + i]) - borrow -
                                   static_cast<std::int64_t>(p % BASE);
                if (cur < 0) {
                    cur += static_cast<std::int64_t>(BASE);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[j + i] = static_cast<std::uint32_t>(cur);
            }
            std::int64_t curtop = static_cast<std::int64_t>(u[j + n]) - borrow -
                                  static_cast<std::int64_t>(carry);
            if (curtop < 0) {
                // qhat was one too large; add v back
                curtop += static_cast<std::int64_t>(BASE);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(u[j + i]) + v[i] + c2;
                    u[j + i] = static_cast<std::uint32_t>(cur % BASE);
                    c2 = cur / BASE;
                }
                curtop += static_cast<std::int64_t>(c2);
                curtop -= static_cast<std::int64_t>(BASE);
                if (curtop < 0)
                    curtop += static_cast<std::int64_t>(BASE);
            }
            u[j + n] = static_cast<std::uint32_t>(curtop);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0)
            q.pop_back();
        // denormalize remainder
        u.resize(n);
        std::vector<std::uint32_t> rem = u;
        while (!rem.empty() && rem.back() == 0)
            rem.pop_back();
        if (!rem.empty() && dnorm > 1) {
            std::vector<std::uint32_t> rq;
            std::uint64_t carry = 0;
            rq.assign(rem.size(), 0);
            for (std::size_t i = rem.size(); i-- > 0;) {
                std::uint64_t cur = carry * BASE + rem[i];
                rq[i] = static_cast<std::uint32_t>(cur / dnorm);
                carry = cur % dnorm;
            }
            while (!rq.empty() && rq.back() == 0)
                rq.pop_back();
            rem = std::move(rq);
        }
        r = std::move(rem);
    }
};

inline BigInt factorial(int n) {
    if (n < 0)
        throw std::domain_error("factorial of negative integer");
    BigInt r(1);
    for (int i = 2; i <= n; ++i)
        r *= BigInt(i);
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n)
        return BigInt(0);
    BigInt r(1);
    for (int i = 0; i < k; ++i) {
        r *= BigInt(n - i);
        r /= BigInt(i + 1);
    }
    return r;
}

} // namespace sbo

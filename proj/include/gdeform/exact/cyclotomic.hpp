#pragma once

// Elements of the cyclotomic field Q(zeta_m), stored over the power basis
// 1, zeta, ..., zeta^{phi(m)-1} and reduced modulo the m-th cyclotomic
// polynomial.  Mixed-conductor arithmetic lifts both operands to the lcm.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdeform/error.hpp"

namespace gdeform {

using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

// Integer polynomials, low degree first.
using IntPoly = std::vector<long long>;

inline IntPoly intpoly_divide_exact(const IntPoly& num, const IntPoly& den)
{
    IntPoly rem = num;
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) return {0};
    IntPoly quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long long c = rem[i] / den[dn];
        quot[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * den[j];
    }
    return quot;
}

struct CyclotomicTables {
    std::mutex mutex;
    std::map<int, IntPoly> phi;  // monic, low degree first
};

inline CyclotomicTables& cyclotomic_tables()
{
    static CyclotomicTables tables;
    return tables;
}

inline IntPoly cyclotomic_polynomial_locked(CyclotomicTables& t, int m)
{
    if (auto it = t.phi.find(m); it != t.phi.end()) return it->second;
    IntPoly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        p = intpoly_divide_exact(p, cyclotomic_polynomial_locked(t, d));
    }
    t.phi.emplace(m, p);
    return p;
}


// Dense rational polynomials, low degree first; used for field inversion.
inline void qpoly_trim(std::vector<Rational>& p)
{
    while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
    if (p.empty()) p.push_back(0);
}

inline bool qpoly_is_zero(const std::vector<Rational>& p) { return p.size() == 1 && sgn(p[0]) == 0; }

inline std::vector<Rational> qpoly_sub(std::vector<Rational> a, const std::vector<Rational>& b)
{
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qpoly_trim(a);
    return a;
}

inline std::vector<Rational> qpoly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    std::vector<Rational> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qpoly_trim(r);
    return r;
}

inline std::pair<std::vector<Rational>, std::vector<Rational>> qpoly_divmod(std::vector<Rational> a,
                                                                            const std::vector<Rational>& b)
{
    qpoly_trim(a);
    if (a.size() < b.size()) return {{Rational(0)}, a};
    std::vector<Rational> q(a.size() - b.size() + 1);
    for (std::size_t i = a.size(); i-- >= b.size();) {
        Rational f = a[i] / b.back();
        q[i - b.size() + 1] = f;
        if (sgn(f) != 0)
            for (std::size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= f * b[j];
        if (i == b.size() - 1) break;
    }
    a.resize(b.size() - 1);
    qpoly_trim(a);
    qpoly_trim(q);
    return {q, a};
}

}  // namespace detail

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
inline std::vector<long long> cyclotomic_polynomial(int m)
{
    if (m < 1) throw MathError("cyclotomic_polynomial: conductor must be positive");
    auto& t = detail::cyclotomic_tables();
    std::lock_guard<std::mutex> lock(t.mutex);
    return detail::cyclotomic_polynomial_locked(t, m);
}

inline int euler_phi(int m)
{
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

inline int lcm_int(int a, int b) { return std::lcm(a, b); }

class CycScalar {
public:
    CycScalar() : m_(1), c_(1) {}
    CycScalar(long v) : m_(1), c_(1, Rational(v)) {}  // NOLINT(runtime/explicit)
    CycScalar(int v) : CycScalar(static_cast<long>(v)) {}  // NOLINT
    CycScalar(const Rational& q) : m_(1), c_(1, q) { c_[0].canonicalize(); }  // NOLINT

    /// zeta_m^k.
    static CycScalar zeta(int m, long k = 1)
    {
        CycScalar r = zero_of(m);
        long e = ((k % m) + m) % m;
        std::vector<Rational> raw(static_cast<std::size_t>(e) + 1);
        raw[e] = 1;
        r.set_reduced(raw);
        return r;
    }

    static CycScalar zero_of(int m)
    {
        CycScalar r;
        r.m_ = m;
        r.c_.assign(euler_phi(m), Rational(0));
        return r;
    }

    static CycScalar from_coefficients(int m, std::vector<Rational> coeffs)
    {
        CycScalar r = zero_of(m);
        for (auto& q : coeffs) q.canonicalize();
        r.set_reduced(coeffs);
        return r;
    }

    int conductor() const { return m_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const
    {
        for (const auto& q : c_)
            if (sgn(q) != 0) return false;
        return true;
    }
    bool is_one() const
    {
        if (sgn(c_[0] - 1) != 0) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }
    bool is_rational() const
    {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }
    const Rational& rational_part() const { return c_[0]; }

    /// Re-express in Q(zeta_M) for a multiple M of the conductor.
    CycScalar lifted(int M) const
    {
        if (M == m_) return *this;
        if (M % m_ != 0) throw MathError("CycScalar::lifted: target conductor is not a multiple");
        const int step = M / m_;
        std::vector<Rational> raw(static_cast<std::size_t>(step) * (c_.size() - 1) + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
        CycScalar r = zero_of(M);
        r.set_reduced(raw);
        return r;
    }

    /// Galois automorphism zeta -> zeta^k, gcd(k, m) = 1.
    CycScalar galois(long k) const
    {
        if (m_ == 1) return *this;
        long e = ((k % m_) + m_) % m_;
        if (std::gcd(e, static_cast<long>(m_)) != 1) throw MathError("CycScalar::galois: exponent not a unit");
        std::vector<Rational> raw(static_cast<std::size_t>(m_));
        for (std::size_t i = 0; i < c_.size(); ++i) raw[(i * e) % m_] += c_[i];
        CycScalar r = zero_of(m_);
        r.set_reduced(raw);
        return r;
    }

    CycScalar operator-() const
    {
        CycScalar r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }

    CycScalar& operator+=(const CycScalar& o)
    {
        if (o.m_ == m_) {
            for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
            return *this;
        }
        if (o.m_ == 1) {
            c_[0] += o.c_[0];
            return *this;
        }
        const int M = lcm_int(m_, o.m_);
        *this = lifted(M);
        CycScalar b = o.lifted(M);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
        return *this;
    }
    CycScalar& operator-=(const CycScalar& o) { return *this += -o; }

    CycScalar& operator*=(const CycScalar& o)
    {
        if (o.m_ == 1) {
            if (sgn(o.c_[0]) == 0) return *this = zero_of(m_);
            for (auto& q : c_) q *= o.c_[0];
            return *this;
        }
        if (m_ == 1) {
            Rational s = c_[0];
            *this = o;
            if (sgn(s) == 0) return *this = zero_of(o.m_);
            for (auto& q : c_) q *= s;
            return *this;
        }
        if (o.m_ != m_) {
            const int M = lcm_int(m_, o.m_);
            CycScalar a = lifted(M);
            a *= o.lifted(M);
            return *this = a;
        }
        std::vector<Rational> raw(2 * c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (sgn(c_[i]) == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                if (sgn(o.c_[j]) != 0) raw[i + j] += c_[i] * o.c_[j];
        }
        set_reduced(raw);
        return *this;
    }

    CycScalar inverse() const
    {
        if (is_zero()) throw MathError("CycScalar: division by zero");
        if (m_ == 1 || is_rational()) {
            CycScalar r = zero_of(m_);
            r.c_[0] = 1 / c_[0];
            return r;
        }
        // Extended Euclid over Q[x] for c(x) * u(x) = 1 mod Phi_m.
        using QPoly = std::vector<Rational>;
        auto phi = cyclotomic_polynomial(m_);
        QPoly r0, r1 = c_;
        for (long long v : phi) r0.emplace_back(static_cast<long>(v));
        QPoly s0{Rational(0)}, s1{Rational(1)};
        detail::qpoly_trim(r1);
        while (!detail::qpoly_is_zero(r1)) {
            auto [q, r] = detail::qpoly_divmod(r0, r1);
            QPoly s = detail::qpoly_sub(s0, detail::qpoly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        // r0 is a nonzero constant
        Rational k = r0[0];
        for (auto& q : s0) q /= k;
        CycScalar out = zero_of(m_);
        out.set_reduced(s0);
        return out;
    }

    CycScalar& operator/=(const CycScalar& o) { return *this *= o.inverse(); }

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

    friend bool operator==(const CycScalar& a, const CycScalar& b)
    {
        if (a.m_ == b.m_) return a.c_ == b.c_;
        if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
        const int M = lcm_int(a.m_, b.m_);
        return a.lifted(M).c_ == b.lifted(M).c_;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    CycScalar pow(long e) const
    {
        if (e < 0) return inverse().pow(-e);
        CycScalar result = CycScalar(1).lifted(m_), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    /// Canonical text form: a polynomial in w (= zeta_m), e.g. "1/2 - 3*w^2".
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Rational& q = c_[i];
            if (sgn(q) == 0) continue;
            Rational a = abs(q);
            std::string term;
            if (i == 0) {
                term = a.get_str();
            } else {
                std::string mono = i == 1 ? "w" : "w^" + std::to_string(i);
                term = a == 1 ? mono : a.get_str() + "*" + mono;
            }
            if (out.empty()) {
                out = sgn(q) < 0 ? "-" + term : term;
            } else {
                out += sgn(q) < 0 ? " - " : " + ";
                out += term;
            }
        }
        return out.empty() ? "0" : out;
    }

    /// Hashing key.  Rationals share one key whatever their conductor; other
    /// values compare equal by key only when stored at the same conductor.
    std::string key() const { return is_rational() ? c_[0].get_str() : std::to_string(m_) + ":" + to_string(); }

    /// Key after lifting to conductor M (a multiple of conductor()).
    std::string key_at(int M) const { return is_rational() ? c_[0].get_str() : lifted(M).key(); }

private:
    // Reduce raw (arbitrary length) coefficients modulo Phi_m into c_.
    void set_reduced(std::vector<Rational>& raw)
    {
        const std::size_t n = c_.size();
        if (raw.size() > n) {
            auto phi = cyclotomic_polynomial(m_);
            for (std::size_t i = raw.size(); i-- > n;) {
                if (sgn(raw[i]) == 0) continue;
                Rational f = raw[i];
                for (std::size_t j = 0; j < n; ++j)
                    if (phi[j] != 0) raw[i - n + j] -= f * static_cast<long>(phi[j]);
                raw[i] = 0;
            }
        }
        for (std::size_t i = 0; i < n; ++i) c_[i] = i < raw.size() ? raw[i] : Rational(0);
    }
    void set_reduced(const std::vector<Rational>& raw)
    {
        std::vector<Rational> tmp = raw;
        set_reduced(tmp);
    }

    int m_;
    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const CycScalar& x) { return os << x.to_string(); }

inline bool is_zero(const CycScalar& x) { return x.is_zero(); }

}  // namespace gdeform

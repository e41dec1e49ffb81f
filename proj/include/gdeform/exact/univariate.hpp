#pragma once

// Dense univariate polynomials over an exact field, lowest degree first.

#include <string>
#include <utility>
#include <vector>

#include "gdeform/error.hpp"

namespace gdeform {

template <class T>
class UPoly {
public:
    UPoly() : c_{T(0)} {}
    UPoly(const T& constant) : c_{constant} {}  // NOLINT
    explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The monomial x.
    static UPoly x() { return UPoly(std::vector<T>{T(0), T(1)}); }
    /// (x - r)
    static UPoly linear_root(const T& r) { return UPoly(std::vector<T>{-r, T(1)}); }

    const std::vector<T>& coefficients() const { return c_; }
    int degree() const { return is_zero() ? -1 : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && gdeform::is_zero(c_[0]); }
    bool is_constant() const { return c_.size() == 1; }
    const T& leading() const { return c_.back(); }
    const T& operator[](std::size_t i) const { return c_[i]; }

    T eval(const T& at) const
    {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    UPoly monic() const
    {
        if (is_zero()) return *this;
        T inv = T(1) / leading();
        UPoly r = *this;
        for (auto& a : r.c_) a *= inv;
        return r;
    }

    UPoly operator-() const
    {
        UPoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    friend UPoly operator+(UPoly a, const UPoly& b)
    {
        if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size(), T(0));
        for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i] += b.c_[i];
        a.trim();
        return a;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (gdeform::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!gdeform::is_zero(b.c_[j])) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const
    {
        if (d.is_zero()) throw MathError("UPoly::divmod: division by zero polynomial");
        if (degree() < d.degree()) return {UPoly(), *this};
        std::vector<T> rem = c_;
        const std::size_t dn = d.c_.size();
        std::vector<T> q(rem.size() - dn + 1, T(0));
        T inv = T(1) / d.leading();
        for (std::size_t i = rem.size(); i-- >= dn;) {
            T f = rem[i] * inv;
            q[i - dn + 1] = f;
            if (!gdeform::is_zero(f))
                for (std::size_t j = 0; j < dn; ++j) rem[i - dn + 1 + j] -= f * d.c_[j];
            if (i == dn - 1) break;
        }
        rem.resize(dn - 1);
        if (rem.empty()) rem.push_back(T(0));
        return {UPoly(std::move(q)), UPoly(std::move(rem))};
    }

    template <class F>
    auto map(F&& f) const
    {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        for (const auto& a : c_) out.push_back(f(a));
        return UPoly<U>(std::move(out));
    }

    std::string to_string(const std::string& var = "t") const
    {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (gdeform::is_zero(c_[i])) continue;
            std::string coef = c_[i].to_string();
            bool compound = coef.find_first_of("+-", 1) != std::string::npos;
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            std::string term;
            if (i == 0) {
                term = compound ? "(" + coef + ")" : coef;
            } else if (coef == "1") {
                term = mono;
            } else if (coef == "-1") {
                term = "-" + mono;
            } else {
                term = (compound ? "(" + coef + ")" : coef) + "*" + mono;
            }
            if (!out.empty()) {
                if (term[0] == '-')
                    out += " - " + term.substr(1);
                else
                    out += " + " + term;
            } else {
                out = term;
            }
        }
        return out;
    }

private:
    void trim()
    {
        while (c_.size() > 1 && gdeform::is_zero(c_.back())) c_.pop_back();
        if (c_.empty()) c_.push_back(T(0));
    }
    std::vector<T> c_;
};

template <class T>
bool is_zero(const UPoly<T>& p)
{
    return p.is_zero();
}

template <class T>
UPoly<T> upoly_gcd(UPoly<T> a, UPoly<T> b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

template <class T>
UPoly<T> upoly_pow(const UPoly<T>& p, unsigned e)
{
    UPoly<T> r(T(1));
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

}  // namespace gdeform

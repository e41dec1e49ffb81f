#pragma once

// Rational functions in one formal parameter t over Q(zeta_m).  Stored with a
// monic denominator coprime to the numerator.

#include <optional>
#include <string>

#include "gdeform/exact/cyclotomic.hpp"
#include "gdeform/exact/univariate.hpp"

namespace gdeform {

using CycPoly = UPoly<CycScalar>;

class FracScalar {
public:
    FracScalar() : num_(CycScalar(0)), den_(CycScalar(1)) {}
    FracScalar(long v) : num_(CycScalar(v)), den_(CycScalar(1)) {}  // NOLINT
    FracScalar(int v) : FracScalar(static_cast<long>(v)) {}         // NOLINT
    FracScalar(const CycScalar& c) : num_(c), den_(CycScalar(1)) {}  // NOLINT
    FracScalar(const CycPoly& p) : num_(p), den_(CycScalar(1)) {}    // NOLINT
    FracScalar(CycPoly num, CycPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    /// The parameter t itself.
    static FracScalar parameter() { return FracScalar(CycPoly::x()); }

    const CycPoly& numerator() const { return num_; }
    const CycPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// Value at t = c, or nullopt at a pole.
    std::optional<CycScalar> eval(const CycScalar& c) const
    {
        CycScalar d = den_.eval(c);
        if (d.is_zero()) return std::nullopt;
        return num_.eval(c) / d;
    }

    FracScalar operator-() const
    {
        FracScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    FracScalar& operator+=(const FracScalar& o)
    {
        if (den_ == o.den_) {
            num_ = num_ + o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ = den_ * o.den_;
        }
        normalize();
        return *this;
    }
    FracScalar& operator-=(const FracScalar& o) { return *this += -o; }
    FracScalar& operator*=(const FracScalar& o)
    {
        num_ = num_ * o.num_;
        den_ = den_ * o.den_;
        normalize();
        return *this;
    }
    FracScalar inverse() const
    {
        if (is_zero()) throw MathError("FracScalar: division by zero");
        return FracScalar(den_, num_);
    }
    FracScalar& operator/=(const FracScalar& o) { return *this *= o.inverse(); }

    friend FracScalar operator+(FracScalar a, const FracScalar& b) { return a += b; }
    friend FracScalar operator-(FracScalar a, const FracScalar& b) { return a -= b; }
    friend FracScalar operator*(FracScalar a, const FracScalar& b) { return a *= b; }
    friend FracScalar operator/(FracScalar a, const FracScalar& b) { return a /= b; }
    friend bool operator==(const FracScalar& a, const FracScalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const FracScalar& a, const FracScalar& b) { return !(a == b); }

    std::string to_string(const std::string& var = "t") const
    {
        if (den_.is_constant()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void normalize()
    {
        if (den_.is_zero()) throw MathError("FracScalar: zero denominator");
        if (num_.is_zero()) {
            den_ = CycPoly(CycScalar(1));
            return;
        }
        if (!den_.is_constant()) {
            CycPoly g = upoly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = num_.divmod(g).first;
                den_ = den_.divmod(g).first;
            }
        }
        CycScalar lead = den_.leading();
        if (!lead.is_one()) {
            CycScalar inv = lead.inverse();
            num_ = num_ * CycPoly(inv);
            den_ = den_ * CycPoly(inv);
        }
    }

    CycPoly num_;
    CycPoly den_;
};

inline bool is_zero(const FracScalar& x) { return x.is_zero(); }

}  // namespace gdeform

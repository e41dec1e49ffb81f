#pragma once

// Exact roots of univariate polynomials over Q(zeta_m) that are rational or
// roots of unity.  Anything else is returned as an unresolved factor.
//
// Candidates are read off the norm polynomial N = prod_k sigma_k(p), which has
// rational coefficients: its rational roots come from the rational root test
// and its cyclotomic factors from trial division by Phi_d.  Each candidate is
// then checked against p itself.

#include <algorithm>
#include <numeric>
#include <vector>

#include "gdeform/exact/fraction.hpp"

namespace gdeform {

struct RootReport {
    std::vector<CycScalar> roots;      // distinct roots, rationals first
    std::vector<int> multiplicities;   // parallel to roots
    CycPoly unresolved{CycScalar(1)};  // monic cofactor with no resolved roots
    bool has_unresolved() const { return unresolved.degree() > 0; }
};

namespace detail {

inline int poly_conductor(const CycPoly& p)
{
    int m = 1;
    for (const auto& c : p.coefficients()) m = std::lcm(m, c.conductor());
    return m;
}

inline std::vector<Integer> divisors(Integer n, const Integer& cap)
{
    n = abs(n);
    std::vector<Integer> out;
    if (n == 0 || n > cap) return out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    return out;
}

using QPolyVec = std::vector<Rational>;

inline Rational qpoly_eval(const QPolyVec& p, const Rational& x)
{
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline QPolyVec qpoly_from_int(const std::vector<long long>& p)
{
    QPolyVec out;
    for (long long c : p) out.emplace_back(static_cast<long>(c));
    return out;
}

}  // namespace detail

/// Rational and root-of-unity roots of a nonzero polynomial.
inline RootReport find_roots(const CycPoly& p)
{
    if (p.is_zero()) throw MathError("find_roots: zero polynomial");
    RootReport rep;
    if (p.degree() == 0) return rep;

    const int m = detail::poly_conductor(p);
    // Norm down to Q.
    CycPoly norm = p;
    if (m > 2) {
        norm = CycPoly(CycScalar(1));
        for (int k = 1; k < m; ++k) {
            if (std::gcd(k, m) != 1) continue;
            norm = norm * p.map([k, m](const CycScalar& c) { return c.lifted(m).galois(k); });
        }
    }
    detail::QPolyVec q;
    for (const auto& c : norm.coefficients()) {
        if (!c.is_rational()) throw MathError("find_roots: norm polynomial is not rational");
        q.push_back(c.rational_part());
    }

    std::vector<CycScalar> candidates;

    // Rational roots.
    {
        detail::QPolyVec work = q;
        std::size_t zeros = 0;
        while (work.size() > 1 && sgn(work[0]) == 0) {
            work.erase(work.begin());
            ++zeros;
        }
        if (zeros > 0) candidates.emplace_back(0);
        Integer lcd = 1;
        for (const auto& c : work) lcd = lcm(lcd, Integer(c.get_den()));
        std::vector<Integer> ints;
        for (const auto& c : work) ints.push_back(Integer(c * lcd));
        const Integer cap("1000000000000");
        if (ints.size() > 1) {
            auto num_div = detail::divisors(ints.front(), cap);
            auto den_div = detail::divisors(ints.back(), cap);
            std::vector<Rational> seen;
            for (const auto& a : num_div)
                for (const auto& b : den_div)
                    for (int s : {1, -1}) {
                        Rational r(a * s, b);
                        r.canonicalize();
                        if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
                        seen.push_back(r);
                        if (sgn(detail::qpoly_eval(work, r)) == 0) candidates.emplace_back(r);
                    }
        }
    }

    // Cyclotomic factors of the rational norm.
    {
        detail::QPolyVec work = q;
        detail::qpoly_trim(work);
        const int deg = static_cast<int>(work.size()) - 1;
        for (int d = 3; d <= 2 * deg * deg + 2; ++d) {
            if (euler_phi(d) > deg) continue;
            auto phi = detail::qpoly_from_int(cyclotomic_polynomial(d));
            auto [quot, rem] = detail::qpoly_divmod(work, phi);
            if (!detail::qpoly_is_zero(rem)) continue;
            for (int j = 1; j < d; ++j)
                if (std::gcd(j, d) == 1) candidates.push_back(CycScalar::zeta(d, j));
        }
    }

    CycPoly left = p;
    for (const auto& c : candidates) {
        int mult = 0;
        while (left.degree() > 0 && left.eval(c).is_zero()) {
            left = left.divmod(CycPoly::linear_root(c)).first;
            ++mult;
        }
        if (mult > 0) {
            rep.roots.push_back(c);
            rep.multiplicities.push_back(mult);
        }
    }
    rep.unresolved = left.monic();
    return rep;
}

}  // namespace gdeform

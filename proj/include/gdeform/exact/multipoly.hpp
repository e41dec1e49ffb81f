#pragma once

// Sparse multivariate polynomials over Q(zeta_m) with named variables.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gdeform/exact/cyclotomic.hpp"
#include "gdeform/exact/matrix.hpp"

namespace gdeform {

using Exponent = std::vector<int>;

/// Graded lexicographic comparison: total degree first, then the earlier
/// variable wins.  Returns true when a > b.
inline bool grlex_greater(const Exponent& a, const Exponent& b)
{
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return a > b;
}

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const CycScalar& c)
    {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_[Exponent(p.vars_.size(), 0)] = c;
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, std::size_t i)
    {
        MultiPoly p(std::move(vars));
        Exponent e(p.vars_.size(), 0);
        e.at(i) = 1;
        p.terms_[e] = CycScalar(1);
        return p;
    }
    static MultiPoly monomial(std::vector<std::string> vars, const Exponent& e, const CycScalar& c = CycScalar(1))
    {
        MultiPoly p(std::move(vars));
        if (e.size() != p.vars_.size()) throw MathError("MultiPoly::monomial: exponent length mismatch");
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }
    /// Linear form sum_i coeffs[i] * var_i.
    static MultiPoly linear(std::vector<std::string> vars, const std::vector<CycScalar>& coeffs)
    {
        MultiPoly p(std::move(vars));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            Exponent e(p.vars_.size(), 0);
            e[i] = 1;
            p.terms_[e] = coeffs[i];
        }
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponent, CycScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }
    bool is_homogeneous() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (d >= 0 && s != d) return false;
            d = s;
        }
        return true;
    }

    void add_term(const Exponent& e, const CycScalar& c)
    {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    CycScalar coefficient(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? CycScalar(0) : it->second;
    }

    MultiPoly operator-() const
    {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o)
    {
        adopt_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o)
    {
        adopt_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        MultiPoly r(a.vars_.empty() ? b.vars_ : a.vars_);
        if (!a.vars_.empty() && !b.vars_.empty() && a.vars_ != b.vars_)
            throw MathError("MultiPoly: variable lists differ");
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MultiPoly operator*(const CycScalar& s, MultiPoly p)
    {
        if (s.is_zero()) return MultiPoly(p.vars_);
        for (auto& [e, c] : p.terms_) c *= s;
        return p;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (const auto& [e, c] : a.terms_)
            if (b.coefficient(e) != c) return false;
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    CycScalar eval(const std::vector<CycScalar>& point) const
    {
        if (point.size() != vars_.size()) throw MathError("MultiPoly::eval: point has wrong dimension");
        CycScalar acc(0);
        for (const auto& [e, c] : terms_) {
            CycScalar t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t *= point[i].pow(e[i]);
            acc += t;
        }
        return acc;
    }

    /// Replace variable i by images[i] (all images share one variable list).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const
    {
        if (images.size() != vars_.size()) throw MathError("MultiPoly::substitute: wrong image count");
        std::vector<std::string> nv = images.empty() ? std::vector<std::string>{} : images[0].variables();
        MultiPoly out(nv);
        std::vector<std::vector<MultiPoly>> powers(images.size());
        for (const auto& [e, c] : terms_) {
            MultiPoly t = constant(nv, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(nv, CycScalar(1)));
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
                t = t * pw[e[i]];
            }
            out += t;
        }
        return out;
    }

    /// Leading exponent and coefficient under graded lex.
    std::pair<Exponent, CycScalar> leading_term() const
    {
        if (terms_.empty()) throw MathError("MultiPoly::leading_term: zero polynomial");
        auto best = terms_.begin();
        for (auto it = terms_.begin(); it != terms_.end(); ++it)
            if (grlex_greater(it->first, best->first)) best = it;
        return *best;
    }

    /// Scaled to leading coefficient 1 under graded lex.
    MultiPoly normalized() const
    {
        if (terms_.empty()) return *this;
        return leading_term().second.inverse() * *this;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponent, CycScalar>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& x, const auto& y) { return grlex_greater(x.first, y.first); });
        std::string out;
        for (const auto& [e, c] : sorted) {
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string coef = c.to_string();
            bool compound = coef.find_first_of("+-", 1) != std::string::npos;
            bool negative = !compound && coef[0] == '-';
            if (negative) coef = coef.substr(1);
            std::string term;
            if (mono.empty())
                term = compound ? "(" + coef + ")" : coef;
            else if (coef == "1")
                term = mono;
            else
                term = (compound ? "(" + coef + ")" : coef) + "*" + mono;
            if (out.empty())
                out = negative ? "-" + term : term;
            else
                out += (negative ? " - " : " + ") + term;
        }
        return out;
    }

private:
    void adopt_vars(const MultiPoly& o)
    {
        if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
        else if (!o.vars_.empty() && o.vars_ != vars_) throw MathError("MultiPoly: variable lists differ");
    }

    std::vector<std::string> vars_;
    std::map<Exponent, CycScalar> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// All exponent vectors of total degree d in n variables, in decreasing grlex order.
inline std::vector<Exponent> monomials_of_degree(std::size_t n, int d)
{
    std::vector<Exponent> out;
    Exponent e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back(e);
        return out;
    }
    rec(0, d);
    return out;
}

/// Coefficients of the degree-d homogeneous part on monomials_of_degree(n, d).
inline Vec<CycScalar> coefficient_vector(const MultiPoly& p, int d)
{
    auto monos = monomials_of_degree(p.variables().size(), d);
    Vec<CycScalar> v;
    v.reserve(monos.size());
    for (const auto& e : monos) v.push_back(p.coefficient(e));
    return v;
}

/// Determinant of a square matrix of polynomials by Laplace expansion over
/// column subsets (memoized).
inline MultiPoly poly_determinant(const Matrix<MultiPoly>& m, const std::vector<std::string>& vars)
{
    const std::size_t n = m.rows();
    if (m.cols() != n) throw MathError("poly_determinant: matrix not square");
    if (n == 0) return MultiPoly::constant(vars, CycScalar(1));
    if (n > 20) throw CapacityError("poly_determinant: matrix too large");
    std::unordered_map<unsigned, MultiPoly> memo;
    // det of rows [row, n) restricted to the columns in mask (|mask| = n - row).
    std::function<MultiPoly(std::size_t, unsigned)> rec = [&](std::size_t row, unsigned mask) -> MultiPoly {
        if (row == n) return MultiPoly::constant(vars, CycScalar(1));
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        MultiPoly acc(vars);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!m(row, c).is_zero()) {
                MultiPoly sub = rec(row + 1, mask & ~(1u << c));
                if (!sub.is_zero()) {
                    MultiPoly t = m(row, c) * sub;
                    if (sign > 0) acc += t;
                    else acc -= t;
                }
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(0, (n >= 32) ? ~0u : ((1u << n) - 1));
}

inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// All nonzero k x k minors, each normalized to leading coefficient 1 under
/// graded lex.  Order: row subsets lexicographically, then column subsets.
inline std::vector<MultiPoly> poly_det_and_minors(const Matrix<MultiPoly>& m, std::size_t k,
                                                  const std::vector<std::string>& vars)
{
    if (k > m.rows() || k > m.cols()) throw MathError("poly_det_and_minors: k exceeds matrix dimensions");
    std::vector<MultiPoly> out;
    for (const auto& rs : index_subsets(m.rows(), k))
        for (const auto& cs : index_subsets(m.cols(), k)) {
            Matrix<MultiPoly> sub(k, k, MultiPoly(vars));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
            auto d = poly_determinant(sub, vars);
            if (!d.is_zero()) out.push_back(d.normalized());
        }
    return out;
}

}  // namespace gdeform

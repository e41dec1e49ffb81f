#pragma once

// Point modules of quadratic algebras by multilinearization.  Relation s is
// sum_{ij} c^{(s)}_{ij} x_i x_j; the matrix M(p) has entries
// M(p)_{s,j} = sum_i c^{(s)}_{ij} p_i, so relation s vanishes on the pair of
// points (p, q) exactly when (M(p) q)_s = 0.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gdeform/algebra/presentation.hpp"
#include "gdeform/exact/fraction.hpp"
#include "gdeform/exact/multipoly.hpp"

namespace gdeform {

/// Homogeneous coordinates, first nonzero coordinate scaled to 1.
struct ProjPoint {
    CVec coords;

    static ProjPoint make(CVec v)
    {
        std::size_t i = 0;
        while (i < v.size() && v[i].is_zero()) ++i;
        if (i == v.size()) throw MathError("the zero vector is not a projective point");
        CycScalar inv = CycScalar(1) / v[i];
        for (auto& x : v) x *= inv;
        return ProjPoint{std::move(v)};
    }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords == b.coords; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ":" : "") + coords[i].to_string();
        return s + "]";
    }
};

class LinearFormMatrix {
public:
    explicit LinearFormMatrix(const Presentation& p, bool verify = true) : g_(p.dim())
    {
        if (!p.is_quadratic()) throw ValidationError("multilinearization needs a quadratic presentation");
        for (const auto& n : p.names()) vars_.push_back(n + "0");
        for (const auto& r : p.relations(2)) {
            CMatrix c(g_, g_);
            for (std::size_t i = 0; i < g_; ++i)
                for (std::size_t j = 0; j < g_; ++j) c(i, j) = r[i * g_ + j];
            coeffs_.push_back(std::move(c));
        }
        if (verify) verify_bilinear(p, 3);
    }

    std::size_t rows() const { return coeffs_.size(); }
    std::size_t cols() const { return g_; }
    const std::vector<std::string>& vars() const { return vars_; }
    /// c^{(s)} as a g x g matrix.
    const CMatrix& coefficients(std::size_t s) const { return coeffs_.at(s); }

    template <class T>
    Matrix<T> at(const std::vector<T>& p) const
    {
        if (p.size() != g_) throw ValidationError("point has the wrong number of coordinates");
        Matrix<T> m(rows(), g_);
        for (std::size_t s = 0; s < rows(); ++s)
            for (std::size_t j = 0; j < g_; ++j) {
                T acc(0);
                for (std::size_t i = 0; i < g_; ++i)
                    if (!coeffs_[s](i, j).is_zero()) acc += T(coeffs_[s](i, j)) * p[i];
                m(s, j) = acc;
            }
        return m;
    }

    Matrix<MultiPoly> symbolic() const
    {
        Matrix<MultiPoly> m(rows(), g_, MultiPoly(vars_));
        for (std::size_t s = 0; s < rows(); ++s)
            for (std::size_t j = 0; j < g_; ++j) {
                std::vector<CycScalar> lin(g_);
                for (std::size_t i = 0; i < g_; ++i) lin[i] = coeffs_[s](i, j);
                m(s, j) = MultiPoly::linear(vars_, lin);
            }
        return m;
    }

    /// Relation s evaluated on the word (p, q).
    CycScalar evaluate(std::size_t s, const CVec& p, const CVec& q) const
    {
        CycScalar acc(0);
        for (std::size_t i = 0; i < g_; ++i)
            for (std::size_t j = 0; j < g_; ++j)
                if (!coeffs_[s](i, j).is_zero()) acc += coeffs_[s](i, j) * p[i] * q[j];
        return acc;
    }

private:
    void verify_bilinear(const Presentation& p, int pairs) const
    {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> u(-5, 5);
        const auto& rels = p.relations(2);
        for (int t = 0; t < pairs; ++t) {
            CVec a(g_), b(g_);
            for (auto& x : a) x = CycScalar(u(rng));
            for (auto& x : b) x = CycScalar(u(rng));
            auto mq = at(a).apply(b);
            for (std::size_t s = 0; s < rels.size(); ++s) {
                CycScalar direct(0);
                for (std::size_t w = 0; w < rels[s].size(); ++w)
                    if (!rels[s][w].is_zero()) direct += rels[s][w] * a[w / g_] * b[w % g_];
                if (direct != mq[s]) throw MathError("multilinearization violates the bilinear identity");
            }
        }
    }

    std::size_t g_;
    std::vector<std::string> vars_;
    std::vector<CMatrix> coeffs_;
};

inline LinearFormMatrix multilinearize(const Presentation& p) { return LinearFormMatrix(p); }

struct PointVariety {
    bool whole_space = false;            // fewer than g relations
    std::optional<MultiPoly> determinant;  // square case, with the relation order's sign
    std::vector<MultiPoly> equations;    // normalized, duplicates removed
    std::string note;
};

/// Rank(M(p)) <= g - 1: the g x g minors (the determinant in the square case).
inline PointVariety point_variety(const LinearFormMatrix& m)
{
    PointVariety out;
    const std::size_t r = m.rows(), g = m.cols();
    if (r < g) {
        out.whole_space = true;
        out.note = r + 1 < g ? "fewer than g - 1 relations: every point has a family of successors"
                             : "no g x g minors: the point variety is all of projective space";
        return out;
    }
    auto sym = m.symbolic();
    if (r == g) {
        auto d = poly_determinant(sym, m.vars());
        out.determinant = d;
        if (!d.is_zero()) out.equations.push_back(d.normalized());
        return out;
    }
    for (auto& f : poly_det_and_minors(sym, g, m.vars()))
        if (std::find(out.equations.begin(), out.equations.end(), f) == out.equations.end())
            out.equations.push_back(std::move(f));
    return out;
}

inline bool on_variety(const PointVariety& v, const CVec& p)
{
    for (const auto& f : v.equations)
        if (!f.eval(p).is_zero()) return false;
    return true;
}

struct Successor {
    enum class Status { defined, undefined, not_on_variety } status = Status::defined;
    std::optional<ProjPoint> point;
    std::size_t rank = 0;
};

/// The unique q with M(p) q = 0 when rank M(p) = g - 1.
inline Successor successor(const LinearFormMatrix& m, const ProjPoint& p)
{
    Successor s;
    auto mp = m.at(p.coords);
    auto ker = kernel_basis(mp);
    s.rank = m.cols() - ker.size();
    if (ker.empty()) s.status = Successor::Status::not_on_variety;
    else if (ker.size() > 1) s.status = Successor::Status::undefined;
    else s.point = ProjPoint::make(ker[0]);
    return s;
}

enum class OrbitKind { fixed, finite, translation, undefined, unresolved };

inline std::string to_string(OrbitKind k)
{
    switch (k) {
    case OrbitKind::fixed: return "fixed";
    case OrbitKind::finite: return "finite";
    case OrbitKind::translation: return "translation-infinite";
    case OrbitKind::undefined: return "undefined";
    case OrbitKind::unresolved: return "unresolved";
    }
    return "?";
}

struct OrbitReport {
    ProjPoint start;
    std::vector<ProjPoint> sequence;  // start, successor, ...
    OrbitKind kind = OrbitKind::unresolved;
    std::size_t period = 0;
    std::optional<CVec> translation;  // d with successor(p + t d) = p + (t + 1) d
};

namespace detail {

// Successor along the line p + t d, computed over rational functions in t and
// scaled so that coordinate `anchor` equals 1.
inline std::optional<std::vector<FracScalar>> symbolic_successor(const LinearFormMatrix& m, const CVec& p,
                                                                 const CVec& d, std::size_t anchor)
{
    std::vector<FracScalar> pt;
    for (std::size_t i = 0; i < p.size(); ++i) pt.push_back(FracScalar(p[i]) + FracScalar(d[i]) * FracScalar::parameter());
    auto ker = kernel_basis(m.at(pt));
    if (ker.size() != 1 || ker[0][anchor].is_zero()) return std::nullopt;
    FracScalar inv = ker[0][anchor].inverse();
    for (auto& x : ker[0]) x *= inv;
    return ker[0];
}

}  // namespace detail

/// Exact equality detects fixed points and finite orbits; an infinite orbit is
/// certified when the successor acts as t -> t + 1 on the line through p and
/// its successor (checked over rational functions in t).
inline OrbitReport classify_orbit(const LinearFormMatrix& m, const ProjPoint& p, std::size_t max_steps = 12)
{
    OrbitReport out;
    out.start = p;
    out.sequence.push_back(p);
    auto s = successor(m, p);
    if (!s.point) {
        out.kind = OrbitKind::undefined;
        return out;
    }
    if (*s.point == p) {
        out.kind = OrbitKind::fixed;
        out.period = 1;
        return out;
    }
    out.sequence.push_back(*s.point);
    // Translation witness in the chart of p's leading coordinate.
    std::size_t anchor = 0;
    while (p.coords[anchor].is_zero()) ++anchor;
    if (!s.point->coords[anchor].is_zero()) {
        CVec q = s.point->coords;
        CycScalar inv = CycScalar(1) / q[anchor];
        for (auto& x : q) x *= inv;
        CVec d(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) d[i] = q[i] - p.coords[i];
        if (auto img = detail::symbolic_successor(m, p.coords, d, anchor)) {
            bool shift = true;
            const FracScalar t1 = FracScalar::parameter() + FracScalar(1);
            for (std::size_t i = 0; i < d.size() && shift; ++i)
                shift = (*img)[i] == FracScalar(p.coords[i]) + FracScalar(d[i]) * t1;
            if (shift) {
                out.kind = OrbitKind::translation;
                out.translation = d;
                return out;
            }
        }
    }
    ProjPoint cur = *s.point;
    for (std::size_t step = 2; step <= max_steps; ++step) {
        auto n = successor(m, cur);
        if (!n.point) {
            out.kind = OrbitKind::undefined;
            return out;
        }
        cur = *n.point;
        if (cur == p) {
            out.kind = OrbitKind::finite;
            out.period = step;
            return out;
        }
        out.sequence.push_back(cur);
    }
    out.kind = OrbitKind::unresolved;
    return out;
}

}  // namespace gdeform

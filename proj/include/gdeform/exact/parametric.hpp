#pragma once

// Rank of a matrix whose entries are rational functions of one parameter, and
// the parameter values where that rank drops.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gdeform/exact/matrix.hpp"
#include "gdeform/exact/roots.hpp"

namespace gdeform {

struct ParametricRank {
    std::size_t generic_rank = 0;
    std::vector<CycScalar> candidates;       // roots of pivot numerators / denominators
    std::vector<CycScalar> drops;            // candidates verified by substitution
    std::vector<CycScalar> poles;            // candidates where an entry is undefined
    std::vector<CycPoly> unresolved_factors;  // factors without rational / root-of-unity roots
};

/// Substitute t = c.  Returns nullopt when an entry has a pole at c.
inline std::optional<Matrix<CycScalar>> substitute(const Matrix<FracScalar>& m, const CycScalar& c)
{
    Matrix<CycScalar> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto v = m(i, j).eval(c);
            if (!v) return std::nullopt;
            out(i, j) = *v;
        }
    return out;
}

inline ParametricRank parametric_rank(const Matrix<FracScalar>& m)
{
    ParametricRank out;
    std::vector<CycPoly> watch;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).denominator().is_constant()) watch.push_back(m(i, j).denominator());

    // Gauss-Jordan with the same pivot rule as rref(), recording each pivot value.
    Matrix<FracScalar> w = m;
    const std::size_t R = w.rows(), C = w.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = R;
        for (std::size_t i = r; i < R; ++i)
            if (!is_zero(w(i, c))) {
                p = i;
                break;
            }
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(w(p, j), w(r, j));
        const FracScalar piv = w(r, c);
        watch.push_back(piv.numerator());
        if (!piv.denominator().is_constant()) watch.push_back(piv.denominator());
        FracScalar inv = piv.inverse();
        for (std::size_t j = c; j < C; ++j) w(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || is_zero(w(i, c))) continue;
            FracScalar f = w(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (!is_zero(w(r, j))) w(i, j) -= f * w(r, j);
        }
        ++r;
    }
    out.generic_rank = r;

    for (const auto& poly : watch) {
        if (poly.degree() <= 0) continue;
        auto rep = find_roots(poly);
        for (const auto& root : rep.roots)
            if (std::find(out.candidates.begin(), out.candidates.end(), root) == out.candidates.end())
                out.candidates.push_back(root);
        if (rep.has_unresolved() &&
            std::find(out.unresolved_factors.begin(), out.unresolved_factors.end(), rep.unresolved) ==
                out.unresolved_factors.end())
            out.unresolved_factors.push_back(rep.unresolved);
    }
    for (const auto& c : out.candidates) {
        auto at = substitute(m, c);
        if (!at) {
            out.poles.push_back(c);
            continue;
        }
        if (rank(*at) < out.generic_rank) out.drops.push_back(c);
    }
    return out;
}

/// A point [a:b] of the projective line with normalized coordinates
/// (a = 1, or a = 0 and b = 1).
struct P1Point {
    CycScalar a, b;
    friend bool operator==(const P1Point& x, const P1Point& y) { return x.a == y.a && x.b == y.b; }
    std::string to_string() const { return "[" + a.to_string() + ":" + b.to_string() + "]"; }
};

struct ProjectiveLineScan {
    std::size_t generic_rank = 0;
    std::vector<P1Point> drops;
    std::vector<CycPoly> unresolved_factors;
};

/// Scan a family parametrized by [A:B] on P^1.  `build(A, B)` returns the
/// matrix for homogeneous coordinates given as rational functions.  The chart
/// A = 1, B = t covers everything except [0:1], which is checked in the chart
/// A = t, B = 1 at t = 0.
inline ProjectiveLineScan scan_projective_line(
    const std::function<Matrix<FracScalar>(const FracScalar&, const FracScalar&)>& build)
{
    ProjectiveLineScan out;
    auto affine = parametric_rank(build(FracScalar(1), FracScalar::parameter()));
    out.generic_rank = affine.generic_rank;
    out.unresolved_factors = affine.unresolved_factors;
    for (const auto& c : affine.drops) out.drops.push_back({CycScalar(1), c});
    auto at_infinity = build(FracScalar(0), FracScalar(1));
    auto inf = substitute(at_infinity, CycScalar(0));
    if (inf && rank(*inf) < out.generic_rank) out.drops.push_back({CycScalar(0), CycScalar(1)});
    return out;
}

}  // namespace gdeform

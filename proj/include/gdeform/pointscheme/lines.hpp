#pragma once

// Line structure of the point variety of the S_{n+1} differential stratum, and
// a slicing sampler for one-dimensional point varieties.
//
// In the coordinates y_1..y_n, v the candidate lines are indexed by proper
// subsets T of {1..n}: y_i = 0 for i in T, the remaining y_i equal to 1, and
// v = r free.  All of them pass through [0:...:0:1].

#include <random>
#include <string>
#include <vector>

#include "gdeform/casestudy/models.hpp"
#include "gdeform/exact/roots.hpp"
#include "gdeform/pointscheme/pointscheme.hpp"

namespace gdeform {

struct SnpLine {
    std::vector<std::size_t> zero_set;  // T, 1-based
    CVec base;                          // the point with r = 0
    CVec direction;                     // e_v
    bool on_variety = false;            // every g x g minor vanishes identically in r
    bool generic_rank = false;          // rank M(p) = g - 1 at the generic point
    bool keeps_shape = false;           // successor keeps y_i = a_i
    std::optional<CycScalar> shift;     // s - r, when constant
    CycScalar closed_form_shift;              // -n - 1 + 2|T'|, T' the nonzero y-coordinates
    bool pointwise_fixed = false;
    std::string classification;         // "translation" or "pointwise fixed"
};

struct SnpLineStructure {
    int n = 0;
    CycScalar c;
    std::vector<SnpLine> lines;
    ProjPoint intersection;
    bool intersection_fixed = false;
    std::size_t intersection_rank = 0;
    std::vector<std::size_t> fixed_sizes;  // the values of |T| with fixed lines
    std::size_t fixed_count = 0;
    std::size_t expected_fixed = 0;        // binom(n, (n+1)/2) for odd n, else 0
    bool all_on_variety = false;
};

namespace detail {

inline std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Every equation vanishes identically along base + r * dir.
inline bool line_satisfies(const std::vector<MultiPoly>& eqs, std::size_t g, const CVec& base, const CVec& dir)
{
    const std::vector<std::string> r = {"r"};
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < g; ++i)
        images.push_back(MultiPoly::constant(r, base[i]) + MultiPoly::linear(r, {dir[i]}));
    for (const auto& f : eqs)
        if (!f.substitute(images).is_zero()) return false;
    return true;
}

}  // namespace detail

inline SnpLineStructure snp1_line_structure(int n, const CycScalar& c = CycScalar(1))
{
    if (n < 2 || n > 4) throw ValidationError("snp1_line_structure supports 2 <= n <= 4");
    if (c.is_zero()) throw ValidationError("the differential stratum needs c != 0");
    SnpLineStructure out;
    out.n = n;
    out.c = c;
    const std::size_t g = n + 1;
    LinearFormMatrix m(models::snp1_differential(n, c));
    auto variety = point_variety(m);

    CVec top(g);
    top[n] = 1;
    out.intersection = ProjPoint::make(top);
    auto at_top = successor(m, out.intersection);
    out.intersection_rank = at_top.rank;
    out.intersection_fixed = at_top.point && *at_top.point == out.intersection;

    out.all_on_variety = true;
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        SnpLine line;
        line.base = CVec(g);
        line.direction = top;
        std::size_t anchor = g;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) line.zero_set.push_back(i + 1);
            else {
                line.base[i] = 1;
                if (anchor == g) anchor = i;
            }
        }
        const long t_size = static_cast<long>(line.zero_set.size());
        // The closed form indexes the line by its nonzero coordinates.
        line.closed_form_shift = CycScalar(-n - 1 + 2 * (n - t_size));
        line.on_variety = detail::line_satisfies(variety.equations, g, line.base, line.direction);
        out.all_on_variety = out.all_on_variety && line.on_variety;

        // Successor of [a : r] over Q(ζ)(r), scaled to the anchor chart.
        std::vector<FracScalar> pt;
        for (std::size_t i = 0; i < g; ++i) pt.emplace_back(line.base[i]);
        pt[n] = FracScalar::parameter();
        auto ker = kernel_basis(m.at(pt));
        line.generic_rank = ker.size() == 1;
        if (line.generic_rank && !ker[0][anchor].is_zero()) {
            FracScalar inv = ker[0][anchor].inverse();
            for (auto& x : ker[0]) x *= inv;
            line.keeps_shape = true;
            for (int i = 0; i < n; ++i) line.keeps_shape = line.keeps_shape && ker[0][i] == FracScalar(line.base[i]);
            FracScalar diff = ker[0][n] - FracScalar::parameter();
            if (diff.is_polynomial() && diff.numerator().degree() <= 0)
                line.shift = diff.numerator()[0] / diff.denominator()[0];
        }
        line.pointwise_fixed = line.keeps_shape && line.shift && line.shift->is_zero();
        line.classification = line.pointwise_fixed ? "pointwise fixed" : line.shift ? "translation" : "unresolved";
        if (line.pointwise_fixed) {
            ++out.fixed_count;
            if (std::find(out.fixed_sizes.begin(), out.fixed_sizes.end(), line.zero_set.size()) ==
                out.fixed_sizes.end())
                out.fixed_sizes.push_back(line.zero_set.size());
        }
        out.lines.push_back(std::move(line));
    }
    out.expected_fixed = n % 2 == 1 ? detail::binomial(n, (n + 1) / 2) : 0;
    return out;
}

// ---- slicing --------------------------------------------------------------

namespace detail {

// A polynomial in the single variable of `p` as a CycPoly.
inline CycPoly to_cycpoly(const MultiPoly& p)
{
    std::vector<CycScalar> c;
    for (const auto& [e, v] : p.terms()) {
        const std::size_t k = e.empty() ? 0 : static_cast<std::size_t>(e[0]);
        if (c.size() <= k) c.resize(k + 1, CycScalar(0));
        c[k] = v;
    }
    if (c.empty()) return CycPoly(CycScalar(0));
    return CycPoly(c);
}

// Res_b(f, g) for f, g in the variables (a, b), as a polynomial in a.
inline CycPoly resultant_b(const MultiPoly& f, const MultiPoly& g)
{
    const std::vector<std::string> av = {"a"};
    auto by_b = [&](const MultiPoly& p) {
        std::vector<MultiPoly> c;
        for (const auto& [e, v] : p.terms()) {
            const std::size_t k = static_cast<std::size_t>(e[1]);
            if (c.size() <= k) c.resize(k + 1, MultiPoly(av));
            c[k] += MultiPoly::monomial(av, {e[0]}, v);
        }
        return c;
    };
    auto fc = by_b(f), gc = by_b(g);
    if (fc.size() < 2 || gc.size() < 2) return CycPoly(CycScalar(0));
    const std::size_t df = fc.size() - 1, dg = gc.size() - 1, n = df + dg;
    Matrix<MultiPoly> s(n, n, MultiPoly(av));
    for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t k = 0; k <= df; ++k) s(i, i + df - k) = fc[k];
    for (std::size_t i = 0; i < df; ++i)
        for (std::size_t k = 0; k <= dg; ++k) s(dg + i, i + dg - k) = gc[k];
    return to_cycpoly(poly_determinant(s, av));
}

// Rational roots of the gcd of some univariate polynomials.
inline std::vector<CycScalar> common_rational_roots(const std::vector<CycPoly>& ps)
{
    CycPoly h(CycScalar(0));
    for (const auto& p : ps)
        if (!p.is_zero()) h = h.is_zero() ? p : upoly_gcd(h, p);
    if (h.is_zero()) throw MathError("common_rational_roots: all polynomials vanish");
    std::vector<CycScalar> out;
    for (const auto& r : find_roots(h).roots)
        if (r.is_rational()) out.push_back(r);
    return out;
}

}  // namespace detail

struct SliceSample {
    std::vector<ProjPoint> points;
    std::size_t planes = 0;
    std::size_t rejected = 0;  // candidates failing a minor
};

/// Points of a one-dimensional point variety in P^3 (g = 4) found by
/// intersecting with random rational planes: resultants eliminate one
/// coordinate, the common rational roots give candidates, and every candidate
/// is checked against all equations before it is kept.
inline SliceSample sample_curve_points(const PointVariety& v, std::size_t g, std::size_t count,
                                       unsigned seed = 7, std::size_t max_planes = 60)
{
    if (g != 4) throw ValidationError("sample_curve_points slices curves in P^3 (4 generators)");
    if (v.whole_space || v.equations.empty()) throw ValidationError("sample_curve_points needs defining equations");
    SliceSample out;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> u(-3, 3);
    const std::vector<std::string> ab = {"a", "b"};
    while (out.points.size() < count && out.planes < max_planes) {
        ++out.planes;
        CVec pa(g), pb(g), pc(g);
        for (std::size_t i = 0; i < g; ++i) {
            pa[i] = u(rng);
            pb[i] = u(rng);
            pc[i] = u(rng);
        }
        if (rank(Matrix<CycScalar>::from_rows({pa, pb, pc}, g)) < 3) continue;
        std::vector<MultiPoly> images;
        for (std::size_t i = 0; i < g; ++i)
            images.push_back(MultiPoly::linear(ab, {pa[i], pb[i]}) + MultiPoly::constant(ab, pc[i]));
        std::vector<MultiPoly> restricted;
        for (const auto& f : v.equations) {
            auto r = f.substitute(images);
            if (!r.is_zero()) restricted.push_back(r);
        }
        if (restricted.size() < 2) continue;
        auto combo = [&]() {
            MultiPoly acc(ab);
            for (const auto& r : restricted) acc += CycScalar(u(rng)) * r;
            return acc;
        };
        MultiPoly f = combo();
        std::vector<CycPoly> res;
        for (int k = 0; k < 2; ++k) res.push_back(detail::resultant_b(f, combo()));
        if (res[0].is_zero() || res[1].is_zero()) continue;
        for (const auto& alpha : detail::common_rational_roots(res)) {
            std::vector<CycPoly> in_b;
            const std::vector<std::string> bv = {"b"};
            std::vector<MultiPoly> fix = {MultiPoly::constant(bv, alpha), MultiPoly::variable(bv, 0)};
            for (const auto& r : restricted) in_b.push_back(detail::to_cycpoly(r.substitute(fix)));
            bool all_zero = true;
            for (const auto& p : in_b) all_zero = all_zero && p.is_zero();
            if (all_zero) continue;  // the plane contains a component; skip
            for (const auto& beta : detail::common_rational_roots(in_b)) {
                CVec p(g);
                for (std::size_t i = 0; i < g; ++i) p[i] = alpha * pa[i] + beta * pb[i] + pc[i];
                if (is_zero_vector(p)) continue;
                if (!on_variety(v, p)) {
                    ++out.rejected;
                    continue;
                }
                auto q = ProjPoint::make(p);
                if (std::find(out.points.begin(), out.points.end(), q) == out.points.end()) out.points.push_back(q);
            }
        }
    }
    return out;
}

}  // namespace gdeform

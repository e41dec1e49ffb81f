#pragma once

// Twists by degree-one automorphisms: a *_β b = a β^k(b) for a of degree k.

#include <random>
#include <string>
#include <vector>

#include "gdeform/deform/ledger.hpp"

namespace gdeform {

/// Whether β^{⊗d} maps every relation space of p into itself.
inline bool is_graded_automorphism(const Presentation& p, const CMatrix& beta, std::string* why = nullptr)
{
    if (beta.rows() != p.dim() || beta.cols() != p.dim()) {
        if (why) *why = "β has the wrong size";
        return false;
    }
    if (determinant(beta).is_zero()) {
        if (why) *why = "β is singular";
        return false;
    }
    for (std::size_t deg : p.relation_degrees()) {
        auto span = span_of(p.relations(deg), ipow(p.dim(), deg));
        for (const auto& r : p.relations(deg))
            if (!span.contains(apply_tensor_power(beta, r, deg))) {
                if (why) *why = "β moves '" + p.format_relation(deg, r) + "' out of the relation space";
                return false;
            }
    }
    return true;
}

/// Map x_{i_1} ... x_{i_d} -> x_{i_1} β^{e}(x_{i_2}) ... β^{e(d-1)}(x_{i_d}) with e = ±1.
inline CVec twist_map(const CMatrix& beta, const CVec& v, std::size_t degree, bool inverse_map)
{
    CMatrix step = inverse_map ? inverse(beta) : beta;
    std::vector<CMatrix> maps;
    CMatrix cur = CMatrix::identity(beta.rows());
    for (std::size_t j = 0; j < degree; ++j) {
        maps.push_back(cur);
        cur = cur * step;
    }
    return apply_slotwise(maps, v);
}

/// The twisted algebra: R^β_d is the preimage of R_d under the twist map.
inline Presentation twist(const Presentation& p, const CMatrix& beta)
{
    std::string why;
    if (!is_graded_automorphism(p, beta, &why)) throw ValidationError("β is not an automorphism: " + why);
    Presentation out(p.space(), p.names(), p.cutoff());
    for (std::size_t deg : p.relation_degrees())
        for (const auto& r : p.relations(deg)) out.add_relation(deg, twist_map(beta, r, deg, true));
    return out;
}

struct TwistSample {
    CMatrix alpha;
    DeformPoint point;
    std::vector<std::size_t> hilbert;
};

struct TwistFamilyReport {
    long expected_dim = 0;            // sum e_i^2 - 1
    long family_dim = 0;              // rank of the differential of alpha -> point
    bool hilbert_preserved = true;
    bool points_distinct = true;      // non-proportional samples give different points
    std::vector<TwistSample> samples;
    std::vector<std::size_t> base_hilbert;
    std::string message;
};

namespace detail {

inline bool proportional(const CMatrix& a, const CMatrix& b)
{
    std::optional<CycScalar> ratio;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero() != b(i, j).is_zero()) return false;
            if (a(i, j).is_zero()) continue;
            CycScalar r = a(i, j) / b(i, j);
            if (ratio && *ratio != r) return false;
            ratio = r;
        }
    return true;
}

// Rank of X -> Q (Id ⊗ X) r over X in a basis of End_G(V), r in R.
inline long twist_tangent_rank(const std::vector<CVec>& rel, const std::vector<CMatrix>& end_basis, std::size_t d)
{
    const std::size_t width = d * d;
    auto q = annihilator(rel, width);
    Matrix<CycScalar> jac(0, end_basis.size());
    std::vector<CVec> cols;
    for (const auto& x : end_basis) {
        CVec col;
        for (const auto& r : rel) {
            CVec moved = apply_slotwise({CMatrix::identity(d), x}, r);
            for (const auto& row : q) col.push_back(dot(row, moved));
        }
        cols.push_back(std::move(col));
    }
    if (cols.empty() || cols[0].empty()) return 0;
    return static_cast<long>(rank(Matrix<CycScalar>::from_columns(cols, cols[0].size())));
}

}  // namespace detail

/// Twists of the quadratic algebra of the ledger (typically C[V]) by sampled
/// invertible α in End_G(V).  Each twist is canonicalized to a DeformPoint.
inline TwistFamilyReport twist_family_check(const Ledger& l, std::size_t samples, unsigned seed = 1,
                                            std::size_t hilbert_degree = 5)
{
    const auto& base = l.presentation();
    const auto& v = base.space();
    TwistFamilyReport out;
    auto end_basis = hom_space(v, v);
    long sum_sq = static_cast<long>(end_basis.size());  // dim End_G(V) = sum e_i^2
    out.expected_dim = sum_sq - 1;
    const std::size_t top = std::min(hilbert_degree, base.cutoff());
    out.base_hilbert = hilbert_function(base, top);
    out.family_dim = detail::twist_tangent_rank(base.relations(2), end_basis, v.dim());

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::size_t attempts = 0;
    while (out.samples.size() < samples && attempts < 50 * samples + 50) {
        ++attempts;
        CMatrix a(v.dim(), v.dim());
        for (const auto& b : end_basis) a = a + CycScalar(coef(rng)) * b;
        if (determinant(a).is_zero()) continue;
        bool duplicate = false;
        for (const auto& s : out.samples)
            if (detail::proportional(s.alpha, a)) duplicate = true;
        if (duplicate && end_basis.size() > 1) continue;
        auto tw = twist(base, a);
        TwistSample s;
        s.alpha = a;
        s.hilbert = hilbert_function(tw, top);
        s.point = canonical_point_of_relations(l, tw, 2);
        if (s.hilbert != out.base_hilbert) out.hilbert_preserved = false;
        out.family_dim = std::max(out.family_dim, detail::twist_tangent_rank(tw.relations(2), end_basis, v.dim()));
        out.samples.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!detail::proportional(out.samples[i].alpha, out.samples[j].alpha) &&
                out.samples[i].point == out.samples[j].point) {
                out.points_distinct = false;
                out.message = "samples " + std::to_string(j) + " and " + std::to_string(i) + " give the same point";
            }
    return out;
}

}  // namespace gdeform

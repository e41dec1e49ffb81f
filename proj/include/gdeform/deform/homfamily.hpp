#pragma once

// Irrep-free parametrization through equivariant maps out of a relation
// subspace, and the action of normalizer elements on relation spaces.

#include <map>
#include <string>
#include <vector>

#include "gdeform/deform/ledger.hpp"

namespace gdeform {

/// Coordinates of v in the row span of an RREF basis (read off at the pivots).
/// Throws when v is not in the span.
inline CVec rref_coordinates(const std::vector<CVec>& basis, const std::vector<std::size_t>& pivots, const CVec& v)
{
    CVec c(basis.size());
    CVec rest = v;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        c[i] = v[pivots[i]];
        if (c[i].is_zero()) continue;
        for (std::size_t j = 0; j < rest.size(); ++j)
            if (!basis[i][j].is_zero()) rest[j] -= c[i] * basis[i][j];
    }
    if (!is_zero_vector(rest)) throw ValidationError("subspace is not stable under the group");
    return c;
}

/// The G-action on V^{⊗k} restricted to the subspace spanned by `k_basis`.
/// The returned representation uses the canonical (RREF) basis of the subspace,
/// which is also returned.
inline std::pair<Representation, std::vector<CVec>> restrict_to_subspace(const Representation& v, std::size_t k,
                                                                         const std::vector<CVec>& k_basis)
{
    const std::size_t width = ipow(v.dim(), k);
    auto basis = span_of(k_basis, width).canonical_basis();
    if (basis.empty()) throw ValidationError("empty subspace");
    std::vector<std::size_t> pivots;
    for (const auto& b : basis) {
        std::size_t c = 0;
        while (b[c].is_zero()) ++c;
        pivots.push_back(c);
    }
    if (v.is_weight()) {
        std::map<Weight, std::vector<std::size_t>> by_weight;
        for (std::size_t w = 0; w < width; ++w) {
            Weight wt(v.torus().rank, 0);
            for (std::size_t a : word_of(w, v.dim(), k)) wt = wt + v.weights()[a];
            by_weight[wt].push_back(w);
        }
        auto span = span_of(basis, width);
        std::vector<Weight> weights;
        for (const auto& [wt, words] : by_weight) {
            RowSpace<CycScalar> part(width);
            for (const auto& b : basis) {
                CVec proj(width);
                for (std::size_t w : words) proj[w] = b[w];
                if (!span.contains(proj)) throw ValidationError("subspace is not stable under the torus");
                part.insert(proj);
            }
            for (std::size_t i = 0; i < part.dim(); ++i) weights.push_back(wt);
        }
        return {Representation::from_weights(v.torus(), weights, "K"), basis};
    }
    std::vector<CMatrix> images;
    for (const auto& g : v.generator_images()) {
        CMatrix m(basis.size(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto c = rref_coordinates(basis, pivots, apply_tensor_power(g, basis[j], k));
            for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
        }
        images.push_back(std::move(m));
    }
    return {Representation::from_matrices(v.group(), std::move(images), basis.size(), "K", false), basis};
}

struct HomFamily {
    std::size_t degree = 0;
    std::vector<CVec> source;         // canonical basis of K
    Representation source_rep;
    std::vector<CMatrix> maps;        // basis of Hom_G(K, V^{⊗k}); d^k x dim K
    long end_dim = 0;                 // dim End_G(K)
    bool projective = false;          // End_G(K) is the scalars
    long family_dim = -1;             // dimension of the projective family, when projective
    std::string description;
};

inline HomFamily hom_family(const Representation& v, std::size_t k, const std::vector<CVec>& k_basis)
{
    HomFamily out;
    out.degree = k;
    auto [rep, basis] = restrict_to_subspace(v, k, k_basis);
    out.source_rep = rep;
    out.source = basis;
    auto target = v.tensor_power(k, true);
    out.maps = hom_space(rep, target);
    out.end_dim = static_cast<long>(hom_space(rep, rep).size());

    // The inclusion K -> V^{⊗k} must lie in the span of the basis maps.
    const std::size_t width = target.dim(), dk = basis.size();
    RowSpace<CycScalar> span(width * dk);
    auto flat = [&](const CMatrix& m) {
        CVec f(width * dk);
        for (std::size_t i = 0; i < width; ++i)
            for (std::size_t j = 0; j < dk; ++j) f[i * dk + j] = m(i, j);
        return f;
    };
    for (const auto& m : out.maps) span.insert(flat(m));
    if (!span.contains(flat(Matrix<CycScalar>::from_columns(basis, width))))
        throw MathError("hom_family: the inclusion is not equivariant");

    const long h = static_cast<long>(out.maps.size());
    if (out.end_dim == 1) {
        out.projective = true;
        out.family_dim = h - 1;
        out.description = h == 1 ? "point" : "P^" + std::to_string(h - 1);
    } else {
        out.description = "raw Hom basis of dimension " + std::to_string(h) + " (End_G(K) has dimension " +
                          std::to_string(out.end_dim) + ")";
    }
    return out;
}

/// Relation space spanned by the image of a map in a HomFamily: sum_j c_j maps[j].
inline std::vector<CVec> hom_family_image(const HomFamily& f, const CVec& coords)
{
    if (coords.size() != f.maps.size()) throw ValidationError("wrong number of Hom coordinates");
    CMatrix m(f.maps[0].rows(), f.maps[0].cols());
    for (std::size_t j = 0; j < coords.size(); ++j)
        if (!coords[j].is_zero()) m = m + coords[j] * f.maps[j];
    return span_of(m.col_list(), m.rows()).canonical_basis();
}

/// Whether h normalizes the image of G in GL(V).  For a torus, h must permute
/// the weight spaces of V through a linear map of the weight lattice.
inline bool normalizes(const CMatrix& h, const Representation& v, std::string* why = nullptr)
{
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (h.rows() != v.dim() || h.cols() != v.dim()) return fail("h has the wrong size");
    CMatrix hinv;
    try {
        hinv = inverse(h);
    } catch (const MathError&) {
        return fail("h is singular");
    }
    if (v.is_weight()) {
        // h maps the weight space of w onto the weight space of pi(w).
        std::map<Weight, std::vector<std::size_t>> spaces;
        for (std::size_t i = 0; i < v.dim(); ++i) spaces[v.weights()[i]].push_back(i);
        std::map<Weight, Weight> pi;
        for (const auto& [w, idx] : spaces) {
            std::optional<Weight> image;
            for (std::size_t i : idx)
                for (std::size_t r = 0; r < v.dim(); ++r) {
                    if (h(r, i).is_zero()) continue;
                    if (image && *image != v.weights()[r]) return fail("h mixes weight spaces");
                    image = v.weights()[r];
                }
            if (!image || spaces[*image].size() != idx.size()) return fail("h does not permute weight spaces");
            pi[w] = *image;
        }
        // pi must be the restriction of a linear map L on weights: L w = pi(w).
        const std::size_t r = v.torus().rank;
        for (std::size_t out = 0; out < r; ++out) {
            // solve sum_a L(out,a) w_a = img_out for every weight w
            Matrix<CycScalar> aug(0, r + 1);
            for (const auto& [w, img] : pi) {
                CVec row(r + 1);
                for (std::size_t a = 0; a < r; ++a) row[a] = CycScalar(w[a]);
                row[r] = CycScalar(img[out]);
                aug.append_row(row);
            }
            auto e = rref(aug);
            if (!e.pivots.empty() && e.pivots.back() == r) return fail("weight permutation is not linear");
        }
        return true;
    }
    std::vector<CMatrix> elements;
    for (std::size_t i = 0; i < v.group()->order(); ++i) elements.push_back(v.element_image(i));
    for (const auto& g : v.generator_images()) {
        CMatrix c = h * g * hinv;
        bool found = false;
        for (const auto& e : elements)
            if (e == c) {
                found = true;
                break;
            }
        if (!found) return fail("h g h^-1 is not in the group for some generator g");
    }
    return true;
}

/// Transform every relation space by h^{⊗k}.  Hilbert functions are compared up
/// to `check_degree`.
inline Presentation normalizer_action(const CMatrix& h, const Presentation& p, std::size_t check_degree = 4)
{
    std::string why;
    if (!normalizes(h, p.space(), &why)) throw ValidationError("h does not normalize G: " + why);
    Presentation out(p.space(), p.names(), p.cutoff());
    for (std::size_t deg : p.relation_degrees())
        for (const auto& r : p.relations(deg)) out.add_relation(deg, apply_tensor_power(h, r, deg));
    const std::size_t top = std::min(check_degree, p.cutoff());
    if (hilbert_function(p, top) != hilbert_function(out, top))
        throw MathError("normalizer_action changed the Hilbert function");
    return out;
}

inline DeformPoint normalizer_action(const CMatrix& h, const Ledger& l, const DeformPoint& pt,
                                     std::size_t check_degree = 4)
{
    auto moved = normalizer_action(h, point_to_presentation(l, pt), check_degree);
    DeformPoint out;
    for (const auto& [k, blocks] : pt.blocks) {
        auto b = canonical_block(l, k, moved.relations(k));
        if (!b.empty()) out.blocks[k] = std::move(b);
    }
    return out;
}

}  // namespace gdeform

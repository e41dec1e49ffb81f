#pragma once

// Degree-by-degree structure of A = T(V)/(R).
//
// A_k is computed as (A_{k-1} ⊗ V) / J_k where J_k is spanned by the images of
// s·r for s a standard word of degree k-j and r a relation of degree j.  The
// non-pivot columns of J_k give the standard words of degree k, and each word
// of degree k has a normal form in that basis.  Everything is linear algebra;
// no rewriting system is needed.

#include <map>
#include <string>
#include <vector>

#include "gdeform/algebra/presentation.hpp"

namespace gdeform {

using SparseVec = std::vector<std::pair<std::size_t, CycScalar>>;

class DegreeTower {
public:
    DegreeTower(const Presentation& p, std::size_t top) : p_(p), d_(p.dim())
    {
        if (top > p.cutoff())
            throw ValidationError("degree " + std::to_string(top) + " exceeds the presentation cutoff " +
                                  std::to_string(p.cutoff()));
        levels_.resize(1);
        levels_[0].standard = {0};
        levels_[0].standard_pos = {{0, 0}};
        levels_[0].normal_form = {{{0, CycScalar(1)}}};
        for (std::size_t k = 1; k <= top; ++k) extend();
    }

    std::size_t top() const { return levels_.size() - 1; }
    std::size_t dim(std::size_t k) const { return levels_.at(k).standard.size(); }
    std::vector<std::size_t> hilbert() const
    {
        std::vector<std::size_t> out;
        for (const auto& l : levels_) out.push_back(l.standard.size());
        return out;
    }

    /// Word indices (in V^{⊗k}) forming the basis of A_k.
    const std::vector<std::size_t>& standard_words(std::size_t k) const { return levels_.at(k).standard; }

    /// Normal form of a word of degree k in the standard basis of A_k.
    const SparseVec& normal_form(std::size_t k, std::size_t word) const { return levels_.at(k).normal_form.at(word); }

    /// Image in A_k of an element of V^{⊗k}.
    CVec project(std::size_t k, const CVec& t) const
    {
        CVec out(dim(k));
        for (std::size_t w = 0; w < t.size(); ++w) {
            if (t[w].is_zero()) continue;
            for (const auto& [s, c] : normal_form(k, w)) out[s] += c * t[w];
        }
        return out;
    }

    /// Basis of the degree-k piece of the ideal (R): w - NF(w) for every
    /// non-standard word w.
    std::vector<CVec> ideal_basis(std::size_t k) const
    {
        const auto& l = levels_.at(k);
        const std::size_t width = ipow(d_, k);
        std::vector<CVec> out;
        for (std::size_t w = 0; w < width; ++w) {
            if (l.standard_pos.count(w)) continue;
            CVec v(width);
            v[w] = 1;
            for (const auto& [s, c] : l.normal_form[w]) v[l.standard[s]] -= c;
            out.push_back(std::move(v));
        }
        return out;
    }

    /// Product of prefix ∈ A_{k-1} and letter ∈ V, as coordinates in A_k.
    CVec multiply(std::size_t k, const CVec& prefix, const CVec& letter) const
    {
        CVec x(dim(k - 1) * d_);
        for (std::size_t s = 0; s < prefix.size(); ++s) {
            if (prefix[s].is_zero()) continue;
            for (std::size_t a = 0; a < d_; ++a)
                if (!letter[a].is_zero()) x[s * d_ + a] = prefix[s] * letter[a];
        }
        return reduce(levels_.at(k), std::move(x));
    }

    /// Matrix of a degree-1 map g (acting diagonally) on A_k, in the standard basis.
    /// Requires that the relations are g-stable.
    CMatrix graded_action(const CMatrix& g, std::size_t k) const
    {
        CMatrix cur = CMatrix::identity(1);
        for (std::size_t j = 1; j <= k; ++j) {
            const auto& l = levels_.at(j);
            CMatrix next(dim(j), dim(j));
            for (std::size_t b = 0; b < dim(j); ++b) {
                auto [sp, a] = l.parent[b];
                CVec prefix = cur.col(sp);
                CVec letter = g.col(a);
                CVec col = multiply(j, prefix, letter);
                for (std::size_t i = 0; i < col.size(); ++i) next(i, b) = col[i];
            }
            cur = std::move(next);
        }
        return cur;
    }

private:
    struct Level {
        std::vector<std::size_t> standard;                    // word indices
        std::map<std::size_t, std::size_t> standard_pos;       // word -> position
        std::vector<std::pair<std::size_t, std::size_t>> parent;  // (position in k-1, letter)
        std::vector<SparseVec> normal_form;                    // per word of degree k
        // J_k in reduced echelon form over columns s*d + a of A_{k-1} ⊗ V.
        std::map<std::size_t, SparseVec> pivot_rows;           // pivot column -> row (non-pivot support)
        std::vector<std::size_t> column_to_standard;           // non-pivot column -> position, or npos
    };

    static CVec reduce(const Level& l, CVec x)
    {
        for (const auto& [pc, row] : l.pivot_rows) {
            if (x[pc].is_zero()) continue;
            CycScalar f = x[pc];
            x[pc] = CycScalar(0);
            for (const auto& [c, v] : row) x[c] -= f * v;
        }
        CVec coords(l.standard.size());
        for (std::size_t c = 0; c < x.size(); ++c) {
            std::size_t pos = l.column_to_standard[c];
            if (pos != npos && !x[c].is_zero()) coords[pos] = x[c];
        }
        return coords;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void extend()
    {
        const std::size_t k = levels_.size();
        tensor_dim_checked(d_, k);
        const Level& prev = levels_[k - 1];
        const std::size_t cols = prev.standard.size() * d_;
        Level l;

        // Rows of J_k.
        RowSpace<CycScalar> j_space(cols);
        for (std::size_t deg : p_.relation_degrees()) {
            if (deg > k) continue;
            const std::size_t left_deg = k - deg;
            const Level& left = levels_[left_deg];
            for (const auto& r : p_.relations(deg)) {
                for (std::size_t s_pos = 0; s_pos < left.standard.size(); ++s_pos) {
                    const std::size_t s_word = left.standard[s_pos];
                    CVec row(cols);
                    for (std::size_t w = 0; w < r.size(); ++w) {
                        if (r[w].is_zero()) continue;
                        // s·w = (s · w[0..deg-2]) ⊗ w[deg-1]
                        const std::size_t last = w % d_;
                        const std::size_t head = w / d_;
                        const std::size_t prefix_word = s_word * ipow(d_, deg - 1) + head;
                        for (const auto& [t, c] : prev.normal_form[prefix_word]) row[t * d_ + last] += c * r[w];
                    }
                    if (!is_zero_vector(row)) j_space.insert(std::move(row));
                }
            }
        }
        auto rows = j_space.canonical_basis();
        std::vector<bool> is_pivot(cols, false);
        for (const auto& row : rows) {
            std::size_t pc = 0;
            while (row[pc].is_zero()) ++pc;
            is_pivot[pc] = true;
            SparseVec sv;
            for (std::size_t c = pc + 1; c < cols; ++c)
                if (!row[c].is_zero()) sv.emplace_back(c, row[c]);
            l.pivot_rows.emplace(pc, std::move(sv));
        }
        l.column_to_standard.assign(cols, npos);
        for (std::size_t c = 0; c < cols; ++c) {
            if (is_pivot[c]) continue;
            const std::size_t s = c / d_, a = c % d_;
            const std::size_t word = prev.standard[s] * d_ + a;
            l.column_to_standard[c] = l.standard.size();
            l.standard_pos[word] = l.standard.size();
            l.standard.push_back(word);
            l.parent.emplace_back(s, a);
        }

        // Normal forms of all words of degree k.
        const std::size_t width = ipow(d_, k);
        l.normal_form.resize(width);
        for (std::size_t w = 0; w < width; ++w) {
            const std::size_t head = w / d_, a = w % d_;
            CVec x(cols);
            for (const auto& [t, c] : prev.normal_form[head]) x[t * d_ + a] = c;
            CVec coords = reduce(l, std::move(x));
            SparseVec sv;
            for (std::size_t i = 0; i < coords.size(); ++i)
                if (!coords[i].is_zero()) sv.emplace_back(i, coords[i]);
            l.normal_form[w] = std::move(sv);
        }
        levels_.push_back(std::move(l));
    }

    const Presentation& p_;
    std::size_t d_;
    std::vector<Level> levels_;
};

/// dim A_0, ..., dim A_K.
inline std::vector<std::size_t> hilbert_function(const Presentation& p, std::size_t top)
{
    return DegreeTower(p, top).hilbert();
}

/// Basis of the degree-k piece of the two-sided ideal generated by the relations.
inline std::vector<CVec> ideal_degree_span(const Presentation& p, std::size_t k)
{
    if (k > p.cutoff())
        throw ValidationError("degree " + std::to_string(k) + " exceeds the cutoff " + std::to_string(p.cutoff()));
    return DegreeTower(p, k).ideal_basis(k);
}

/// The same span computed directly as the row space of every shift
/// u ⊗ r ⊗ u' (used as an independent check).
inline std::vector<CVec> ideal_degree_span_naive(const Presentation& p, std::size_t k)
{
    const std::size_t d = p.dim();
    const std::size_t width = tensor_dim_checked(d, k);
    RowSpace<CycScalar> span(width);
    for (std::size_t deg : p.relation_degrees()) {
        if (deg > k) continue;
        for (std::size_t left = 0; left + deg <= k; ++left) {
            const std::size_t right = k - deg - left;
            const std::size_t nl = ipow(d, left), nr = ipow(d, right);
            for (const auto& r : p.relations(deg))
                for (std::size_t u = 0; u < nl; ++u)
                    for (std::size_t v = 0; v < nr; ++v) {
                        CVec row(width);
                        for (std::size_t w = 0; w < r.size(); ++w)
                            if (!r[w].is_zero()) row[(u * ipow(d, deg) + w) * nr + v] = r[w];
                        span.insert(std::move(row));
                    }
        }
    }
    return span.canonical_basis();
}

/// Character of A_k.  Matrix backend: traces of class representatives acting
/// on A_k.  Weight backend: weights of the standard words.
inline Character degree_character(const Presentation& p, std::size_t k, const DegreeTower* tower = nullptr)
{
    auto cert = is_g_stable(p);
    if (!cert.stable) throw ValidationError("degree_character on a presentation that is not G-stable: " + cert.message);
    std::optional<DegreeTower> own;
    if (!tower) {
        own.emplace(p, k);
        tower = &*own;
    }
    const auto& v = p.space();
    Character ch;
    if (v.is_weight()) {
        ch.weight_backend = true;
        for (std::size_t word : tower->standard_words(k)) {
            Weight w(v.torus().rank, 0);
            for (std::size_t a : word_of(word, p.dim(), k)) w = w + v.weights()[a];
            ch.weights.push_back(std::move(w));
        }
        std::sort(ch.weights.begin(), ch.weights.end());
        return ch;
    }
    const auto& g = *v.group();
    for (std::size_t c = 0; c < g.num_classes(); ++c)
        ch.values.push_back(tower->graded_action(v.element_image(g.class_representative(c)), k).trace());
    return ch;
}

/// Character of the degree-k piece of the ideal: char(V^{⊗k}) - char(A_k).
inline Character relation_character(const Presentation& p, std::size_t k)
{
    Character full = p.space().tensor_power(k, false).character();
    Character a = degree_character(p, k);
    Character out;
    out.weight_backend = full.weight_backend;
    if (full.weight_backend) {
        std::map<Weight, long> count;
        for (const auto& w : full.weights) ++count[w];
        for (const auto& w : a.weights) --count[w];
        for (const auto& [w, c] : count)
            for (long i = 0; i < c; ++i) out.weights.push_back(w);
        return out;
    }
    for (std::size_t c = 0; c < full.values.size(); ++c) out.values.push_back(full.values[c] - a.values[c]);
    return out;
}

struct DegreeReport {
    std::size_t degree = 0;
    std::size_t ideal_dim = 0;
    std::size_t algebra_dim = 0;
    std::optional<Character> character;
};

inline std::vector<DegreeReport> degree_reports(const Presentation& p, std::size_t top, bool with_characters)
{
    DegreeTower tower(p, top);
    bool stable = with_characters && is_g_stable(p).stable;
    std::vector<DegreeReport> out;
    for (std::size_t k = 0; k <= top; ++k) {
        DegreeReport r;
        r.degree = k;
        r.algebra_dim = tower.dim(k);
        r.ideal_dim = ipow(p.dim(), k) - r.algebra_dim;
        if (stable) r.character = degree_character(p, k, &tower);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace gdeform

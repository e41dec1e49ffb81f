#pragma once

// Ore extensions A[t; σ, δ] of quadratic G-algebras and the linear solver for
// admissible σ-derivations of polynomial rings.
//
// Convention: t x = σ(x) t + δ(x), hence δ(ab) = σ(a)δ(b) + δ(a)b.  With g t =
// χ(g) t the relations are G-stable exactly when σ is equivariant and
// δ(g x) = χ(g)^{-1} g δ(x).

#include <string>
#include <vector>

#include "gdeform/algebra/tower.hpp"

namespace gdeform {

struct OreData {
    Presentation base;            // quadratic
    CMatrix sigma;                // column i = σ(x_i)
    std::vector<CVec> delta;      // delta[i] = δ(x_i) in V^{⊗2}
    Representation chi;           // one-dimensional, spanned by t
    std::string t_name = "t";
};

namespace detail {

inline CycScalar one_dim_value(const Representation& chi, std::size_t gen)
{
    return chi.action_generators().at(gen)(0, 0);
}

// σ(x) and δ(x) for x = sum_i c_i x_i.
inline CVec sigma_of(const CMatrix& sigma, const CVec& x) { return sigma.apply(x); }
inline CVec delta_of(const std::vector<CVec>& delta, const CVec& x, std::size_t width)
{
    CVec out(width);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            for (std::size_t w = 0; w < width; ++w)
                if (!delta[i][w].is_zero()) out[w] += x[i] * delta[i][w];
    return out;
}

inline CVec basis_vector(std::size_t d, std::size_t i)
{
    CVec e(d);
    e[i] = 1;
    return e;
}

// Re-index a word vector over d letters as one over d + 1 letters.
inline CVec widen(const CVec& v, std::size_t d, std::size_t degree)
{
    CVec out(ipow(d + 1, degree));
    for (std::size_t w = 0; w < v.size(); ++w)
        if (!v[w].is_zero()) out[word_index(word_of(w, d, degree), d + 1)] = v[w];
    return out;
}

}  // namespace detail

struct OreCheck {
    bool ok = true;
    std::string failure;
};

/// All the linear identities an Ore datum must satisfy.
inline OreCheck check_ore_data(const OreData& o)
{
    OreCheck c;
    auto fail = [&](std::string m) {
        c.ok = false;
        c.failure = std::move(m);
        return c;
    };
    const auto& a = o.base;
    const std::size_t d = a.dim(), w2 = d * d;
    if (!a.is_quadratic()) return fail("base algebra is not quadratic");
    if (o.sigma.rows() != d || o.sigma.cols() != d) return fail("σ has the wrong size");
    if (o.delta.size() != d) return fail("δ needs one image per generator");
    for (const auto& x : o.delta)
        if (x.size() != w2) return fail("δ images must lie in V⊗V");
    if (o.chi.dim() != 1) return fail("χ must be one-dimensional");
    if (!o.chi.same_group(a.space()) || o.chi.backend() != a.space().backend()) return fail("χ is for another group");
    if (determinant(o.sigma).is_zero()) return fail("σ is not invertible");
    auto gens = a.space().action_generators();
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (!(gens[g] * o.sigma == o.sigma * gens[g])) return fail("σ is not equivariant (generator " + std::to_string(g) + ")");
    auto r2 = span_of(a.relations(2), w2);
    for (const auto& r : a.relations(2))
        if (!r2.contains(apply_tensor_power(o.sigma, r, 2)))
            return fail("σ does not preserve the relation '" + a.format_relation(2, r) + "'");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        CycScalar chi_inv = CycScalar(1) / detail::one_dim_value(o.chi, g);
        for (std::size_t i = 0; i < d; ++i) {
            CVec lhs = detail::delta_of(o.delta, gens[g].col(i), w2);
            CVec rhs = apply_tensor_power(gens[g], o.delta[i], 2);
            for (std::size_t w = 0; w < w2; ++w) lhs[w] -= chi_inv * rhs[w];
            if (!r2.contains(lhs))
                return fail("twisted equivariance δ(gx) = χ*(g) g δ(x) fails for generator " + std::to_string(g) +
                            " and x = " + a.names()[i]);
        }
    }
    DegreeTower tower(a.with_space(a.space()), 3);
    for (const auto& r : a.relations(2)) {
        // δ(sum c_ab x_a x_b) = sum c_ab (σ(x_a) δ(x_b) + δ(x_a) x_b)
        CVec img(w2 * d);
        for (std::size_t w = 0; w < w2; ++w) {
            if (r[w].is_zero()) continue;
            const std::size_t xa = w / d, xb = w % d;
            CVec s = tensor_vectors(o.sigma.col(xa), o.delta[xb]);
            CVec t = tensor_vectors(o.delta[xa], detail::basis_vector(d, xb));
            for (std::size_t k = 0; k < img.size(); ++k) img[k] += r[w] * (s[k] + t[k]);
        }
        if (!is_zero_vector(tower.project(3, img)))
            return fail("δ does not vanish on the relation '" + a.format_relation(2, r) + "' modulo the ideal");
    }
    return c;
}

/// A[t; σ, δ] on V ⊕ χ, with t the last generator.
inline Presentation ore_extension(const OreData& o)
{
    auto check = check_ore_data(o);
    if (!check.ok) throw ValidationError("Ore data rejected: " + check.failure);
    const auto& a = o.base;
    const std::size_t d = a.dim(), n = d + 1;
    auto names = a.names();
    names.push_back(o.t_name);
    Representation space = direct_sum(a.space(), o.chi);
    space.set_label(a.space().label() + "+" + o.chi.label());
    Presentation out(space, names, a.cutoff());
    for (const auto& r : a.relations(2)) out.add_relation(2, detail::widen(r, d, 2));
    for (std::size_t i = 0; i < d; ++i) {
        CVec rel(n * n);
        rel[d * n + i] += 1;  // t x_i
        CVec s = o.sigma.col(i);
        for (std::size_t j = 0; j < d; ++j)
            if (!s[j].is_zero()) rel[j * n + d] -= s[j];  // σ(x_i) t
        CVec dl = detail::widen(o.delta[i], d, 2);
        for (std::size_t w = 0; w < rel.size(); ++w) rel[w] -= dl[w];
        out.add_relation(2, rel);
    }
    auto cert = is_g_stable(out);
    if (!cert.stable) throw MathError("Ore extension is not G-stable: " + cert.message);
    return out;
}

/// Lift of a commutative quadratic x_a x_b (a <= b) to the word x_a ⊗ x_b.
inline CVec lift_commutative(const CVec& sym, std::size_t d)
{
    CVec out(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            CycScalar c = a == b ? sym[a * d + a] : sym[a * d + b] + sym[b * d + a];
            out[a * d + b] = c;
        }
    return out;
}

namespace detail {

// Symmetrization of a tensor in V^{⊗3} (sum over the six slot permutations).
inline CVec symmetrize3(const CVec& t, std::size_t d)
{
    CVec out(t.size());
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (std::size_t w = 0; w < t.size(); ++w) {
        if (t[w].is_zero()) continue;
        auto word = word_of(w, d, 3);
        for (const auto& p : perms) {
            std::vector<std::size_t> v = {word[p[0]], word[p[1]], word[p[2]]};
            out[word_index(v, d)] += t[w];
        }
    }
    return out;
}

}  // namespace detail

/// Admissible δ for the polynomial ring C[V] (relations spanning V∧V): the
/// σ-derivation identities in degree 3 and the twisted equivariance in degree 2.
/// Each solution lists δ(x_i) as lifted commutative quadratics.
inline std::vector<std::vector<CVec>> sigma_derivation_solve(const Presentation& a, const CMatrix& sigma,
                                                             const Representation& chi)
{
    const std::size_t d = a.dim(), w2 = d * d;
    {
        RowSpace<CycScalar> wedge(w2);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                CVec r(w2);
                r[i * d + j] = 1;
                r[j * d + i] = -1;
                wedge.insert(r);
            }
        if (a.relations(2).size() != wedge.dim() || !span_contains(wedge.basis(), a.relations(2), w2) ||
            !a.is_quadratic())
            throw ValidationError("sigma_derivation_solve needs the polynomial ring C[V]");
    }
    // Unknowns: coefficient of x_a x_b (a <= b) in δ(x_i).
    std::vector<std::pair<std::size_t, std::size_t>> monos;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = x; y < d; ++y) monos.emplace_back(x, y);
    const std::size_t m = monos.size(), unknowns = d * m;
    auto symmetric = [&](std::size_t mono) {
        CVec s(w2);
        auto [x, y] = monos[mono];
        s[x * d + y] += CycScalar(Rational(1, 2));
        s[y * d + x] += CycScalar(Rational(1, 2));
        return s;
    };
    auto gens = a.space().action_generators();
    std::vector<CVec> columns;
    for (std::size_t u = 0; u < unknowns; ++u) {
        const std::size_t i = u / m;
        std::vector<CVec> delta(d, CVec(w2));
        delta[i] = symmetric(u % m);
        CVec col;
        // σ(x_p)δ(x_q) + x_q δ(x_p) - σ(x_q)δ(x_p) - x_p δ(x_q) in Sym^3
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) {
                CVec e = tensor_vectors(sigma.col(p), delta[q]);
                CVec f = tensor_vectors(detail::basis_vector(d, q), delta[p]);
                CVec g = tensor_vectors(sigma.col(q), delta[p]);
                CVec h = tensor_vectors(detail::basis_vector(d, p), delta[q]);
                CVec t(e.size());
                for (std::size_t k = 0; k < t.size(); ++k) t[k] = e[k] + f[k] - g[k] - h[k];
                auto s = detail::symmetrize3(t, d);
                col.insert(col.end(), s.begin(), s.end());
            }
        // δ(g x_p) - χ(g)^{-1} g δ(x_p), symmetrized in degree 2
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            CycScalar chi_inv = CycScalar(1) / detail::one_dim_value(chi, gi);
            for (std::size_t p = 0; p < d; ++p) {
                CVec lhs = detail::delta_of(delta, gens[gi].col(p), w2);
                CVec rhs = apply_tensor_power(gens[gi], delta[p], 2);
                for (std::size_t w = 0; w < w2; ++w) lhs[w] -= chi_inv * rhs[w];
                col.insert(col.end(), lhs.begin(), lhs.end());
            }
        }
        columns.push_back(std::move(col));
    }
    auto sys = Matrix<CycScalar>::from_columns(columns, columns.empty() ? 0 : columns[0].size());
    std::vector<std::vector<CVec>> out;
    for (const auto& k : kernel_basis(sys)) {
        std::vector<CVec> delta(d, CVec(w2));
        for (std::size_t u = 0; u < unknowns; ++u)
            if (!k[u].is_zero()) {
                CVec s = symmetric(u % m);
                for (std::size_t w = 0; w < w2; ++w) delta[u / m][w] += k[u] * s[w];
            }
        for (auto& x : delta) x = lift_commutative(x, d);
        out.push_back(std::move(delta));
    }
    return out;
}

}  // namespace gdeform

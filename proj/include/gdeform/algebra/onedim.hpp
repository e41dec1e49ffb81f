#pragma once

// One-dimensional representations of T(V)/(R): replace the generators by
// commuting variables.  Polynomial systems are compared degree by degree
// through the spans of their multiples.

#include <string>
#include <vector>

#include "gdeform/algebra/presentation.hpp"
#include "gdeform/exact/multipoly.hpp"

namespace gdeform {

/// The relations with commuting variables substituted (zero polynomials dropped).
inline std::vector<MultiPoly> onedim_locus(const Presentation& p)
{
    std::vector<MultiPoly> out;
    for (std::size_t deg : p.relation_degrees())
        for (const auto& r : p.relations(deg)) {
            MultiPoly f(p.names());
            for (std::size_t w = 0; w < r.size(); ++w) {
                if (r[w].is_zero()) continue;
                std::vector<int> e(p.dim(), 0);
                for (std::size_t a : word_of(w, p.dim(), deg)) ++e[a];
                f.add_term(e, r[w]);
            }
            if (!f.is_zero()) out.push_back(f.normalized());
        }
    return out;
}

/// Span of {m f : f in polys, m a monomial, deg(m f) = degree} as a basis over
/// the degree-`degree` monomials (decreasing grlex).
inline std::vector<CVec> graded_ideal_span(const std::vector<MultiPoly>& polys, const std::vector<std::string>& vars,
                                           int degree)
{
    RowSpace<CycScalar> span(monomials_of_degree(vars.size(), degree).size());
    for (const auto& f : polys) {
        if (!f.is_homogeneous()) throw ValidationError("graded_ideal_span needs homogeneous polynomials");
        int df = f.total_degree();
        if (df > degree) continue;
        for (const auto& m : monomials_of_degree(vars.size(), degree - df)) {
            MultiPoly mf = f * MultiPoly::monomial(vars, m);
            span.insert(coefficient_vector(mf, degree));
        }
    }
    return span.canonical_basis();
}

struct SpanComparison {
    bool equal = true;
    std::vector<std::size_t> dims_a, dims_b;  // per degree 0..max_degree
    int first_difference = -1;
};

/// Two-way containment of the graded ideals generated by a and b in every
/// degree up to max_degree.
inline SpanComparison compare_graded_ideals(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b,
                                            const std::vector<std::string>& vars, int max_degree)
{
    SpanComparison out;
    for (int deg = 0; deg <= max_degree; ++deg) {
        auto sa = graded_ideal_span(a, vars, deg);
        auto sb = graded_ideal_span(b, vars, deg);
        out.dims_a.push_back(sa.size());
        out.dims_b.push_back(sb.size());
        if (sa != sb && out.equal) {
            out.equal = false;
            out.first_difference = deg;
        }
    }
    return out;
}

}  // namespace gdeform

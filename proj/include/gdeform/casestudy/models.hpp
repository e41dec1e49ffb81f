#pragma once

// The presentations studied in the worked examples: C[V] for the permutation
// representation of S_{n+1} and its two strata, the order-54 Clifford family,
// the quantum plane under a rank-2 torus, and the H_2 example.

#include <functional>
#include <string>
#include <vector>

#include "gdeform/algebra/presentation.hpp"
#include "gdeform/symmetry/builtin.hpp"

namespace gdeform::models {

inline void add_commutators(Presentation& p, std::size_t count)
{
    const std::size_t d = p.dim();
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
            CVec r(d * d);
            r[i * d + j] = 1;
            r[j * d + i] = -1;
            p.add_relation(2, r);
        }
}

// ---- S_{n+1} ----------------------------------------------------------------

/// y_i = x_0 - x_i (1 <= i <= n), v = sum_i x_i, as rows over x_0..x_n.
inline CMatrix snp1_coordinates(int n)
{
    CMatrix q(n + 1, n + 1);
    for (int i = 1; i <= n; ++i) {
        q(i - 1, 0) = 1;
        q(i - 1, i) = -1;
    }
    for (int j = 0; j <= n; ++j) q(n, j) = 1;
    return q;
}

inline std::vector<std::string> snp1_names(int n)
{
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    names.push_back("v");
    return names;
}

/// C[V] on x_0..x_n.
inline Presentation snp1_polynomial_x(int n, GroupPtr g = nullptr, std::size_t cutoff = 5)
{
    if (!g) g = symmetric_group(n + 1);
    std::vector<std::string> xs;
    for (int i = 0; i <= n; ++i) xs.push_back("x" + std::to_string(i));
    Presentation p(permutation_rep(g), xs, cutoff);
    add_commutators(p, n + 1);
    return p;
}

/// C[V] rewritten on y_1..y_n, v.
inline Presentation snp1_polynomial(int n, GroupPtr g = nullptr, std::size_t cutoff = 5)
{
    return snp1_polynomial_x(n, std::move(g), cutoff).change_of_generators(snp1_coordinates(n), snp1_names(n));
}

/// δ_0(y_i) = y_i((n-1)y_i - 2 sum_{j != i} y_j) as a word vector over d >= n letters.
inline CVec snp1_delta(std::size_t n, std::size_t i, std::size_t d)
{
    CVec out(d * d);
    out[i * d + i] = CycScalar(static_cast<long>(n) - 1);
    for (std::size_t j = 0; j < n; ++j)
        if (j != i) out[i * d + j] = CycScalar(-2);
    return out;
}

/// The point [A:B:C] of the degree-2 family: [y_i, y_j] and
/// A y_i v + B v y_i + C y_i((n-1)y_i - 2 sum_{j != i} y_j).
inline Presentation snp1_family(int n, const CycScalar& a, const CycScalar& b, const CycScalar& c,
                                GroupPtr g = nullptr, std::size_t cutoff = 5)
{
    Presentation base = snp1_polynomial(n, std::move(g), cutoff);
    Presentation p(base.space(), base.names(), cutoff);
    add_commutators(p, n);
    const std::size_t d = n + 1;
    for (int i = 0; i < n; ++i) {
        CVec r = snp1_delta(n, i, d);
        for (auto& x : r) x *= c;
        r[i * d + n] += a;
        r[n * d + i] += b;
        p.add_relation(2, r);
    }
    return p;
}

/// Skew stratum: y_i v - a v y_i.
inline Presentation snp1_skew(int n, const CycScalar& a, GroupPtr g = nullptr, std::size_t cutoff = 5)
{
    return snp1_family(n, CycScalar(1), -a, CycScalar(0), std::move(g), cutoff);
}

/// Differential stratum: v y_i - y_i v = c y_i((n-1)y_i - 2 sum_{j != i} y_j).
inline Presentation snp1_differential(int n, const CycScalar& c, GroupPtr g = nullptr, std::size_t cutoff = 5)
{
    return snp1_family(n, CycScalar(1), CycScalar(-1), c, std::move(g), cutoff);
}

/// n = 2 differential stratum on x, y, t with xy = yx, xt - tx = y^2,
/// yt - ty = x^2: x, y are the eigenvectors of the 3-cycle in S and t = v/c.
inline Presentation snp1_differential_xyt(const CycScalar& c, GroupPtr g = nullptr, std::size_t cutoff = 5)
{
    Presentation p = snp1_differential(2, c, std::move(g), cutoff);
    const CycScalar w = CycScalar::zeta(3), w2 = CycScalar::zeta(3, 2);
    CMatrix q(3, 3);
    q(0, 0) = -w2;
    q(0, 1) = -w;
    q(1, 0) = -w;
    q(1, 1) = -w2;
    q(2, 2) = CycScalar(1) / c;
    return p.change_of_generators(q, {"x", "y", "t"});
}

/// n = 3 differential stratum on v00, v10, v01, v11 (eigenvectors of the
/// Klein four subgroup), v00 = v/(2c).
inline Presentation snp1_differential_klein(const CycScalar& c, GroupPtr g = nullptr, std::size_t cutoff = 5)
{
    Presentation p = snp1_differential(3, c, std::move(g), cutoff);
    CMatrix q(4, 4);
    q(0, 3) = CycScalar(1) / (CycScalar(2) * c);
    const long rows[3][3] = {{1, -1, 1}, {-1, 1, 1}, {1, 1, -1}};
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 3; ++j) q(r + 1, j) = CycScalar(rows[r][j]);
    return p.change_of_generators(q, {"v00", "v10", "v01", "v11"});
}

// ---- Clifford family --------------------------------------------------------

/// Permutation matrices of S_3 together with diag(1, w, w^2): order 54.
inline GroupPtr clifford_group()
{
    auto s3 = symmetric_group(3);
    std::vector<CMatrix> gens = s3->generators();
    CMatrix d(3, 3);
    d(0, 0) = 1;
    d(1, 1) = CycScalar::zeta(3);
    d(2, 2) = CycScalar::zeta(3, 2);
    gens.push_back(d);
    return FiniteGroup::enumerate(gens, 3, 10000, "H3:Z2");
}

/// A(yz + zy) + B x^2 and its cyclic permutations.
inline Presentation clifford(const CycScalar& a, const CycScalar& b, GroupPtr g = nullptr, std::size_t cutoff = 5)
{
    if (!g) g = clifford_group();
    Presentation p(Representation::natural(g), {"x", "y", "z"}, cutoff);
    auto rel = [&](std::size_t i, std::size_t j, std::size_t sq) {
        CVec v(9);
        v[i * 3 + j] += a;
        v[j * 3 + i] += a;
        v[sq * 3 + sq] += b;
        p.add_relation(2, v);
    };
    rel(1, 2, 0);
    rel(2, 0, 1);
    rel(0, 1, 2);
    return p;
}

// ---- quantum plane ----------------------------------------------------------

inline Representation quantum_space(std::size_t n = 2)
{
    std::vector<Weight> ws;
    for (std::size_t i = 0; i < n; ++i) {
        Weight w(n, 0);
        w[i] = 1;
        ws.push_back(w);
    }
    return Representation::from_weights(WeightGroup{n}, ws, "V");
}

/// All weights of total degree <= top, as one-dimensional simples.
inline std::vector<Representation> quantum_simples(std::size_t n, long top)
{
    std::vector<Representation> out;
    std::vector<Weight> all;
    std::function<void(Weight&, std::size_t, long)> rec = [&](Weight& w, std::size_t i, long left) {
        if (i + 1 == n) {
            w[i] = left;
            all.push_back(w);
            return;
        }
        for (long k = left; k >= 0; --k) {
            w[i] = k;
            rec(w, i + 1, left - k);
        }
    };
    for (long k = 0; k <= top; ++k) {
        Weight w(n, 0);
        rec(w, 0, k);
    }
    for (const auto& w : all) out.push_back(Representation::from_weights(WeightGroup{n}, {w}, "chi" + weight_to_string(w)));
    return out;
}

/// a x1 x2 - b x2 x1.
inline Presentation quantum_plane(const CycScalar& a, const CycScalar& b, std::size_t cutoff = 5)
{
    Presentation p(quantum_space(2), {"x1", "x2"}, cutoff);
    CVec r(4);
    r[1] = a;
    r[2] = -b;
    p.add_relation(2, r);
    return p;
}

// ---- H_2 example ------------------------------------------------------------

inline Presentation heisenberg_polynomial(const GroupFamily& h2, std::size_t cutoff = 5)
{
    Presentation p(h2.natural, {"x", "y"}, cutoff);
    p.add_relation("x*y - y*x");
    return p;
}

}  // namespace gdeform::models

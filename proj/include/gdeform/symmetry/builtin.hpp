#pragma once

// Built-in groups with complete lists of irreducible matrix models:
// symmetric groups (Young seminormal form), Heisenberg groups of prime level
// (characters and Schrödinger representations), dihedral groups.

#include <functional>
#include <string>
#include <vector>

#include "gdeform/symmetry/representation.hpp"

namespace gdeform {

struct GroupFamily {
    GroupPtr group;
    Representation natural;              // the defining matrix representation
    std::vector<Representation> irreps;  // complete list of simples
};

using Partition = std::vector<int>;

inline std::string partition_label(const Partition& p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

/// Partitions of n in decreasing lexicographic order: [n], [n-1,1], ...
inline std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Number of standard Young tableaux by the hook length formula.
inline long hook_length_dimension(const Partition& p)
{
    long n = 0;
    for (int r : p) n += r;
    Integer num = 1, den = 1;
    for (long k = 2; k <= n; ++k) num *= k;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            long arm = p[i] - j - 1, leg = 0;
            for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++leg;
            den *= arm + leg + 1;
        }
    Integer q = num / den;
    return q.get_si();
}

namespace detail {

// A standard tableau as the (row, col) cell of each entry 0..n-1.
using Tableau = std::vector<std::pair<int, int>>;

inline std::vector<Tableau> standard_tableaux(const Partition& shape)
{
    int n = 0;
    for (int r : shape) n += r;
    std::vector<Tableau> out;
    Tableau cur;
    std::vector<int> filled(shape.size(), 0);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (filled[r] >= shape[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            cur.emplace_back(static_cast<int>(r), filled[r]);
            ++filled[r];
            rec();
            --filled[r];
            cur.pop_back();
        }
    };
    rec();
    return out;
}

inline CMatrix permutation_matrix(const std::vector<std::size_t>& sigma)
{
    CMatrix m(sigma.size(), sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) m(sigma[j], j) = 1;
    return m;
}

}  // namespace detail

/// S_n generated by the adjacent transpositions s_i = (i, i+1), as n x n
/// permutation matrices.
inline GroupPtr symmetric_group(int n)
{
    if (n < 1) throw ValidationError("symmetric group needs n >= 1");
    std::vector<CMatrix> gens;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<std::size_t> s(n);
        for (int k = 0; k < n; ++k) s[k] = k;
        std::swap(s[i], s[i + 1]);
        gens.push_back(detail::permutation_matrix(s));
    }
    return FiniteGroup::enumerate(std::move(gens), n, FiniteGroup::default_cap, "S" + std::to_string(n));
}

/// Young seminormal model of the irreducible representation of S_n indexed by
/// `shape`, on the group returned by symmetric_group(n).  With
/// r = c(i+1) - c(i) the content difference in tableau T and T' = s_i T:
///   s_i v_T = (1/r) v_T + v_{T'}            if r > 0,
///   s_i v_T = (1/r) v_T + (1 - 1/r^2) v_{T'} if r < 0,
/// and s_i v_T = v_T / -v_T when i, i+1 share a row / column.
inline Representation young_seminormal(const GroupPtr& group, const Partition& shape, bool verify = true)
{
    auto tabs = detail::standard_tableaux(shape);
    const std::size_t d = tabs.size();
    auto index_of = [&](const detail::Tableau& t) {
        return static_cast<std::size_t>(std::find(tabs.begin(), tabs.end(), t) - tabs.begin());
    };
    std::vector<CMatrix> images;
    const int n = static_cast<int>(group->dim());
    for (int i = 0; i + 1 < n; ++i) {
        CMatrix m(d, d);
        for (std::size_t b = 0; b < d; ++b) {
            const auto& t = tabs[b];
            auto [ri, ci] = t[i];
            auto [rj, cj] = t[i + 1];
            if (ri == rj) {
                m(b, b) = 1;
                continue;
            }
            if (ci == cj) {
                m(b, b) = -1;
                continue;
            }
            const long r = (cj - rj) - (ci - ri);
            auto swapped = t;
            std::swap(swapped[i], swapped[i + 1]);
            std::size_t b2 = index_of(swapped);
            m(b, b) = CycScalar(Rational(1, r));
            m(b2, b) = r > 0 ? CycScalar(1) : CycScalar(Rational(1) - Rational(1, r * r));
        }
        images.push_back(std::move(m));
    }
    return Representation::from_matrices(group, std::move(images), d, partition_label(shape), verify);
}

/// All irreducible representations of S_n (n <= 6), indexed by partitions,
/// together with the permutation representation on C^n.
inline GroupFamily symmetric_group_irreps(int n, bool verify = true)
{
    if (n < 1 || n > 6) throw ValidationError("symmetric_group_irreps supports 1 <= n <= 6");
    GroupFamily f;
    f.group = symmetric_group(n);
    f.natural = Representation::natural(f.group, "V");
    for (const auto& p : partitions(n)) f.irreps.push_back(young_seminormal(f.group, p, verify));
    return f;
}

/// Permutation representation x_i -> x_{sigma(i)} of S_n.
inline Representation permutation_rep(const GroupPtr& sn) { return Representation::natural(sn, "V"); }

/// Heisenberg group H_p (p prime) on the Schrödinger representation with basis
/// x_0..x_{p-1}: e1 x_i = x_{i-1}, e2 x_i = w^{k i} where w = zeta_p.
/// `root_power` selects the primitive root w^k used for the defining rep.
inline GroupFamily heisenberg(int p, int root_power = 1)
{
    if (p < 2) throw ValidationError("heisenberg needs p >= 2");
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) throw ValidationError("heisenberg builtin supports prime p only");
    if (root_power % p == 0) throw ValidationError("heisenberg root power must be prime to p");
    auto schrodinger = [p](int k) {
        CMatrix e1(p, p), e2(p, p);
        for (int i = 0; i < p; ++i) {
            e1((i - 1 + p) % p, i) = 1;
            e2(i, i) = CycScalar::zeta(p, static_cast<long>(k) * i);
        }
        return std::vector<CMatrix>{e1, e2};
    };
    GroupFamily f;
    auto gens = schrodinger(root_power);
    f.group = FiniteGroup::enumerate(gens, p, FiniteGroup::default_cap, "H" + std::to_string(p));
    f.natural = Representation::natural(f.group, "V");
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            CMatrix x(1, 1), y(1, 1);
            x(0, 0) = CycScalar::zeta(p, a);
            y(0, 0) = CycScalar::zeta(p, b);
            f.irreps.push_back(Representation::from_matrices(
                f.group, {x, y}, "chi_" + std::to_string(a) + "," + std::to_string(b)));
        }
    // Schrödinger models with central character w^k, k = 1..p-1, expressed on
    // the generators of the group built from root_power.
    for (int k = 1; k < p; ++k)
        f.irreps.push_back(Representation::from_matrices(f.group, schrodinger(k), "schrodinger_" + std::to_string(k)));
    return f;
}

/// The 1-dimensional character chi_{a,b} of H_p: e1 -> w^a, e2 -> w^b.
inline const Representation& heisenberg_character(const GroupFamily& h, int a, int b)
{
    const int p = static_cast<int>(h.group->dim());
    return h.irreps.at(static_cast<std::size_t>(((a % p + p) % p) * p + ((b % p + p) % p)));
}

/// Dihedral group of order 2n on C^2: r = diag(z, z^{-1}), s = swap, z = zeta_n.
inline GroupFamily dihedral(int n)
{
    if (n < 3) throw ValidationError("dihedral needs n >= 3");
    auto rot = [n](int k) {
        CMatrix r(2, 2);
        r(0, 0) = CycScalar::zeta(n, k);
        r(1, 1) = CycScalar::zeta(n, -k);
        return r;
    };
    CMatrix s(2, 2);
    s(0, 1) = 1;
    s(1, 0) = 1;
    GroupFamily f;
    f.group = FiniteGroup::enumerate({rot(1), s}, 2, FiniteGroup::default_cap, "D" + std::to_string(n));
    f.natural = Representation::natural(f.group, "V");
    auto one = [](long r, long t) {
        CMatrix a(1, 1), b(1, 1);
        a(0, 0) = r;
        b(0, 0) = t;
        return std::vector<CMatrix>{a, b};
    };
    f.irreps.push_back(Representation::from_matrices(f.group, one(1, 1), "trivial"));
    f.irreps.push_back(Representation::from_matrices(f.group, one(1, -1), "sign"));
    if (n % 2 == 0) {
        f.irreps.push_back(Representation::from_matrices(f.group, one(-1, 1), "alt_+"));
        f.irreps.push_back(Representation::from_matrices(f.group, one(-1, -1), "alt_-"));
    }
    for (int k = 1; 2 * k < n; ++k)
        f.irreps.push_back(Representation::from_matrices(f.group, {rot(k), s}, "rho_" + std::to_string(k)));
    return f;
}

/// Completeness and irreducibility of an irrep list: End dimension 1 each,
/// pairwise orthogonal characters, sum of squared dimensions equal to |G|.
/// Returns an empty string on success, else a diagnostic.
inline std::string check_irrep_list(const GroupPtr& g, const std::vector<Representation>& irreps)
{
    long total = 0;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        if (!is_absolutely_irreducible(irreps[i])) return "'" + irreps[i].label() + "' is not absolutely irreducible";
        for (std::size_t j = 0; j < i; ++j)
            if (character_inner_product_int(irreps[i], irreps[j]) != 0)
                return "'" + irreps[i].label() + "' and '" + irreps[j].label() + "' are isomorphic";
        total += static_cast<long>(irreps[i].dim() * irreps[i].dim());
    }
    if (total != static_cast<long>(g->order()))
        return "sum of squared dimensions is " + std::to_string(total) + " but the group has order " +
               std::to_string(g->order());
    return "";
}

}  // namespace gdeform

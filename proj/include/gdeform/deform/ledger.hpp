#pragma once

// Multiplicity ledgers (a, e, f) per simple and degree, Grassmannian embedding
// spaces, and points of those spaces in reduced row echelon form.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdeform/algebra/tower.hpp"
#include "gdeform/exact/multipoly.hpp"

namespace gdeform {

struct LedgerEntry {
    std::size_t simple = 0;  // index into Ledger::simples()
    long a = 0;              // multiplicity in V^{⊗k}
    long e = 0;              // multiplicity in A_k
    long f = 0;              // multiplicity in the relations of degree k
};

struct LedgerDegree {
    std::size_t degree = 0;
    std::size_t tensor_dim = 0;
    std::size_t ideal_dim = 0;
    std::vector<LedgerEntry> entries;
};

struct GrassFactor {
    std::size_t degree = 0;
    std::size_t simple = 0;
    std::string label;
    long f = 0, a = 0;
    long dim() const { return f * (a - f); }
    std::string to_string() const { return "Grass(" + std::to_string(f) + "," + std::to_string(a) + ")"; }
};

struct EmbeddingSpace {
    std::vector<GrassFactor> factors;
    long dim = 0;
    std::string to_string() const
    {
        if (factors.empty()) return "point";
        std::string s;
        for (const auto& g : factors) s += (s.empty() ? "" : "×") + g.to_string();
        return s;
    }
};

/// A point of the embedding space: per degree, per simple with f > 0, an
/// f x a matrix in reduced row echelon form.
struct DeformPoint {
    std::map<std::size_t, std::map<std::size_t, CMatrix>> blocks;
    friend bool operator==(const DeformPoint& x, const DeformPoint& y) { return x.blocks == y.blocks; }
    friend bool operator!=(const DeformPoint& x, const DeformPoint& y) { return !(x == y); }
};

class Ledger {
public:
    Ledger(Presentation p, std::vector<Representation> simples, std::size_t top)
        : p_(std::move(p)), simples_(std::move(simples))
    {
        for (const auto& s : simples_) {
            if (!s.same_group(p_.space())) throw ValidationError("simple '" + s.label() + "' is for another group");
            if (!is_absolutely_irreducible(s))
                throw ValidationError("'" + s.label() + "' is not absolutely irreducible over the working field");
        }
        for (std::size_t i = 0; i < simples_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (character_inner_product_int(simples_[i], simples_[j]) != 0)
                    throw ValidationError("simples '" + simples_[i].label() + "' and '" + simples_[j].label() +
                                          "' are isomorphic");
        auto cert = is_g_stable(p_);
        if (!cert.stable) throw ValidationError("ledger needs a G-stable presentation: " + cert.message);
        DegreeTower tower(p_, top);
        for (std::size_t k = 0; k <= top; ++k) {
            LedgerDegree row;
            row.degree = k;
            row.tensor_dim = ipow(p_.dim(), k);
            row.ideal_dim = row.tensor_dim - tower.dim(k);
            auto vk = p_.space().tensor_power(k, false);
            auto ak = degree_character(p_, k, &tower);
            long covered = 0, ideal = 0;
            for (std::size_t i = 0; i < simples_.size(); ++i) {
                LedgerEntry e;
                e.simple = i;
                e.a = multiplicity(simples_[i], vk);
                e.e = multiplicity_in_character(simples_[i], ak);
                e.f = e.a - e.e;
                if (e.e < 0 || e.f < 0) throw MathError("ledger: negative multiplicity for " + simples_[i].label());
                covered += e.a * static_cast<long>(simples_[i].dim());
                ideal += e.f * static_cast<long>(simples_[i].dim());
                row.entries.push_back(e);
            }
            if (covered != static_cast<long>(row.tensor_dim))
                throw ValidationError("simples do not exhaust V^{⊗" + std::to_string(k) + "}: they account for " +
                                      std::to_string(covered) + " of " + std::to_string(row.tensor_dim) +
                                      " dimensions (deficit " + std::to_string(row.tensor_dim - covered) + ")");
            if (ideal != static_cast<long>(row.ideal_dim))
                throw MathError("ledger: relation multiplicities do not add up to the ideal dimension");
            degrees_.push_back(std::move(row));
        }
    }

    const Presentation& presentation() const { return p_; }
    const std::vector<Representation>& simples() const { return simples_; }
    std::size_t top() const { return degrees_.size() - 1; }
    const LedgerDegree& degree(std::size_t k) const { return degrees_.at(k); }
    const LedgerEntry& entry(std::size_t k, std::size_t simple) const { return degrees_.at(k).entries.at(simple); }

    /// Basis of Hom_G(S_i, V^{⊗k}) (maps are d^k x dim S_i matrices).
    const std::vector<CMatrix>& schur_basis(std::size_t k, std::size_t i) const
    {
        auto key = std::make_pair(k, i);
        auto it = schur_.find(key);
        if (it != schur_.end()) return it->second;
        auto basis = hom_space(simples_.at(i), p_.space().tensor_power(k, true));
        if (static_cast<long>(basis.size()) != entry(k, i).a)
            throw MathError("Schur basis size differs from the ledger multiplicity");
        return schur_.emplace(key, std::move(basis)).first->second;
    }

private:
    Presentation p_;
    std::vector<Representation> simples_;
    std::vector<LedgerDegree> degrees_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<CMatrix>> schur_;
};

inline Ledger build_ledger(const Presentation& p, const std::vector<Representation>& simples, std::size_t top)
{
    return Ledger(p, simples, top);
}

/// Product of Grass(f, a) over the requested degrees and simples with f > 0.
inline EmbeddingSpace embedding_space(const Ledger& l, const std::vector<std::size_t>& degrees)
{
    EmbeddingSpace out;
    for (std::size_t k : degrees)
        for (const auto& e : l.degree(k).entries) {
            if (e.f <= 0) continue;
            GrassFactor g{k, e.simple, l.simples()[e.simple].label(), e.f, e.a};
            out.dim += g.dim();
            out.factors.push_back(g);
        }
    return out;
}

/// The DeformPoint of a G-stable relation space R_k: for each simple, the
/// coefficient vectors c with image(sum_j c_j phi_j) inside R_k.  The number
/// of rows equals the multiplicity of the simple in R_k.
inline std::map<std::size_t, CMatrix> canonical_block(const Ledger& l, std::size_t k, const std::vector<CVec>& rk)
{
    const std::size_t width = ipow(l.presentation().dim(), k);
    auto q = annihilator(rk, width);  // rows q with q . r = 0
    std::map<std::size_t, CMatrix> out;
    for (std::size_t i = 0; i < l.simples().size(); ++i) {
        const auto& e = l.entry(k, i);
        if (e.a == 0) continue;
        const auto& phi = l.schur_basis(k, i);
        const std::size_t ds = l.simples()[i].dim();
        // Column j of the system: entries of Q * phi_j.
        Matrix<CycScalar> sys(q.size() * ds, phi.size());
        for (std::size_t j = 0; j < phi.size(); ++j)
            for (std::size_t r = 0; r < q.size(); ++r)
                for (std::size_t c = 0; c < ds; ++c) sys(r * ds + c, j) = dot(q[r], phi[j].col(c));
        std::vector<CVec> sol;
        if (q.empty()) {
            for (std::size_t j = 0; j < phi.size(); ++j) {
                CVec u(phi.size());
                u[j] = 1;
                sol.push_back(u);
            }
        } else {
            sol = kernel_basis(sys);
        }
        if (sol.empty()) continue;
        out.emplace(i, rref(Matrix<CycScalar>::from_rows(sol, phi.size())).reduced);
    }
    return out;
}

/// Canonical point of every degree 2..top of a presentation.
inline DeformPoint canonical_point(const Ledger& l, const Presentation& p, std::size_t top)
{
    DeformPoint pt;
    DegreeTower tower(p, top);
    for (std::size_t k = 2; k <= top; ++k) {
        auto blocks = canonical_block(l, k, tower.ideal_basis(k));
        if (!blocks.empty()) pt.blocks[k] = std::move(blocks);
    }
    return pt;
}

/// Only the degree-k relation space, e.g. the relation generators in degree 2.
inline DeformPoint canonical_point_of_relations(const Ledger& l, const Presentation& p, std::size_t k)
{
    DeformPoint pt;
    auto blocks = canonical_block(l, k, p.relations(k));
    if (!blocks.empty()) pt.blocks[k] = std::move(blocks);
    return pt;
}

/// Relation space spanned by the images of the maps selected by a point.
inline std::vector<CVec> point_relations(const Ledger& l, std::size_t k, const std::map<std::size_t, CMatrix>& blocks)
{
    const std::size_t width = ipow(l.presentation().dim(), k);
    RowSpace<CycScalar> span(width);
    for (const auto& [i, c] : blocks) {
        const auto& phi = l.schur_basis(k, i);
        if (c.cols() != phi.size()) throw ValidationError("coefficient matrix has the wrong number of columns");
        if (rank(c) != c.rows()) throw ValidationError("coefficient matrix is rank deficient");
        for (std::size_t r = 0; r < c.rows(); ++r) {
            CMatrix map(width, l.simples()[i].dim());
            for (std::size_t j = 0; j < phi.size(); ++j)
                if (!c(r, j).is_zero()) map = map + c(r, j) * phi[j];
            for (std::size_t col = 0; col < map.cols(); ++col) span.insert(map.col(col));
        }
    }
    return span.canonical_basis();
}

/// The presentation whose relations are selected by the point.
inline Presentation point_to_presentation(const Ledger& l, const DeformPoint& pt)
{
    const auto& base = l.presentation();
    Presentation out(base.space(), base.names(), base.cutoff());
    for (const auto& [k, blocks] : pt.blocks)
        for (const auto& v : point_relations(l, k, blocks)) out.add_relation(k, v);
    auto cert = is_g_stable(out);
    if (!cert.stable) throw MathError("point_to_presentation produced an unstable relation space: " + cert.message);
    return out;
}

/// Plücker coordinates (all maximal minors, column subsets in lexicographic order).
inline std::vector<CycScalar> plucker(const CMatrix& c)
{
    std::vector<CycScalar> out;
    for (const auto& cols : index_subsets(c.cols(), c.rows())) {
        CMatrix sub(c.rows(), c.rows());
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = c(i, cols[j]);
        out.push_back(determinant(sub));
    }
    return out;
}

struct VkCertificate {
    bool member = true;
    std::size_t degree = 0;
    std::string kind;  // "containment" or "dimension"
    std::string message;
};

/// Closedness condition for a choice of relation spaces P_2..P_k: every shift
/// V^{⊗l} ⊗ P_i ⊗ V^{⊗m} lies in P_{l+i+m}.  When `expected_dims` lists the
/// dimension each P_j must have (the ideal dimensions of the reference
/// algebra), those are checked as well.
inline VkCertificate vk_membership(std::size_t d, const std::map<std::size_t, std::vector<CVec>>& spaces,
                                   const std::map<std::size_t, std::size_t>& expected_dims = {})
{
    VkCertificate cert;
    for (const auto& [k, pk] : spaces) {
        const std::size_t width = ipow(d, k);
        auto span = span_of(pk, width);
        auto want = expected_dims.find(k);
        if (want != expected_dims.end() && span.dim() != want->second) {
            cert.member = false;
            cert.degree = k;
            cert.kind = "dimension";
            cert.message = "P_" + std::to_string(k) + " has dimension " + std::to_string(span.dim()) +
                           " but the family requires " + std::to_string(want->second);
            return cert;
        }
        for (const auto& [i, pi] : spaces) {
            if (i >= k) continue;
            for (std::size_t left = 0; left + i <= k; ++left) {
                const std::size_t right = k - i - left;
                const std::size_t nl = ipow(d, left), nr = ipow(d, right), wi = ipow(d, i);
                for (const auto& r : pi)
                    for (std::size_t u = 0; u < nl; ++u)
                        for (std::size_t v = 0; v < nr; ++v) {
                            CVec row(width);
                            for (std::size_t w = 0; w < r.size(); ++w)
                                if (!r[w].is_zero()) row[(u * wi + w) * nr + v] = r[w];
                            if (!span.contains(row)) {
                                cert.member = false;
                                cert.degree = k;
                                cert.kind = "containment";
                                cert.message = "a shift of P_" + std::to_string(i) + " (left degree " +
                                               std::to_string(left) + ") is not contained in P_" + std::to_string(k);
                                return cert;
                            }
                        }
            }
        }
    }
    return cert;
}

/// Whether every block has the shape f x a the ledger prescribes.
inline bool point_matches_ledger(const Ledger& l, const DeformPoint& pt)
{
    for (const auto& [k, blocks] : pt.blocks)
        for (const auto& e : l.degree(k).entries) {
            auto it = blocks.find(e.simple);
            long rows = it == blocks.end() ? 0 : static_cast<long>(it->second.rows());
            if (rows != e.f) return false;
        }
    return true;
}

inline VkCertificate vk_membership(const Ledger& l, const DeformPoint& pt)
{
    std::map<std::size_t, std::vector<CVec>> spaces;
    std::map<std::size_t, std::size_t> dims;
    for (const auto& [k, blocks] : pt.blocks) {
        spaces[k] = point_relations(l, k, blocks);
        dims[k] = l.degree(k).ideal_dim;
    }
    return vk_membership(l.presentation().dim(), spaces, dims);
}

}  // namespace gdeform

#pragma once

// Representations of a finite matrix group (generator images) or of a torus
// (weight multisets), their characters, standard constructions and Hom spaces.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gdeform/symmetry/group.hpp"

namespace gdeform {

using Weight = std::vector<long>;

/// Diagonalizable weight group: the formal torus of the given rank.
struct WeightGroup {
    std::size_t rank = 0;
    friend bool operator==(const WeightGroup& a, const WeightGroup& b) { return a.rank == b.rank; }
};

inline Weight operator+(const Weight& a, const Weight& b)
{
    Weight c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline std::string weight_to_string(const Weight& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

/// Character: class function (matrix backend) or sorted weight multiset (weight backend).
struct Character {
    std::vector<CycScalar> values;  // indexed by conjugacy class
    std::vector<Weight> weights;    // sorted
    bool weight_backend = false;

    CycScalar degree() const
    {
        if (weight_backend) return CycScalar(static_cast<long>(weights.size()));
        return values.empty() ? CycScalar(0) : values[0];
    }
    friend bool operator==(const Character& a, const Character& b)
    {
        return a.weight_backend == b.weight_backend && a.values == b.values && a.weights == b.weights;
    }
    friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }
};

class Representation {
public:
    enum class Backend { matrix, weight };

    Representation() = default;

    /// Matrix backend.  `images[j]` is the image of group generator j.  The
    /// induced map on the enumerated elements is checked to be a homomorphism
    /// unless `verify` is false.
    static Representation from_matrices(GroupPtr group, std::vector<CMatrix> images, std::string label,
                                        bool verify = true)
    {
        if (!group) throw ValidationError("representation without a group");
        if (images.size() != group->num_generators())
            throw ValidationError("representation '" + label + "' gives " + std::to_string(images.size()) +
                                  " generator images for a group with " +
                                  std::to_string(group->num_generators()) + " generators");
        std::size_t d = images.empty() ? 0 : images[0].rows();
        for (const auto& m : images)
            if (m.rows() != d || m.cols() != d)
                throw ValidationError("representation '" + label + "' has generator images of unequal size");
        Representation r;
        r.backend_ = Backend::matrix;
        r.group_ = std::move(group);
        r.label_ = std::move(label);
        r.dim_ = d;
        r.images_ = std::move(images);
        r.has_matrices_ = true;
        if (verify) r.verify_homomorphism();
        r.compute_character();
        return r;
    }

    /// Matrix backend with an explicit dimension (needed for the trivial group).
    static Representation from_matrices(GroupPtr group, std::vector<CMatrix> images, std::size_t dim,
                                        std::string label, bool verify = true)
    {
        if (images.empty()) {
            Representation r;
            r.backend_ = Backend::matrix;
            r.group_ = std::move(group);
            r.label_ = std::move(label);
            r.dim_ = dim;
            r.has_matrices_ = true;
            r.compute_character();
            return r;
        }
        if (images[0].rows() != dim) throw ValidationError("representation dimension mismatch");
        return from_matrices(std::move(group), std::move(images), std::move(label), verify);
    }

    /// The defining representation of a matrix group.
    static Representation natural(GroupPtr group, std::string label = "V")
    {
        auto gens = group->generators();
        std::size_t d = group->dim();
        return from_matrices(std::move(group), std::move(gens), d, std::move(label), false);
    }

    static Representation trivial(GroupPtr group, std::string label = "trivial")
    {
        std::vector<CMatrix> gens(group->num_generators(), CMatrix::identity(1));
        return from_matrices(std::move(group), std::move(gens), 1, std::move(label), false);
    }

    static Representation from_weights(WeightGroup torus, std::vector<Weight> weights, std::string label)
    {
        for (const auto& w : weights)
            if (w.size() != torus.rank) throw ValidationError("weight vector length differs from the torus rank");
        Representation r;
        r.backend_ = Backend::weight;
        r.torus_ = torus;
        r.label_ = std::move(label);
        r.dim_ = weights.size();
        r.weights_ = std::move(weights);
        r.has_matrices_ = true;
        r.character_.weight_backend = true;
        r.character_.weights = r.weights_;
        std::sort(r.character_.weights.begin(), r.character_.weights.end());
        return r;
    }

    Backend backend() const { return backend_; }
    bool is_weight() const { return backend_ == Backend::weight; }
    const GroupPtr& group() const { return group_; }
    const WeightGroup& torus() const { return torus_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }
    std::size_t dim() const { return dim_; }
    const Character& character() const { return character_; }
    const std::vector<Weight>& weights() const { return weights_; }

    /// False for character-only representations (large tensor powers).
    bool has_matrices() const { return has_matrices_; }
    const std::vector<CMatrix>& generator_images() const
    {
        require_matrices();
        return images_;
    }

    /// Matrices whose common invariant subspaces are exactly the
    /// subrepresentations.  Matrix backend: the generator images.  Weight
    /// backend: one generic torus element diag(prod_j p_j^{a_j}), p_j the j-th
    /// prime, whose eigenvalues separate all distinct weights.
    std::vector<CMatrix> action_generators() const
    {
        require_matrices();
        if (!is_weight()) return images_;
        CMatrix t(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) t(i, i) = generic_torus_value(weights_[i]);
        return {t};
    }

    static CycScalar generic_torus_value(const Weight& w)
    {
        static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        if (w.size() > std::size(primes)) throw CapacityError("torus rank above 12 is not supported");
        Rational v = 1;
        for (std::size_t j = 0; j < w.size(); ++j) {
            Rational p = primes[j];
            long e = w[j];
            Rational f = 1;
            for (long k = 0; k < std::labs(e); ++k) f *= p;
            v *= e >= 0 ? f : Rational(1) / f;
        }
        return CycScalar(v);
    }

    /// Image of group element i (matrix backend).
    CMatrix element_image(std::size_t i) const
    {
        require_matrices();
        if (is_weight()) throw ValidationError("element_image on a weight representation");
        CMatrix m = CMatrix::identity(dim_);
        for (std::size_t j : group_->word(i)) m = m * images_[j];
        return m;
    }

    Representation character_only() const
    {
        Representation r = *this;
        if (!is_weight()) {
            r.images_.clear();
            r.has_matrices_ = false;
        }
        return r;
    }

    bool same_group(const Representation& o) const
    {
        if (backend_ != o.backend_) return false;
        return is_weight() ? torus_ == o.torus_ : group_ == o.group_;
    }

    void verify_homomorphism() const
    {
        require_matrices();
        if (is_weight()) return;
        const auto& G = *group_;
        std::vector<CMatrix> img(G.order());
        img[0] = CMatrix::identity(dim_);
        for (std::size_t i = 1; i < G.order(); ++i) img[i] = img[G.parent(i)] * images_[G.last_generator(i)];
        for (std::size_t i = 0; i < G.order(); ++i)
            for (std::size_t j = 0; j < G.num_generators(); ++j)
                if (img[G.right_multiply(i, j)] != img[i] * images_[j])
                    throw ValidationError("representation '" + label_ +
                                          "' is not a homomorphism: relation fails at element " +
                                          std::to_string(i) + " times generator " + std::to_string(j));
    }

    // ---- constructions -------------------------------------------------

    friend Representation tensor(const Representation& a, const Representation& b)
    {
        a.require_same(b);
        Representation r = a.derived(a.label_ + "⊗" + b.label_, a.dim_ * b.dim_);
        if (a.is_weight()) {
            for (const auto& u : a.weights_)
                for (const auto& v : b.weights_) r.weights_.push_back(u + v);
            r.finish_weights();
            return r;
        }
        r.has_matrices_ = a.has_matrices_ && b.has_matrices_;
        if (r.has_matrices_)
            for (std::size_t j = 0; j < a.images_.size(); ++j) r.images_.push_back(kron(a.images_[j], b.images_[j]));
        for (std::size_t c = 0; c < a.character_.values.size(); ++c)
            r.character_.values.push_back(a.character_.values[c] * b.character_.values[c]);
        return r;
    }

    friend Representation direct_sum(const Representation& a, const Representation& b)
    {
        a.require_same(b);
        Representation r = a.derived(a.label_ + "⊕" + b.label_, a.dim_ + b.dim_);
        if (a.is_weight()) {
            r.weights_ = a.weights_;
            r.weights_.insert(r.weights_.end(), b.weights_.begin(), b.weights_.end());
            r.finish_weights();
            return r;
        }
        r.has_matrices_ = a.has_matrices_ && b.has_matrices_;
        if (r.has_matrices_)
            for (std::size_t j = 0; j < a.images_.size(); ++j) {
                CMatrix m(r.dim_, r.dim_);
                for (std::size_t p = 0; p < a.dim_; ++p)
                    for (std::size_t q = 0; q < a.dim_; ++q) m(p, q) = a.images_[j](p, q);
                for (std::size_t p = 0; p < b.dim_; ++p)
                    for (std::size_t q = 0; q < b.dim_; ++q) m(a.dim_ + p, a.dim_ + q) = b.images_[j](p, q);
                r.images_.push_back(std::move(m));
            }
        for (std::size_t c = 0; c < a.character_.values.size(); ++c)
            r.character_.values.push_back(a.character_.values[c] + b.character_.values[c]);
        return r;
    }

    /// Dual representation g -> (rho(g)^{-1})^T.
    Representation dual() const
    {
        Representation r = derived(label_ + "*", dim_);
        if (is_weight()) {
            for (const auto& w : weights_) {
                Weight n(w.size());
                for (std::size_t i = 0; i < w.size(); ++i) n[i] = -w[i];
                r.weights_.push_back(std::move(n));
            }
            r.finish_weights();
            return r;
        }
        r.has_matrices_ = has_matrices_;
        if (has_matrices_)
            for (const auto& m : images_) r.images_.push_back(inverse(m).transpose());
        for (std::size_t c = 0; c < character_.values.size(); ++c)
            r.character_.values.push_back(character_.values[group_->inverse_class(c)]);
        return r;
    }

    /// Exterior square, basis e_i ∧ e_j (i < j) in lexicographic order.
    Representation wedge2() const { return square_part(false); }
    /// Symmetric square, basis e_i e_j (i <= j) in lexicographic order.
    Representation sym2() const { return square_part(true); }

    /// k-th tensor power.  Matrices are kept only when `with_matrices` is set.
    Representation tensor_power(std::size_t k, bool with_matrices = true) const
    {
        Representation base = with_matrices ? *this : character_only();
        Representation r = base.unit();
        for (std::size_t i = 0; i < k; ++i) r = tensor(r, base);
        r.label_ = k == 0 ? "1" : label_ + "^⊗" + std::to_string(k);
        return r;
    }

    /// The trivial one-dimensional representation of the same group.
    Representation unit() const
    {
        if (is_weight()) return from_weights(torus_, {Weight(torus_.rank, 0)}, "1");
        Representation r = trivial(group_, "1");
        if (!has_matrices_) r = r.character_only();
        return r;
    }

private:
    Representation derived(std::string label, std::size_t dim) const
    {
        Representation r;
        r.backend_ = backend_;
        r.group_ = group_;
        r.torus_ = torus_;
        r.label_ = std::move(label);
        r.dim_ = dim;
        r.has_matrices_ = true;
        r.character_.weight_backend = is_weight();
        return r;
    }

    void finish_weights()
    {
        dim_ = weights_.size();
        character_.weights = weights_;
        std::sort(character_.weights.begin(), character_.weights.end());
    }

    void require_same(const Representation& o) const
    {
        if (backend_ != o.backend_) throw ValidationError("mixed matrix and weight backends");
        if (!same_group(o)) throw ValidationError("representations of different groups");
    }
    void require_matrices() const
    {
        if (!has_matrices_) throw ValidationError("representation '" + label_ + "' carries only its character");
    }

    void compute_character()
    {
        character_.weight_backend = false;
        character_.values.clear();
        for (std::size_t c = 0; c < group_->num_classes(); ++c)
            character_.values.push_back(element_image(group_->class_representative(c)).trace());
    }

    Representation square_part(bool symmetric) const
    {
        std::vector<std::pair<std::size_t, std::size_t>> basis;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = symmetric ? i : i + 1; j < dim_; ++j) basis.emplace_back(i, j);
        Representation r = derived(label_ + (symmetric ? "_sym2" : "∧" + label_), basis.size());
        if (symmetric) r.label_ = "Sym2(" + label_ + ")";
        if (is_weight()) {
            for (auto [i, j] : basis) r.weights_.push_back(weights_[i] + weights_[j]);
            r.finish_weights();
            return r;
        }
        r.has_matrices_ = has_matrices_;
        if (has_matrices_) {
            std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
            for (std::size_t b = 0; b < basis.size(); ++b) pos[basis[b]] = b;
            for (const auto& m : images_) {
                CMatrix w(basis.size(), basis.size());
                // g(e_i e_j) = sum_{p,q} m_pi m_qj e_p e_q, folded onto the chosen basis.
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    auto [i, j] = basis[b];
                    for (std::size_t p = 0; p < dim_; ++p) {
                        if (m(p, i).is_zero()) continue;
                        for (std::size_t q = 0; q < dim_; ++q) {
                            if (m(q, j).is_zero() || (!symmetric && p == q)) continue;
                            CycScalar v = m(p, i) * m(q, j);
                            if (p < q || (symmetric && p == q)) w(pos[{p, q}], b) += v;
                            else if (symmetric) w(pos[{q, p}], b) += v;
                            else w(pos[{q, p}], b) -= v;
                        }
                    }
                }
                r.images_.push_back(std::move(w));
            }
        }
        const Rational half(1, 2);
        for (std::size_t c = 0; c < character_.values.size(); ++c) {
            CycScalar x = character_.values[c], x2 = character_.values[group_->square_class(c)];
            r.character_.values.push_back(CycScalar(half) * (symmetric ? x * x + x2 : x * x - x2));
        }
        return r;
    }

    Backend backend_ = Backend::matrix;
    GroupPtr group_;
    WeightGroup torus_;
    std::string label_;
    std::size_t dim_ = 0;
    std::vector<CMatrix> images_;
    std::vector<Weight> weights_;
    bool has_matrices_ = false;
    Character character_;
};

/// (1/|G|) sum_g chi_a(g) chi_b(g^{-1}); weight backend: matched weight pairs.
inline CycScalar character_inner_product(const Representation& a, const Representation& b)
{
    if (a.backend() != b.backend() || !a.same_group(b)) throw ValidationError("inner product across groups");
    if (a.is_weight()) {
        std::map<Weight, long> count;
        for (const auto& w : b.weights()) ++count[w];
        long s = 0;
        for (const auto& w : a.weights()) s += count[w];
        return CycScalar(s);
    }
    const auto& G = *a.group();
    CycScalar s(0);
    for (std::size_t c = 0; c < G.num_classes(); ++c)
        s += CycScalar(static_cast<long>(G.class_size(c))) * a.character().values[c] *
             b.character().values[G.inverse_class(c)];
    return s / CycScalar(static_cast<long>(G.order()));
}

inline long character_inner_product_int(const Representation& a, const Representation& b)
{
    CycScalar v = character_inner_product(a, b);
    if (!v.is_rational() || v.rational_part().get_den() != 1)
        throw MathError("character inner product is not an integer: " + v.to_string());
    return v.rational_part().get_num().get_si();
}

/// Basis of Hom_G(A, B): each map is a dim(B) x dim(A) matrix.  The dimension
/// is cross-checked against the character inner product.
inline std::vector<CMatrix> hom_space(const Representation& a, const Representation& b)
{
    if (a.backend() != b.backend()) throw ValidationError("hom_space: mixed matrix and weight backends");
    if (!a.same_group(b)) throw ValidationError("hom_space: representations of different groups");
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<CMatrix> out;
    if (a.is_weight()) {
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t i = 0; i < da; ++i)
                if (a.weights()[i] == b.weights()[j]) {
                    CMatrix f(db, da);
                    f(j, i) = 1;
                    out.push_back(std::move(f));
                }
        return out;
    }
    // unknown f(p, q) at index p * da + q; equations rho_B(g) f - f rho_A(g) = 0
    const auto& ga = a.generator_images();
    const auto& gb = b.generator_images();
    Matrix<CycScalar> sys(0, da * db);
    for (std::size_t g = 0; g < ga.size(); ++g)
        for (std::size_t p = 0; p < db; ++p)
            for (std::size_t q = 0; q < da; ++q) {
                CVec row(da * db);
                for (std::size_t k = 0; k < db; ++k)
                    if (!gb[g](p, k).is_zero()) row[k * da + q] += gb[g](p, k);
                for (std::size_t k = 0; k < da; ++k)
                    if (!ga[g](k, q).is_zero()) row[p * da + k] -= ga[g](k, q);
                if (!is_zero_vector(row)) sys.append_row(row);
            }
    std::vector<CVec> ker;
    if (sys.rows() == 0) {
        for (std::size_t i = 0; i < da * db; ++i) {
            CVec e(da * db);
            e[i] = 1;
            ker.push_back(std::move(e));
        }
    } else {
        ker = kernel_basis(sys);
    }
    for (const auto& v : ker) {
        CMatrix f(db, da);
        for (std::size_t p = 0; p < db; ++p)
            for (std::size_t q = 0; q < da; ++q) f(p, q) = v[p * da + q];
        out.push_back(std::move(f));
    }
    long expected = character_inner_product_int(a, b);
    if (static_cast<long>(out.size()) != expected)
        throw MathError("hom_space: kernel dimension " + std::to_string(out.size()) +
                        " disagrees with the character inner product " + std::to_string(expected));
    return out;
}

/// Multiplicity of the simple S in a representation given only by its character.
inline long multiplicity_in_character(const Representation& s, const Character& ch)
{
    if (s.is_weight()) {
        if (s.dim() != 1) throw ValidationError("weight simples are one-dimensional");
        return static_cast<long>(std::count(ch.weights.begin(), ch.weights.end(), s.weights()[0]));
    }
    const auto& G = *s.group();
    CycScalar acc(0);
    for (std::size_t c = 0; c < G.num_classes(); ++c)
        acc += CycScalar(static_cast<long>(G.class_size(c))) * s.character().values[c] * ch.values[G.inverse_class(c)];
    acc /= CycScalar(static_cast<long>(G.order()));
    if (!acc.is_rational() || acc.rational_part().get_den() != 1)
        throw MathError("multiplicity against a character is not an integer: " + acc.to_string());
    return acc.rational_part().get_num().get_si();
}

/// dim End_G(S) == 1, i.e. S is absolutely irreducible over the working field.
inline bool is_absolutely_irreducible(const Representation& s)
{
    if (s.is_weight()) return s.dim() == 1;
    if (s.has_matrices()) return hom_space(s, s).size() == 1;
    return character_inner_product_int(s, s) == 1;
}

/// Multiplicity of the simple S in W.
inline long multiplicity(const Representation& s, const Representation& w)
{
    if (!is_absolutely_irreducible(s))
        throw ValidationError("'" + s.label() +
                              "' is not absolutely irreducible over the working field (End dimension " +
                              std::to_string(character_inner_product_int(s, s)) +
                              "); enlarge the conductor or split it further");
    return character_inner_product_int(s, w);
}

}  // namespace gdeform

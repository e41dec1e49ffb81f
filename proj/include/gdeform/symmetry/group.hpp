#pragma once

// Finite matrix groups enumerated by breadth-first closure of their generators.

#include <cstdlib>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gdeform/exact/cyclotomic.hpp"
#include "gdeform/exact/matrix.hpp"

namespace gdeform {

using CMatrix = Matrix<CycScalar>;
using CVec = Vec<CycScalar>;

inline int matrix_conductor(const CMatrix& m)
{
    int c = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c = std::lcm(c, m(i, j).conductor());
    return c;
}

class FiniteGroup {
public:
    static constexpr std::size_t default_cap = 10000;

    /// Closure of the generators inside GL(dim).  An empty generator list
    /// gives the trivial group.
    static std::shared_ptr<const FiniteGroup> enumerate(std::vector<CMatrix> generators, std::size_t dim,
                                                        std::size_t cap = default_cap, std::string name = "")
    {
        auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
        g->name_ = std::move(name);
        g->dim_ = dim;
        g->cap_ = cap;
        for (const auto& m : generators) {
            if (m.rows() != dim || m.cols() != dim) throw ValidationError("group generator has the wrong size");
            if (determinant(m).is_zero()) throw ValidationError("group generator is not invertible");
            g->conductor_ = std::lcm(g->conductor_, matrix_conductor(m));
        }
        g->gens_ = std::move(generators);
        g->close();
        g->compute_classes();
        return g;
    }

    const std::string& name() const { return name_; }
    std::size_t order() const { return elements_.size(); }
    std::size_t dim() const { return dim_; }
    int conductor() const { return conductor_; }
    std::size_t num_generators() const { return gens_.size(); }
    const std::vector<CMatrix>& generators() const { return gens_; }
    const CMatrix& element(std::size_t i) const { return elements_[i]; }
    static constexpr std::size_t identity() { return 0; }

    /// Generator indices w with element(i) = g_{w[0]} g_{w[1]} ... (empty for the identity).
    const std::vector<std::size_t>& word(std::size_t i) const { return words_[i]; }
    /// Breadth-first tree: element(i) = element(parent(i)) * g_{last_generator(i)}.
    std::size_t parent(std::size_t i) const { return parent_[i]; }
    std::size_t last_generator(std::size_t i) const { return words_[i].back(); }
    /// Index of element(i) * g_j.
    std::size_t right_multiply(std::size_t i, std::size_t j) const { return right_[i * gens_.size() + j]; }
    std::size_t inverse(std::size_t i) const { return inverse_[i]; }

    std::optional<std::size_t> find(const CMatrix& m) const
    {
        auto it = index_.find(key(m));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const CMatrix& m) const { return find(m).has_value(); }

    std::size_t multiply(std::size_t a, std::size_t b) const
    {
        std::size_t r = a;
        for (std::size_t j : words_[b]) r = right_multiply(r, j);
        return r;
    }

    std::size_t num_classes() const { return classes_.size(); }
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
    std::size_t class_of(std::size_t i) const { return class_of_[i]; }
    std::size_t class_representative(std::size_t c) const { return classes_[c].front(); }
    std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
    std::size_t inverse_class(std::size_t c) const { return class_of_[inverse_[class_representative(c)]]; }
    std::size_t square_class(std::size_t c) const
    {
        std::size_t r = class_representative(c);
        return class_of_[multiply(r, r)];
    }

private:
    FiniteGroup() = default;

    std::string key(const CMatrix& m) const
    {
        std::string k;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                k += m(i, j).key_at(std::lcm(conductor_, m(i, j).conductor()));
                k += ';';
            }
        return k;
    }

    std::size_t add(CMatrix m, std::size_t parent, std::vector<std::size_t> w)
    {
        if (elements_.size() >= cap_)
            throw CapacityError("group enumeration exceeded the element cap of " + std::to_string(cap_));
        std::size_t idx = elements_.size();
        index_.emplace(key(m), idx);
        elements_.push_back(std::move(m));
        parent_.push_back(parent);
        words_.push_back(std::move(w));
        return idx;
    }

    void close()
    {
        add(CMatrix::identity(dim_), 0, {});
        const std::size_t ng = gens_.size();
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            for (std::size_t j = 0; j < ng; ++j) {
                CMatrix p = elements_[i] * gens_[j];
                auto it = index_.find(key(p));
                std::size_t idx;
                if (it != index_.end()) {
                    idx = it->second;
                } else {
                    auto w = words_[i];
                    w.push_back(j);
                    idx = add(std::move(p), i, std::move(w));
                }
                right_.push_back(idx);
            }
        }
        inverse_.assign(elements_.size(), 0);
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            // g^{-1} = g^{k-1} where k is the order of g
            std::size_t prev = 0, cur = i;
            while (cur != 0) {
                prev = cur;
                cur = multiply(cur, i);
            }
            inverse_[i] = prev;
        }
    }

    void compute_classes()
    {
        const std::size_t n = elements_.size();
        class_of_.assign(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (class_of_[i] != n) continue;
            const std::size_t c = classes_.size();
            std::vector<std::size_t> cls{i};
            class_of_[i] = c;
            for (std::size_t q = 0; q < cls.size(); ++q) {
                for (std::size_t j = 0; j < gens_.size(); ++j) {
                    // g x g^{-1}
                    std::size_t gx = multiply(right_multiply(0, j), cls[q]);
                    std::size_t conj = multiply(gx, inverse_[right_multiply(0, j)]);
                    if (class_of_[conj] == n) {
                        class_of_[conj] = c;
                        cls.push_back(conj);
                    }
                }
            }
            std::sort(cls.begin(), cls.end());
            classes_.push_back(std::move(cls));
        }
    }

    std::string name_;
    std::size_t dim_ = 0;
    std::size_t cap_ = default_cap;
    int conductor_ = 1;
    std::vector<CMatrix> gens_;
    std::vector<CMatrix> elements_;
    std::vector<std::size_t> parent_;
    std::vector<std::vector<std::size_t>> words_;
    std::vector<std::size_t> right_;
    std::vector<std::size_t> inverse_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace gdeform

#pragma once

// Monomial basis of V^{⊗k}: the word x_{i_0} x_{i_1} ... x_{i_{k-1}} has index
// sum_j i_j d^{k-1-j} (lexicographic order).

#include <cstdlib>
#include <string>
#include <vector>

#include "gdeform/error.hpp"
#include "gdeform/symmetry/group.hpp"

namespace gdeform {

inline constexpr std::size_t default_max_columns = 20000;

/// Cap on dim V^{⊗k}; the environment variable G_DEFORM_MAX_COLS overrides it.
inline std::size_t max_columns()
{
    if (const char* env = std::getenv("G_DEFORM_MAX_COLS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return default_max_columns;
}

inline std::size_t ipow(std::size_t d, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= d;
    return r;
}

/// dim V^{⊗k}, throwing CapacityError above the column cap.
inline std::size_t tensor_dim_checked(std::size_t d, std::size_t k)
{
    const std::size_t cap = max_columns();
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= d;
        if (r > cap)
            throw CapacityError("V^{⊗" + std::to_string(k) + "} has dimension above the column cap " +
                                std::to_string(cap) + " (set G_DEFORM_MAX_COLS to raise it)");
    }
    return r;
}

inline std::vector<std::size_t> word_of(std::size_t index, std::size_t d, std::size_t k)
{
    std::vector<std::size_t> w(k);
    for (std::size_t j = k; j-- > 0;) {
        w[j] = index % d;
        index /= d;
    }
    return w;
}

inline std::size_t word_index(const std::vector<std::size_t>& w, std::size_t d)
{
    std::size_t idx = 0;
    for (std::size_t a : w) idx = idx * d + a;
    return idx;
}

/// (g ⊗ g ⊗ ... ⊗ g) v for v in V^{⊗k}, applied one tensor slot at a time.
inline CVec apply_tensor_power(const CMatrix& g, const CVec& v, std::size_t k)
{
    const std::size_t d = g.rows();
    CVec cur = v;
    std::size_t stride = 1;  // slot j (from the right) has stride d^j
    for (std::size_t slot = 0; slot < k; ++slot, stride *= d) {
        CVec next(cur.size());
        for (std::size_t idx = 0; idx < cur.size(); ++idx) {
            if (cur[idx].is_zero()) continue;
            const std::size_t a = (idx / stride) % d;
            const std::size_t base = idx - a * stride;
            for (std::size_t b = 0; b < d; ++b)
                if (!g(b, a).is_zero()) next[base + b * stride] += g(b, a) * cur[idx];
        }
        cur = std::move(next);
    }
    return cur;
}

/// Apply possibly different maps on the tensor slots: maps[j] acts on slot j (left to right).
inline CVec apply_slotwise(const std::vector<CMatrix>& maps, const CVec& v)
{
    const std::size_t k = maps.size();
    if (k == 0) return v;
    const std::size_t d = maps[0].rows();
    CVec cur = v;
    std::size_t stride = 1;
    for (std::size_t s = 0; s < k; ++s, stride *= d) {
        const CMatrix& g = maps[k - 1 - s];
        CVec next(cur.size());
        for (std::size_t idx = 0; idx < cur.size(); ++idx) {
            if (cur[idx].is_zero()) continue;
            const std::size_t a = (idx / stride) % d;
            const std::size_t base = idx - a * stride;
            for (std::size_t b = 0; b < d; ++b)
                if (!g(b, a).is_zero()) next[base + b * stride] += g(b, a) * cur[idx];
        }
        cur = std::move(next);
    }
    return cur;
}

/// u ⊗ v in V^{⊗(k+l)} for u in V^{⊗k}, v in V^{⊗l}.
inline CVec tensor_vectors(const CVec& u, const CVec& v)
{
    CVec out(u.size() * v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) out[i * v.size() + j] = u[i] * v[j];
    }
    return out;
}

}  // namespace gdeform
